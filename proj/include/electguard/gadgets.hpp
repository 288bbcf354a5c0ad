#pragma once

#include <electguard/rules.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace electguard {

/// P_x^y: m votes in which y scores one more and x one less than every other
/// candidate, who all tie. Requires a normalized vector.
VoterGroup swap_pair_profile(int m, CandidateIndex x, CandidateIndex y, const ScoreVector & vector);

/// Antisymmetric target margins f(a,b) = -f(b,a).
class MarginTarget
{
public:
    explicit MarginTarget(int m) : values_(m) {}

    int size() const { return values_.size(); }
    std::int64_t operator()(CandidateIndex a, CandidateIndex b) const { return values_(a, b); }
    /// Sets f(a,b) = v and f(b,a) = -v.
    void set(CandidateIndex a, CandidateIndex b, std::int64_t v);
    const MarginMatrix & matrix() const { return values_; }

    bool all_even() const;
    bool all_odd() const;

private:
    MarginMatrix values_;
};

/// Votes whose margin matrix equals `target` exactly. All-even targets use
/// vote pairs only; all-odd targets add one identity-order vote first.
/// Mixed parity is unrealizable and rejected.
VoterGroup mcgarvey(int m, const MarginTarget & target);

enum class ProblemKind
{
    defense,
    attack,
};

enum class Expected
{
    yes,
    no,
    unknown,
};

std::string_view to_string(ProblemKind p);
std::string_view to_string(Expected e);

struct KsumSource
{
    std::vector<std::int64_t> weights;
    int k = 0;
    std::int64_t target = 0;
};

/// Elements are 0..universe-1.
struct SetSystemSource
{
    int universe = 0;
    std::vector<std::vector<int>> sets;
    int k = 0;
};

/// Vertices are 0..vertices-1; edges are unordered and distinct.
struct GraphSource
{
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
    int k = 0;
};

struct Provenance
{
    /// ksum | hittingset | setcover | clique
    std::string family;
    std::variant<KsumSource, SetSystemSource, GraphSource> source;
    /// Construction constants after preprocessing, e.g. scale, M', padding.
    std::map<std::string, std::int64_t> derived;
};

struct GadgetInstance
{
    Election election;
    InstanceParams params;
    ProblemKind problem;
    VotingRule rule;
    Provenance provenance;
    Expected expected = Expected::unknown;
};

/// Source instances up to this size get a brute-force expected answer.
inline constexpr int expected_answer_limit = 12;

/// k-SUM to Optimal Defense with candidates a, b, c. `rule_spec` is a rule
/// name or vector for 3 candidates, or "condorcet".
GadgetInstance gadget_ksum(const KsumSource & source, std::string_view rule_spec);
/// Hitting Set to Optimal Defense with k_d governed by the hitting-set size.
GadgetInstance gadget_hitting_set(const SetSystemSource & source, std::string_view rule_spec);
/// Set Cover to Optimal Defense with k_a = k, after padding with empty sets.
GadgetInstance gadget_set_cover(const SetSystemSource & source, std::string_view rule_spec);
/// Clique to Optimal Attack with k_a = k and k_d = k - 2.
GadgetInstance gadget_clique(const GraphSource & source, std::string_view rule_spec);

bool ksum_has_solution(const KsumSource & source);
bool has_hitting_set(const SetSystemSource & source);
bool has_set_cover(const SetSystemSource & source);
bool has_clique(const GraphSource & source);

} // namespace electguard
