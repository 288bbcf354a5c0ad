#pragma once

#include <electguard/common.hpp>

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace electguard {

using Rational = boost::rational<std::int64_t>;
using CandidateIndex = int;

struct Candidate
{
    CandidateIndex index = 0;
    std::string name;

    friend bool operator==(const Candidate &, const Candidate &) = default;
};

/// A strict ranking of all candidates, most preferred first.
class LinearOrder
{
public:
    LinearOrder() = default;
    /// Throws InvalidArgument unless `ranking` is a permutation of 0..m-1.
    explicit LinearOrder(std::vector<CandidateIndex> ranking);

    /// 0..m-1 in index order.
    static LinearOrder identity(int m);

    int size() const { return static_cast<int>(ranking_.size()); }
    CandidateIndex at(int position) const { return ranking_[static_cast<std::size_t>(position)]; }
    int position_of(CandidateIndex c) const { return positions_[static_cast<std::size_t>(c)]; }
    bool prefers(CandidateIndex x, CandidateIndex y) const { return position_of(x) < position_of(y); }
    const std::vector<CandidateIndex> & ranking() const { return ranking_; }

    LinearOrder reversed() const;

    friend bool operator==(const LinearOrder & a, const LinearOrder & b) { return a.ranking_ == b.ranking_; }
    friend auto operator<=>(const LinearOrder & a, const LinearOrder & b) { return a.ranking_ <=> b.ranking_; }

private:
    std::vector<CandidateIndex> ranking_;
    std::vector<int> positions_;
};

struct VoteBundle
{
    LinearOrder order;
    std::int64_t count = 1;

    friend bool operator==(const VoteBundle &, const VoteBundle &) = default;
};

/// A multiset of votes stored as (order, multiplicity) bundles with distinct orders.
/// Bundles keep first-insertion order; adding an existing order merges counts.
class VoterGroup
{
public:
    VoterGroup() = default;
    explicit VoterGroup(std::vector<VoteBundle> bundles, std::optional<std::string> label = std::nullopt);

    void add(const LinearOrder & order, std::int64_t count = 1);
    void add(const VoterGroup & other, std::int64_t times = 1);

    const std::vector<VoteBundle> & bundles() const { return bundles_; }
    const std::optional<std::string> & label() const { return label_; }
    void set_label(std::optional<std::string> label) { label_ = std::move(label); }

    std::int64_t voter_count() const;
    bool empty() const { return bundles_.empty(); }

    /// Canonical content: bundles sorted by order. Two groups with equal
    /// canonical content are interchangeable for every rule.
    std::vector<VoteBundle> canonical_bundles() const;

    friend bool operator==(const VoterGroup &, const VoterGroup &) = default;

private:
    std::vector<VoteBundle> bundles_;
    std::optional<std::string> label_;
};

class Election
{
public:
    /// Throws InvalidArgument if names repeat, there are no groups, or some
    /// order is not over exactly these candidates.
    Election(std::vector<std::string> candidate_names, std::vector<VoterGroup> groups);

    int candidate_count() const { return static_cast<int>(names_.size()); }
    int group_count() const { return static_cast<int>(groups_.size()); }
    const std::vector<std::string> & candidate_names() const { return names_; }
    Candidate candidate(CandidateIndex i) const { return {i, names_.at(static_cast<std::size_t>(i))}; }
    std::optional<CandidateIndex> find_candidate(const std::string & name) const;
    const std::vector<VoterGroup> & groups() const { return groups_; }
    const VoterGroup & group(int i) const { return groups_.at(static_cast<std::size_t>(i)); }
    std::int64_t voter_count() const;

    friend bool operator==(const Election &, const Election &) = default;

private:
    std::vector<std::string> names_;
    std::vector<VoterGroup> groups_;
};

struct InstanceParams
{
    int k_a = 0;
    int k_d = 0;

    /// Throws unless 0 <= k_a, k_d <= n.
    void validate(int n) const;

    friend bool operator==(const InstanceParams &, const InstanceParams &) = default;
};

/// Non-increasing positional scores with a strict overall drop.
class ScoreVector
{
public:
    /// Throws InvalidArgument unless entries are non-increasing, first > last, m >= 2.
    explicit ScoreVector(std::vector<Rational> entries);
    static ScoreVector from_integers(const std::vector<std::int64_t> & entries);

    int size() const { return static_cast<int>(entries_.size()); }
    const Rational & operator[](int position) const { return entries_[static_cast<std::size_t>(position)]; }
    const std::vector<Rational> & entries() const { return entries_; }
    Rational sum() const;

    /// Entries scaled by the LCM of their denominators; same argmax on every profile.
    const std::vector<std::int64_t> & integer_weights() const { return integer_weights_; }
    std::int64_t integer_scale() const { return scale_; }

    bool is_normalized() const;

    /// Position (0-based) of the last strict decrease: entries[j] > entries[j+1].
    int last_drop() const;

    std::string to_string() const;

    friend bool operator==(const ScoreVector & a, const ScoreVector & b) { return a.entries_ == b.entries_; }

private:
    std::vector<Rational> entries_;
    std::vector<std::int64_t> integer_weights_;
    std::int64_t scale_ = 1;
};

using ScoreTotals = std::vector<Rational>;

/// Antisymmetric m x m matrix of pairwise margins D(x,y) = N(x,y) - N(y,x).
class MarginMatrix
{
public:
    MarginMatrix() = default;
    explicit MarginMatrix(int m) : m_(m), d_(static_cast<std::size_t>(m * m), 0) {}

    int size() const { return m_; }
    std::int64_t operator()(CandidateIndex x, CandidateIndex y) const { return d_[index(x, y)]; }
    std::int64_t & at(CandidateIndex x, CandidateIndex y) { return d_[index(x, y)]; }

    MarginMatrix & operator+=(const MarginMatrix & o);
    MarginMatrix & operator-=(const MarginMatrix & o);
    std::span<const std::int64_t> raw() const { return d_; }

    friend bool operator==(const MarginMatrix &, const MarginMatrix &) = default;

private:
    std::size_t index(CandidateIndex x, CandidateIndex y) const
    {
        return static_cast<std::size_t>(x) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(y);
    }

    int m_ = 0;
    std::vector<std::int64_t> d_;
};

/// Affine canonical form: shift so the last entry is 0, then scale so the
/// last strict drop is exactly 1.
ScoreVector normalize_score_vector(const std::vector<Rational> & raw);
ScoreVector normalize_score_vector(const ScoreVector & v);

ScoreTotals group_scores(const VoterGroup & group, const ScoreVector & vector);
/// Integer scores under vector.integer_weights(); exact and cheaper than group_scores.
std::vector<std::int64_t> group_scores_scaled(const VoterGroup & group, const ScoreVector & vector);

MarginMatrix group_margins(const VoterGroup & group, int m);
MarginMatrix margin_matrix(const Election & election, const GroupSet & excluded = {});

ScoreTotals profile_scores(const Election & election, const ScoreVector & vector, const GroupSet & excluded = {});

Rational parse_rational(const std::string & text);
std::string format_rational(const Rational & r);

} // namespace electguard
