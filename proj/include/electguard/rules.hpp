#pragma once

#include <electguard/core.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace electguard {

/// Either a positional scoring rule or the Condorcet rule.
class VotingRule
{
public:
    static VotingRule scoring(ScoreVector vector, std::string name = {});
    static VotingRule condorcet();

    bool is_condorcet() const { return !vector_.has_value(); }
    bool is_scoring() const { return vector_.has_value(); }
    /// Throws std::bad_optional_access for the Condorcet rule.
    const ScoreVector & vector() const { return vector_.value(); }
    /// Short name: plurality/veto/borda/condorcet or vector:a1,a2,...
    const std::string & name() const { return name_; }

    /// Throws InvalidArgument if a scoring vector does not have length m.
    void check_applies_to(int m) const;

private:
    VotingRule() = default;

    std::optional<ScoreVector> vector_;
    std::string name_;
};

/// Nonempty set of winning candidates, sorted ascending.
using OutcomeSet = std::vector<CandidateIndex>;

/// plurality = (1,0,...,0); veto = (1,...,1,0); borda = (m-1,...,0).
ScoreVector preset_vector(std::string_view name, int m);

/// Resolves plurality|veto|borda|condorcet|vector:a1,a2,... for m candidates.
VotingRule parse_rule(std::string_view spec, int m);

OutcomeSet scoring_winners(const Election & election, const ScoreVector & vector, const GroupSet & excluded = {});
OutcomeSet condorcet_winners(const Election & election, const GroupSet & excluded = {});
OutcomeSet winners(const Election & election, const VotingRule & rule, const GroupSet & excluded = {});

/// Argmax set of an integer score row.
OutcomeSet argmax_set(const std::vector<std::int64_t> & scores);
/// {x} for a Condorcet winner x, otherwise all candidates.
OutcomeSet condorcet_outcome(const MarginMatrix & d);

/// Per-group integer tallies of an election under one rule, so that the
/// outcome of any surviving sub-profile is a sum of rows. Scoring rules keep
/// integer-scaled score rows; Condorcet keeps per-group margin matrices.
class GroupTally
{
public:
    GroupTally(const Election & election, const VotingRule & rule);

    int group_count() const { return n_; }
    int candidate_count() const { return m_; }
    bool is_condorcet() const { return condorcet_; }

    /// Scaled score of candidate c in group g (scoring rules only).
    std::int64_t score(int g, CandidateIndex c) const { return scores_[idx(g, c)]; }
    std::int64_t total_score(CandidateIndex c) const { return totals_[static_cast<std::size_t>(c)]; }
    const std::vector<std::int64_t> & total_scores() const { return totals_; }

    /// Margin D_g(x, y) in group g (Condorcet only).
    std::int64_t margin(int g, CandidateIndex x, CandidateIndex y) const { return margins_[static_cast<std::size_t>(g)](x, y); }
    const MarginMatrix & total_margins() const { return total_margins_; }

    const OutcomeSet & original_outcome() const { return original_; }

    /// Outcome after removing every group whose mask entry is nonzero.
    OutcomeSet outcome_without(const std::vector<char> & deleted) const;
    OutcomeSet outcome_without(const GroupSet & deleted) const { return outcome_without(deleted.mask(n_)); }

private:
    std::size_t idx(int g, CandidateIndex c) const
    {
        return static_cast<std::size_t>(g) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(c);
    }

    int n_ = 0;
    int m_ = 0;
    bool condorcet_ = false;
    std::vector<std::int64_t> scores_;
    std::vector<std::int64_t> totals_;
    std::vector<MarginMatrix> margins_;
    MarginMatrix total_margins_;
    OutcomeSet original_;
};

} // namespace electguard
