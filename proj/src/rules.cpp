#include <electguard/rules.hpp>

#include <sstream>

namespace electguard {

VotingRule VotingRule::scoring(ScoreVector vector, std::string name)
{
    VotingRule r;
    if (name.empty()) {
        std::ostringstream os;
        os << "vector:";
        for (int i = 0; i < vector.size(); ++i)
            os << (i ? "," : "") << format_rational(vector[i]);
        name = os.str();
    }
    r.vector_ = std::move(vector);
    r.name_ = std::move(name);
    return r;
}

VotingRule VotingRule::condorcet()
{
    VotingRule r;
    r.name_ = "condorcet";
    return r;
}

void VotingRule::check_applies_to(int m) const
{
    if (vector_ && vector_->size() != m)
        throw InvalidArgument("rule " + name_ + " has " + std::to_string(vector_->size()) + " positions but the election has "
            + std::to_string(m) + " candidates");
}

ScoreVector preset_vector(std::string_view name, int m)
{
    if (m < 2)
        throw InvalidArgument("scoring presets need m >= 2");
    std::vector<std::int64_t> v(static_cast<std::size_t>(m), 0);
    if (name == "plurality")
        v[0] = 1;
    else if (name == "veto")
        std::fill(v.begin(), v.end() - 1, 1);
    else if (name == "borda")
        for (int i = 0; i < m; ++i)
            v[static_cast<std::size_t>(i)] = m - 1 - i;
    else
        throw InvalidArgument("unknown scoring preset '" + std::string(name) + "'");
    return ScoreVector::from_integers(v);
}

VotingRule parse_rule(std::string_view spec, int m)
{
    if (spec == "condorcet")
        return VotingRule::condorcet();
    if (spec == "plurality" || spec == "veto" || spec == "borda")
        return VotingRule::scoring(preset_vector(spec, m), std::string(spec));
    if (spec.starts_with("vector:")) {
        std::vector<Rational> entries;
        std::string body(spec.substr(7));
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ','))
            entries.push_back(parse_rational(item));
        if (static_cast<int>(entries.size()) != m)
            throw InvalidArgument("rule '" + std::string(spec) + "' has " + std::to_string(entries.size())
                + " entries but the election has " + std::to_string(m) + " candidates");
        return VotingRule::scoring(ScoreVector(std::move(entries)), std::string(spec));
    }
    throw InvalidArgument("unknown rule '" + std::string(spec) + "' (expected plurality|veto|borda|condorcet|vector:a1,a2,...)");
}

OutcomeSet argmax_set(const std::vector<std::int64_t> & scores)
{
    OutcomeSet out;
    for (std::size_t c = 0; c < scores.size(); ++c) {
        if (out.empty() || scores[c] > scores[static_cast<std::size_t>(out.front())]) {
            out.assign(1, static_cast<CandidateIndex>(c));
        }
        else if (scores[c] == scores[static_cast<std::size_t>(out.front())])
            out.push_back(static_cast<CandidateIndex>(c));
    }
    return out;
}

OutcomeSet condorcet_outcome(const MarginMatrix & d)
{
    const int m = d.size();
    for (int x = 0; x < m; ++x) {
        bool beats_all = true;
        for (int y = 0; y < m && beats_all; ++y)
            if (y != x && d(x, y) <= 0)
                beats_all = false;
        if (beats_all)
            return {x};
    }
    OutcomeSet all(static_cast<std::size_t>(m));
    for (int x = 0; x < m; ++x)
        all[static_cast<std::size_t>(x)] = x;
    return all;
}

OutcomeSet scoring_winners(const Election & election, const ScoreVector & vector, const GroupSet & excluded)
{
    const auto s = profile_scores(election, vector, excluded);
    OutcomeSet out;
    for (std::size_t c = 0; c < s.size(); ++c) {
        if (out.empty() || s[c] > s[static_cast<std::size_t>(out.front())])
            out.assign(1, static_cast<CandidateIndex>(c));
        else if (s[c] == s[static_cast<std::size_t>(out.front())])
            out.push_back(static_cast<CandidateIndex>(c));
    }
    return out;
}

OutcomeSet condorcet_winners(const Election & election, const GroupSet & excluded)
{
    return condorcet_outcome(margin_matrix(election, excluded));
}

OutcomeSet winners(const Election & election, const VotingRule & rule, const GroupSet & excluded)
{
    rule.check_applies_to(election.candidate_count());
    if (rule.is_condorcet())
        return condorcet_winners(election, excluded);
    return scoring_winners(election, rule.vector(), excluded);
}

GroupTally::GroupTally(const Election & election, const VotingRule & rule) :
    n_(election.group_count()),
    m_(election.candidate_count()),
    condorcet_(rule.is_condorcet())
{
    rule.check_applies_to(m_);
    if (condorcet_) {
        margins_.reserve(static_cast<std::size_t>(n_));
        total_margins_ = MarginMatrix(m_);
        for (int g = 0; g < n_; ++g) {
            margins_.push_back(group_margins(election.group(g), m_));
            total_margins_ += margins_.back();
        }
        original_ = condorcet_outcome(total_margins_);
    }
    else {
        scores_.assign(static_cast<std::size_t>(n_ * m_), 0);
        totals_.assign(static_cast<std::size_t>(m_), 0);
        for (int g = 0; g < n_; ++g) {
            const auto row = group_scores_scaled(election.group(g), rule.vector());
            for (int c = 0; c < m_; ++c) {
                scores_[idx(g, c)] = row[static_cast<std::size_t>(c)];
                totals_[static_cast<std::size_t>(c)] += row[static_cast<std::size_t>(c)];
            }
        }
        original_ = argmax_set(totals_);
    }
}

OutcomeSet GroupTally::outcome_without(const std::vector<char> & deleted) const
{
    if (condorcet_) {
        MarginMatrix d = total_margins_;
        for (int g = 0; g < n_; ++g)
            if (deleted[static_cast<std::size_t>(g)])
                d -= margins_[static_cast<std::size_t>(g)];
        return condorcet_outcome(d);
    }
    std::vector<std::int64_t> s = totals_;
    for (int g = 0; g < n_; ++g)
        if (deleted[static_cast<std::size_t>(g)])
            for (int c = 0; c < m_; ++c)
                s[static_cast<std::size_t>(c)] -= scores_[idx(g, c)];
    return argmax_set(s);
}

} // namespace electguard
