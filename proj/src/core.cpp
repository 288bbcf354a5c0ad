#include <electguard/core.hpp>

#include <boost/integer/common_factor_rt.hpp>

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace electguard {

LinearOrder::LinearOrder(std::vector<CandidateIndex> ranking) : ranking_(std::move(ranking))
{
    const int m = static_cast<int>(ranking_.size());
    positions_.assign(ranking_.size(), -1);
    for (int p = 0; p < m; ++p) {
        const CandidateIndex c = ranking_[static_cast<std::size_t>(p)];
        if (c < 0 || c >= m)
            throw InvalidArgument("order entry " + std::to_string(c) + " outside 0.." + std::to_string(m - 1));
        if (positions_[static_cast<std::size_t>(c)] != -1)
            throw InvalidArgument("order repeats candidate " + std::to_string(c));
        positions_[static_cast<std::size_t>(c)] = p;
    }
}

LinearOrder LinearOrder::identity(int m)
{
    std::vector<CandidateIndex> r(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        r[static_cast<std::size_t>(i)] = i;
    return LinearOrder(std::move(r));
}

LinearOrder LinearOrder::reversed() const
{
    return LinearOrder(std::vector<CandidateIndex>(ranking_.rbegin(), ranking_.rend()));
}

VoterGroup::VoterGroup(std::vector<VoteBundle> bundles, std::optional<std::string> label) : label_(std::move(label))
{
    for (auto & b : bundles)
        add(b.order, b.count);
}

void VoterGroup::add(const LinearOrder & order, std::int64_t count)
{
    if (count < 1)
        throw InvalidArgument("bundle count must be >= 1, got " + std::to_string(count));
    for (auto & b : bundles_) {
        if (b.order == order) {
            b.count += count;
            return;
        }
    }
    bundles_.push_back({order, count});
}

void VoterGroup::add(const VoterGroup & other, std::int64_t times)
{
    if (times == 0)
        return;
    for (const auto & b : other.bundles_)
        add(b.order, b.count * times);
}

std::int64_t VoterGroup::voter_count() const
{
    std::int64_t total = 0;
    for (const auto & b : bundles_)
        total += b.count;
    return total;
}

std::vector<VoteBundle> VoterGroup::canonical_bundles() const
{
    auto out = bundles_;
    std::sort(out.begin(), out.end(), [](const VoteBundle & a, const VoteBundle & b) { return a.order < b.order; });
    return out;
}

Election::Election(std::vector<std::string> candidate_names, std::vector<VoterGroup> groups) :
    names_(std::move(candidate_names)),
    groups_(std::move(groups))
{
    if (names_.empty())
        throw InvalidArgument("election needs at least one candidate");
    std::set<std::string> seen;
    for (const auto & n : names_)
        if (!seen.insert(n).second)
            throw InvalidArgument("duplicate candidate name '" + n + "'");
    if (groups_.empty())
        throw InvalidArgument("election needs at least one voter group");
    for (std::size_t g = 0; g < groups_.size(); ++g)
        for (const auto & b : groups_[g].bundles())
            if (b.order.size() != candidate_count())
                throw InvalidArgument("group " + std::to_string(g) + " has an order over " + std::to_string(b.order.size())
                    + " candidates, expected " + std::to_string(candidate_count()));
}

std::optional<CandidateIndex> Election::find_candidate(const std::string & name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        return std::nullopt;
    return static_cast<CandidateIndex>(it - names_.begin());
}

std::int64_t Election::voter_count() const
{
    std::int64_t total = 0;
    for (const auto & g : groups_)
        total += g.voter_count();
    return total;
}

void InstanceParams::validate(int n) const
{
    if (k_a < 0 || k_a > n)
        throw InvalidArgument("k_a = " + std::to_string(k_a) + " outside 0.." + std::to_string(n));
    if (k_d < 0 || k_d > n)
        throw InvalidArgument("k_d = " + std::to_string(k_d) + " outside 0.." + std::to_string(n));
}

ScoreVector::ScoreVector(std::vector<Rational> entries) : entries_(std::move(entries))
{
    if (entries_.size() < 2)
        throw InvalidArgument("score vector needs at least 2 entries");
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
        if (entries_[i] < entries_[i + 1])
            throw InvalidArgument("score vector must be non-increasing (entry " + std::to_string(i + 1) + " < entry "
                + std::to_string(i + 2) + ")");
    if (!(entries_.front() > entries_.back()))
        throw InvalidArgument("score vector must have first entry > last entry");

    std::int64_t lcm = 1;
    for (const auto & e : entries_)
        lcm = boost::integer::lcm(lcm, e.denominator());
    scale_ = lcm;
    integer_weights_.reserve(entries_.size());
    for (const auto & e : entries_)
        integer_weights_.push_back(e.numerator() * (lcm / e.denominator()));
}

ScoreVector ScoreVector::from_integers(const std::vector<std::int64_t> & entries)
{
    std::vector<Rational> r(entries.begin(), entries.end());
    return ScoreVector(std::move(r));
}

Rational ScoreVector::sum() const
{
    Rational s = 0;
    for (const auto & e : entries_)
        s += e;
    return s;
}

int ScoreVector::last_drop() const
{
    for (int j = size() - 2; j >= 0; --j)
        if (entries_[static_cast<std::size_t>(j)] > entries_[static_cast<std::size_t>(j + 1)])
            return j;
    return -1; // unreachable: constructor enforces first > last
}

bool ScoreVector::is_normalized() const
{
    const int j = last_drop();
    return entries_.back() == Rational(0) && entries_[static_cast<std::size_t>(j)] - entries_[static_cast<std::size_t>(j + 1)] == Rational(1);
}

std::string ScoreVector::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i)
        os << (i ? "," : "") << format_rational(entries_[i]);
    os << ')';
    return os.str();
}

MarginMatrix & MarginMatrix::operator+=(const MarginMatrix & o)
{
    for (std::size_t i = 0; i < d_.size(); ++i)
        d_[i] += o.d_[i];
    return *this;
}

MarginMatrix & MarginMatrix::operator-=(const MarginMatrix & o)
{
    for (std::size_t i = 0; i < d_.size(); ++i)
        d_[i] -= o.d_[i];
    return *this;
}

ScoreVector normalize_score_vector(const std::vector<Rational> & raw)
{
    ScoreVector checked(raw); // validates monotonicity and first > last
    std::vector<Rational> shifted = raw;
    const Rational low = raw.back();
    for (auto & e : shifted)
        e -= low;
    const int j = checked.last_drop();
    const Rational drop = shifted[static_cast<std::size_t>(j)] - shifted[static_cast<std::size_t>(j + 1)];
    for (auto & e : shifted)
        e /= drop;
    return ScoreVector(std::move(shifted));
}

ScoreVector normalize_score_vector(const ScoreVector & v)
{
    return normalize_score_vector(v.entries());
}

ScoreTotals group_scores(const VoterGroup & group, const ScoreVector & vector)
{
    const int m = vector.size();
    ScoreTotals s(static_cast<std::size_t>(m), Rational(0));
    for (const auto & b : group.bundles()) {
        if (b.order.size() != m)
            throw InvalidArgument("score vector length " + std::to_string(m) + " does not match order length "
                + std::to_string(b.order.size()));
        for (int p = 0; p < m; ++p)
            s[static_cast<std::size_t>(b.order.at(p))] += vector[p] * b.count;
    }
    return s;
}

std::vector<std::int64_t> group_scores_scaled(const VoterGroup & group, const ScoreVector & vector)
{
    const int m = vector.size();
    const auto & w = vector.integer_weights();
    std::vector<std::int64_t> s(static_cast<std::size_t>(m), 0);
    for (const auto & b : group.bundles()) {
        if (b.order.size() != m)
            throw InvalidArgument("score vector length " + std::to_string(m) + " does not match order length "
                + std::to_string(b.order.size()));
        for (int p = 0; p < m; ++p)
            s[static_cast<std::size_t>(b.order.at(p))] += w[static_cast<std::size_t>(p)] * b.count;
    }
    return s;
}

MarginMatrix group_margins(const VoterGroup & group, int m)
{
    MarginMatrix d(m);
    for (const auto & b : group.bundles()) {
        for (int p = 0; p < m; ++p)
            for (int q = p + 1; q < m; ++q) {
                d.at(b.order.at(p), b.order.at(q)) += b.count;
                d.at(b.order.at(q), b.order.at(p)) -= b.count;
            }
    }
    return d;
}

MarginMatrix margin_matrix(const Election & election, const GroupSet & excluded)
{
    const auto skip = excluded.mask(election.group_count());
    MarginMatrix d(election.candidate_count());
    for (int g = 0; g < election.group_count(); ++g)
        if (!skip[static_cast<std::size_t>(g)])
            d += group_margins(election.group(g), election.candidate_count());
    return d;
}

ScoreTotals profile_scores(const Election & election, const ScoreVector & vector, const GroupSet & excluded)
{
    if (vector.size() != election.candidate_count())
        throw InvalidArgument("score vector length " + std::to_string(vector.size()) + " but election has "
            + std::to_string(election.candidate_count()) + " candidates");
    const auto skip = excluded.mask(election.group_count());
    ScoreTotals total(static_cast<std::size_t>(election.candidate_count()), Rational(0));
    for (int g = 0; g < election.group_count(); ++g) {
        if (skip[static_cast<std::size_t>(g)])
            continue;
        const auto s = group_scores(election.group(g), vector);
        for (std::size_t c = 0; c < s.size(); ++c)
            total[c] += s[c];
    }
    return total;
}

Rational parse_rational(const std::string & text)
{
    auto fail = [&]() -> Rational { throw InvalidArgument("not a rational number: '" + text + "'"); };
    if (text.empty())
        return fail();
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '-' || text[i] == '+') {
        negative = text[i] == '-';
        ++i;
    }
    auto read_digits = [&](std::int64_t & value, int & ndigits) {
        value = 0;
        ndigits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + (text[i] - '0');
            ++ndigits;
            ++i;
            if (ndigits > 17)
                fail();
        }
    };
    std::int64_t whole = 0;
    int nd = 0;
    read_digits(whole, nd);
    Rational r;
    if (i < text.size() && text[i] == '/') {
        if (nd == 0)
            return fail();
        ++i;
        std::int64_t den = 0;
        int dd = 0;
        read_digits(den, dd);
        if (dd == 0 || den == 0 || i != text.size())
            return fail();
        r = Rational(whole, den);
    }
    else if (i < text.size() && text[i] == '.') {
        ++i;
        std::int64_t frac = 0;
        int fd = 0;
        read_digits(frac, fd);
        if ((nd == 0 && fd == 0) || i != text.size() || nd + fd > 17)
            return fail();
        std::int64_t scale = 1;
        for (int k = 0; k < fd; ++k)
            scale *= 10;
        r = Rational(whole * scale + frac, scale);
    }
    else {
        if (nd == 0 || i != text.size())
            return fail();
        r = Rational(whole);
    }
    return negative ? -r : r;
}

std::string format_rational(const Rational & r)
{
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace electguard
