#include <electguard/common.hpp>

#include <limits>
#include <sstream>

namespace electguard {

std::vector<char> GroupSet::mask(int n) const
{
    std::vector<char> m(static_cast<std::size_t>(n), 0);
    for (int g : items_) {
        if (g < 0 || g >= n)
            throw InvalidArgument("group index " + std::to_string(g) + " out of range 0.." + std::to_string(n - 1));
        m[static_cast<std::size_t>(g)] = 1;
    }
    return m;
}

std::string GroupSet::to_string() const
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < items_.size(); ++i)
        os << (i ? "," : "") << items_[i];
    os << '}';
    return os.str();
}

namespace {
    constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();

    std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > saturated - b ? saturated : a + b; }
    std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b)
    {
        if (a == 0 || b == 0)
            return 0;
        return a > saturated / b ? saturated : a * b;
    }
}

std::uint64_t count_subsets_up_to(int n, int k)
{
    if (n < 0 || k < 0)
        return 0;
    k = std::min(k, n);
    std::uint64_t total = 0;
    std::uint64_t binom = 1; // C(n, i)
    for (int i = 0; i <= k; ++i) {
        total = sat_add(total, binom);
        if (binom == saturated)
            return saturated;
        // C(n, i+1) = C(n, i) * (n - i) / (i + 1); exact because the product is divisible.
        unsigned __int128 next = static_cast<unsigned __int128>(binom) * static_cast<unsigned>(n - i) / static_cast<unsigned>(i + 1);
        binom = next > saturated ? saturated : static_cast<std::uint64_t>(next);
    }
    return total;
}

std::uint64_t geometric_node_bound(int base, int depth)
{
    std::uint64_t total = 0;
    std::uint64_t power = 1;
    for (int i = 0; i <= depth; ++i) {
        total = sat_add(total, power);
        power = sat_mul(power, static_cast<std::uint64_t>(std::max(base, 0)));
    }
    return total;
}

} // namespace electguard
