#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace electguard {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Precondition or invariant violation in caller-supplied data.
class InvalidArgument : public Error
{
public:
    using Error::Error;
};

/// An exhaustive procedure would exceed its configured enumeration cap.
class ResourceLimitExceeded : public Error
{
public:
    using Error::Error;
};

inline constexpr std::uint64_t default_enumeration_cap = 10'000'000;

/// Sorted, duplicate-free set of voter-group indices.
class GroupSet
{
public:
    GroupSet() = default;
    GroupSet(std::initializer_list<int> xs) : items_(xs) { canonicalize(); }
    explicit GroupSet(std::vector<int> xs) : items_(std::move(xs)) { canonicalize(); }

    static GroupSet range(int n)
    {
        std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
        for (int i = 0; i < n; ++i)
            v[static_cast<std::size_t>(i)] = i;
        return GroupSet(std::move(v));
    }

    bool contains(int g) const { return std::binary_search(items_.begin(), items_.end(), g); }
    void insert(int g)
    {
        auto it = std::lower_bound(items_.begin(), items_.end(), g);
        if (it == items_.end() || *it != g)
            items_.insert(it, g);
    }
    void erase(int g)
    {
        auto it = std::lower_bound(items_.begin(), items_.end(), g);
        if (it != items_.end() && *it == g)
            items_.erase(it);
    }

    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }
    const std::vector<int> & items() const { return items_; }

    bool intersects(const GroupSet & o) const
    {
        auto a = items_.begin();
        auto b = o.items_.begin();
        while (a != items_.end() && b != o.items_.end()) {
            if (*a == *b)
                return true;
            if (*a < *b)
                ++a;
            else
                ++b;
        }
        return false;
    }

    GroupSet unite(const GroupSet & o) const
    {
        std::vector<int> out;
        std::set_union(items_.begin(), items_.end(), o.items_.begin(), o.items_.end(), std::back_inserter(out));
        GroupSet r;
        r.items_ = std::move(out);
        return r;
    }

    GroupSet minus(const GroupSet & o) const
    {
        std::vector<int> out;
        std::set_difference(items_.begin(), items_.end(), o.items_.begin(), o.items_.end(), std::back_inserter(out));
        GroupSet r;
        r.items_ = std::move(out);
        return r;
    }

    /// Membership mask of length n; throws if any index is out of range.
    std::vector<char> mask(int n) const;

    std::string to_string() const;

    friend bool operator==(const GroupSet &, const GroupSet &) = default;
    friend auto operator<=>(const GroupSet &, const GroupSet &) = default;

private:
    void canonicalize()
    {
        std::sort(items_.begin(), items_.end());
        items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    }

    std::vector<int> items_;
};

/// Σ_{i=0..k} C(n, i), saturating at UINT64_MAX.
std::uint64_t count_subsets_up_to(int n, int k);

/// Σ_{i=0..depth} base^i, saturating at UINT64_MAX.
std::uint64_t geometric_node_bound(int base, int depth);

/// Calls visit(subset) for every size-k subset of `pool` in lexicographic order;
/// stops early and returns true as soon as visit returns true.
template <typename Visit>
bool for_each_combination(const std::vector<int> & pool, std::size_t k, Visit && visit)
{
    const std::size_t n = pool.size();
    if (k > n)
        return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    std::vector<int> chosen(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i)
            chosen[i] = pool[idx[i]];
        if (visit(static_cast<const std::vector<int> &>(chosen)))
            return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1))
            --i;
        if (i == 0)
            return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

} // namespace electguard
