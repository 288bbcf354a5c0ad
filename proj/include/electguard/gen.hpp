#pragma once

#include <electguard/core.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace electguard {

/// Identifies the random stream: engine, seed derivation and sampling routines.
/// Changing any of them changes every generated experiment and must bump this.
inline constexpr std::string_view rng_version = "mt19937_64+splitmix64/v1";

std::uint64_t splitmix64(std::uint64_t x);
/// Independent seed for item `index` of a run started from `master`.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Seeded generator whose sampling is defined here rather than by the
/// standard library's distributions, so streams agree across toolchains.
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    template <typename T>
    void shuffle(std::vector<T> & items)
    {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[static_cast<std::size_t>(below(i))]);
    }

    /// Uniform k-subset of 0..n-1, sorted.
    std::vector<int> sample(int n, int k);
    /// Uniform permutation of `items`.
    std::vector<CandidateIndex> permutation(std::vector<CandidateIndex> items);

private:
    std::mt19937_64 engine_;
};

enum class ProfileModel
{
    uniform,
    two_frontrunner,
};

struct GenConfig
{
    int m = 5;
    int n = 12000;
    int g = 12;
    ProfileModel model = ProfileModel::uniform;
    /// Fixed top alternatives of the two-frontrunner model.
    CandidateIndex a = 0;
    CandidateIndex b = 1;
    std::uint64_t seed = 0;

    void validate() const;
};

/// "a", "b", ... for up to 26 candidates, otherwise "c0", "c1", ...
std::vector<std::string> default_candidate_names(int m);

/// n uniform orders assigned to g classes of n/g consecutive voters.
Election gen_impartial(const GenConfig & config);
/// floor(2n/5) votes topped by a, as many topped by b, the rest uniform;
/// vote positions shuffled before class assignment.
Election gen_two_frontrunner(const GenConfig & config);
Election generate_profile(const GenConfig & config);

} // namespace electguard
