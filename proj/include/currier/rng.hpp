#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace currier {

// All randomness in the engine flows through these helpers so that results
// are bit-identical across platforms and standard-library vendors.
// std::mt19937_64 has a fully specified output sequence; the distribution
// helpers below are hand-rolled because std::uniform_*_distribution is not
// specified and differs across implementations.

// SplitMix64 finalizer. Used to turn arbitrary 64-bit inputs into
// well-mixed seeds.
std::uint64_t mix64(std::uint64_t x);

// Stable labeled seed derivation: FNV-1a over the label bytes folded into
// the parent seed, then finalized. Extra integer arguments extend the chain,
// e.g. derive_seed(root, "stage_shuffle", stage_index).
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label);
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label, std::uint64_t a);
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label, std::uint64_t a,
                          std::uint64_t b);

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(mix64(seed)); }

// Uniform integer in [0, n) via rejection sampling; n must be > 0.
std::uint64_t uniform_below(Rng& rng, std::uint64_t n);

// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(Rng& rng);

// In-place Fisher-Yates shuffle.
template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
        using std::swap;
        swap(items[i - 1], items[j]);
    }
}

// Uniform sample of m items without replacement, returned in draw order.
// Partial Fisher-Yates; m == items.size() yields a full shuffle.
template <typename T>
std::vector<T> sample_without_replacement(std::vector<T> items, std::size_t m, Rng& rng) {
    if (m > items.size()) m = items.size();
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t j = i + static_cast<std::size_t>(uniform_below(rng, items.size() - i));
        using std::swap;
        swap(items[i], items[j]);
    }
    items.resize(m);
    return items;
}

} // namespace currier
