#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "rhokit/graph.hpp"

namespace rhokit {

enum class Profile { uniform, sparse, bipartiteish, threshold, near_construction };

inline constexpr Profile kAllProfiles[] = {Profile::uniform, Profile::sparse, Profile::bipartiteish,
                                           Profile::threshold, Profile::near_construction};

std::string_view to_string(Profile profile);
std::optional<Profile> parse_profile(std::string_view name);

// Stateless 64-bit mix; used to derive independent per-trial streams.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// mt19937_64 with its own real and integer helpers, so streams are
// identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    // Uniform integer in [lo, hi].
    int integer(int lo, int hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(engine_() % span);
    }
    bool coin(double p = 0.5) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

// Deterministic in (profile, size, seed). Throws DomainError unless 1 <= size <= 8.
//   uniform            masses 0.05 + U[0,1) normalised, weights U[0,1)
//   sparse             as uniform with weights in [0, 0.1)
//   bipartiteish       two groups of mass 1/2; cross weights in [0.7, 1], within in [0, 0.02)
//   threshold          W_ij = 1 below the anti-diagonal, random on it, 0 above
//   near_construction  a two- or three-block construction with jittered
//                      parameters, padded to size by splitting blocks
WeightedGraph sample_weighted_graph(Profile profile, int size, std::uint64_t seed);

// Copies the largest block until there are `size` blocks; the graphon is unchanged.
WeightedGraph split_to_size(const WeightedGraph& w, int size);

// Multiplies masses by 1 + U[-s, s], shifts weights by U[-s, s] (clipped).
WeightedGraph jitter(const WeightedGraph& w, double scale, Rng& rng);

}  // namespace rhokit
