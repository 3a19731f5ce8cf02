#include "rhokit/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "rhokit/constructions.hpp"
#include "rhokit/error.hpp"

namespace rhokit {

std::string_view to_string(Profile profile) {
    switch (profile) {
    case Profile::uniform: return "uniform";
    case Profile::sparse: return "sparse";
    case Profile::bipartiteish: return "bipartiteish";
    case Profile::threshold: return "threshold";
    case Profile::near_construction: return "near_construction";
    }
    return "uniform";
}

std::optional<Profile> parse_profile(std::string_view name) {
    for (Profile p : kAllProfiles)
        if (to_string(p) == name) return p;
    return std::nullopt;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ (index * 0xD1B54A32D192ED03ull));
}

namespace {

std::vector<double> random_masses(int size, Rng& rng) {
    std::vector<double> masses(static_cast<std::size_t>(size));
    for (double& m : masses) m = 0.05 + rng.uniform();
    return masses;
}

template <class Weight>
std::vector<double> symmetric(int size, Weight weight) {
    const auto k = static_cast<std::size_t>(size);
    std::vector<double> w(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) w[i * k + j] = w[j * k + i] = weight(i, j);
    return w;
}

}  // namespace

WeightedGraph split_to_size(const WeightedGraph& w, int size) {
    std::vector<double> masses(w.masses().begin(), w.masses().end());
    std::vector<double> weights(w.weights().begin(), w.weights().end());
    while (static_cast<int>(masses.size()) < size) {
        const auto k = masses.size();
        const auto big = static_cast<std::size_t>(std::max_element(masses.begin(), masses.end()) - masses.begin());
        std::vector<double> next((k + 1) * (k + 1));
        for (std::size_t i = 0; i <= k; ++i) {
            for (std::size_t j = 0; j <= k; ++j) {
                const std::size_t si = i == k ? big : i;
                const std::size_t sj = j == k ? big : j;
                next[i * (k + 1) + j] = weights[si * k + sj];
            }
        }
        masses[big] /= 2;
        masses.push_back(masses[big]);
        weights = std::move(next);
    }
    return WeightedGraph::normalized(std::move(masses), std::move(weights));
}

WeightedGraph jitter(const WeightedGraph& w, double scale, Rng& rng) {
    std::vector<double> masses(w.masses().begin(), w.masses().end());
    for (double& m : masses) m *= 1 + rng.uniform(-scale, scale);
    const int k = w.block_count();
    auto weights = symmetric(k, [&](std::size_t i, std::size_t j) {
        const double x = w.weight(static_cast<int>(i), static_cast<int>(j)) + rng.uniform(-scale, scale);
        return std::clamp(x, 0.0, 1.0);
    });
    return WeightedGraph::normalized(std::move(masses), std::move(weights));
}

WeightedGraph sample_weighted_graph(Profile profile, int size, std::uint64_t seed) {
    if (size < 1 || size > 8) throw DomainError("sample size must be between 1 and 8");
    Rng rng(seed);
    switch (profile) {
    case Profile::uniform: {
        auto masses = random_masses(size, rng);
        auto weights = symmetric(size, [&](std::size_t, std::size_t) { return rng.uniform(); });
        return WeightedGraph::normalized(std::move(masses), std::move(weights));
    }
    case Profile::sparse: {
        auto masses = random_masses(size, rng);
        auto weights = symmetric(size, [&](std::size_t, std::size_t) { return 0.1 * rng.uniform(); });
        return WeightedGraph::normalized(std::move(masses), std::move(weights));
    }
    case Profile::bipartiteish: {
        const auto first = static_cast<std::size_t>((size + 1) / 2);
        const auto k = static_cast<std::size_t>(size);
        auto masses = random_masses(size, rng);
        double left = 0;
        double right = 0;
        for (std::size_t i = 0; i < k; ++i) (i < first ? left : right) += masses[i];
        for (std::size_t i = 0; i < k; ++i) masses[i] /= 2 * (i < first ? left : (right > 0 ? right : 1));
        auto weights = symmetric(size, [&](std::size_t i, std::size_t j) {
            const bool cross = (i < first) != (j < first);
            return cross ? rng.uniform(0.7, 1.0) : 0.02 * rng.uniform();
        });
        return WeightedGraph::normalized(std::move(masses), std::move(weights));
    }
    case Profile::threshold: {
        auto masses = random_masses(size, rng);
        auto weights = symmetric(size, [&](std::size_t i, std::size_t j) {
            const auto s = i + j + 1;
            const auto k = static_cast<std::size_t>(size);
            if (s < k) return 1.0;
            if (s == k) return rng.uniform();
            return 0.0;
        });
        return WeightedGraph::normalized(std::move(masses), std::move(weights));
    }
    case Profile::near_construction: {
        const int pick = rng.integer(0, 5);
        ConstructionFamily family;
        double n = 1;
        switch (pick) {
        case 0: family = {ConstructionKind::constant_p, {rng.uniform(0.2, 0.9)}}; break;
        case 1: family = {ConstructionKind::half_block, {}}; break;
        case 2: family = {ConstructionKind::two_clique, {}}; break;
        case 3: family = {ConstructionKind::looped_star, {}}; n = rng.integer(2, 40); break;
        case 4: family = {ConstructionKind::paw_family, {}}; n = rng.integer(4, 400); break;
        default: family = {ConstructionKind::looped_vertex, {}}; n = rng.integer(2, 40); break;
        }
        WeightedGraph base = build_construction(family, n);
        if (base.block_count() > size) base = build_construction({ConstructionKind::constant_p, {rng.uniform(0.2, 0.9)}}, 1);
        return jitter(split_to_size(base, size), 0.05, rng);
    }
    }
    throw DomainError("unknown profile");
}

}  // namespace rhokit
