#pragma once

// Instance sources and brute-force oracles: a seeded random k-tree
// generator, an exhaustive set-partition oracle that finds l-tree
// partitions with connected-t-tree bags without using the constructive
// route, and the tightness certificate for complete graphs.

#include <cstdint>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ktp/chordal.hpp"
#include "ktp/graph.hpp"
#include "ktp/partition.hpp"

namespace ktp {

/// splitmix64 (Steele/Lea/Flood constants). Chosen because the whole
/// generator must be reproducible bit-for-bit from the seed across
/// reimplementations; bounded draws use plain modulo.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

struct GenSpec {
    int n = 0;
    int k = 0;
    std::uint64_t seed = 0;
    bool allow_partial = false; // permit attachments smaller than k

    friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

/// Seeded random k-tree on vertices 0..n-1, returned with its BuildOrder.
///
/// Full mode grows the first min(n, k+1) vertices into a complete graph,
/// then attaches each new vertex to a random k-clique obtained by dropping
/// one vertex from a random recorded (k+1)-clique. Partial mode draws the
/// attachment size s uniformly from 0..min(k, vertices so far) (clamped to
/// the largest recorded clique when no clique that big exists), then takes
/// a random s-subset of a random recorded clique of size >= s.
inline std::pair<Graph, BuildOrder> random_ktree(const GenSpec& spec) {
    if (spec.n < 0)
        throw std::invalid_argument("n must be non-negative");
    if (spec.k < 0)
        throw std::invalid_argument("k must be non-negative");

    SplitMix64 rng(spec.seed);
    Graph g;
    BuildOrder order;
    order.k = spec.k;
    std::vector<std::vector<Vertex>> pool; // ascending-sorted cliques

    for (Vertex v = 0; v < spec.n; ++v) {
        std::vector<Vertex> attach;
        if (!spec.allow_partial) {
            if (v <= spec.k) {
                for (Vertex u = 0; u < v; ++u)
                    attach.push_back(u);
            } else {
                const std::vector<Vertex>& clique = pool[rng.below(pool.size())];
                std::size_t drop = rng.below(clique.size());
                for (std::size_t i = 0; i < clique.size(); ++i)
                    if (i != drop)
                        attach.push_back(clique[i]);
            }
        } else if (v > 0) {
            std::size_t cap = std::min<std::size_t>(spec.k, v);
            std::size_t s = rng.below(cap + 1);
            std::size_t largest = 0;
            for (const auto& clique : pool)
                largest = std::max(largest, clique.size());
            s = std::min(s, largest);
            std::vector<std::size_t> candidates;
            for (std::size_t i = 0; i < pool.size(); ++i)
                if (pool[i].size() >= s)
                    candidates.push_back(i);
            attach = pool[candidates[rng.below(candidates.size())]];
            while (attach.size() > s)
                attach.erase(attach.begin() +
                             static_cast<std::ptrdiff_t>(rng.below(attach.size())));
        }

        g.add_vertex(v);
        VertexSet attach_set(attach.begin(), attach.end());
        for (Vertex a : attach_set)
            g.add_edge(a, v);
        order.steps.push_back({v, attach_set});

        if (spec.allow_partial) {
            attach.push_back(v); // already sorted: v is the largest id
            pool.push_back(std::move(attach));
        } else if (v >= spec.k) {
            attach.push_back(v);
            pool.push_back(std::move(attach));
        }
    }
    return {std::move(g), std::move(order)};
}

/// Visit all set partitions of {0..n-1} as restricted growth strings in
/// lexicographic order; stop early when the visitor returns true.
template <class Visitor>
inline void for_each_set_partition(std::size_t n, Visitor&& visit) {
    if (n == 0) {
        visit(std::vector<int>{});
        return;
    }
    std::vector<int> rgs(n, 0);
    std::vector<int> prefix_max(n, 0); // max of rgs[0..i]
    while (true) {
        if (visit(rgs))
            return;
        std::size_t i = n - 1;
        while (i > 0 && rgs[i] == prefix_max[i - 1] + 1)
            --i;
        if (i == 0)
            return;
        ++rgs[i];
        prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            rgs[j] = 0;
            prefix_max[j] = prefix_max[j - 1];
        }
    }
}

/// Brute-force existence oracle: enumerate every set partition of V(g) and
/// return the first (in restricted-growth-string order) whose quotient is an
/// l-tree and whose every bag induces a connected t-tree; nullopt if none
/// exists. Guarded by a vertex cap — the enumeration is Bell(n).
inline std::optional<HPartition> oracle_exists_partition(const Graph& g, int l, int t,
                                                         std::size_t cap = 10) {
    if (l < 0 || t < 0)
        throw std::invalid_argument("l and t must be non-negative");
    if (g.vertex_count() > cap)
        throw std::invalid_argument("graph has " + std::to_string(g.vertex_count()) +
                                    " vertices, above the oracle cap of " +
                                    std::to_string(cap));
    const std::vector<Vertex> verts = g.vertex_list();
    std::optional<HPartition> found;
    for_each_set_partition(verts.size(), [&](const std::vector<int>& rgs) {
        std::map<Vertex, VertexSet> bags;
        for (std::size_t i = 0; i < rgs.size(); ++i)
            bags[rgs[i]].insert(verts[i]);
        for (const auto& [x, bag] : bags)
            if (!bag_is_connected_ttree(g, bag, t))
                return false;
        Graph host = quotient_graph(g, bags);
        if (!is_ltree(host, l))
            return false;
        found = HPartition{std::move(host), std::move(bags)};
        return true;
    });
    return found;
}

/// Certify that floor(k/(l+1)) is the best possible bag parameter for the
/// complete graph on k+1 vertices: an l-tree partition with connected
/// t-tree bags exists at t = floor(k/(l+1)) but not at t-1.
inline bool certify_tightness(int k, int l, int cap = 5) {
    if (k < 0 || l < 0 || l > k)
        throw std::invalid_argument("require 0 <= l <= k");
    if (k > cap)
        throw std::invalid_argument("k = " + std::to_string(k) +
                                    " is above the tightness cap of " + std::to_string(cap));
    const Graph g = complete_graph(k + 1);
    const int t = k / (l + 1);
    if (!oracle_exists_partition(g, l, t, static_cast<std::size_t>(k) + 1))
        return false;
    if (t == 0)
        return true;
    return !oracle_exists_partition(g, l, t - 1, static_cast<std::size_t>(k) + 1);
}

} // namespace ktp
