#pragma once

// Randomized generator of pseudo-harmonic morphisms onto trees: picks a
// tree, a compatible surjective vertex map, local degrees and a consistent
// index assignment, all at random. Used to probe the Riemann-Hurwitz
// identity away from the deterministic search path.

#include <algorithm>
#include <optional>

#include "gonal/gonality.hpp"
#include "gonal/morphism.hpp"
#include "support/gen.hpp"

namespace testgen {

inline std::optional<gonal::IndexedMorphism> random_pseudo_harmonic(Rng& rng,
                                                                    const gonal::WeightedGraph& g0) {
    using namespace gonal;
    std::size_t n = g0.vertex_count();
    if (n < 2 || g0.has_loops() || g0.has_legs()) return std::nullopt;

    int nt = rng.uniform(2, static_cast<int>(n));
    const std::vector<WeightedGraph> menu = trees_with_vertices(nt);
    const WeightedGraph& tree = menu[rng.uniform(0, static_cast<int>(menu.size()) - 1)];

    // random compatible vertex map, BFS order so a placed neighbor exists
    std::vector<int> image(n, -1);
    std::vector<std::size_t> order;
    {
        std::vector<char> seen(n, 0);
        order.push_back(0);
        seen[0] = 1;
        for (std::size_t head = 0; head < order.size(); ++head)
            for (auto [e, side] : g0.incident(order[head])) {
                std::size_t u = g0.end(e, 1 - side);
                if (!seen[u]) {
                    seen[u] = 1;
                    order.push_back(u);
                }
            }
    }
    auto adjacent_or_equal = [&](std::size_t a, std::size_t b) {
        if (a == b) return true;
        for (std::size_t e = 0; e < tree.edge_count(); ++e) {
            std::size_t x = tree.end(e, 0), y = tree.end(e, 1);
            if ((x == a && y == b) || (x == b && y == a)) return true;
        }
        return false;
    };
    for (std::size_t v : order) {
        std::vector<std::size_t> options;
        for (std::size_t u = 0; u < tree.vertex_count(); ++u) {
            bool ok = true;
            for (auto [e, side] : g0.incident(v)) {
                std::size_t w = g0.end(e, 1 - side);
                if (image[w] >= 0 && !adjacent_or_equal(u, image[w])) ok = false;
            }
            if (ok) options.push_back(u);
        }
        if (options.empty()) return std::nullopt;
        image[v] = static_cast<int>(options[rng.uniform(0, static_cast<int>(options.size()) - 1)]);
    }
    for (std::size_t u = 0; u < tree.vertex_count(); ++u)
        if (std::count(image.begin(), image.end(), static_cast<int>(u)) == 0)
            return std::nullopt;  // not surjective, try again

    // classify edges, count covers
    std::vector<int> edge_class(g0.edge_count(), -1);
    std::vector<std::map<int, int>> cover(n);
    for (std::size_t e = 0; e < g0.edge_count(); ++e) {
        std::size_t a = g0.end(e, 0), b = g0.end(e, 1);
        if (image[a] == image[b]) continue;
        for (std::size_t f = 0; f < tree.edge_count(); ++f) {
            std::size_t x = tree.end(f, 0), y = tree.end(f, 1);
            if ((static_cast<int>(x) == image[a] && static_cast<int>(y) == image[b]) ||
                (static_cast<int>(y) == image[a] && static_cast<int>(x) == image[b]))
                edge_class[e] = static_cast<int>(f);
        }
        ++cover[a][edge_class[e]];
        ++cover[b][edge_class[e]];
    }
    std::vector<long long> lo(n, 1);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t f = 0; f < tree.edge_count(); ++f) {
            bool incident = tree.end(f, 0) == static_cast<std::size_t>(image[v]) ||
                            tree.end(f, 1) == static_cast<std::size_t>(image[v]);
            if (!incident) continue;
            auto it = cover[v].find(static_cast<int>(f));
            if (it == cover[v].end()) return std::nullopt;  // degenerate vertex
            lo[v] = std::max(lo[v], static_cast<long long>(it->second));
        }
    }

    // local degrees: every fiber must sum to the same total
    long long degree = 0;
    for (std::size_t u = 0; u < tree.vertex_count(); ++u) {
        long long base = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (image[v] == static_cast<int>(u)) base += lo[v];
        degree = std::max(degree, base);
    }
    degree += rng.uniform(0, 2);
    std::vector<long long> m = lo;
    for (std::size_t u = 0; u < tree.vertex_count(); ++u) {
        std::vector<std::size_t> fiber;
        for (std::size_t v = 0; v < n; ++v)
            if (image[v] == static_cast<int>(u)) fiber.push_back(v);
        long long slack = degree;
        for (std::size_t v : fiber) slack -= lo[v];
        while (slack > 0) {
            m[fiber[rng.uniform(0, static_cast<int>(fiber.size()) - 1)]] += 1;
            --slack;
        }
    }

    // indices per class: randomized assignment respecting both endpoint sums
    std::vector<int> index(g0.edge_count(), 0);
    for (std::size_t f = 0; f < tree.edge_count(); ++f) {
        std::vector<std::size_t> members;
        for (std::size_t e = 0; e < g0.edge_count(); ++e)
            if (edge_class[e] == static_cast<int>(f)) members.push_back(e);
        std::map<std::size_t, long long> rem;
        std::map<std::size_t, int> left;
        for (std::size_t e : members)
            for (int side = 0; side < 2; ++side) {
                std::size_t v = g0.end(e, side);
                if (!rem.count(v)) rem[v] = m[v];
                ++left[v];
            }
        auto assign = [&](auto&& self, std::size_t at) -> bool {
            if (at == members.size()) {
                for (auto& [v, r] : rem)
                    if (r != 0) return false;
                return true;
            }
            std::size_t e = members[at];
            std::size_t a = g0.end(e, 0), b = g0.end(e, 1);
            long long hi = std::min(rem[a] - (left[a] - 1), rem[b] - (left[b] - 1));
            if (hi < 1) return false;
            long long start = rng.uniform(1, static_cast<int>(hi));
            for (long long s = 0; s < hi; ++s) {
                long long r = 1 + (start - 1 + s) % hi;
                if (left[a] == 1 && rem[a] != r) continue;
                if (left[b] == 1 && rem[b] != r) continue;
                rem[a] -= r;
                rem[b] -= r;
                --left[a];
                --left[b];
                index[e] = static_cast<int>(r);
                if (self(self, at + 1)) return true;
                ++left[a];
                ++left[b];
                rem[a] += r;
                rem[b] += r;
                index[e] = 0;
            }
            return false;
        };
        if (!assign(assign, 0)) return std::nullopt;
    }

    std::map<std::string, std::string> vmap;
    for (std::size_t v = 0; v < n; ++v) vmap[g0.vertex_id(v)] = tree.vertex_id(image[v]);
    std::vector<gonal::MorphismEdge> edata;
    for (std::size_t e = 0; e < g0.edge_count(); ++e) {
        gonal::MorphismEdge me;
        me.id = g0.edges()[e].id;
        if (edge_class[e] < 0) {
            me.action = gonal::EdgeAction::contract;
            me.index = 0;
        } else {
            me.action = gonal::EdgeAction::map_to;
            me.target_edge = tree.edges()[edge_class[e]].id;
            me.index = index[e];
        }
        edata.push_back(std::move(me));
    }
    gonal::IndexedMorphism phi(g0, tree, std::move(vmap), std::move(edata));
    if (!gonal::check_pseudo_harmonic(phi).ok()) return std::nullopt;
    return phi;
}

}  // namespace testgen
