#pragma once

// Exhaustive enumeration of small weighted multigraphs up to isomorphism.
// Weight vectors are taken sorted descending (every isomorphism class has a
// representative with sorted weights), edges range over all endpoint
// multisets.

#include <functional>
#include <vector>

#include "gonal/graph.hpp"

namespace testgen {

struct EnumerateParams {
    int vertices = 3;
    long long genus_lo = 2;
    long long genus_hi = 4;
    bool allow_loops = true;
    bool require_stable = false;
    bool require_2ec = false;
};

inline void enumerate_graphs(const EnumerateParams& p,
                             const std::function<void(const gonal::WeightedGraph&)>& sink) {
    using namespace gonal;
    const int n = p.vertices;
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (i != j || p.allow_loops) slots.emplace_back(i, j);

    std::vector<WeightedGraph> kept;
    std::vector<int> weights(n, 0);
    std::vector<int> mult(slots.size(), 0);

    auto build_and_check = [&](long long total_weight, long long b1) {
        std::vector<VertexSpec> vs;
        for (int i = 0; i < n; ++i) vs.push_back({"v" + std::to_string(i), weights[i]});
        std::vector<EdgeSpec> es;
        int eid = 0;
        for (std::size_t s = 0; s < slots.size(); ++s)
            for (int k = 0; k < mult[s]; ++k)
                es.push_back({"e" + std::to_string(eid++),
                              {"v" + std::to_string(slots[s].first),
                               "v" + std::to_string(slots[s].second)}});
        WeightedGraph g(std::move(vs), std::move(es));
        if (!g.connected()) return;
        if (p.require_stable && !is_stable(g)) return;
        if (p.require_2ec && !is_2_edge_connected(g)) return;
        for (const WeightedGraph& h : kept)
            if (are_isomorphic(g, h)) return;
        kept.push_back(g);
        sink(g);
    };

    std::function<void(int, int)> fill_weights = [&](int at, int cap) {
        if (at == n) {
            long long total = 0;
            for (int w : weights) total += w;
            for (long long genus = p.genus_lo; genus <= p.genus_hi; ++genus) {
                long long b1 = genus - total;
                if (b1 < 0) continue;
                long long m = b1 + n - 1;
                // distribute m edges over the slots
                std::function<void(std::size_t, long long)> fill_edges =
                    [&](std::size_t s, long long rest) {
                        if (s + 1 == slots.size()) {
                            mult[s] = static_cast<int>(rest);
                            build_and_check(total, b1);
                            mult[s] = 0;
                            return;
                        }
                        for (long long k = 0; k <= rest; ++k) {
                            mult[s] = static_cast<int>(k);
                            fill_edges(s + 1, rest - k);
                        }
                        mult[s] = 0;
                    };
                if (slots.empty()) {
                    if (m == 0) build_and_check(total, b1);
                } else {
                    fill_edges(0, m);
                }
            }
            return;
        }
        for (int w = 0; w <= cap; ++w) {
            weights[at] = w;
            fill_weights(at + 1, w);  // sorted descending
        }
        weights[at] = 0;
    };
    fill_weights(0, static_cast<int>(p.genus_hi));
}

}  // namespace testgen
