#include "gonal/divisor.hpp"

#include <algorithm>
#include <stdexcept>

#include "gonal/intmat.hpp"

namespace gonal {

long long Divisor::degree() const {
    long long s = 0;
    for (const auto& [v, c] : coeffs_) s += c;
    return s;
}

bool Divisor::effective() const {
    for (const auto& [v, c] : coeffs_)
        if (c < 0) return false;
    return true;
}

Divisor Divisor::operator+(const Divisor& o) const {
    Divisor r = *this;
    for (const auto& [v, c] : o.coeffs_) r.add(v, c);
    return r;
}

Divisor Divisor::operator-(const Divisor& o) const {
    Divisor r = *this;
    for (const auto& [v, c] : o.coeffs_) r.add(v, -c);
    return r;
}

Divisor Divisor::operator*(long long k) const {
    Divisor r;
    if (k == 0) return r;
    for (const auto& [v, c] : coeffs_) r.set(v, c * k);
    return r;
}

Divisor canonical_divisor(const WeightedGraph& g) {
    g.require_valid();
    Divisor k;
    // Legs do not enter here: K must have degree 2g-2 and the genus ignores
    // legs, so only half-edge valency counts.
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        k.set(g.vertex_id(v), 2LL * g.weight(v) - 2 + g.edge_valency(v));
    return k;
}

namespace {

// Dense view of a loopless weightless graph with a distinguished base vertex
// at index 0. All chip-firing work happens here.
struct Dense {
    std::size_t n = 0;
    std::vector<std::vector<int>> mult;
    std::vector<int> deg;
    std::vector<int> level;  // BFS distance from the base
    int max_level = 0;

    Dense() = default;
    Dense(const WeightedGraph& g, std::size_t q) {
        n = g.vertex_count();
        mult.assign(n, std::vector<int>(n, 0));
        deg.assign(n, 0);
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            std::size_t a = g.end(e, 0), b = g.end(e, 1);
            ++mult[a][b];
            ++mult[b][a];
            ++deg[a];
            ++deg[b];
        }
        // permute so the base vertex is index 0
        if (q != 0) {
            std::vector<std::size_t> perm(n);
            for (std::size_t i = 0; i < n; ++i) perm[i] = i;
            std::swap(perm[0], perm[q]);
            std::vector<std::vector<int>> m2(n, std::vector<int>(n, 0));
            std::vector<int> d2(n);
            for (std::size_t i = 0; i < n; ++i) {
                d2[i] = deg[perm[i]];
                for (std::size_t j = 0; j < n; ++j) m2[i][j] = mult[perm[i]][perm[j]];
            }
            mult = std::move(m2);
            deg = std::move(d2);
            index_map = std::move(perm);
        } else {
            index_map.resize(n);
            for (std::size_t i = 0; i < n; ++i) index_map[i] = i;
        }
        level.assign(n, -1);
        std::vector<std::size_t> queue{0};
        level[0] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::size_t v = queue[head];
            for (std::size_t u = 0; u < n; ++u)
                if (mult[v][u] > 0 && level[u] < 0) {
                    level[u] = level[v] + 1;
                    max_level = std::max(max_level, level[u]);
                    queue.push_back(u);
                }
        }
    }

    // dense index -> graph vertex index
    std::vector<std::size_t> index_map;

    void fire_set(std::vector<long long>& d, const std::vector<char>& in_set, long long t) const {
        for (std::size_t v = 0; v < n; ++v) {
            if (!in_set[v]) continue;
            for (std::size_t u = 0; u < n; ++u) {
                if (in_set[u] || mult[v][u] == 0) continue;
                d[v] -= t * mult[v][u];
                d[u] += t * mult[v][u];
            }
        }
    }

    // Dhar's burning from the base: returns the burnt marker vector.
    std::vector<char> burn(const std::vector<long long>& d) const {
        std::vector<char> burnt(n, 0);
        burnt[0] = 1;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t v = 1; v < n; ++v) {
                if (burnt[v]) continue;
                long long incoming = 0;
                for (std::size_t u = 0; u < n; ++u)
                    if (burnt[u]) incoming += mult[v][u];
                if (incoming > d[v]) {
                    burnt[v] = 1;
                    changed = true;
                }
            }
        }
        return burnt;
    }

    void reduce(std::vector<long long>& d) const {
        // Make the divisor effective away from the base, farthest level first:
        // firing everything strictly closer than level k feeds level k.
        for (int k = max_level; k >= 1; --k) {
            long long t = 0;
            for (std::size_t v = 0; v < n; ++v) {
                if (level[v] != k || d[v] >= 0) continue;
                long long boundary = 0;
                for (std::size_t u = 0; u < n; ++u)
                    if (level[u] < k) boundary += mult[v][u];
                t = std::max(t, (-d[v] + boundary - 1) / boundary);
            }
            if (t > 0) {
                std::vector<char> in_set(n, 0);
                for (std::size_t v = 0; v < n; ++v)
                    if (level[v] < k) in_set[v] = 1;
                fire_set(d, in_set, t);
            }
        }
        // Dhar loop: fire the unburnt part until everything burns.
        for (;;) {
            std::vector<char> burnt = burn(d);
            bool all = std::all_of(burnt.begin(), burnt.end(), [](char c) { return c != 0; });
            if (all) return;
            std::vector<char> unburnt(n);
            for (std::size_t v = 0; v < n; ++v) unburnt[v] = !burnt[v];
            fire_set(d, unburnt, 1);
        }
    }
};

Dense make_dense_checked(const WeightedGraph& g, std::size_t q, const char* who) {
    g.require_valid();
    if (g.has_loops()) throw std::invalid_argument(std::string(who) + " requires a loopless graph");
    if (g.total_weight() != 0)
        throw std::invalid_argument(std::string(who) + " requires a weightless graph");
    return Dense(g, q);
}

std::vector<long long> to_dense(const WeightedGraph& g, const Dense& m, const Divisor& d) {
    for (const auto& [v, c] : d.coeffs())
        if (!g.vertex_index(v))
            throw std::invalid_argument("divisor supported on unknown vertex " + v);
    std::vector<long long> out(m.n, 0);
    for (std::size_t i = 0; i < m.n; ++i) out[i] = d.coeff(g.vertex_id(m.index_map[i]));
    return out;
}

Divisor from_dense(const WeightedGraph& g, const Dense& m, const std::vector<long long>& d) {
    Divisor out;
    for (std::size_t i = 0; i < m.n; ++i) out.set(g.vertex_id(m.index_map[i]), d[i]);
    return out;
}

}  // namespace

Divisor reduce(const WeightedGraph& g, const Divisor& d, const std::string& q) {
    Dense m = make_dense_checked(g, g.require_vertex(q), "reduce");
    std::vector<long long> vec = to_dense(g, m, d);
    m.reduce(vec);
    return from_dense(g, m, vec);
}

struct RankEngine::Impl {
    WeightedGraph model;
    Dense dense;
    std::map<std::vector<long long>, long long> memo;

    explicit Impl(const WeightedGraph& g) : model(weightless_model(g)) {
        model.require_valid();
        dense = Dense(model, 0);
    }

    std::vector<long long> lift(const Divisor& d) const { return to_dense(model, dense, d); }

    long long rank_of(std::vector<long long> d) {
        long long deg = 0;
        for (long long c : d) deg += c;
        if (deg < 0) return -1;
        dense.reduce(d);
        auto it = memo.find(d);
        if (it != memo.end()) return it->second;
        if (d[0] < 0) {
            memo.emplace(d, -1);
            return -1;
        }
        long long best = deg;  // rank never exceeds the degree
        for (std::size_t v = 0; v < dense.n && best >= 0; ++v) {
            std::vector<long long> next = d;
            --next[v];
            best = std::min(best, rank_of(std::move(next)));
        }
        memo.emplace(d, best + 1);
        return best + 1;
    }

    bool geq(std::vector<long long> d, long long r) {
        if (r < 0) return true;
        long long deg = 0;
        for (long long c : d) deg += c;
        if (deg < r) return false;
        dense.reduce(d);
        if (d[0] < 0) return false;
        if (r == 0) return true;
        for (std::size_t v = 0; v < dense.n; ++v) {
            std::vector<long long> next = d;
            --next[v];
            if (!geq(std::move(next), r - 1)) return false;
        }
        return true;
    }
};

RankEngine::RankEngine(const WeightedGraph& g) : impl_(std::make_unique<Impl>(g)) {}
RankEngine::~RankEngine() = default;
RankEngine::RankEngine(RankEngine&&) noexcept = default;
RankEngine& RankEngine::operator=(RankEngine&&) noexcept = default;

long long RankEngine::rank(const Divisor& d) {
    return impl_->rank_of(impl_->lift(d));
}

bool RankEngine::rank_at_least(const Divisor& d, long long r) {
    return impl_->geq(impl_->lift(d), r);
}

Divisor RankEngine::reduced(const Divisor& d) const {
    std::vector<long long> vec = impl_->lift(d);
    impl_->dense.reduce(vec);
    return from_dense(impl_->model, impl_->dense, vec);
}

const WeightedGraph& RankEngine::model() const {
    return impl_->model;
}

long long rank(const WeightedGraph& g, const Divisor& d) {
    RankEngine engine(g);
    return engine.rank(d);
}

bool is_equivalent(const WeightedGraph& g, const Divisor& a, const Divisor& b) {
    if (a.degree() != b.degree()) return false;
    RankEngine engine(g);
    return engine.reduced(a) == engine.reduced(b);
}

long long jacobian_order(const WeightedGraph& g) {
    WeightedGraph m = weightless_model(g);
    std::size_t n = m.vertex_count();
    if (n <= 1) return 1;
    IntMat lap(n - 1, std::vector<long long>(n - 1, 0));
    for (std::size_t e = 0; e < m.edge_count(); ++e) {
        std::size_t a = m.end(e, 0), b = m.end(e, 1);
        if (a == b) continue;
        if (a > 0) ++lap[a - 1][a - 1];
        if (b > 0) ++lap[b - 1][b - 1];
        if (a > 0 && b > 0) {
            --lap[a - 1][b - 1];
            --lap[b - 1][a - 1];
        }
    }
    return det_bareiss(std::move(lap));
}

namespace {

// Superstable configurations relative to the base vertex, enumerated over the
// bounded grid 0 <= c(v) <= deg(v)-1 and certified by Dhar burning. One per
// linear equivalence class.
std::vector<std::vector<long long>> superstables(const Dense& m, long long cap) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> c(m.n, 0);
    long long work = 0;
    auto rec = [&](auto&& self, std::size_t v) -> void {
        if (++work > 50000000LL)
            throw EnumerationCapExceeded("class enumeration work cap exceeded");
        if (v == m.n) {
            std::vector<char> burnt = m.burn(c);
            if (std::all_of(burnt.begin(), burnt.end(), [](char x) { return x != 0; })) {
                out.push_back(c);
                if (static_cast<long long>(out.size()) > cap)
                    throw EnumerationCapExceeded("class count exceeds cap");
            }
            return;
        }
        for (int x = 0; x < m.deg[v]; ++x) {
            c[v] = x;
            self(self, v + 1);
        }
        c[v] = 0;
    };
    if (m.n == 0) return out;
    rec(rec, 1);
    return out;
}

}  // namespace

std::vector<PicardClass> enumerate_classes(const WeightedGraph& g, long long degree,
                                           long long cap) {
    WeightedGraph model = weightless_model(g);
    model.require_valid();
    Dense dense(model, 0);
    std::vector<PicardClass> out;
    for (std::vector<long long>& c : superstables(dense, cap)) {
        long long rest = degree;
        for (std::size_t v = 1; v < dense.n; ++v) rest -= c[v];
        c[0] = rest;
        PicardClass pc;
        pc.representative = from_dense(model, dense, c);
        pc.degree = degree;
        out.push_back(std::move(pc));
    }
    return out;
}

namespace {

bool divisor_less(const Divisor& a, const Divisor& b, const WeightedGraph& model) {
    for (std::size_t v = 0; v < model.vertex_count(); ++v) {
        long long x = a.coeff(model.vertex_id(v)), y = b.coeff(model.vertex_id(v));
        if (x != y) return x < y;
    }
    return false;
}

}  // namespace

std::vector<PicardClass> W_r_d(const WeightedGraph& g, long long d, long long r, long long cap) {
    if (d < 0 || r < 0) throw std::invalid_argument("W_r_d requires d >= 0 and r >= 0");
    RankEngine engine(g);
    std::vector<PicardClass> out;
    for (PicardClass& pc : enumerate_classes(g, d, cap)) {
        if (engine.rank_at_least(pc.representative, r)) out.push_back(std::move(pc));
    }
    return out;
}

GonalWitness is_divisorially_gonal(const WeightedGraph& g, long long d, long long cap) {
    RankEngine engine(g);
    GonalWitness out;
    for (PicardClass& pc : enumerate_classes(g, d, cap)) {
        if (!engine.rank_at_least(pc.representative, 1)) continue;
        if (!out.gonal || divisor_less(pc.representative, *out.witness, engine.model())) {
            out.gonal = true;
            out.witness = pc.representative;
        }
    }
    return out;
}

}  // namespace gonal
