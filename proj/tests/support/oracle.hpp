#pragma once

// Rank oracle that avoids the reduced-divisor machinery entirely: linear
// equivalence is decided by integer lattice membership against the Laplacian
// (via an integer diagonalization computed once per graph), and rank follows
// the definition by enumerating effective divisors.

#include <vector>

#include "gonal/divisor.hpp"
#include "gonal/graph.hpp"
#include "gonal/intmat.hpp"

namespace testgen {

class OracleRank {
public:
    explicit OracleRank(const gonal::WeightedGraph& g) : model_(gonal::weightless_model(g)) {
        n_ = model_.vertex_count();
        gonal::IntMat lap(n_, std::vector<long long>(n_, 0));
        for (std::size_t e = 0; e < model_.edge_count(); ++e) {
            std::size_t a = model_.end(e, 0), b = model_.end(e, 1);
            if (a == b) continue;
            ++lap[a][a];
            ++lap[b][b];
            --lap[a][b];
            --lap[b][a];
        }
        diag_ = gonal::diagonalize(lap);
    }

    const gonal::WeightedGraph& model() const { return model_; }

    bool equivalent(const std::vector<long long>& a, const std::vector<long long>& b) const {
        long long da = 0, db = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return false;
        std::vector<long long> c(n_);
        for (std::size_t i = 0; i < n_; ++i) c[i] = a[i] - b[i];
        // c must lie in the image of the Laplacian
        for (std::size_t i = 0; i < n_; ++i) {
            __int128 y = 0;
            for (std::size_t j = 0; j < n_; ++j) y += __int128(diag_.u[i][j]) * c[j];
            long long d = i < diag_.diag.size() ? diag_.diag[i] : 0;
            if (d == 0) {
                if (y != 0) return false;
            } else if (y % d != 0) {
                return false;
            }
        }
        return true;
    }

    std::vector<long long> lift(const gonal::Divisor& d) const {
        std::vector<long long> out(n_, 0);
        for (std::size_t i = 0; i < n_; ++i) out[i] = d.coeff(model_.vertex_id(i));
        return out;
    }

    std::vector<std::vector<long long>> effective(long long degree) const {
        std::vector<std::vector<long long>> out;
        if (degree < 0) return out;
        std::vector<long long> cur(n_, 0);
        auto rec = [&](auto&& self, std::size_t v, long long rest) -> void {
            if (v + 1 == n_) {
                cur[v] = rest;
                out.push_back(cur);
                return;
            }
            for (long long x = 0; x <= rest; ++x) {
                cur[v] = x;
                self(self, v + 1, rest - x);
            }
        };
        rec(rec, 0, degree);
        return out;
    }

    bool equivalent_to_effective(const std::vector<long long>& d) const {
        long long deg = 0;
        for (long long c : d) deg += c;
        if (deg < 0) return false;
        for (const auto& f : effective(deg))
            if (equivalent(d, f)) return true;
        return false;
    }

    long long rank(const gonal::Divisor& div) const {
        std::vector<long long> d = lift(div);
        long long deg = 0;
        for (long long c : d) deg += c;
        if (deg < 0 || !equivalent_to_effective(d)) return -1;
        for (long long k = 1;; ++k) {
            for (const auto& e : effective(k)) {
                std::vector<long long> rest(n_);
                for (std::size_t i = 0; i < n_; ++i) rest[i] = d[i] - e[i];
                if (!equivalent_to_effective(rest)) return k - 1;
            }
            if (k > deg) return deg;  // cannot exceed the degree
        }
    }

private:
    gonal::WeightedGraph model_;
    std::size_t n_ = 0;
    gonal::IntDiagonalization diag_;
};

}  // namespace testgen
