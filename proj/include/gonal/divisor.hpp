#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gonal/graph.hpp"

namespace gonal {

// Integer chip assignment on vertices. A divisor does not own a graph; the
// operations below check its support against the graph they are given.
class Divisor {
public:
    Divisor() = default;
    explicit Divisor(std::map<std::string, long long> coeffs) : coeffs_(std::move(coeffs)) {}

    long long coeff(const std::string& v) const {
        auto it = coeffs_.find(v);
        return it == coeffs_.end() ? 0 : it->second;
    }
    void set(const std::string& v, long long c) {
        if (c == 0)
            coeffs_.erase(v);
        else
            coeffs_[v] = c;
    }
    void add(const std::string& v, long long c) { set(v, coeff(v) + c); }
    long long degree() const;
    bool effective() const;
    const std::map<std::string, long long>& coeffs() const { return coeffs_; }

    Divisor operator+(const Divisor& o) const;
    Divisor operator-(const Divisor& o) const;
    Divisor operator*(long long k) const;
    bool operator==(const Divisor& o) const { return coeffs_ == o.coeffs_; }

    static Divisor at(const std::string& v, long long c = 1) {
        Divisor d;
        d.set(v, c);
        return d;
    }

private:
    std::map<std::string, long long> coeffs_;  // zero entries are pruned
};

struct PicardClass {
    Divisor representative;  // the q-reduced divisor, q = first vertex
    long long degree = 0;
};

// Raised when class enumeration would exceed the configured cap.
struct EnumerationCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Divisor canonical_divisor(const WeightedGraph& g);

// q-reduced form on a loopless, weightless graph (Dhar's burning certificate).
Divisor reduce(const WeightedGraph& g, const Divisor& d, const std::string& q);

bool is_equivalent(const WeightedGraph& g, const Divisor& a, const Divisor& b);

long long rank(const WeightedGraph& g, const Divisor& d);

long long jacobian_order(const WeightedGraph& g);
std::vector<PicardClass> enumerate_classes(const WeightedGraph& g, long long degree,
                                           long long cap = 1000000);

std::vector<PicardClass> W_r_d(const WeightedGraph& g, long long d, long long r,
                               long long cap = 1000000);

struct GonalWitness {
    bool gonal = false;
    std::optional<Divisor> witness;  // least q-reduced representative, on the weightless model
};
GonalWitness is_divisorially_gonal(const WeightedGraph& g, long long d,
                                   long long cap = 1000000);

// Shared engine for repeated rank queries against one graph. Computes on the
// weightless model with divisors transported by vertex id; results are
// memoized on q-reduced forms.
class RankEngine {
public:
    explicit RankEngine(const WeightedGraph& g);
    ~RankEngine();
    RankEngine(RankEngine&&) noexcept;
    RankEngine& operator=(RankEngine&&) noexcept;

    long long rank(const Divisor& d);
    bool rank_at_least(const Divisor& d, long long r);
    Divisor reduced(const Divisor& d) const;  // q = first vertex of the model
    const WeightedGraph& model() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace gonal
