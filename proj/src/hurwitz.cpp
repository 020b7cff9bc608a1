#include "gonal/hurwitz.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gonal {

PartitionSet::PartitionSet(long long degree, std::vector<std::vector<int>> partitions)
    : degree_(degree), partitions_(std::move(partitions)) {
    if (degree_ < 1) throw std::invalid_argument("partition set degree must be >= 1");
    for (std::vector<int>& p : partitions_) {
        long long sum = 0;
        for (int part : p) {
            if (part < 1) throw std::invalid_argument("partition parts must be >= 1");
            sum += part;
        }
        if (sum != degree_)
            throw std::invalid_argument("partition does not sum to the degree");
        std::sort(p.begin(), p.end(), std::greater<>());
    }
    std::sort(partitions_.begin(), partitions_.end(), std::greater<>());
}

long long PartitionSet::total_ramification() const {
    long long total = 0;
    for (const auto& p : partitions_) total += degree_ - static_cast<long long>(p.size());
    return total;
}

RhGenus rh_genus(const PartitionSet& p) {
    RhGenus out;
    long long twice = 2 - 2 * p.degree() + p.total_ramification();  // = 2g
    out.integral = twice % 2 == 0;
    if (out.integral) {
        out.genus = twice / 2;
        out.negative = out.genus < 0;
    }
    return out;
}

std::vector<int> cycle_type(const Permutation& p) {
    std::vector<int> type;
    std::vector<char> seen(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<>());
    return type;
}

std::string cycle_notation(const Permutation& p) {
    std::string out;
    std::vector<char> seen(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) {
            seen[i] = 1;
            continue;
        }
        out += "(";
        bool first = true;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            if (!first) out += " ";
            out += std::to_string(j + 1);
            first = false;
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

std::string HurwitzWitness::cycle_notation() const {
    std::string out;
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
        if (i) out += "; ";
        out += gonal::cycle_notation(sigmas[i]);
    }
    return out;
}

namespace {

Permutation canonical_of_type(int d, const std::vector<int>& type) {
    Permutation p(d);
    int at = 0;
    for (int len : type) {
        for (int i = 0; i < len; ++i) p[at + i] = at + (i + 1) % len;
        at += len;
    }
    return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    // apply a first, then b
    Permutation out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
    return out;
}

Permutation inverse(const Permutation& a) {
    Permutation out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<int>(i);
    return out;
}

const std::vector<Permutation>& class_elements(int d, const std::vector<int>& type) {
    static std::map<std::pair<int, std::vector<int>>, std::vector<Permutation>> cache;
    auto key = std::make_pair(d, type);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Permutation> items;
    Permutation p(d);
    std::iota(p.begin(), p.end(), 0);
    do {
        if (cycle_type(p) == type) items.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return cache.emplace(std::move(key), std::move(items)).first->second;
}

int orbit_count(const std::vector<Permutation>& sigmas, int d) {
    std::vector<int> parent(d);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    int orbits = d;
    for (const Permutation& s : sigmas)
        for (int i = 0; i < d; ++i) {
            int a = find(i), b = find(s[i]);
            if (a != b) {
                parent[a] = b;
                --orbits;
            }
        }
    return orbits;
}

}  // namespace

HurwitzResult is_hurwitz_type(const PartitionSet& p, bool want_witness, int degree_cap) {
    const int d = static_cast<int>(p.degree());
    if (d > degree_cap)
        throw DegreeCapExceeded("partition set degree " + std::to_string(d) +
                                " exceeds the cap " + std::to_string(degree_cap));
    const auto& parts = p.partitions();
    const std::size_t b = parts.size();

    HurwitzResult out;
    if (b == 0) {
        out.realizable = d == 1;
        if (out.realizable && want_witness) out.witness = HurwitzWitness{};
        return out;
    }

    // sign obstruction: the product of all permutations must be even
    long long ram = p.total_ramification();
    if (ram % 2 != 0) return out;

    // how many orbits each remaining permutation can still merge
    std::vector<long long> merge_tail(b + 1, 0);
    for (std::size_t i = b; i-- > 0;)
        merge_tail[i] = merge_tail[i + 1] + (d - static_cast<long long>(parts[i].size()));

    std::vector<Permutation> chosen;
    chosen.push_back(canonical_of_type(d, parts[0]));

    auto search = [&](auto&& self, std::size_t level, Permutation product) -> bool {
        if (orbit_count(chosen, d) - 1 > merge_tail[level]) return false;
        if (level == b - 1) {
            Permutation last = inverse(product);
            if (cycle_type(last) != parts[level]) return false;
            chosen.push_back(last);
            bool ok = orbit_count(chosen, d) == 1;
            if (!ok) chosen.pop_back();
            return ok;
        }
        for (const Permutation& s : class_elements(d, parts[level])) {
            chosen.push_back(s);
            if (self(self, level + 1, compose(product, s))) return true;
            chosen.pop_back();
        }
        return false;
    };

    bool found;
    if (b == 1) {
        Permutation id(d);
        std::iota(id.begin(), id.end(), 0);
        found = chosen[0] == id && orbit_count(chosen, d) == 1;
    } else {
        found = search(search, 1, chosen[0]);
    }
    out.realizable = found;
    if (found && want_witness) out.witness = HurwitzWitness{chosen};
    return out;
}

PartitionSet add_trivial(const PartitionSet& p) {
    std::vector<std::vector<int>> parts = p.partitions();
    parts.emplace_back(p.degree(), 1);
    return PartitionSet(p.degree(), std::move(parts));
}

std::optional<PartitionSet> complete_with_simple(const PartitionSet& p, long long target_genus) {
    if (target_genus < 0) throw std::invalid_argument("target genus must be >= 0");
    long long d = p.degree();
    long long k = 2 * (d - 1 + target_genus) - p.total_ramification();
    if (k < 0) return std::nullopt;
    if (k > 0 && d < 2) return std::nullopt;
    std::vector<std::vector<int>> parts = p.partitions();
    for (long long i = 0; i < k; ++i) {
        std::vector<int> simple(d - 1, 1);
        simple[0] = 2;
        parts.push_back(std::move(simple));
    }
    return PartitionSet(d, std::move(parts));
}

}  // namespace gonal
