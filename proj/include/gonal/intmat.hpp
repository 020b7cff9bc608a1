#pragma once

#include <vector>

namespace gonal {

using IntMat = std::vector<std::vector<long long>>;

// Exact determinant (Bareiss). Empty matrix has determinant 1.
long long det_bareiss(IntMat a);

// Diagonalization over the integers: returns U (unimodular) and the diagonal
// of U*A*V. Enough to decide lattice membership; the invariant-factor
// divisibility chain is not enforced.
struct IntDiagonalization {
    IntMat u;
    std::vector<long long> diag;  // length min(rows, cols), padded with zeros
};
IntDiagonalization diagonalize(IntMat a);

// Does an integer x with A*x = c exist?
bool in_lattice(const IntMat& a, const std::vector<long long>& c);

}  // namespace gonal
