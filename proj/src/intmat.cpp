#include "gonal/intmat.hpp"

#include <cstdlib>
#include <stdexcept>

namespace gonal {

namespace {

using i128 = __int128;

long long checked(i128 v) {
    if (v > i128(9223372036854775807LL) || v < -i128(9223372036854775807LL))
        throw std::overflow_error("integer matrix arithmetic overflow");
    return static_cast<long long>(v);
}

}  // namespace

long long det_bareiss(IntMat a) {
    std::size_t n = a.size();
    if (n == 0) return 1;
    long long sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = checked((i128(a[i][j]) * a[k][k] - i128(a[i][k]) * a[k][j]) / prev);
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

IntDiagonalization diagonalize(IntMat a) {
    std::size_t rows = a.size();
    std::size_t cols = rows == 0 ? 0 : a[0].size();
    IntMat u(rows, std::vector<long long>(rows, 0));
    for (std::size_t i = 0; i < rows; ++i) u[i][i] = 1;

    auto row_op = [&](std::size_t i, std::size_t j, long long f) {
        for (std::size_t k = 0; k < cols; ++k) a[i][k] = checked(i128(a[i][k]) - i128(f) * a[j][k]);
        for (std::size_t k = 0; k < rows; ++k) u[i][k] = checked(i128(u[i][k]) - i128(f) * u[j][k]);
    };
    auto col_op = [&](std::size_t i, std::size_t j, long long f) {
        for (std::size_t k = 0; k < rows; ++k) a[k][i] = checked(i128(a[k][i]) - i128(f) * a[k][j]);
    };

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // pivot: nonzero entry of least absolute value in the working block
        std::size_t pi = t, pj = t;
        long long best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (best == 0 || std::llabs(a[i][j]) < best)) {
                    best = std::llabs(a[i][j]);
                    pi = i;
                    pj = j;
                }
        if (best == 0) break;
        std::swap(a[t], a[pi]);
        std::swap(u[t], u[pi]);
        for (std::size_t k = 0; k < rows; ++k) std::swap(a[k][t], a[k][pj]);

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i)
            if (a[i][t] != 0) {
                row_op(i, t, a[i][t] / a[t][t]);
                if (a[i][t] != 0) clean = false;
            }
        for (std::size_t j = t + 1; j < cols; ++j)
            if (a[t][j] != 0) {
                col_op(j, t, a[t][j] / a[t][t]);
                if (a[t][j] != 0) clean = false;
            }
        if (clean) ++t;
    }
    IntDiagonalization out;
    out.u = std::move(u);
    for (std::size_t i = 0; i < std::min(rows, cols); ++i) out.diag.push_back(a[i][i]);
    return out;
}

bool in_lattice(const IntMat& a, const std::vector<long long>& c) {
    if (a.size() != c.size()) throw std::invalid_argument("in_lattice: size mismatch");
    IntDiagonalization d = diagonalize(a);
    std::size_t rows = a.size();
    std::vector<long long> y(rows, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        i128 s = 0;
        for (std::size_t j = 0; j < rows; ++j) s += i128(d.u[i][j]) * c[j];
        y[i] = checked(s);
    }
    for (std::size_t i = 0; i < rows; ++i) {
        long long di = i < d.diag.size() ? d.diag[i] : 0;
        if (di == 0) {
            if (y[i] != 0) return false;
        } else if (y[i] % di != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace gonal
