#include "courtmix/rational.hpp"

namespace courtmix {

RationalMatrix identity_matrix(std::size_t n) {
    RationalMatrix m(n, RationalVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    RationalMatrix out(n, RationalVector(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (b[l][j] != 0) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

RationalVector solve_linear(RationalMatrix a, RationalVector b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw SingularSystem{};
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        const Rational d = a[col][col];
        for (std::size_t j = col; j < n; ++j) a[col][j] /= d;
        b[col] /= d;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Rational f = a[row][col];
            for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
            b[row] -= f * b[col];
        }
    }
    return b;
}

RationalMatrix invert(const RationalMatrix& a) {
    const std::size_t n = a.size();
    RationalMatrix m = a;
    RationalMatrix inv = identity_matrix(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) throw SingularSystem{};
        std::swap(m[col], m[pivot]);
        std::swap(inv[col], inv[pivot]);
        const Rational d = m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            const Rational f = m[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[row][j] -= f * m[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace courtmix
