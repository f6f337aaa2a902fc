#include "liouville/algebra/linear.hpp"

#include <stdexcept>

namespace liouville {

std::optional<std::vector<GaussRat>> solve_linear(Matrix a, std::vector<GaussRat> b) {
    const size_t rows = a.size();
    if (b.size() != rows) throw std::invalid_argument("solve_linear: shape mismatch");
    const size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        GaussRat inv = a[r][c].inverse();
        for (size_t k = c; k < cols; ++k) a[r][k] *= inv;
        b[r] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            GaussRat f = a[i][c];
            for (size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (!b[i].is_zero()) return std::nullopt;
    std::vector<GaussRat> x(cols);
    for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return x;
}

GaussRat determinant(Matrix a) {
    const size_t n = a.size();
    GaussRat det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return GaussRat();
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        GaussRat inv = a[c][c].inverse();
        for (size_t i = c + 1; i < n; ++i) {
            if (a[i][c].is_zero()) continue;
            GaussRat f = a[i][c] * inv;
            for (size_t k = c; k < n; ++k) a[i][k] -= f * a[c][k];
        }
    }
    return det;
}

}  // namespace liouville
