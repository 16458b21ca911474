#include "cr/linalg.hpp"

#include <stdexcept>

namespace cr {

std::size_t mat_rank(Mat m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        GQ inv = m[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            GQ f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

GQ mat_det(Mat m) {
    std::size_t n = m.size();
    GQ det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c].is_zero()) ++piv;
        if (piv == n) return GQ(0);
        if (piv != c) { std::swap(m[piv], m[c]); det = -det; }
        det *= m[c][c];
        GQ inv = m[c][c].inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            GQ f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

Mat mat_inverse(const Mat& m) {
    std::size_t n = m.size();
    Mat a = m;
    Mat inv(n, Vec(n, GQ(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = GQ(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c].is_zero()) ++piv;
        if (piv == n) throw std::domain_error("singular matrix");
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        GQ f = a[c][c].inverse();
        for (std::size_t j = 0; j < n; ++j) { a[c][j] *= f; inv[c][j] *= f; }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            GQ g = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= g * a[c][j];
                inv[i][j] -= g * inv[c][j];
            }
        }
    }
    return inv;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Mat r(n, Vec(m, GQ(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t t = 0; t < k; ++t) r[i][j] += a[i][t] * b[t][j];
    return r;
}

std::vector<Vec> mat_kernel(const Mat& m0) {
    if (m0.empty()) return {};
    Mat m = m0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::vector<int> pivot_of_col(cols, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        GQ inv = m[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            GQ f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_of_col[c] = int(r);
        ++r;
    }
    std::vector<Vec> basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        Vec v(cols, GQ(0));
        v[c] = GQ(1);
        for (std::size_t j = 0; j < cols; ++j)
            if (pivot_of_col[j] >= 0) v[j] = -m[pivot_of_col[j]][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> mat_solve(const Mat& m0, const Vec& b0) {
    if (m0.empty()) return Vec{};
    std::size_t rows = m0.size(), cols = m0[0].size();
    Mat m = m0;
    for (std::size_t i = 0; i < rows; ++i) m[i].push_back(b0[i]);
    std::vector<int> pivot_of_col(cols, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        GQ inv = m[r][c].inverse();
        for (std::size_t j = c; j <= cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            GQ f = m[i][c];
            for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_of_col[c] = int(r);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!m[i][cols].is_zero()) return std::nullopt;
    Vec x(cols, GQ(0));
    for (std::size_t c = 0; c < cols; ++c)
        if (pivot_of_col[c] >= 0) x[c] = m[pivot_of_col[c]][cols];
    return x;
}

// Bareiss two-step fraction-free elimination; divisions are exact.
Poly poly_det(std::vector<std::vector<Poly>> m) {
    std::size_t n = m.size();
    if (n == 0) return Poly::constant(GQ(1));
    Poly prev = Poly::constant(GQ(1));
    int sign = 1;
    for (std::size_t c = 0; c + 1 < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c].is_zero()) ++piv;
        if (piv == n) return Poly();
        if (piv != c) { std::swap(m[piv], m[c]); sign = -sign; }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                Poly num = m[i][j] * m[c][c] - m[i][c] * m[c][j];
                m[i][j] = num.is_zero() ? Poly() : num.exact_div(prev);
            }
            m[i][c] = Poly();
        }
        prev = m[c][c];
    }
    Poly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

std::size_t poly_rank(std::vector<std::vector<Poly>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    Poly prev = Poly::constant(GQ(1));
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) { piv = i; break; }
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Poly num = m[i][j] * m[r][c] - m[i][c] * m[r][j];
                m[i][j] = num.is_zero() ? Poly() : num.exact_div(prev);
            }
            m[i][c] = Poly();
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

}  // namespace cr
