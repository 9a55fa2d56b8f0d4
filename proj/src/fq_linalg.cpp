#include "iwahori/fq_linalg.hpp"

#include <stdexcept>

namespace iwahori {

int fq_rank(FqMatrix m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        FqScalar inv = m[rank][col].inverse();
        for (size_t j = col; j < cols; ++j) m[rank][j] = m[rank][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col].is_zero()) continue;
            FqScalar f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - f * m[rank][j];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

FqMatrix fq_invert(const FqMatrix& m) {
    size_t n = m.size();
    if (n == 0 || m[0].size() != n) throw std::invalid_argument("fq_invert: not square");
    const FqFieldPtr& f = m[0][0].field();
    FqMatrix a = m;
    FqMatrix inv(n, fq_zero_vec(f, n));
    for (size_t i = 0; i < n; ++i) inv[i][i] = FqScalar::one(f);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw std::domain_error("fq_invert: singular matrix");
        std::swap(a[col], a[pivot]);
        std::swap(inv[col], inv[pivot]);
        FqScalar s = a[col][col].inverse();
        for (size_t j = 0; j < n; ++j) {
            a[col][j] = a[col][j] * s;
            inv[col][j] = inv[col][j] * s;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            FqScalar t = a[i][col];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] = a[i][j] - t * a[col][j];
                inv[i][j] = inv[i][j] - t * inv[col][j];
            }
        }
    }
    return inv;
}

FqVec fq_apply(const FqMatrix& m, const FqVec& v) {
    if (m.empty()) return {};
    if (m[0].size() != v.size()) throw std::invalid_argument("fq_apply: size mismatch");
    const FqFieldPtr& f = v.empty() ? m[0][0].field() : v[0].field();
    FqVec out = fq_zero_vec(f, m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) out[i] = out[i] + m[i][j] * v[j];
    return out;
}

FqVec fq_zero_vec(const FqFieldPtr& f, size_t n) {
    return FqVec(n, FqScalar::zero(f));
}

}  // namespace iwahori
