#include "symcoh/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace symcoh {

RatMat identity_matrix(int n) {
    RatMat m(n, RatVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
    const size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    assert(a.empty() || a[0].size() == k);
    RatMat c(n, RatVec(p, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < p; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

RatVec mat_vec(const RatMat& a, const RatVec& v) {
    RatVec r(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        assert(a[i].size() == v.size());
        for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    }
    return r;
}

RatMat transpose(const RatMat& a) {
    if (a.empty()) return {};
    RatMat t(a[0].size(), RatVec(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

namespace {

// Row-reduce in place; returns pivot columns.
std::vector<int> row_echelon(RatMat& m) {
    std::vector<int> pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        const Rat inv = Rat(1) / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int matrix_rank(RatMat a) { return static_cast<int>(row_echelon(a).size()); }

std::optional<RatMat> inverse(const RatMat& a) {
    const int n = static_cast<int>(a.size());
    RatMat aug(n, RatVec(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(a[i].size()) != n) throw std::invalid_argument("inverse: not square");
        for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    if (static_cast<int>(row_echelon(aug).size()) != n) return std::nullopt;
    RatMat inv(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

std::optional<RatVec> solve_unique(const RatMat& a, const RatVec& b) {
    const int rows = static_cast<int>(a.size());
    if (rows == 0) return b.empty() ? std::optional<RatVec>(RatVec{}) : std::nullopt;
    const int cols = static_cast<int>(a[0].size());
    if (static_cast<int>(b.size()) != rows) throw std::invalid_argument("solve_unique: size mismatch");
    RatMat aug(rows, RatVec(cols + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    std::vector<int> pivots = row_echelon(aug);
    // Inconsistent if a pivot lands in the augmented column.
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    if (static_cast<int>(pivots.size()) != cols) return std::nullopt;  // underdetermined
    RatVec x(cols, 0);
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
    return x;
}

}  // namespace symcoh
