#include "linalg.hpp"

#include "util.hpp"

namespace piforge {

std::vector<int> rref(RatMat& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    size_t rows = a.size(), cols = a[0].size();
    for (const auto& r : a) require(r.size() == cols, "rref: ragged matrix");

    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; col++) {
        size_t piv = row;
        while (piv < rows && a[piv][col] == 0) piv++;
        if (piv == rows) continue;
        std::swap(a[row], a[piv]);
        Rat inv = Rat(1) / a[row][col];
        for (size_t j = col; j < cols; j++) a[row][j] *= inv;
        for (size_t i = 0; i < rows; i++) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (size_t j = col; j < cols; j++) a[i][j] -= f * a[row][j];
        }
        pivots.push_back((int)col);
        row++;
    }
    return pivots;
}

std::optional<RatVec> solve_linear(const RatMat& a, const RatVec& b) {
    require(a.size() == b.size(), "solve_linear: row count mismatch");
    if (a.empty()) return RatVec();
    size_t cols = a[0].size();
    RatMat aug = a;
    for (size_t i = 0; i < aug.size(); i++) aug[i].push_back(b[i]);
    std::vector<int> pivots = rref(aug);
    for (int c : pivots)
        if ((size_t)c == cols) return std::nullopt; // pivot in the RHS column
    RatVec x(cols, Rat(0));
    for (size_t i = 0; i < pivots.size(); i++) x[(size_t)pivots[i]] = aug[i][cols];
    return x;
}

std::vector<RatVec> nullspace(const RatMat& a) {
    std::vector<RatVec> basis;
    if (a.empty()) return basis;
    size_t cols = a[0].size();
    RatMat m = a;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[(size_t)c] = true;
    for (size_t free = 0; free < cols; free++) {
        if (is_pivot[free]) continue;
        RatVec v(cols, Rat(0));
        v[free] = Rat(1);
        for (size_t i = 0; i < pivots.size(); i++) v[(size_t)pivots[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace piforge
