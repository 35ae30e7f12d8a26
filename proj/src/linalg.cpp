#include "wrnet/linalg.hpp"

#include <utility>

namespace wrnet::linalg {

std::vector<std::size_t> rref(Matrix& rows, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        Rational inv = 1 / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

std::size_t rank(Matrix rows, std::size_t cols) { return rref(rows, cols).size(); }

Matrix row_space_basis(Matrix rows, std::size_t cols)
{
    rref(rows, cols);
    return rows;
}

Matrix kernel_basis(Matrix rows, std::size_t cols)
{
    auto pivots = rref(rows, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    Matrix basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVec v = zeros(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVec> coordinates_in(const Matrix& basis, const RatVec& v)
{
    // Solve B^T c = v via RREF of the augmented system.
    const std::size_t k = basis.size();
    const std::size_t n = v.size();
    Matrix aug(n, RatVec(k + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug[i][j] = basis[j][i];
        aug[i][k] = v[i];
    }
    auto pivots = rref(aug, k + 1);
    if (!pivots.empty() && pivots.back() == k) return std::nullopt;
    RatVec c = zeros(k);
    for (std::size_t i = 0; i < pivots.size(); ++i) c[pivots[i]] = aug[i][k];
    return c;
}

bool same_span(const Matrix& a, const Matrix& b, std::size_t cols)
{
    const auto ra = rank(a, cols);
    if (ra != rank(b, cols)) return false;
    Matrix both = a;
    both.insert(both.end(), b.begin(), b.end());
    return rank(both, cols) == ra;
}

bool in_span(const Matrix& basis, const RatVec& v, std::size_t cols)
{
    Matrix m = basis;
    const auto r = rank(m, cols);
    m.push_back(v);
    return rank(std::move(m), cols) == r;
}

}  // namespace wrnet::linalg
