#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "monoweyl/rational.hpp"

namespace monoweyl {

/// Dense matrix over Q with exact Gauss-Jordan elimination.
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
        std::size_t cols = rows.empty() ? 0 : rows[0].size();
        RatMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw Error("ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    /// Reduced row echelon form; returns the pivot column of each pivot row.
    std::vector<std::size_t> reduce() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t p = row;
            while (p < rows_ && at(p, col).is_zero()) ++p;
            if (p == rows_) continue;
            if (p != row)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
            Rational inv = Rational(1) / at(row, col);
            for (std::size_t j = col; j < cols_; ++j) at(row, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == row || at(i, col).is_zero()) continue;
                Rational f = at(i, col);
                for (std::size_t j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        RatMatrix copy = *this;
        return copy.reduce().size();
    }

    /// Exact basis of the right nullspace; empty iff full column rank.
    std::vector<std::vector<Rational>> nullspace() const {
        RatMatrix r = *this;
        std::vector<std::size_t> pivots = r.reduce();
        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t c : pivots) is_pivot[c] = true;
        std::vector<std::vector<Rational>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<Rational> v(cols_, Rational(0));
            v[free] = Rational(1);
            for (std::size_t i = 0; i < pivots.size(); ++i)
                v[pivots[i]] = -r.at(i, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// One solution of A x = b, or nullopt when inconsistent (free vars = 0).
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const {
        if (b.size() != rows_) throw Error("solve: size mismatch");
        RatMatrix aug(rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = b[i];
        }
        std::vector<std::size_t> pivots = aug.reduce();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        std::vector<Rational> x(cols_, Rational(0));
        for (std::size_t i = 0; i < pivots.size(); ++i)
            x[pivots[i]] = aug.at(i, cols_);
        return x;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

/// Rank of the row span of a vector list (rows may be ragged-free but equal length).
inline std::size_t row_space_rank(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return 0;
    return RatMatrix::from_rows(rows).rank();
}

/// Exact equality of the row spans of two coefficient-vector lists.
inline bool same_row_space(const std::vector<std::vector<Rational>>& a,
                           const std::vector<std::vector<Rational>>& b) {
    if (a.empty() && b.empty()) return true;
    std::size_t width = a.empty() ? b[0].size() : a[0].size();
    for (const auto& r : a)
        if (r.size() != width) throw Error("span compare: width mismatch");
    for (const auto& r : b)
        if (r.size() != width) throw Error("span compare: width mismatch");
    std::vector<std::vector<Rational>> joint = a;
    joint.insert(joint.end(), b.begin(), b.end());
    std::size_t ra = row_space_rank(a);
    std::size_t rb = row_space_rank(b);
    return ra == rb && row_space_rank(joint) == ra;
}

}  // namespace monoweyl
