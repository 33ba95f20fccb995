#pragma once

#include <utility>
#include <vector>

#include "cremona/error.hpp"

namespace cremona {

/* Dense exact matrix over a field K.  Row-major, small sizes only: these
 * show up in degree-slice computations (minimal generators, Hilbert
 * function cross-checks) and in solving for prescribed-point forms, where
 * dimensions stay in the low hundreds. */
template <class K>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols, const K& fill) : r_(rows), c_(cols), a_((size_t)rows * cols, fill) {
        require(rows >= 0 && cols >= 0, ErrKind::OutOfRange, "negative matrix dimension");
    }
    static Mat zero(int rows, int cols, long long chi) {
        return Mat(rows, cols, K::from_int(0, chi));
    }

    int rows() const { return r_; }
    int cols() const { return c_; }

    K& at(int i, int j) { return a_[(size_t)i * c_ + j]; }
    const K& at(int i, int j) const { return a_[(size_t)i * c_ + j]; }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < c_; ++k) std::swap(at(i, k), at(j, k));
    }

private:
    int r_ = 0, c_ = 0;
    std::vector<K> a_;
};

/* In-place reduced row echelon form.  Returns the pivot columns. */
template <class K>
std::vector<int> rref(Mat<K>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        m.swap_rows(row, piv);
        K inv = m.at(row, col).inv();
        for (int k = col; k < m.cols(); ++k) m.at(row, k) = m.at(row, k) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            K f = m.at(i, col);
            for (int k = col; k < m.cols(); ++k)
                m.at(i, k) = m.at(i, k) - f * m.at(row, k);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class K>
int rank(Mat<K> m) {
    return (int)rref(m).size();
}

/* Basis of the right kernel, one vector per column. */
template <class K>
std::vector<std::vector<K>> kernel_basis(Mat<K> m, long long chi) {
    std::vector<int> pivots = rref(m);
    std::vector<char> is_pivot(m.cols(), 0);
    for (int p : pivots) is_pivot[p] = 1;

    std::vector<std::vector<K>> basis;
    for (int free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<K> v(m.cols(), K::from_int(0, chi));
        v[free_col] = K::from_int(1, chi);
        for (int i = 0; i < (int)pivots.size(); ++i)
            v[pivots[i]] = -m.at(i, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

/* Row space maintained in echelon form, one vector at a time. */
template <class K>
class IncrementalSpan {
public:
    explicit IncrementalSpan(int width, long long chi) : w_(width), chi_(chi) {}

    int dim() const { return (int)rows_.size(); }

    /* residual of v against the current span */
    std::vector<K> reduce(std::vector<K> v) const {
        require((int)v.size() == w_, ErrKind::OutOfRange, "span width mismatch");
        for (size_t i = 0; i < rows_.size(); ++i) {
            const K& c = v[piv_[i]];
            if (c.is_zero()) continue;
            K f = c;
            for (int j = 0; j < w_; ++j) v[j] = v[j] - f * rows_[i][j];
        }
        return v;
    }

    /* true when v enlarged the span */
    bool add(std::vector<K> v) {
        v = reduce(std::move(v));
        int p = -1;
        for (int j = 0; j < w_; ++j)
            if (!v[j].is_zero()) { p = j; break; }
        if (p < 0) return false;
        K inv = v[p].inv();
        for (int j = 0; j < w_; ++j) v[j] = v[j] * inv;
        rows_.push_back(std::move(v));
        piv_.push_back(p);
        return true;
    }

    bool contains(std::vector<K> v) const {
        v = reduce(std::move(v));
        for (const K& c : v)
            if (!c.is_zero()) return false;
        return true;
    }

private:
    int w_;
    long long chi_;
    std::vector<std::vector<K>> rows_;
    std::vector<int> piv_;
};

/* Solve m*x = rhs; returns {x, true} for any one solution, {_, false} if
 * inconsistent. */
template <class K>
std::pair<std::vector<K>, bool> solve(Mat<K> m, const std::vector<K>& rhs, long long chi) {
    require((int)rhs.size() == m.rows(), ErrKind::OutOfRange, "rhs size mismatch");
    Mat<K> aug(m.rows(), m.cols() + 1, K::from_int(0, chi));
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = rhs[i];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols())
        return {{}, false};
    std::vector<K> x(m.cols(), K::from_int(0, chi));
    for (int i = 0; i < (int)pivots.size(); ++i)
        x[pivots[i]] = aug.at(i, m.cols());
    return {std::move(x), true};
}

}  // namespace cremona
