#pragma once

#include "fano/ring.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fano {

/// Dense row-major matrix over an exact field.
template <class K>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, K fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    K& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const K& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void append_row(const std::vector<K>& row) {
        if (rows_ == 0 && cols_ == 0) cols_ = row.size();
        if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
        data_.insert(data_.end(), row.begin(), row.end());
        ++rows_;
    }

    /// Row echelon form in place; returns pivot columns.
    std::vector<std::size_t> echelonize() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t sel = rows_;
            for (std::size_t i = r; i < rows_; ++i)
                if (!at(i, c).is_zero()) {
                    sel = i;
                    break;
                }
            if (sel == rows_) continue;
            if (sel != r)
                for (std::size_t c2 = 0; c2 < cols_; ++c2) std::swap(at(sel, c2), at(r, c2));
            K inv = at(r, c).inverse();
            for (std::size_t c2 = c; c2 < cols_; ++c2) at(r, c2) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || at(i, c).is_zero()) continue;
                K f = at(i, c);
                for (std::size_t c2 = c; c2 < cols_; ++c2) at(i, c2) -= f * at(r, c2);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix copy = *this;
        return copy.echelonize().size();
    }

    /// Basis of the right kernel, one vector per non-pivot column.
    std::vector<std::vector<K>> kernel(const K& zero, const K& one) const {
        Matrix copy = *this;
        auto pivots = copy.echelonize();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::vector<K>> basis;
        for (std::size_t free_c = 0; free_c < cols_; ++free_c) {
            if (is_pivot[free_c]) continue;
            std::vector<K> v(cols_, zero);
            v[free_c] = one;
            for (std::size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -copy.at(pr, free_c);
            basis.push_back(std::move(v));
        }
        return basis;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<K> data_;
};

/// gcd of dense univariate polynomials (monic result), Euclid's algorithm.
template <class K>
std::vector<K> unipoly_gcd(std::vector<K> a, std::vector<K> b) {
    auto trim = [](std::vector<K>& v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        K lead_inv = b.back().inverse();
        while (a.size() >= b.size()) {
            K f = a.back() * lead_inv;
            std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        K inv = a.back().inverse();
        for (auto& x : a) x *= inv;
    }
    return a;
}

}  // namespace fano
