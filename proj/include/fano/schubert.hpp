#pragma once

#include "fano/field.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fano {

/// Partition: weakly decreasing row lengths, trailing zeros dropped.
struct Partition {
    std::vector<std::size_t> rows;

    Partition() = default;
    Partition(std::initializer_list<std::size_t> r) : rows(r) { normalize(); }
    explicit Partition(std::vector<std::size_t> r) : rows(std::move(r)) { normalize(); }

    void normalize() {
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (rows[i] > rows[i - 1]) throw std::invalid_argument("partition rows must be weakly decreasing");
        while (!rows.empty() && rows.back() == 0) rows.pop_back();
    }

    std::size_t size() const {
        std::size_t s = 0;
        for (auto r : rows) s += r;
        return s;
    }

    bool fits_in_box(std::size_t nrows, std::size_t ncols) const {
        return rows.size() <= nrows && (rows.empty() || rows.front() <= ncols);
    }

    bool operator==(const Partition& o) const { return rows == o.rows; }
    bool operator<(const Partition& o) const { return rows < o.rows; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < rows.size(); ++i) s += (i ? "," : "") + std::to_string(rows[i]);
        return s + ")";
    }
};

/// Formal Z-combination of Schubert classes sigma_lambda in H*(G), for the
/// Grassmannian of nrows-dimensional subspaces of an (nrows+ncols)-space:
/// partitions live in an nrows x ncols box.
struct SchubertCycle {
    std::size_t box_rows = 0;
    std::size_t box_cols = 0;
    std::map<Partition, BigInt> terms;

    static SchubertCycle single(std::size_t nrows, std::size_t ncols, Partition lambda) {
        if (!lambda.fits_in_box(nrows, ncols))
            throw std::invalid_argument("partition " + lambda.str() + " does not fit in the box");
        SchubertCycle c;
        c.box_rows = nrows;
        c.box_cols = ncols;
        c.terms[std::move(lambda)] = 1;
        return c;
    }

    BigInt coefficient(const Partition& lambda) const {
        auto it = terms.find(lambda);
        return it == terms.end() ? BigInt(0) : it->second;
    }
};

/// Pieri rule for sigma_1: add one box in all ways that stay a partition
/// inside the box; classes outside the box vanish.
inline SchubertCycle pieri_multiply(const SchubertCycle& c) {
    SchubertCycle out;
    out.box_rows = c.box_rows;
    out.box_cols = c.box_cols;
    for (const auto& [lambda, coeff] : c.terms) {
        for (std::size_t i = 0; i <= lambda.rows.size(); ++i) {
            std::vector<std::size_t> mu = lambda.rows;
            if (i == mu.size())
                mu.push_back(1);
            else
                mu[i] += 1;
            Partition p;
            try {
                p = Partition(std::move(mu));
            } catch (const std::invalid_argument&) {
                continue;  // not weakly decreasing: adding here is illegal
            }
            if (!p.fits_in_box(c.box_rows, c.box_cols)) continue;
            out.terms[p] += coeff;
        }
    }
    return out;
}

/// Degree of a box: coefficient of the full-box class in sigma_1^(rows*cols).
inline BigInt box_degree(std::size_t nrows, std::size_t ncols) {
    SchubertCycle c = SchubertCycle::single(nrows, ncols, Partition{});
    const std::size_t dim = nrows * ncols;
    for (std::size_t s = 0; s < dim; ++s) c = pieri_multiply(c);
    std::vector<std::size_t> full(nrows, ncols);
    return c.coefficient(Partition(std::move(full)));
}

/// Same count by the hook length formula: standard Young tableaux of the
/// nrows x ncols rectangle, (nrows*ncols)! / prod(hooks).
inline BigInt box_degree_hook(std::size_t nrows, std::size_t ncols) {
    BigInt numer = 1;
    for (std::size_t i = 1; i <= nrows * ncols; ++i) numer *= BigInt(i);
    BigInt denom = 1;
    for (std::size_t r = 0; r < nrows; ++r)
        for (std::size_t c = 0; c < ncols; ++c) denom *= BigInt((ncols - c - 1) + (nrows - r - 1) + 1);
    return numer / denom;
}

/// Pluecker degree of G(k, n), the k-planes in P^n: the box is (k+1) x (n-k).
inline BigInt grassmannian_degree(std::size_t k, std::size_t n) {
    if (k + 1 > n) throw std::invalid_argument("require k < n for G(k, n)");
    return box_degree(k + 1, n - k);
}

inline BigInt grassmannian_degree_hook(std::size_t k, std::size_t n) {
    if (k + 1 > n) throw std::invalid_argument("require k < n for G(k, n)");
    return box_degree_hook(k + 1, n - k);
}

}  // namespace fano
