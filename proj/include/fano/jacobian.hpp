#pragma once

#include "fano/linalg.hpp"
#include "fano/polynomial.hpp"

#include <vector>

namespace fano {

/// Entry (i,j) = ∂fs[i]/∂x_j evaluated at `point`.
template <class K>
Matrix<K> jacobian_matrix(const std::vector<Polynomial<K>>& fs, const std::vector<K>& point) {
    if (fs.empty()) return Matrix<K>();
    const RingPtr& ring = fs.front().ring();
    if (point.size() != ring->arity()) throw ArityMismatch("jacobian point has wrong length");
    Matrix<K> J(fs.size(), ring->arity(), field_ops<K>::zero(*ring));
    for (std::size_t i = 0; i < fs.size(); ++i) {
        require_same_ring(ring, fs[i].ring());
        for (std::size_t j = 0; j < ring->arity(); ++j) J.at(i, j) = fs[i].derivative(j).evaluate(point);
    }
    return J;
}

}  // namespace fano
