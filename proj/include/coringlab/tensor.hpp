#pragma once

#include "coringlab/bimodule.hpp"

namespace coringlab {

// Tensor product M (x)_A N realized as a quotient of the raw grid
// F^(dim M * dim N) by the balancing relations m.a (x) n - m (x) a.n.
// `project` maps raw coordinates onto the canonical quotient basis (the
// non-pivot columns of the reduced relation span) and `lift` is the matching
// section, so lift * project reduces a raw vector to its canonical
// representative and project * lift = id.
struct TensorProduct {
    std::size_t m_dim = 0;
    std::size_t n_dim = 0;
    Matrix project{0, 0, 2};
    Matrix lift{0, 0, 2};
    Bimodule module;

    std::size_t dim() const { return module.dim(); }
    std::size_t raw_dim() const { return m_dim * n_dim; }
    std::size_t raw_index(std::size_t i, std::size_t j) const { return i * n_dim + j; }

    // Quotient class of a pure tensor of basis vectors.
    Matrix pure(std::size_t i, std::size_t j) const {
        return Matrix::row_unit(raw_dim(), raw_index(i, j), project.characteristic()) * project;
    }
};

// Balances over m.right_algebra(), which must present the same algebra as
// n.left_algebra().
TensorProduct tensor_over(const Bimodule& m, const Bimodule& n);

// X (x)_A Y (x)_B Z as one quotient of the raw triple grid by both balancing
// families; canonically isomorphic to either nested two-step quotient.
struct TripleTensor {
    std::size_t d1 = 0, d2 = 0, d3 = 0;
    Matrix project{0, 0, 2};
    Matrix lift{0, 0, 2};
    Bimodule module;

    std::size_t dim() const { return module.dim(); }
    std::size_t raw_dim() const { return d1 * d2 * d3; }
    std::size_t raw_index(std::size_t i, std::size_t j, std::size_t k) const {
        return (i * d2 + j) * d3 + k;
    }
};

TripleTensor triple_tensor(const Bimodule& x, const Bimodule& y, const Bimodule& z);

// Mutually inverse identification between the flat triple quotient and the
// left-nested quotient Q(Q(X,Y), Z); throws if the presentations disagree.
struct Identification {
    Matrix to{0, 0, 2};    // nested -> triple
    Matrix from{0, 0, 2};  // triple -> nested
};

Identification identify_nested12(const TripleTensor& t3, const TensorProduct& xy,
                                 const TensorProduct& xy_z);
Identification identify_nested23(const TripleTensor& t3, const TensorProduct& yz,
                                 const TensorProduct& x_yz);

// Raw collapse e_i (x) e_k -> e_i . a_k for the right action of m's right
// algebra: a matrix raw(M (x) A) -> M.
Matrix collapse_right_action(const Bimodule& m);
// Raw collapse e_k (x) e_i -> a_k . e_i: raw(A (x) M) -> M.
Matrix collapse_left_action(const Bimodule& m);

// e_i -> unit (x) e_i resp. e_i (x) unit into the raw grid.
Matrix insert_unit_left(const Algebra& a, std::size_t m_dim);
Matrix insert_unit_right(std::size_t m_dim, const Algebra& a);

// Canonical isomorphism Q(A (x)_A M) -> M and its inverse.
Identification unit_collapse_left(const TensorProduct& am, const Bimodule& m);
// Canonical isomorphism Q(M (x)_A A) -> M and its inverse.
Identification unit_collapse_right(const TensorProduct& ma, const Bimodule& m);

// The comparison M (x)_A N -> M (x)_B N when the B-balancing relations are
// coarser (A acting through beta: A -> B); surjective, identity on classes.
struct BaseChange {
    TensorProduct over_a;
    TensorProduct over_b;
    Matrix chi{0, 0, 2};
};

BaseChange base_change_chi(const Bimodule& m, const Bimodule& n, const AlgebraMorphism& beta,
                           const Algebra& a);

} // namespace coringlab
