#pragma once

// Small corings and comodules shared across the test binaries.

#include "coringlab/coring.hpp"

namespace fixtures {

using namespace coringlab;

// F_4 = F_2[t]/(t^2 + t + 1) with basis {1, t}.
inline Algebra f4() {
    Matrix table({{1, 0}, {0, 1}, {0, 1}, {1, 1}}, 2);
    return Algebra(2, 2, table, Matrix({{1, 0}}, 2));
}

// F_p[x]/(x^2) with basis {1, x}.
inline Algebra dual_numbers(std::uint32_t p) {
    Matrix table(4, 2, p);
    table.at(0, 0) = 1;
    table.at(1, 1) = 1;
    table.at(2, 1) = 1;
    return Algebra(p, 2, table, Matrix::row_unit(2, 0, p));
}

// Group coalgebra F_p[Z/2] over the base field: delta(g) = g (x) g,
// eps(g) = 1 for both group elements.
inline Coring grouplike_z2(std::uint32_t p) {
    Algebra k = Algebra::field(p);
    Matrix id2 = Matrix::identity(2, p);
    Bimodule carrier(k, k, 2, {id2}, {id2});
    Matrix delta_raw(2, 4, p);
    delta_raw.at(0, 0) = 1;  // e0 -> e0 (x) e0
    delta_raw.at(1, 3) = 1;  // e1 -> e1 (x) e1
    Matrix eps(2, 1, p);
    eps.at(0, 0) = 1;
    eps.at(1, 0) = 1;
    return Coring::from_raw_delta(std::move(carrier), delta_raw, eps);
}

// The canonical coring of the extension F_2 in F_4: carrier F_4 (x)_{F_2} F_4
// with basis b0 = 1(x)1, b1 = 1(x)t, b2 = t(x)1, b3 = t(x)t, comultiplication
// x(x)y -> (x(x)1) (x)_{F_4} (1(x)y) and counit x(x)y -> xy.
inline Coring extension_coring() {
    Algebra a = f4();
    Matrix lact_t({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}}, 2);
    Matrix ract_t({{0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}}, 2);
    Matrix id4 = Matrix::identity(4, 2);
    Bimodule carrier(a, a, 4, {id4, lact_t}, {id4, ract_t});
    Matrix delta_raw(4, 16, 2);
    delta_raw.at(0, 0) = 1;   // b0 -> b0 (x) b0
    delta_raw.at(1, 1) = 1;   // b1 -> b0 (x) b1
    delta_raw.at(2, 8) = 1;   // b2 -> b2 (x) b0
    delta_raw.at(3, 9) = 1;   // b3 -> b2 (x) b1
    Matrix eps({{1, 0}, {0, 1}, {0, 1}, {1, 1}}, 2);
    return Coring::from_raw_delta(std::move(carrier), delta_raw, eps);
}

// Upper triangular 2x2 matrices over F_p, basis {e11, e22, e12}.
inline Algebra upper_triangular2(std::uint32_t p) {
    Matrix table(9, 3, p);
    table.at(0, 0) = 1;  // e11 e11 = e11
    table.at(2, 2) = 1;  // e11 e12 = e12
    table.at(4, 1) = 1;  // e22 e22 = e22
    table.at(7, 2) = 1;  // e12 e22 = e12
    return Algebra(p, 3, table, Matrix({{1, 1, 0}}, p));
}

// F_p x F_p with componentwise product.
inline Algebra product_field2(std::uint32_t p) {
    Matrix table(4, 2, p);
    table.at(0, 0) = 1;
    table.at(3, 1) = 1;
    return Algebra(p, 2, table, Matrix({{1, 1}}, p));
}

// The canonical coring of the base-field extension k in A: carrier
// A (x)_k A with basis a_i (x) a_j at row i*dim + j, comultiplication
// x(x)y -> (x(x)1) (x)_A (1(x)y) and counit x(x)y -> xy.
inline Coring sweedler(const Algebra& a) {
    const std::uint32_t p = a.characteristic();
    const std::size_t d = a.dim();
    std::vector<Matrix> lact, ract;
    for (std::size_t k = 0; k < d; ++k) {
        const Matrix row = Matrix::row_unit(d, k, p);
        lact.push_back(Matrix::kron(a.left_mult_matrix(row), Matrix::identity(d, p)));
        ract.push_back(Matrix::kron(Matrix::identity(d, p), a.right_mult_matrix(row)));
    }
    Bimodule carrier(a, a, d * d, std::move(lact), std::move(ract));
    Matrix delta_raw(d * d, d * d * d * d, p);
    Matrix eps(d * d, d, p);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Matrix left = Matrix::kron(Matrix::row_unit(d, i, p), a.unit());
            const Matrix right = Matrix::kron(a.unit(), Matrix::row_unit(d, j, p));
            delta_raw.set_row(i * d + j, Matrix::kron(left, right));
            eps.set_row(i * d + j, a.basis_product(i, j));
        }
    return Coring::from_raw_delta(std::move(carrier), delta_raw, eps);
}

// The identity morphism of a coring.
inline CoringMorphism identity_morphism(const Coring& c) {
    return {c, c, AlgebraMorphism::identity(c.base()),
            Matrix::identity(c.dim(), c.characteristic())};
}

// The counit as a same-base morphism onto the trivial coring.
inline CoringMorphism counit_morphism(const Coring& c) {
    return {c, Coring::trivial(c.base()), AlgebraMorphism::identity(c.base()), c.eps()};
}

// Z/2-graded vector space as a comodule over the group coalgebra: the first
// d0 basis vectors sit in degree 0, the rest in degree 1.
inline Comodule grading(const Coring& c, std::size_t d0, std::size_t d1) {
    const std::uint32_t p = c.characteristic();
    const std::size_t d = d0 + d1;
    Bimodule carrier(Algebra::field(p), Algebra::field(p), d,
                     {Matrix::identity(d, p)}, {Matrix::identity(d, p)});
    Matrix rho_raw(d, d * 2, p);
    for (std::size_t i = 0; i < d; ++i) rho_raw.at(i, i * 2 + (i < d0 ? 0 : 1)) = 1;
    return Comodule::from_raw_rho(c, std::move(carrier), rho_raw);
}

inline LeftComodule grading_left(const Coring& c, std::size_t d0, std::size_t d1) {
    const std::uint32_t p = c.characteristic();
    const std::size_t d = d0 + d1;
    Bimodule carrier(Algebra::field(p), Algebra::field(p), d,
                     {Matrix::identity(d, p)}, {Matrix::identity(d, p)});
    Matrix rho_raw(d, 2 * d, p);
    for (std::size_t i = 0; i < d; ++i) rho_raw.at(i, (i < d0 ? 0 : 1) * d + i) = 1;
    return LeftComodule::from_raw_rho(c, std::move(carrier), rho_raw);
}

} // namespace fixtures
