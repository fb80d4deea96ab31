#pragma once

#include <optional>

#include "coringlab/linalg.hpp"

namespace coringlab {

// Subspace of F_p^n held by its unique reduced-echelon basis with zero rows
// dropped, so operator== is semantic subspace equality.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(std::size_t ambient, std::uint32_t p) {
        Subspace s;
        s.basis_ = Matrix(0, ambient, p);
        return s;
    }

    static Subspace full(std::size_t ambient, std::uint32_t p) {
        Subspace s;
        s.basis_ = Matrix::identity(ambient, p);
        return s;
    }

    static Subspace from_spanning(const Matrix& rows) {
        RrefResult r = rref(rows);
        Matrix b(r.rank(), rows.cols(), rows.characteristic());
        for (std::size_t i = 0; i < r.rank(); ++i) b.set_row(i, r.reduced.row(i));
        Subspace s;
        s.basis_ = std::move(b);
        return s;
    }

    const Matrix& basis() const { return basis_; }
    std::size_t dim() const { return basis_.rows(); }
    std::size_t ambient() const { return basis_.cols(); }
    std::uint32_t characteristic() const { return basis_.characteristic(); }

    bool contains_vector(const Matrix& v) const {
        return solve_linear(basis_, v).has_value();
    }

    bool contains(const Subspace& other) const {
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains_vector(other.basis_.row(i))) return false;
        return true;
    }

    // Coordinates of a member relative to the canonical basis.
    std::optional<Matrix> coords_of(const Matrix& v) const {
        return solve_linear(basis_, v);
    }

    Subspace sum(const Subspace& other) const {
        return from_spanning(Matrix::vstack(basis_, other.basis_));
    }

    // Kernel of [A; B] pairs (u, w) with u*A = -w*B, so u*A spans the
    // intersection.
    Subspace intersect(const Subspace& other) const {
        if (dim() == 0 || other.dim() == 0) return zero(ambient(), characteristic());
        Matrix stacked = Matrix::vstack(basis_, other.basis_);
        Matrix ker = kernel_basis(stacked);
        Matrix span(ker.rows(), ambient(), characteristic());
        for (std::size_t i = 0; i < ker.rows(); ++i) {
            Matrix u(1, dim(), characteristic());
            for (std::size_t j = 0; j < dim(); ++j) u.at(0, j) = ker.at(i, j);
            span.set_row(i, u * basis_);
        }
        return from_spanning(span);
    }

    // Columns N with membership law v in S  <=>  v * N = 0.
    Matrix membership_test_matrix() const {
        return kernel_basis(basis_.transpose()).transpose();
    }

    // {v : v * map in S} for map acting on the right of the domain.
    static Subspace preimage(const Matrix& map, const Subspace& s) {
        if (map.cols() != s.ambient()) throw std::invalid_argument("preimage shape");
        if (s.dim() == s.ambient()) return full(map.rows(), map.characteristic());
        return from_spanning(kernel_basis(map * s.membership_test_matrix()));
    }

    static Subspace image(const Matrix& map) {
        return from_spanning(map);
    }

    // Image of this subspace under a map on the full ambient space.
    Subspace pushforward(const Matrix& map) const {
        return from_spanning(basis_ * map);
    }

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    Matrix basis_{0, 0, 2};
};

} // namespace coringlab
