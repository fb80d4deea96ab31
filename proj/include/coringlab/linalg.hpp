#pragma once

#include <optional>
#include <vector>

#include "coringlab/matrix.hpp"

namespace coringlab {

// Row reduction with a recorded transform: reduced = transform * input, with
// transform invertible.  Rows at index >= rank of `reduced` are zero, so the
// corresponding rows of `transform` form a basis of the left kernel.
struct RrefResult {
    Matrix reduced;
    Matrix transform;
    std::vector<std::size_t> pivots;

    std::size_t rank() const { return pivots.size(); }
};

inline RrefResult rref(const Matrix& m) {
    const std::uint32_t p = m.characteristic();
    Matrix r = m;
    Matrix u = Matrix::identity(m.rows(), p);
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
        std::size_t piv = lead;
        while (piv < r.rows() && r.at(piv, col) == 0) ++piv;
        if (piv == r.rows()) continue;
        if (piv != lead) {
            for (std::size_t c = 0; c < r.cols(); ++c) std::swap(r.at(piv, c), r.at(lead, c));
            for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(piv, c), u.at(lead, c));
        }
        const std::uint32_t inv = fp_inv(r.at(lead, col), p);
        for (std::size_t c = 0; c < r.cols(); ++c) r.at(lead, c) = fp_mul(r.at(lead, c), inv, p);
        for (std::size_t c = 0; c < u.cols(); ++c) u.at(lead, c) = fp_mul(u.at(lead, c), inv, p);
        for (std::size_t row = 0; row < r.rows(); ++row) {
            if (row == lead) continue;
            const std::uint32_t f = r.at(row, col);
            if (!f) continue;
            for (std::size_t c = 0; c < r.cols(); ++c)
                r.at(row, c) = fp_sub(r.at(row, c), fp_mul(f, r.at(lead, c), p), p);
            for (std::size_t c = 0; c < u.cols(); ++c)
                u.at(row, c) = fp_sub(u.at(row, c), fp_mul(f, u.at(lead, c), p), p);
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(r), std::move(u), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank(); }

// Basis of {v : v * m = 0}, returned in reduced echelon form (k x m.rows).
inline Matrix kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    const std::size_t k = m.rows() - r.rank();
    Matrix ker(k, m.rows(), m.characteristic());
    for (std::size_t i = 0; i < k; ++i)
        ker.set_row(i, r.transform.row(r.rank() + i));
    return rref(ker).reduced;
}

// Canonical solution of x * m = target (free coordinates pinned to the
// transform rows below rank, i.e. set to zero).  Empty when inconsistent.
inline std::optional<Matrix> solve_linear(const Matrix& m, const Matrix& target) {
    if (target.rows() != 1 || target.cols() != m.cols())
        throw std::invalid_argument("solve_linear target shape");
    RrefResult r = rref(m);
    const std::uint32_t p = m.characteristic();
    Matrix coeff(1, m.rows(), p);
    Matrix residue = target;
    for (std::size_t i = 0; i < r.rank(); ++i) {
        const std::uint32_t c = residue.at(0, r.pivots[i]);
        if (!c) continue;
        coeff.at(0, i) = c;
        residue = residue - r.reduced.row(i).scaled(c);
    }
    if (!residue.is_zero()) return std::nullopt;
    return coeff * r.transform;
}

inline std::optional<Matrix> invert(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    RrefResult r = rref(m);
    if (r.rank() != m.rows()) return std::nullopt;
    return r.transform;
}

} // namespace coringlab
