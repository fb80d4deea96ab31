#include "coringlab/algebra.hpp"

#include <stdexcept>

namespace coringlab {

Algebra::Algebra(std::uint32_t p, std::size_t dim, Matrix table, Matrix unit)
    : p_(p), dim_(dim), table_(std::move(table)), unit_(std::move(unit)) {
    check_prime(p);
    if (table_.rows() != dim * dim || table_.cols() != dim)
        throw std::invalid_argument("algebra table must be dim^2 x dim");
    if (unit_.rows() != 1 || unit_.cols() != dim)
        throw std::invalid_argument("algebra unit must be a row of length dim");
}

Algebra Algebra::field(std::uint32_t p) {
    return Algebra(p, 1, Matrix({{1}}, p), Matrix({{1}}, p));
}

Matrix Algebra::multiply(const Matrix& x, const Matrix& y) const {
    Matrix out(1, dim_, p_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (!x.at(0, i)) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            const std::uint32_t c = fp_mul(x.at(0, i), y.at(0, j), p_);
            if (!c) continue;
            for (std::size_t k = 0; k < dim_; ++k)
                out.at(0, k) = fp_add(out.at(0, k), fp_mul(c, table_.at(i * dim_ + j, k), p_), p_);
        }
    }
    return out;
}

Matrix Algebra::left_mult_matrix(const Matrix& x) const {
    Matrix out(dim_, dim_, p_);
    for (std::size_t j = 0; j < dim_; ++j)
        out.set_row(j, multiply(x, Matrix::row_unit(dim_, j, p_)));
    return out;
}

Matrix Algebra::right_mult_matrix(const Matrix& y) const {
    Matrix out(dim_, dim_, p_);
    for (std::size_t i = 0; i < dim_; ++i)
        out.set_row(i, multiply(Matrix::row_unit(dim_, i, p_), y));
    return out;
}

Algebra Algebra::opposite() const {
    Matrix t(dim_ * dim_, dim_, p_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            t.set_row(i * dim_ + j, table_.row(j * dim_ + i));
    return Algebra(p_, dim_, std::move(t), unit_);
}

std::vector<std::string> Algebra::validate() const {
    std::vector<std::string> issues;
    for (std::size_t i = 0; i < dim_ && issues.size() < 8; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) {
                Matrix lhs = multiply(basis_product(i, j), Matrix::row_unit(dim_, k, p_));
                Matrix rhs = multiply(Matrix::row_unit(dim_, i, p_), basis_product(j, k));
                if (lhs != rhs) {
                    issues.push_back("associativity fails on basis triple (" + std::to_string(i) +
                                     "," + std::to_string(j) + "," + std::to_string(k) + ")");
                }
            }
    for (std::size_t i = 0; i < dim_; ++i) {
        Matrix e = Matrix::row_unit(dim_, i, p_);
        if (multiply(unit_, e) != e)
            issues.push_back("unit fails on the left of basis element " + std::to_string(i));
        if (multiply(e, unit_) != e)
            issues.push_back("unit fails on the right of basis element " + std::to_string(i));
    }
    return issues;
}

std::vector<std::string> AlgebraMorphism::validate(const Algebra& src, const Algebra& dst) const {
    std::vector<std::string> issues;
    if (map.rows() != src.dim() || map.cols() != dst.dim() ||
        map.characteristic() != src.characteristic()) {
        issues.push_back("morphism matrix shape does not match the algebras");
        return issues;
    }
    if (apply(src.unit()) != dst.unit()) issues.push_back("morphism does not preserve the unit");
    for (std::size_t i = 0; i < src.dim(); ++i)
        for (std::size_t j = 0; j < src.dim(); ++j) {
            Matrix lhs = apply(src.basis_product(i, j));
            Matrix rhs = dst.multiply(map.row(i), map.row(j));
            if (lhs != rhs)
                issues.push_back("morphism is not multiplicative on basis pair (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
        }
    return issues;
}

} // namespace coringlab
