#pragma once

#include <string>
#include <vector>

#include "coringlab/matrix.hpp"

namespace coringlab {

// Finite-dimensional associative unital F_p-algebra given by structure
// constants: row (i*dim + j) of `table` holds the coordinates of e_i * e_j.
class Algebra {
public:
    Algebra() = default;
    Algebra(std::uint32_t p, std::size_t dim, Matrix table, Matrix unit);

    // F_p itself; the base ring of every one-sided module.
    static Algebra field(std::uint32_t p);

    std::uint32_t characteristic() const { return p_; }
    std::size_t dim() const { return dim_; }
    const Matrix& table() const { return table_; }
    const Matrix& unit() const { return unit_; }

    Matrix basis_product(std::size_t i, std::size_t j) const { return table_.row(i * dim_ + j); }

    Matrix multiply(const Matrix& x, const Matrix& y) const;

    // Matrix of y -> x*y acting on rows from the right.
    Matrix left_mult_matrix(const Matrix& x) const;
    // Matrix of x -> x*y.
    Matrix right_mult_matrix(const Matrix& y) const;

    Algebra opposite() const;

    // Associativity and two-sided unit law on all basis triples; empty result
    // means the table presents an honest algebra.
    std::vector<std::string> validate() const;

    bool same_presentation(const Algebra& other) const {
        return p_ == other.p_ && dim_ == other.dim_ && table_ == other.table_ && unit_ == other.unit_;
    }

private:
    std::uint32_t p_ = 2;
    std::size_t dim_ = 0;
    Matrix table_{0, 0, 2};
    Matrix unit_{0, 0, 2};
};

// Linear map between algebras, stored as src.dim x dst.dim acting on rows.
struct AlgebraMorphism {
    Matrix map{0, 0, 2};

    Matrix apply(const Matrix& x) const { return x * map; }

    static AlgebraMorphism identity(const Algebra& a) { return {Matrix::identity(a.dim(), a.characteristic())}; }

    // Multiplicative and unital.
    std::vector<std::string> validate(const Algebra& src, const Algebra& dst) const;
};

} // namespace coringlab
