#pragma once

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "coringlab/fp.hpp"

namespace coringlab {

// Dense matrix over F_p.  Everything in the workbench uses the row
// convention: elements of a d-dimensional space are 1 x d rows, and a linear
// map from dim m to dim n is an m x n matrix acting on the right, so
// composition "f then g" is f * g.
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols, std::uint32_t p)
        : p_(p), rows_(rows), cols_(cols), e_(rows * cols, 0) {
        check_prime(p);
    }

    // Row-major literal, mostly for tests and frozen oracle values.
    Matrix(std::initializer_list<std::initializer_list<int>> rows, std::uint32_t p)
        : p_(p), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
        check_prime(p);
        e_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            for (int v : r) e_.push_back(reduce(v, p_));
        }
    }

    static Matrix identity(std::size_t n, std::uint32_t p) {
        Matrix m(n, n, p);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static Matrix row_unit(std::size_t n, std::size_t i, std::uint32_t p) {
        Matrix m(1, n, p);
        m.at(0, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t characteristic() const { return p_; }

    std::uint32_t& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    Scalar entry(std::size_t r, std::size_t c) const { return {at(r, c), p_}; }

    void set(std::size_t r, std::size_t c, std::uint32_t v) { at(r, c) = v % p_; }
    void set_signed(std::size_t r, std::size_t c, int v) { at(r, c) = reduce(v, p_); }

    bool is_zero() const {
        for (auto v : e_) if (v) return false;
        return true;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (at(r, c) != (r == c ? 1u : 0u)) return false;
        return true;
    }

    Matrix row(std::size_t r) const {
        Matrix out(1, cols_, p_);
        for (std::size_t c = 0; c < cols_; ++c) out.at(0, c) = at(r, c);
        return out;
    }

    void set_row(std::size_t r, const Matrix& v) {
        if (v.rows() != 1 || v.cols() != cols_) throw std::invalid_argument("set_row shape");
        for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v.at(0, c);
    }

    Matrix transpose() const {
        Matrix out(cols_, rows_, p_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
        return out;
    }

    Matrix operator*(const Matrix& rhs) const {
        if (cols_ != rhs.rows_ || p_ != rhs.p_) throw std::invalid_argument("matrix product shape/field");
        Matrix out(rows_, rhs.cols_, p_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k) {
                std::uint32_t a = at(r, k);
                if (!a) continue;
                for (std::size_t c = 0; c < rhs.cols_; ++c)
                    out.at(r, c) = fp_add(out.at(r, c), fp_mul(a, rhs.at(k, c), p_), p_);
            }
        return out;
    }

    Matrix operator+(const Matrix& rhs) const {
        require_same_shape(rhs);
        Matrix out(rows_, cols_, p_);
        for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = fp_add(e_[i], rhs.e_[i], p_);
        return out;
    }

    Matrix operator-(const Matrix& rhs) const {
        require_same_shape(rhs);
        Matrix out(rows_, cols_, p_);
        for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = fp_sub(e_[i], rhs.e_[i], p_);
        return out;
    }

    Matrix scaled(std::uint32_t s) const {
        Matrix out(rows_, cols_, p_);
        for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = fp_mul(e_[i], s, p_);
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    // Kronecker product in the row convention: if f maps e_i to row f[i] and g
    // maps e_j to row g[j], then kron(f, g) maps e_(i*g.rows+j) of the domain
    // grid to the flattened row f[i] (x) g[j].  Matches row-major flattening
    // (i, j) -> i * ncols + j on both sides.
    static Matrix kron(const Matrix& f, const Matrix& g) {
        if (f.p_ != g.p_) throw std::invalid_argument("kron field mismatch");
        Matrix out(f.rows_ * g.rows_, f.cols_ * g.cols_, f.p_);
        for (std::size_t fr = 0; fr < f.rows_; ++fr)
            for (std::size_t fc = 0; fc < f.cols_; ++fc) {
                std::uint32_t a = f.at(fr, fc);
                if (!a) continue;
                for (std::size_t gr = 0; gr < g.rows_; ++gr)
                    for (std::size_t gc = 0; gc < g.cols_; ++gc)
                        out.at(fr * g.rows_ + gr, fc * g.cols_ + gc) =
                            fp_mul(a, g.at(gr, gc), f.p_);
            }
        return out;
    }

    static Matrix hstack(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.p_ != b.p_) throw std::invalid_argument("hstack shape/field");
        Matrix out(a.rows_, a.cols_ + b.cols_, a.p_);
        for (std::size_t r = 0; r < a.rows_; ++r) {
            for (std::size_t c = 0; c < a.cols_; ++c) out.at(r, c) = a.at(r, c);
            for (std::size_t c = 0; c < b.cols_; ++c) out.at(r, a.cols_ + c) = b.at(r, c);
        }
        return out;
    }

    static Matrix vstack(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.cols_ || a.p_ != b.p_) throw std::invalid_argument("vstack shape/field");
        Matrix out(a.rows_ + b.rows_, a.cols_, a.p_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t c = 0; c < a.cols_; ++c) out.at(r, c) = a.at(r, c);
        for (std::size_t r = 0; r < b.rows_; ++r)
            for (std::size_t c = 0; c < a.cols_; ++c) out.at(a.rows_ + r, c) = b.at(r, c);
        return out;
    }

    // Row vector reshaped as rows x cols grid (for hom-space elements stored
    // flattened row-major).
    Matrix unflatten(std::size_t rows, std::size_t cols) const {
        if (rows_ != 1 || cols_ != rows * cols) throw std::invalid_argument("unflatten shape");
        Matrix out(rows, cols, p_);
        for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i];
        return out;
    }

    Matrix flatten() const {
        Matrix out(1, rows_ * cols_, p_);
        out.e_ = e_;
        return out;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r) os << "; ";
            for (std::size_t c = 0; c < cols_; ++c) {
                if (c) os << " ";
                os << at(r, c);
            }
        }
        os << "]";
        return os.str();
    }

private:
    static std::uint32_t reduce(int v, std::uint32_t p) {
        long long m = static_cast<long long>(v) % static_cast<long long>(p);
        if (m < 0) m += p;
        return static_cast<std::uint32_t>(m);
    }

    void require_same_shape(const Matrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || p_ != rhs.p_)
            throw std::invalid_argument("matrix shape/field mismatch");
    }

    std::uint32_t p_ = 2;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint32_t> e_;
};

} // namespace coringlab
