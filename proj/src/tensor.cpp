#include "coringlab/tensor.hpp"

#include <stdexcept>

#include "coringlab/linalg.hpp"

namespace coringlab {

namespace {

struct QuotientData {
    Matrix project;
    Matrix lift;
};

// Quotient of F^n by the row span of `relations`: canonical basis indexed by
// the non-pivot columns of the reduced relation matrix.
QuotientData quotient_by(const Matrix& relations) {
    const std::uint32_t p = relations.characteristic();
    const std::size_t n = relations.cols();
    RrefResult r = rref(relations);

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    const std::size_t q = free_cols.size();
    Matrix project(n, q, p);
    for (std::size_t t = 0; t < n; ++t) {
        // Reduce e_t modulo the relation span, then read the free coordinates.
        Matrix v = Matrix::row_unit(n, t, p);
        for (std::size_t s = 0; s < r.rank(); ++s) {
            const std::uint32_t c = v.at(0, r.pivots[s]);
            if (c) v = v - r.reduced.row(s).scaled(c);
        }
        for (std::size_t a = 0; a < q; ++a) project.at(t, a) = v.at(0, free_cols[a]);
    }
    Matrix lift(q, n, p);
    for (std::size_t a = 0; a < q; ++a) lift.at(a, free_cols[a]) = 1;
    return {std::move(project), std::move(lift)};
}

void require_same_algebra(const Algebra& a, const Algebra& b, const char* what) {
    if (!a.same_presentation(b)) throw std::invalid_argument(std::string("tensor_over: ") + what);
}

Bimodule quotient_module(const Algebra& left, const Algebra& right, const QuotientData& qd,
                         const std::vector<Matrix>& raw_lact,
                         const std::vector<Matrix>& raw_ract) {
    std::vector<Matrix> lact, ract;
    lact.reserve(raw_lact.size());
    ract.reserve(raw_ract.size());
    for (const Matrix& a : raw_lact) {
        if (a * qd.project != qd.project * (qd.lift * (a * qd.project)))
            throw std::invalid_argument("left action does not descend to the tensor quotient");
        lact.push_back(qd.lift * a * qd.project);
    }
    for (const Matrix& a : raw_ract) {
        if (a * qd.project != qd.project * (qd.lift * (a * qd.project)))
            throw std::invalid_argument("right action does not descend to the tensor quotient");
        ract.push_back(qd.lift * a * qd.project);
    }
    return Bimodule(left, right, qd.lift.rows(), std::move(lact), std::move(ract));
}

Matrix balancing_relations(const Bimodule& m, const Bimodule& n) {
    const std::uint32_t p = m.characteristic();
    const Algebra& a = m.right_algebra();
    const std::size_t dm = m.dim(), dn = n.dim(), da = a.dim();
    Matrix rel(dm * da * dn, dm * dn, p);
    std::size_t row = 0;
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t k = 0; k < da; ++k) {
            Matrix moved = m.right_action(k).row(i);
            for (std::size_t j = 0; j < dn; ++j) {
                for (std::size_t t = 0; t < dm; ++t)
                    rel.at(row, t * dn + j) = moved.at(0, t);
                Matrix shifted = n.left_action(k).row(j);
                for (std::size_t t = 0; t < dn; ++t)
                    rel.at(row, i * dn + t) = fp_sub(rel.at(row, i * dn + t), shifted.at(0, t), p);
                ++row;
            }
        }
    return rel;
}

} // namespace

TensorProduct tensor_over(const Bimodule& m, const Bimodule& n) {
    require_same_algebra(m.right_algebra(), n.left_algebra(), "middle algebras differ");
    const std::size_t dm = m.dim(), dn = n.dim();
    QuotientData qd = quotient_by(balancing_relations(m, n));

    std::vector<Matrix> raw_lact, raw_ract;
    for (std::size_t k = 0; k < m.left_algebra().dim(); ++k)
        raw_lact.push_back(Matrix::kron(m.left_action(k),
                                        Matrix::identity(dn, m.characteristic())));
    for (std::size_t k = 0; k < n.right_algebra().dim(); ++k)
        raw_ract.push_back(Matrix::kron(Matrix::identity(dm, m.characteristic()),
                                        n.right_action(k)));

    TensorProduct out;
    out.m_dim = dm;
    out.n_dim = dn;
    out.module = quotient_module(m.left_algebra(), n.right_algebra(), qd, raw_lact, raw_ract);
    out.project = std::move(qd.project);
    out.lift = std::move(qd.lift);
    return out;
}

TripleTensor triple_tensor(const Bimodule& x, const Bimodule& y, const Bimodule& z) {
    require_same_algebra(x.right_algebra(), y.left_algebra(), "middle algebras differ (1,2)");
    require_same_algebra(y.right_algebra(), z.left_algebra(), "middle algebras differ (2,3)");
    const std::uint32_t p = x.characteristic();
    const std::size_t d1 = x.dim(), d2 = y.dim(), d3 = z.dim();

    Matrix rel12 = balancing_relations(x, y);
    Matrix rel23 = balancing_relations(y, z);
    Matrix relations = Matrix::vstack(Matrix::kron(rel12, Matrix::identity(d3, p)),
                                      Matrix::kron(Matrix::identity(d1, p), rel23));
    QuotientData qd = quotient_by(relations);

    std::vector<Matrix> raw_lact, raw_ract;
    const Matrix i23 = Matrix::identity(d2 * d3, p);
    const Matrix i12 = Matrix::identity(d1 * d2, p);
    for (std::size_t k = 0; k < x.left_algebra().dim(); ++k)
        raw_lact.push_back(Matrix::kron(x.left_action(k), i23));
    for (std::size_t k = 0; k < z.right_algebra().dim(); ++k)
        raw_ract.push_back(Matrix::kron(i12, z.right_action(k)));

    TripleTensor out;
    out.d1 = d1;
    out.d2 = d2;
    out.d3 = d3;
    out.module = quotient_module(x.left_algebra(), z.right_algebra(), qd, raw_lact, raw_ract);
    out.project = std::move(qd.project);
    out.lift = std::move(qd.lift);
    return out;
}

namespace {

Identification make_identification(Matrix to, Matrix from) {
    if (!(to * from).is_identity() || !(from * to).is_identity())
        throw std::logic_error("tensor identification is not invertible");
    return {std::move(to), std::move(from)};
}

} // namespace

Identification identify_nested12(const TripleTensor& t3, const TensorProduct& xy,
                                 const TensorProduct& xy_z) {
    const std::uint32_t p = t3.project.characteristic();
    const Matrix iz = Matrix::identity(t3.d3, p);
    Matrix to = xy_z.lift * Matrix::kron(xy.lift, iz) * t3.project;
    Matrix from = t3.lift * Matrix::kron(xy.project, iz) * xy_z.project;
    return make_identification(std::move(to), std::move(from));
}

Identification identify_nested23(const TripleTensor& t3, const TensorProduct& yz,
                                 const TensorProduct& x_yz) {
    const std::uint32_t p = t3.project.characteristic();
    const Matrix ix = Matrix::identity(t3.d1, p);
    Matrix to = x_yz.lift * Matrix::kron(ix, yz.lift) * t3.project;
    Matrix from = t3.lift * Matrix::kron(ix, yz.project) * x_yz.project;
    return make_identification(std::move(to), std::move(from));
}

Matrix collapse_right_action(const Bimodule& m) {
    const std::size_t da = m.right_algebra().dim();
    Matrix out(m.dim() * da, m.dim(), m.characteristic());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t k = 0; k < da; ++k)
            out.set_row(i * da + k, m.right_action(k).row(i));
    return out;
}

Matrix collapse_left_action(const Bimodule& m) {
    const std::size_t da = m.left_algebra().dim();
    Matrix out(da * m.dim(), m.dim(), m.characteristic());
    for (std::size_t k = 0; k < da; ++k)
        for (std::size_t i = 0; i < m.dim(); ++i)
            out.set_row(k * m.dim() + i, m.left_action(k).row(i));
    return out;
}

Matrix insert_unit_left(const Algebra& a, std::size_t m_dim) {
    Matrix out(m_dim, a.dim() * m_dim, a.characteristic());
    for (std::size_t i = 0; i < m_dim; ++i)
        for (std::size_t k = 0; k < a.dim(); ++k)
            out.at(i, k * m_dim + i) = a.unit().at(0, k);
    return out;
}

Matrix insert_unit_right(std::size_t m_dim, const Algebra& a) {
    Matrix out(m_dim, m_dim * a.dim(), a.characteristic());
    for (std::size_t i = 0; i < m_dim; ++i)
        for (std::size_t k = 0; k < a.dim(); ++k)
            out.at(i, i * a.dim() + k) = a.unit().at(0, k);
    return out;
}

Identification unit_collapse_left(const TensorProduct& am, const Bimodule& m) {
    Matrix to = am.lift * collapse_left_action(m);
    Matrix from = insert_unit_left(m.left_algebra(), m.dim()) * am.project;
    return make_identification(std::move(to), std::move(from));
}

Identification unit_collapse_right(const TensorProduct& ma, const Bimodule& m) {
    Matrix to = ma.lift * collapse_right_action(m);
    Matrix from = insert_unit_right(m.dim(), m.right_algebra()) * ma.project;
    return make_identification(std::move(to), std::move(from));
}

BaseChange base_change_chi(const Bimodule& m, const Bimodule& n, const AlgebraMorphism& beta,
                           const Algebra& a) {
    BaseChange out;
    out.over_b = tensor_over(m, n);
    out.over_a = tensor_over(restrict_right(m, beta, a), restrict_left(n, beta, a));
    out.chi = out.over_a.lift * out.over_b.project;
    return out;
}

} // namespace coringlab
