#include "coringlab/bimodule.hpp"

#include <stdexcept>

namespace coringlab {

Bimodule::Bimodule(Algebra left, Algebra right, std::size_t dim,
                   std::vector<Matrix> lact, std::vector<Matrix> ract)
    : left_(std::move(left)), right_(std::move(right)), dim_(dim),
      lact_(std::move(lact)), ract_(std::move(ract)) {
    if (lact_.size() != left_.dim() || ract_.size() != right_.dim())
        throw std::invalid_argument("bimodule needs one action matrix per algebra basis element");
    for (const Matrix& m : lact_)
        if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("left action shape");
    for (const Matrix& m : ract_)
        if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("right action shape");
}

Bimodule Bimodule::right_module(Algebra alg, std::size_t dim, std::vector<Matrix> ract) {
    Algebra k = Algebra::field(alg.characteristic());
    std::vector<Matrix> lact{Matrix::identity(dim, alg.characteristic())};
    return Bimodule(std::move(k), std::move(alg), dim, std::move(lact), std::move(ract));
}

Bimodule Bimodule::left_module(Algebra alg, std::size_t dim, std::vector<Matrix> lact) {
    Algebra k = Algebra::field(alg.characteristic());
    std::vector<Matrix> ract{Matrix::identity(dim, alg.characteristic())};
    return Bimodule(std::move(alg), std::move(k), dim, std::move(lact), std::move(ract));
}

Bimodule Bimodule::regular(const Algebra& a) {
    std::vector<Matrix> lact, ract;
    for (std::size_t k = 0; k < a.dim(); ++k) {
        Matrix e = Matrix::row_unit(a.dim(), k, a.characteristic());
        lact.push_back(a.left_mult_matrix(e));
        ract.push_back(a.right_mult_matrix(e));
    }
    return Bimodule(a, a, a.dim(), std::move(lact), std::move(ract));
}

Bimodule Bimodule::free_right(const Algebra& a, std::size_t copies) {
    const std::size_t d = a.dim();
    std::vector<Matrix> ract;
    for (std::size_t k = 0; k < d; ++k) {
        Matrix e = Matrix::row_unit(d, k, a.characteristic());
        ract.push_back(Matrix::kron(Matrix::identity(copies, a.characteristic()),
                                    a.right_mult_matrix(e)));
    }
    return right_module(a, copies * d, std::move(ract));
}

Matrix Bimodule::act_left(const Matrix& a) const {
    Matrix out(dim_, dim_, characteristic());
    for (std::size_t k = 0; k < lact_.size(); ++k)
        if (a.at(0, k)) out = out + lact_[k].scaled(a.at(0, k));
    return out;
}

Matrix Bimodule::act_right(const Matrix& a) const {
    Matrix out(dim_, dim_, characteristic());
    for (std::size_t k = 0; k < ract_.size(); ++k)
        if (a.at(0, k)) out = out + ract_[k].scaled(a.at(0, k));
    return out;
}

Bimodule Bimodule::flip() const {
    return Bimodule(right_.opposite(), left_.opposite(), dim_, ract_, lact_);
}

Bimodule Bimodule::as_left_module() const {
    return Bimodule(left_, Algebra::field(characteristic()), dim_, lact_,
                    {Matrix::identity(dim_, characteristic())});
}

Bimodule Bimodule::as_right_module() const {
    return Bimodule(Algebra::field(characteristic()), right_, dim_,
                    {Matrix::identity(dim_, characteristic())}, ract_);
}

std::vector<std::string> Bimodule::validate() const {
    std::vector<std::string> issues;
    const std::size_t dl = left_.dim(), dr = right_.dim();
    if (!act_left(left_.unit()).is_identity())
        issues.push_back("left unit does not act as the identity");
    if (!act_right(right_.unit()).is_identity())
        issues.push_back("right unit does not act as the identity");
    for (std::size_t i = 0; i < dl; ++i)
        for (std::size_t j = 0; j < dl; ++j)
            if (act_left(left_.basis_product(i, j)) != lact_[j] * lact_[i])
                issues.push_back("left action not associative on basis pair (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
    for (std::size_t i = 0; i < dr; ++i)
        for (std::size_t j = 0; j < dr; ++j)
            if (act_right(right_.basis_product(i, j)) != ract_[i] * ract_[j])
                issues.push_back("right action not associative on basis pair (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
    for (std::size_t i = 0; i < dl; ++i)
        for (std::size_t j = 0; j < dr; ++j)
            if (lact_[i] * ract_[j] != ract_[j] * lact_[i])
                issues.push_back("left and right actions do not commute on (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
    return issues;
}

std::vector<std::string> ModuleMorphism::validate(const Bimodule& src, const Bimodule& dst,
                                                  Side side) const {
    std::vector<std::string> issues;
    if (map.rows() != src.dim() || map.cols() != dst.dim()) {
        issues.push_back("morphism matrix shape does not match the modules");
        return issues;
    }
    if (side != Side::right)
        for (std::size_t k = 0; k < src.left_algebra().dim(); ++k)
            if (src.left_action(k) * map != map * dst.left_action(k))
                issues.push_back("not left linear at algebra basis element " + std::to_string(k));
    if (side != Side::left)
        for (std::size_t k = 0; k < src.right_algebra().dim(); ++k)
            if (src.right_action(k) * map != map * dst.right_action(k))
                issues.push_back("not right linear at algebra basis element " + std::to_string(k));
    return issues;
}

Bimodule restrict_right(const Bimodule& m, const AlgebraMorphism& beta, const Algebra& smaller) {
    std::vector<Matrix> ract;
    for (std::size_t k = 0; k < smaller.dim(); ++k)
        ract.push_back(m.act_right(beta.map.row(k)));
    std::vector<Matrix> lact;
    for (std::size_t k = 0; k < m.left_algebra().dim(); ++k) lact.push_back(m.left_action(k));
    return Bimodule(m.left_algebra(), smaller, m.dim(), std::move(lact), std::move(ract));
}

Bimodule restrict_left(const Bimodule& m, const AlgebraMorphism& beta, const Algebra& smaller) {
    std::vector<Matrix> lact;
    for (std::size_t k = 0; k < smaller.dim(); ++k)
        lact.push_back(m.act_left(beta.map.row(k)));
    std::vector<Matrix> ract;
    for (std::size_t k = 0; k < m.right_algebra().dim(); ++k) ract.push_back(m.right_action(k));
    return Bimodule(smaller, m.right_algebra(), m.dim(), std::move(lact), std::move(ract));
}

HomSpace hom_space(const Bimodule& m, const Bimodule& n, Side side) {
    const std::uint32_t p = m.characteristic();
    const std::size_t dm = m.dim(), dn = n.dim();
    std::vector<Matrix> dom_acts, cod_acts;
    if (side != Side::right) {
        for (std::size_t k = 0; k < m.left_algebra().dim(); ++k) {
            dom_acts.push_back(m.left_action(k));
            cod_acts.push_back(n.left_action(k));
        }
    }
    if (side != Side::left) {
        for (std::size_t k = 0; k < m.right_algebra().dim(); ++k) {
            dom_acts.push_back(m.right_action(k));
            cod_acts.push_back(n.right_action(k));
        }
    }

    // One equation block per action pair: A F - F B = 0, linear in vec(F).
    Matrix equations(dom_acts.size() * dm * dn, dm * dn, p);
    std::size_t eq = 0;
    for (std::size_t t = 0; t < dom_acts.size(); ++t) {
        const Matrix& A = dom_acts[t];
        const Matrix& B = cod_acts[t];
        for (std::size_t i = 0; i < dm; ++i)
            for (std::size_t j = 0; j < dn; ++j) {
                for (std::size_t r = 0; r < dm; ++r)
                    equations.at(eq, r * dn + j) =
                        fp_add(equations.at(eq, r * dn + j), A.at(i, r), p);
                for (std::size_t c = 0; c < dn; ++c)
                    equations.at(eq, i * dn + c) =
                        fp_sub(equations.at(eq, i * dn + c), B.at(c, j), p);
                ++eq;
            }
    }
    HomSpace out;
    out.dom_dim = dm;
    out.cod_dim = dn;
    out.space = dom_acts.empty()
                    ? Subspace::full(dm * dn, p)
                    : Subspace::from_spanning(kernel_basis(equations.transpose()));
    return out;
}

AnnihilatorResult annihilator(const Bimodule& m, const Subspace& w) {
    const Algebra& t = m.right_algebra();
    const std::uint32_t p = m.characteristic();
    Matrix eqs(t.dim(), w.dim() * m.dim(), p);
    for (std::size_t k = 0; k < t.dim(); ++k)
        for (std::size_t i = 0; i < w.dim(); ++i) {
            Matrix moved = w.basis().row(i) * m.right_action(k);
            for (std::size_t c = 0; c < m.dim(); ++c) eqs.at(k, i * m.dim() + c) = moved.at(0, c);
        }
    AnnihilatorResult out;
    out.ann = Subspace::from_spanning(kernel_basis(eqs));
    out.two_sided = true;
    for (std::size_t i = 0; i < out.ann.dim() && out.two_sided; ++i)
        for (std::size_t k = 0; k < t.dim() && out.two_sided; ++k) {
            Matrix e = Matrix::row_unit(t.dim(), k, p);
            Matrix a = out.ann.basis().row(i);
            if (!out.ann.contains_vector(t.multiply(e, a)) ||
                !out.ann.contains_vector(t.multiply(a, e)))
                out.two_sided = false;
        }
    return out;
}

ProjectivityReport projectivity_test(const Bimodule& m) {
    const Algebra& t = m.right_algebra();
    const std::uint32_t p = m.characteristic();
    const std::size_t g = m.dim(), dt = t.dim();
    Bimodule free = Bimodule::free_right(t, g);

    Matrix cover(g * dt, m.dim(), p);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t l = 0; l < dt; ++l)
            cover.set_row(i * dt + l, m.right_action(l).row(i));

    HomSpace homs = hom_space(m, free, Side::right);
    Matrix candidates(homs.dim(), m.dim() * m.dim(), p);
    for (std::size_t j = 0; j < homs.dim(); ++j)
        candidates.set_row(j, (homs.map_at(j) * cover).flatten());

    ProjectivityReport out;
    out.cover = cover;
    auto sol = solve_linear(candidates, Matrix::identity(m.dim(), p).flatten());
    out.projective = sol.has_value();
    if (sol) out.section = homs.map_from_coords(*sol);
    return out;
}

Subspace trace_sp(const Bimodule& k, const Bimodule& m) {
    const std::uint32_t p = m.characteristic();
    Subspace full_k = Subspace::full(k.dim(), p);
    Subspace ann = annihilator(k, full_k).ann;
    if (ann.dim() == 0) return Subspace::full(m.dim(), p);
    Matrix stacked(m.dim(), 0, p);
    for (std::size_t i = 0; i < ann.dim(); ++i)
        stacked = Matrix::hstack(stacked, m.act_right(ann.basis().row(i)));
    return Subspace::from_spanning(kernel_basis(stacked));
}

bool subgenerated_check(const Bimodule& x, const Bimodule& l) {
    return trace_sp(l, x).dim() == x.dim();
}

Subspace closure_under_action(const Bimodule& m, const Matrix& seed) {
    Subspace w = Subspace::from_spanning(seed);
    for (;;) {
        Subspace grown = w;
        for (std::size_t k = 0; k < m.left_algebra().dim(); ++k)
            grown = grown.sum(w.pushforward(m.left_action(k)));
        for (std::size_t k = 0; k < m.right_algebra().dim(); ++k)
            grown = grown.sum(w.pushforward(m.right_action(k)));
        if (grown.dim() == w.dim()) return w;
        w = grown;
    }
}

Bimodule submodule(const Bimodule& m, const Subspace& w) {
    const std::uint32_t p = m.characteristic();
    auto restrict_action = [&](const Matrix& act) {
        Matrix out(w.dim(), w.dim(), p);
        for (std::size_t i = 0; i < w.dim(); ++i) {
            auto coords = w.coords_of(w.basis().row(i) * act);
            if (!coords) throw std::invalid_argument("subspace is not stable under the action");
            out.set_row(i, *coords);
        }
        return out;
    };
    std::vector<Matrix> lact, ract;
    for (std::size_t k = 0; k < m.left_algebra().dim(); ++k)
        lact.push_back(restrict_action(m.left_action(k)));
    for (std::size_t k = 0; k < m.right_algebra().dim(); ++k)
        ract.push_back(restrict_action(m.right_action(k)));
    return Bimodule(m.left_algebra(), m.right_algebra(), w.dim(), std::move(lact), std::move(ract));
}

Bimodule direct_sum(const Bimodule& a, const Bimodule& b) {
    if (!a.left_algebra().same_presentation(b.left_algebra()) ||
        !a.right_algebra().same_presentation(b.right_algebra()))
        throw std::invalid_argument("direct sum needs matching algebras");
    const std::uint32_t p = a.characteristic();
    const std::size_t d = a.dim() + b.dim();
    auto block = [&](const Matrix& x, const Matrix& y) {
        Matrix out(d, d, p);
        for (std::size_t r = 0; r < x.rows(); ++r)
            for (std::size_t c = 0; c < x.cols(); ++c) out.at(r, c) = x.at(r, c);
        for (std::size_t r = 0; r < y.rows(); ++r)
            for (std::size_t c = 0; c < y.cols(); ++c)
                out.at(a.dim() + r, a.dim() + c) = y.at(r, c);
        return out;
    };
    std::vector<Matrix> lact, ract;
    for (std::size_t k = 0; k < a.left_algebra().dim(); ++k)
        lact.push_back(block(a.left_action(k), b.left_action(k)));
    for (std::size_t k = 0; k < a.right_algebra().dim(); ++k)
        ract.push_back(block(a.right_action(k), b.right_action(k)));
    return Bimodule(a.left_algebra(), a.right_algebra(), d, std::move(lact), std::move(ract));
}

} // namespace coringlab
