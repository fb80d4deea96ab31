#include "coringlab/pairing.hpp"

#include <stdexcept>

#include "coringlab/linalg.hpp"

namespace coringlab {

std::vector<std::string> ARing::validate(const Algebra& base) const {
    std::vector<std::string> issues = alg.validate();
    for (auto& issue : unit_map.validate(base, alg)) issues.push_back("unit morphism: " + issue);
    return issues;
}

MeasuringPairing make_pairing(ARing ring, Coring coring, AlgebraMorphism kappa) {
    MeasuringPairing p;
    p.dual = dual_ring(coring, DualSide::left);
    if (kappa.map.rows() != ring.alg.dim() || kappa.map.cols() != p.dual.alg.dim())
        throw std::invalid_argument("pairing map shape mismatch");
    p.ring = std::move(ring);
    p.coring = std::move(coring);
    p.kappa = std::move(kappa);
    p.kappa_surjective = rank(p.kappa.map) == p.dual.alg.dim();
    p.alpha_flag = alpha_check(p).ok();
    return p;
}

MeasuringPairing canonical_pairing(const Coring& c) {
    DualRing dual = dual_ring(c, DualSide::left);
    ARing ring{dual.alg, dual_unit_morphism(c, dual)};
    AlgebraMorphism kappa = AlgebraMorphism::identity(dual.alg);
    return make_pairing(std::move(ring), c, std::move(kappa));
}

std::vector<std::string> validate_pairing(const MeasuringPairing& p) {
    std::vector<std::string> issues;
    for (auto& issue : p.ring.validate(p.coring.base())) issues.push_back("ring: " + issue);
    for (auto& issue : p.kappa.validate(p.ring.alg, p.dual.alg))
        issues.push_back("pairing map: " + issue);
    if (p.ring.unit_map.map * p.kappa.map != dual_unit_morphism(p.coring, p.dual).map)
        issues.push_back("pairing map does not match the base units");
    return issues;
}

std::string AlphaCheck::reason() const {
    if (ok()) return "alpha condition holds";
    std::string why;
    if (!carrier_projective) why = "carrier is not projective over the base";
    if (!separates) {
        if (!why.empty()) why += "; ";
        why += "evaluation against the ring does not separate the carrier";
    }
    return why;
}

AlphaCheck alpha_check(const MeasuringPairing& p) {
    AlphaCheck out;
    out.carrier_projective =
        projectivity_test(p.coring.carrier().as_left_module().flip()).projective;

    const std::size_t dc = p.coring.dim(), dt = p.ring.alg.dim(), da = p.coring.base().dim();
    Matrix eval(dc, dt * da, p.coring.characteristic());
    for (std::size_t k = 0; k < dt; ++k) {
        Matrix ek = p.evaluation(k);
        for (std::size_t j = 0; j < dc; ++j)
            for (std::size_t l = 0; l < da; ++l) eval.at(j, k * da + l) = ek.at(j, l);
    }
    out.separates = kernel_basis(eval).rows() == 0;
    return out;
}

Bimodule module_from_comodule(const MeasuringPairing& p, const Comodule& m) {
    if (!m.coring().same_structure(p.coring))
        throw std::invalid_argument("comodule is not over the pairing's coring");
    const std::size_t dm = m.dim(), dt = p.ring.alg.dim();
    const Matrix id_m = Matrix::identity(dm, p.coring.characteristic());
    std::vector<Matrix> ract;
    ract.reserve(dt);
    for (std::size_t k = 0; k < dt; ++k)
        ract.push_back(m.rho() * m.tensor_mc().lift * Matrix::kron(id_m, p.evaluation(k)) *
                       collapse_right_action(m.carrier()));
    return Bimodule::right_module(p.ring.alg, dm, std::move(ract));
}

Bimodule coring_as_module(const MeasuringPairing& p) {
    return module_from_comodule(p, Comodule::regular(p.coring));
}

Bimodule restrict_to_base(const MeasuringPairing& p, const Bimodule& w) {
    const Algebra& a = p.coring.base();
    std::vector<Matrix> ract;
    ract.reserve(a.dim());
    for (std::size_t l = 0; l < a.dim(); ++l) {
        Matrix unit_image =
            Matrix::row_unit(a.dim(), l, a.characteristic()) * p.ring.unit_map.map;
        ract.push_back(w.act_right(unit_image));
    }
    return Bimodule::right_module(a, w.dim(), std::move(ract));
}

Matrix rho_hom_matrix(const Bimodule& w) {
    const std::size_t dw = w.dim(), dt = w.right_algebra().dim();
    Matrix out(dw, dt * dw, w.characteristic());
    for (std::size_t i = 0; i < dw; ++i)
        for (std::size_t k = 0; k < dt; ++k)
            for (std::size_t j = 0; j < dw; ++j)
                out.at(i, k * dw + j) = w.right_action(k).at(i, j);
    return out;
}

Matrix alpha_matrix(const MeasuringPairing& p, const Bimodule& w, const TensorProduct& wc) {
    const std::size_t dw = w.dim(), dt = p.ring.alg.dim(), dc = p.coring.dim();
    Matrix alpha_raw(wc.raw_dim(), 0, w.characteristic());
    for (std::size_t k = 0; k < dt; ++k) {
        Matrix eval = p.evaluation(k) * p.ring.unit_map.map;  // c_j |-> <t_k, c_j> in T
        Matrix block(wc.raw_dim(), dw, w.characteristic());
        for (std::size_t i = 0; i < dw; ++i)
            for (std::size_t j = 0; j < dc; ++j)
                block.set_row(wc.raw_index(i, j), w.act_right(eval.row(j)).row(i));
        alpha_raw = Matrix::hstack(alpha_raw, block);
    }
    Matrix alpha = wc.lift * alpha_raw;
    if (wc.project * alpha != alpha_raw)
        throw std::logic_error("evaluation map does not descend to the balanced tensor");
    return alpha;
}

RationalPart rat_functor(const MeasuringPairing& p, const Bimodule& w) {
    if (!p.alpha_flag)
        throw std::invalid_argument("rational part needs a pairing satisfying the alpha condition");
    if (!w.right_algebra().same_presentation(p.ring.alg))
        throw std::invalid_argument("module is not over the pairing ring");

    RationalPart out;
    Bimodule w_base = restrict_to_base(p, w);
    TensorProduct wc = tensor_over(w_base, p.coring.carrier());
    Matrix alpha = alpha_matrix(p, w, wc);
    Matrix rho_h = rho_hom_matrix(w);
    out.subspace = Subspace::preimage(rho_h, Subspace::image(alpha));
    out.module = submodule(w, out.subspace);
    out.embedding = out.subspace.basis();

    Bimodule carrier = restrict_to_base(p, out.module);
    TensorProduct rc = tensor_over(carrier, p.coring.carrier());
    const Matrix id_c = Matrix::identity(p.coring.dim(), p.coring.characteristic());
    Matrix into_ambient = rc.lift * Matrix::kron(out.embedding, id_c) * wc.project;
    Matrix system = into_ambient * alpha;

    Matrix rho(out.module.dim(), rc.dim(), w.characteristic());
    for (std::size_t r = 0; r < out.module.dim(); ++r) {
        auto row = solve_linear(system, out.embedding.row(r) * rho_h);
        if (!row) throw std::logic_error("rational coaction has no solution under alpha");
        rho.set_row(r, *row);
    }
    out.comodule = Comodule(p.coring, std::move(carrier), std::move(rho));
    return out;
}

ComoduleRecovery comodule_from_module(const MeasuringPairing& p, const Bimodule& w) {
    RationalPart rat = rat_functor(p, w);
    if (rat.subspace.dim() == w.dim()) return {rat.comodule, std::nullopt};
    for (std::size_t i = 0; i < w.dim(); ++i) {
        Matrix e = Matrix::row_unit(w.dim(), i, w.characteristic());
        if (!rat.subspace.contains_vector(e)) return {std::nullopt, e};
    }
    throw std::logic_error("proper subspace contains every basis vector");
}

} // namespace coringlab
