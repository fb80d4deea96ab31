#include "coringlab/functors.hpp"

#include <stdexcept>
#include <utility>

namespace coringlab {

namespace {

// Quotient-level form of a map given on raw tensor coordinates; the raw map
// must be constant on balancing classes, otherwise no such form exists.
Matrix descend(const TensorProduct& t, const Matrix& raw_to_final, const char* what) {
    Matrix q = t.lift * raw_to_final;
    if (t.project * q != raw_to_final) throw std::logic_error(what);
    return q;
}

Matrix coords_or_throw(const HomSpace& h, const Matrix& f, const char* what) {
    std::optional<Matrix> coords = h.coords_of_map(f);
    if (!coords) throw std::logic_error(what);
    return *coords;
}

Matrix coords_or_throw(const Subspace& s, const Matrix& v, const char* what) {
    std::optional<Matrix> coords = s.coords_of(v);
    if (!coords) throw std::logic_error(what);
    return *coords;
}

} // namespace

InducedComodule induction(const CoringMorphism& phi, const Comodule& m) {
    const Coring& d = phi.target;
    const Algebra& a = phi.source.base();
    const Algebra& b = d.base();
    const std::uint32_t p = d.characteristic();
    const std::size_t dm = m.dim();
    const std::size_t dc = phi.source.dim();
    const std::size_t dd = d.dim();
    const std::size_t db = b.dim();

    const Bimodule b_ab = restrict_left(Bimodule::regular(b), phi.beta, a);
    TensorProduct mb = tensor_over(m.carrier(), b_ab);

    const Bimodule d_ab = restrict_left(d.carrier(), phi.beta, a);
    const TensorProduct md = tensor_over(m.carrier(), d_ab);
    const TripleTensor t3 = triple_tensor(m.carrier(), b_ab, d.carrier());
    const TensorProduct mb_d = tensor_over(mb.module, d.carrier());
    const Identification nested = identify_nested12(t3, mb, mb_d);

    // M (x)_A D = (M (x)_A B) (x)_B D via m (x) d -> m (x) 1 (x) d and
    // m (x) b (x) d -> m (x) b.d; the two composites must be identities.
    Matrix ins(dm * dd, dm * db * dd, p);
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < dd; ++j)
            ins.set_row(i * dd + j,
                        Matrix::kron(Matrix::row_unit(dm, i, p),
                                     Matrix::kron(b.unit(), Matrix::row_unit(dd, j, p))));
    const Matrix from_md = md.lift * ins * t3.project * nested.from;
    Matrix collapse(dm * db * dd, dm * dd, p);
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t u = 0; u < db; ++u)
            for (std::size_t j = 0; j < dd; ++j)
                collapse.set_row((i * db + u) * dd + j,
                                 Matrix::kron(Matrix::row_unit(dm, i, p),
                                              d.carrier().left_action(u).row(j)));
    const Matrix to_md = nested.to * t3.lift * collapse * md.project;
    if (from_md * to_md != Matrix::identity(md.dim(), p) ||
        to_md * from_md != Matrix::identity(mb_d.dim(), p))
        throw std::logic_error("base collapse identification failed");

    // rho(m (x) b) = sum m0 (x) theta(m1).b.
    const Matrix rho_raw_m = m.rho_raw();
    Matrix raw(dm * db, dm * dd, p);
    for (std::size_t u = 0; u < db; ++u) {
        const Matrix theta_u = phi.theta * d.carrier().right_action(u);
        for (std::size_t i = 0; i < dm; ++i)
            raw.set_row(i * db + u, (rho_raw_m.row(i).unflatten(dm, dc) * theta_u).flatten());
    }
    const Matrix rho = descend(mb, raw * md.project * from_md, "induced coaction is not balanced");
    Comodule comodule(d, mb.module, rho);
    return {std::move(mb), std::move(comodule)};
}

Comodule corestriction(const CoringMorphism& phi, const Comodule& m) {
    if (!phi.same_base())
        throw std::invalid_argument("corestriction requires a same-base morphism");
    const Matrix id_m = Matrix::identity(m.dim(), phi.source.characteristic());
    return Comodule::from_raw_rho(phi.target, m.carrier(),
                                  m.rho_raw() * Matrix::kron(id_m, phi.theta));
}

Matrix induction_on_map(const InducedComodule& a, const InducedComodule& b, const Matrix& f) {
    const Matrix id_b = Matrix::identity(a.tensor.n_dim, f.characteristic());
    return descend(a.tensor, Matrix::kron(f, id_b) * b.tensor.project,
                   "induced map is not balanced");
}

Bicomodule bicomodule_induced(const CoringMorphism& phi) {
    const Coring& c = phi.source;
    const Coring& d = phi.target;
    const Algebra& a = c.base();
    const Algebra& b = d.base();
    const std::uint32_t p = c.characteristic();
    const std::size_t dc = c.dim();
    const std::size_t db = b.dim();

    const Bimodule v = restrict_right(Bimodule::regular(b), phi.beta, a);
    Comodule right_side = Comodule::cofree(c, v);
    const TensorProduct vc = tensor_over(v, c.carrier());

    const Matrix unit_embed = insert_unit_left(b, dc) * vc.project;

    // lambda(b (x) c) = sum b.theta(c1) (x) (1 (x) c2).
    const TensorProduct dx = tensor_over(d.carrier(), vc.module);
    const Matrix delta_raw = c.delta_raw();
    Matrix raw(db * dc, d.dim() * vc.dim(), p);
    for (std::size_t u = 0; u < db; ++u) {
        const Matrix w_u = phi.theta * d.carrier().left_action(u);
        for (std::size_t i = 0; i < dc; ++i)
            raw.set_row(u * dc + i,
                        (w_u.transpose() * delta_raw.row(i).unflatten(dc, dc) * unit_embed)
                            .flatten());
    }
    const Matrix rho_left = descend(vc, raw * dx.project, "left coaction is not balanced");
    LeftComodule left_side(d, vc.module, rho_left);

    // b (x) c -> b.beta(eps(c)).
    Matrix collapse_raw(db * dc, db, p);
    for (std::size_t u = 0; u < db; ++u)
        for (std::size_t i = 0; i < dc; ++i)
            collapse_raw.set_row(u * dc + i,
                                 b.multiply(Matrix::row_unit(db, u, p),
                                            c.eps().row(i) * phi.beta.map));
    const Matrix counit_collapse = descend(vc, collapse_raw, "counit collapse is not balanced");

    return {std::move(right_side), std::move(left_side), unit_embed, counit_collapse};
}

Bicomodule bicomodule_corestrict(const CoringMorphism& phi) {
    if (!phi.same_base())
        throw std::invalid_argument("corestriction requires a same-base morphism");
    const Coring& c = phi.source;
    const std::uint32_t p = c.characteristic();
    const std::size_t dc = c.dim();
    Comodule right_side = Comodule::regular(c);
    LeftComodule left_side = LeftComodule::from_raw_rho(
        phi.target, c.carrier(),
        c.delta_raw() * Matrix::kron(phi.theta, Matrix::identity(dc, p)));
    return {std::move(right_side), std::move(left_side), Matrix::identity(dc, p), c.eps()};
}

std::vector<std::string> Bicomodule::validate() const {
    std::vector<std::string> errors;
    for (const std::string& e : right_side.validate()) errors.push_back("right side: " + e);
    for (const std::string& e : left_side.validate()) errors.push_back("left side: " + e);
    if (right_side.dim() != left_side.dim()) {
        errors.push_back("the two coactions live on different carriers");
        return errors;
    }
    const Coring& c = right_side.coring();
    const Coring& d = left_side.coring();
    if (unit_embed.rows() != c.dim() || unit_embed.cols() != right_side.dim())
        errors.push_back("unit section has the wrong shape");
    if (counit_collapse.rows() != right_side.dim() || counit_collapse.cols() != d.base().dim())
        errors.push_back("counit collapse has the wrong shape");
    const std::uint32_t p = c.characteristic();
    const TripleTensor t3 = triple_tensor(d.carrier(), left_side.carrier(), c.carrier());
    const Matrix route1 = left_side.rho_raw() *
                          Matrix::kron(Matrix::identity(d.dim(), p), right_side.rho_raw()) *
                          t3.project;
    const Matrix route2 = right_side.rho_raw() *
                          Matrix::kron(left_side.rho_raw(), Matrix::identity(c.dim(), p)) *
                          t3.project;
    if (route1 != route2) errors.push_back("the coactions do not commute");
    return errors;
}

AdInduction cotensor_comodule(const Comodule& n, const Bicomodule& x) {
    const Coring& c = x.right_side.coring();
    const std::uint32_t p = c.characteristic();
    const std::size_t dn = n.dim();
    const std::size_t dc = c.dim();

    CotensorResult cot = cotensor(n, x.left_side);
    Bimodule module = submodule(cot.mn.module, cot.kernel);
    const Matrix embedding = cot.kernel.basis();

    // id (x) rho_X restricted to the kernel, rewritten in W (x)_A C
    // coordinates through the inclusion of W into N (x)_B X.
    const TripleTensor t3 = triple_tensor(n.carrier(), x.left_side.carrier(), c.carrier());
    const TensorProduct nx_c = tensor_over(cot.mn.module, c.carrier());
    const Identification nested = identify_nested12(t3, cot.mn, nx_c);
    const Matrix big = embedding * cot.mn.lift *
                       Matrix::kron(Matrix::identity(dn, p), x.right_side.rho_raw()) *
                       t3.project * nested.from;
    const TensorProduct wc = tensor_over(module, c.carrier());
    const Matrix incl = wc.lift * Matrix::kron(embedding, Matrix::identity(dc, p)) * nx_c.project;
    Matrix rho(embedding.rows(), wc.dim(), p);
    for (std::size_t r = 0; r < rho.rows(); ++r) {
        std::optional<Matrix> y = solve_linear(incl, big.row(r));
        if (!y) throw std::logic_error("cotensor coaction left the cotensor product");
        rho.set_row(r, *y);
    }
    Comodule comodule(c, module, std::move(rho));
    return {x, std::move(cot), std::move(module), embedding, std::move(comodule)};
}

AdInduction ad_induction(const CoringMorphism& phi, const Comodule& n) {
    return cotensor_comodule(n, bicomodule_induced(phi));
}

Matrix ad_induction_on_map(const AdInduction& a, const AdInduction& b, const Matrix& f) {
    const std::uint32_t p = f.characteristic();
    const Matrix id_x = Matrix::identity(a.cot.mn.n_dim, p);
    const Matrix moved = a.embedding * a.cot.mn.lift * Matrix::kron(f, id_x) * b.cot.mn.project;
    Matrix out(moved.rows(), b.embedding.rows(), p);
    for (std::size_t r = 0; r < moved.rows(); ++r)
        out.set_row(r, coords_or_throw(b.cot.kernel, moved.row(r),
                                       "image left the cotensor product"));
    return out;
}

std::vector<std::string> InductionContext::validate() const {
    std::vector<std::string> errors;
    for (const std::string& e : t.validate(base_a)) errors.push_back("source ring: " + e);
    for (const std::string& e : s.validate(base_b)) errors.push_back("target ring: " + e);
    for (const std::string& e : beta.validate(base_a, base_b))
        errors.push_back("base morphism: " + e);
    for (const std::string& e : xi.validate(s.alg, t.alg))
        errors.push_back("ring morphism: " + e);
    if (errors.empty() && beta.map * s.unit_map.map * xi.map != t.unit_map.map)
        errors.push_back("unit square does not commute");
    return errors;
}

InducedModule induced_module_functor(const InductionContext& ctx, const Bimodule& m) {
    const std::uint32_t p = m.characteristic();
    const Bimodule m_a = restrict_right(m, ctx.t.unit_map, ctx.base_a);
    const Bimodule b_ab = restrict_left(Bimodule::regular(ctx.base_b), ctx.beta, ctx.base_a);
    TensorProduct tp = tensor_over(m_a, b_ab);
    const Matrix id_b = Matrix::identity(ctx.base_b.dim(), p);
    std::vector<Matrix> ract;
    for (std::size_t r = 0; r < ctx.s.alg.dim(); ++r)
        ract.push_back(descend(tp,
                               Matrix::kron(m.act_right(ctx.xi.map.row(r)), id_b) * tp.project,
                               "induced action is not balanced"));
    Bimodule module = Bimodule::right_module(ctx.s.alg, tp.dim(), std::move(ract));
    return {std::move(tp), std::move(module)};
}

HomModule hom_module_functor(const InductionContext& ctx, const Bimodule& n) {
    InducedModule tb = induced_module_functor(ctx, Bimodule::regular(ctx.t.alg));
    const std::size_t q = tb.tensor.dim();
    std::vector<Matrix> left_t;
    for (std::size_t k = 0; k < ctx.t.alg.dim(); ++k)
        left_t.push_back(tb.tensor.module.left_action(k));
    std::vector<Matrix> ract_s;
    for (std::size_t r = 0; r < ctx.s.alg.dim(); ++r)
        ract_s.push_back(tb.module.right_action(r));
    Bimodule tb_bimodule(ctx.t.alg, ctx.s.alg, q, left_t, std::move(ract_s));

    HomSpace maps = hom_space(tb.module, n, Side::right);
    const std::uint32_t p = n.characteristic();
    std::vector<Matrix> ract_t;
    for (std::size_t k = 0; k < ctx.t.alg.dim(); ++k) {
        Matrix act(maps.dim(), maps.dim(), p);
        for (std::size_t j = 0; j < maps.dim(); ++j)
            act.set_row(j, coords_or_throw(maps, left_t[k] * maps.map_at(j),
                                           "hom action is not right linear"));
        ract_t.push_back(std::move(act));
    }
    Bimodule module = Bimodule::right_module(ctx.t.alg, maps.dim(), std::move(ract_t));
    return {std::move(tb), std::move(left_t), std::move(tb_bimodule), std::move(maps),
            std::move(module)};
}

CoindGeneral coind_general(const InductionContext& ctx, const Bimodule& k, const Bimodule& l,
                           const Bimodule& n) {
    InducedModule kb = induced_module_functor(ctx, k);
    if (!subgenerated_check(kb.module, l))
        throw std::invalid_argument("the induced module is not subgenerated by the bound");
    if (!subgenerated_check(n, l))
        throw std::invalid_argument("the argument is not subgenerated by the bound");
    HomModule hom = hom_module_functor(ctx, n);
    Subspace subspace = trace_sp(k, hom.module);
    Bimodule module = submodule(hom.module, subspace);
    Matrix embedding = subspace.basis();
    return {std::move(hom), std::move(subspace), std::move(module), std::move(embedding)};
}

GeneralAdjunction verify_adjunction_general(const InductionContext& ctx, const Bimodule& k,
                                            const Bimodule& l, const Bimodule& m,
                                            const Bimodule& n) {
    if (!subgenerated_check(m, k))
        throw std::invalid_argument("the module is not subgenerated by the trace class");
    CoindGeneral cg = coind_general(ctx, k, l, n);
    InducedModule im = induced_module_functor(ctx, m);
    const std::uint32_t p = m.characteristic();
    const std::size_t dm = m.dim();
    const std::size_t db = ctx.base_b.dim();
    const std::size_t dt = ctx.t.alg.dim();
    const std::size_t qtb = cg.hom.tb.tensor.dim();

    HomSpace hom_s = hom_space(im.module, n, Side::right);
    const TensorProduct mtb = tensor_over(m, cg.hom.tb_bimodule);
    HomSpace hom_mid = hom_space(mtb.module, n, Side::right);

    // mu: M (x)_T (T (x)_A B) -> M (x)_A B, m (x) t (x) b -> m.t (x) b.
    Matrix raw_mu(dm * qtb, dm * db, p);
    for (std::size_t u = 0; u < qtb; ++u) {
        const Matrix rep = cg.hom.tb.tensor.lift.row(u).unflatten(dt, db);
        for (std::size_t i = 0; i < dm; ++i) {
            Matrix row(1, dm * db, p);
            for (std::size_t v = 0; v < dt; ++v)
                row = row + Matrix::kron(m.right_action(v).row(i), rep.row(v));
            raw_mu.set_row(i * qtb + u, row);
        }
    }
    const Matrix mu = descend(mtb, raw_mu * im.tensor.project, "comparison map is not balanced");

    Matrix s1(hom_s.dim(), hom_mid.dim(), p);
    for (std::size_t w = 0; w < hom_s.dim(); ++w)
        s1.set_row(w, coords_or_throw(hom_mid, mu * hom_s.map_at(w),
                                      "precomposition is not right linear"));

    std::vector<Matrix> ins;
    for (std::size_t i = 0; i < dm; ++i)
        ins.push_back(Matrix::kron(Matrix::row_unit(dm, i, p), Matrix::identity(qtb, p)) *
                      mtb.project);
    HomSpace hom_inner = hom_space(m, cg.hom.module, Side::right);
    Matrix s2(hom_mid.dim(), hom_inner.dim(), p);
    for (std::size_t v = 0; v < hom_mid.dim(); ++v) {
        Matrix z(dm, cg.hom.maps.dim(), p);
        for (std::size_t i = 0; i < dm; ++i)
            z.set_row(i, coords_or_throw(cg.hom.maps, ins[i] * hom_mid.map_at(v),
                                         "curried map is not right linear"));
        s2.set_row(v, coords_or_throw(hom_inner, z, "currying is not left linear over the ring"));
    }

    HomSpace hom_t = hom_space(m, cg.module, Side::right);
    Matrix s3(hom_inner.dim(), hom_t.dim(), p);
    for (std::size_t w = 0; w < hom_inner.dim(); ++w) {
        const Matrix f = hom_inner.map_at(w);
        Matrix g(dm, cg.subspace.dim(), p);
        for (std::size_t i = 0; i < dm; ++i)
            g.set_row(i, coords_or_throw(cg.subspace, f.row(i), "image escapes the trace"));
        s3.set_row(w, coords_or_throw(hom_t, g, "trace restriction is not right linear"));
    }
    const Matrix chain = s1 * s2 * s3;

    // One-shot currying f -> (m -> (t (x) b -> f(m.t (x) b))).
    std::vector<Matrix> slot;
    for (std::size_t i = 0; i < dm; ++i) {
        Matrix raw(dt * db, dm * db, p);
        for (std::size_t v = 0; v < dt; ++v)
            for (std::size_t u = 0; u < db; ++u)
                raw.set_row(v * db + u, Matrix::kron(m.right_action(v).row(i),
                                                     Matrix::row_unit(db, u, p)));
        slot.push_back(descend(cg.hom.tb.tensor, raw * im.tensor.project,
                               "direct comparison is not balanced"));
    }
    Matrix direct(hom_s.dim(), hom_t.dim(), p);
    for (std::size_t w = 0; w < hom_s.dim(); ++w) {
        const Matrix f = hom_s.map_at(w);
        Matrix g(dm, cg.subspace.dim(), p);
        for (std::size_t i = 0; i < dm; ++i) {
            const Matrix coords = coords_or_throw(cg.hom.maps, slot[i] * f,
                                                  "direct image is not right linear");
            g.set_row(i, coords_or_throw(cg.subspace, coords, "direct image escapes the trace"));
        }
        direct.set_row(w, coords_or_throw(hom_t, g, "direct currying is not right linear"));
    }

    const bool agree = chain == direct;
    const bool bijective = hom_s.dim() == hom_t.dim() && rank(direct) == hom_s.dim();
    return {std::move(im), std::move(cg), std::move(hom_s), std::move(hom_t), chain, direct,
            agree, bijective};
}

std::vector<std::string> validate_pairing_morphism(const PairingMorphism& pm) {
    std::vector<std::string> errors;
    for (const std::string& e : validate_coring_morphism(pm.phi))
        errors.push_back("coring morphism: " + e);
    for (const std::string& e : pm.xi.validate(pm.q.ring.alg, pm.p.ring.alg))
        errors.push_back("ring morphism: " + e);
    if (!errors.empty()) return errors;
    if (pm.phi.beta.map * pm.q.ring.unit_map.map * pm.xi.map != pm.p.ring.unit_map.map)
        errors.push_back("ring unit square does not commute");
    for (std::size_t s = 0; s < pm.q.ring.alg.dim(); ++s) {
        const Matrix lhs = pm.phi.theta * pm.q.evaluation(s);
        const Matrix rhs =
            pm.p.dual.map_from_coords(pm.xi.map.row(s) * pm.p.kappa.map) * pm.phi.beta.map;
        if (lhs != rhs)
            errors.push_back("pairing axiom fails at ring basis vector " + std::to_string(s));
    }
    return errors;
}

InductionContext induction_context(const PairingMorphism& pm) {
    return {pm.p.coring.base(), pm.q.coring.base(), pm.phi.beta, pm.p.ring, pm.q.ring, pm.xi};
}

CoindComodule coind_measuring(const PairingMorphism& pm, const Comodule& n) {
    std::vector<std::string> errors = validate_pairing_morphism(pm);
    if (!errors.empty()) throw std::invalid_argument(errors.front());
    if (!pm.p.alpha_flag)
        throw std::invalid_argument("the source pairing does not satisfy the alpha condition");
    const Bimodule n_mod = module_from_comodule(pm.q, n);
    HomModule hom = hom_module_functor(induction_context(pm), n_mod);
    RationalPart rat = rat_functor(pm.p, hom.module);
    Comodule comodule = rat.comodule;
    return {std::move(hom), std::move(rat), std::move(comodule)};
}

CoindCompatible coind_compatible(const CoringMorphism& phi, const Comodule& n) {
    SharpSpaces sharp = sharp_spaces(phi);
    if (!sharp.compatible)
        throw std::invalid_argument("precomposition with theta does not land in the beta image");
    const MeasuringPairing pc = canonical_pairing(phi.source);
    const MeasuringPairing pd = canonical_pairing(phi.target);
    if (!pc.alpha_flag || !pd.alpha_flag)
        throw std::invalid_argument("a canonical pairing does not satisfy the alpha condition");
    Bimodule lower = lower_sharp_module(sharp);
    const Bimodule n_mod = module_from_comodule(pd, n);
    HomSpace maps = hom_space(lower, n_mod, Side::right);
    const std::vector<Matrix> lact = lower_left_action(sharp);
    const std::uint32_t p = phi.source.characteristic();
    std::vector<Matrix> ract;
    for (const Matrix& op : lact) {
        Matrix act(maps.dim(), maps.dim(), p);
        for (std::size_t j = 0; j < maps.dim(); ++j)
            act.set_row(j, coords_or_throw(maps, op * maps.map_at(j),
                                           "hom action is not right linear"));
        ract.push_back(std::move(act));
    }
    Bimodule hom_module = Bimodule::right_module(pc.ring.alg, maps.dim(), std::move(ract));
    RationalPart rat = rat_functor(pc, hom_module);
    Comodule comodule = rat.comodule;
    return {std::move(sharp), std::move(lower), std::move(maps), std::move(hom_module),
            std::move(rat), std::move(comodule)};
}

Matrix coind_compatible_on_map(const CoindCompatible& a, const CoindCompatible& b,
                               const Matrix& f) {
    const std::uint32_t p = f.characteristic();
    Matrix out(a.rat.subspace.dim(), b.rat.subspace.dim(), p);
    for (std::size_t r = 0; r < out.rows(); ++r) {
        const Matrix g = a.maps.map_from_coords(a.rat.embedding.row(r));
        const Matrix coords = coords_or_throw(b.maps, g * f,
                                              "transported map is not right linear");
        out.set_row(r, coords_or_throw(b.rat.subspace, coords, "image left the rational part"));
    }
    return out;
}

AdjunctionContext adjunction_context(const CoringMorphism& phi, const Comodule& m,
                                     const Comodule& n) {
    return {phi, m, n, induction(phi, m), coind_compatible(phi, n)};
}

Matrix adjunction_phi(const AdjunctionContext& ctx, const Matrix& kappa) {
    const std::uint32_t p = ctx.phi.source.characteristic();
    const std::size_t dm = ctx.m.dim();
    const std::size_t dc = ctx.phi.source.dim();
    const Subspace& img = ctx.coind.sharp.img_beta;
    std::vector<Matrix> rep;
    for (std::size_t v = 0; v < img.dim(); ++v)
        rep.push_back(ctx.coind.sharp.maps.map_from_coords(img.basis().row(v)));
    const Matrix rho_raw = ctx.m.rho_raw();
    Matrix out(dm, ctx.coind.rat.subspace.dim(), p);
    for (std::size_t i = 0; i < dm; ++i) {
        const Matrix r_i = rho_raw.row(i).unflatten(dm, dc);
        Matrix g(img.dim(), kappa.cols(), p);
        for (std::size_t v = 0; v < img.dim(); ++v)
            g.set_row(v, (r_i * rep[v]).flatten() * ctx.induced.tensor.project * kappa);
        const Matrix coords = coords_or_throw(ctx.coind.maps, g,
                                              "adjunction image is not right linear");
        out.set_row(i, coords_or_throw(ctx.coind.rat.subspace, coords,
                                       "adjunction image left the rational part"));
    }
    return out;
}

Matrix adjunction_psi(const AdjunctionContext& ctx, const Matrix& zeta) {
    const std::uint32_t p = ctx.phi.source.characteristic();
    const std::size_t dm = ctx.m.dim();
    const std::size_t db = ctx.phi.target.base().dim();
    const Matrix collapsed = ctx.phi.source.eps() * ctx.phi.beta.map;
    const Matrix unit_coords = coords_or_throw(ctx.coind.sharp.maps, collapsed,
                                               "the collapsed counit is not left linear");
    const Matrix unit_lower = coords_or_throw(ctx.coind.sharp.img_beta, unit_coords,
                                              "the collapsed counit left the beta image");
    Matrix raw(dm * db, ctx.n.dim(), p);
    for (std::size_t i = 0; i < dm; ++i) {
        const Matrix f_i =
            ctx.coind.maps.map_from_coords(zeta.row(i) * ctx.coind.rat.embedding);
        const Matrix v_i = unit_lower * f_i;
        for (std::size_t u = 0; u < db; ++u)
            raw.set_row(i * db + u, v_i * ctx.n.carrier().right_action(u));
    }
    return descend(ctx.induced.tensor, raw, "psi output is not balanced");
}

AdjunctionWitness adjunction_witness(const AdjunctionContext& ctx) {
    HomSpace hom_d = hom_colinear(ctx.induced.comodule, ctx.n);
    HomSpace hom_c = hom_colinear(ctx.m, ctx.coind.comodule);
    const std::uint32_t p = ctx.phi.source.characteristic();
    Matrix forward(hom_d.dim(), hom_c.dim(), p);
    bool forward_ok = true;
    for (std::size_t w = 0; w < hom_d.dim(); ++w) {
        std::optional<Matrix> coords = hom_c.coords_of_map(adjunction_phi(ctx, hom_d.map_at(w)));
        if (!coords) { forward_ok = false; continue; }
        forward.set_row(w, *coords);
    }
    Matrix backward(hom_c.dim(), hom_d.dim(), p);
    bool backward_ok = true;
    for (std::size_t v = 0; v < hom_c.dim(); ++v) {
        std::optional<Matrix> coords = hom_d.coords_of_map(adjunction_psi(ctx, hom_c.map_at(v)));
        if (!coords) { backward_ok = false; continue; }
        backward.set_row(v, *coords);
    }
    const bool inverse = forward_ok && backward_ok &&
                         forward * backward == Matrix::identity(hom_d.dim(), p) &&
                         backward * forward == Matrix::identity(hom_c.dim(), p);
    return {std::move(hom_d), std::move(hom_c), forward, backward, forward_ok, backward_ok,
            inverse};
}

AdAdjunctionContext ad_adjunction_context(const CoringMorphism& phi, const Comodule& m,
                                          const Comodule& n) {
    return {phi, m, n, induction(phi, m), ad_induction(phi, n)};
}

Matrix ad_forward(const AdAdjunctionContext& ctx, const Matrix& f) {
    const std::uint32_t p = ctx.phi.source.characteristic();
    const std::size_t dm = ctx.m.dim();
    const std::size_t dc = ctx.phi.source.dim();
    const Matrix slice =
        insert_unit_right(dm, ctx.phi.target.base()) * ctx.induced.tensor.project * f;
    const Matrix rho_raw = ctx.m.rho_raw();
    Matrix out(dm, ctx.ad.embedding.rows(), p);
    for (std::size_t i = 0; i < dm; ++i) {
        const Matrix r_i = rho_raw.row(i).unflatten(dm, dc);
        const Matrix image = (slice.transpose() * r_i * ctx.ad.bicomodule.unit_embed).flatten() *
                             ctx.ad.cot.mn.project;
        out.set_row(i, coords_or_throw(ctx.ad.cot.kernel, image,
                                       "forward image left the cotensor product"));
    }
    return out;
}

Matrix ad_backward(const AdAdjunctionContext& ctx, const Matrix& g) {
    const std::uint32_t p = ctx.phi.source.characteristic();
    const std::size_t dm = ctx.m.dim();
    const std::size_t dn = ctx.n.dim();
    const std::size_t qx = ctx.ad.cot.mn.n_dim;
    const std::size_t db = ctx.phi.target.base().dim();
    Matrix collapse(dn * qx, dn, p);
    for (std::size_t w = 0; w < qx; ++w) {
        const Matrix act = ctx.n.carrier().act_right(ctx.ad.bicomodule.counit_collapse.row(w));
        for (std::size_t j = 0; j < dn; ++j) collapse.set_row(j * qx + w, act.row(j));
    }
    Matrix raw(dm * db, dn, p);
    for (std::size_t i = 0; i < dm; ++i) {
        const Matrix v_i = g.row(i) * ctx.ad.embedding * ctx.ad.cot.mn.lift * collapse;
        for (std::size_t u = 0; u < db; ++u)
            raw.set_row(i * db + u, v_i * ctx.n.carrier().right_action(u));
    }
    return descend(ctx.induced.tensor, raw, "backward output is not balanced");
}

AdAdjunction ad_adjunction(const AdAdjunctionContext& ctx) {
    HomSpace hom_d = hom_colinear(ctx.induced.comodule, ctx.n);
    HomSpace hom_c = hom_colinear(ctx.m, ctx.ad.comodule);
    const std::uint32_t p = ctx.phi.source.characteristic();
    Matrix forward(hom_d.dim(), hom_c.dim(), p);
    bool forward_ok = true;
    for (std::size_t w = 0; w < hom_d.dim(); ++w) {
        std::optional<Matrix> coords = hom_c.coords_of_map(ad_forward(ctx, hom_d.map_at(w)));
        if (!coords) { forward_ok = false; continue; }
        forward.set_row(w, *coords);
    }
    Matrix backward(hom_c.dim(), hom_d.dim(), p);
    bool backward_ok = true;
    for (std::size_t v = 0; v < hom_c.dim(); ++v) {
        std::optional<Matrix> coords = hom_d.coords_of_map(ad_backward(ctx, hom_c.map_at(v)));
        if (!coords) { backward_ok = false; continue; }
        backward.set_row(v, *coords);
    }
    const bool inverse = forward_ok && backward_ok &&
                         forward * backward == Matrix::identity(hom_d.dim(), p) &&
                         backward * forward == Matrix::identity(hom_c.dim(), p);
    return {std::move(hom_d), std::move(hom_c), forward, backward, forward_ok, backward_ok,
            inverse};
}

NaturalIsoReport verify_natural_iso(const CoringMorphism& phi,
                                    const std::vector<Comodule>& instances,
                                    const std::vector<ComoduleArrow>& arrows) {
    NaturalIsoReport report;
    const std::uint32_t p = phi.source.characteristic();
    std::vector<CoindCompatible> coind;
    std::vector<AdInduction> ad;
    std::vector<Matrix> tau;
    for (std::size_t idx = 0; idx < instances.size(); ++idx) {
        const Comodule& n = instances[idx];
        CoindCompatible cc = coind_compatible(phi, n);
        AdInduction ai = ad_induction(phi, n);
        InducedComodule induced = induction(phi, cc.comodule);
        const std::size_t ccdim = cc.rat.subspace.dim();
        AdjunctionContext actx{phi, cc.comodule, n, induced, cc};
        const Matrix counit = adjunction_psi(actx, Matrix::identity(ccdim, p));
        AdAdjunctionContext adctx{phi, cc.comodule, n, std::move(induced), ai};
        const Matrix t = ad_forward(adctx, counit);
        const std::string tag = "instance " + std::to_string(idx) + ": ";
        if (!hom_colinear(cc.comodule, ai.comodule).coords_of_map(t))
            report.failures.push_back(tag + "comparison map is not colinear");
        if (ccdim != ai.embedding.rows() || rank(t) != ccdim)
            report.failures.push_back(tag + "comparison map is not invertible");
        coind.push_back(std::move(cc));
        ad.push_back(std::move(ai));
        tau.push_back(t);
        ++report.instances;
    }
    for (const ComoduleArrow& arrow : arrows) {
        const std::string tag =
            "arrow " + std::to_string(arrow.from) + " -> " + std::to_string(arrow.to) + ": ";
        if (arrow.from >= instances.size() || arrow.to >= instances.size()) {
            report.failures.push_back(tag + "index out of range");
            continue;
        }
        if (!hom_colinear(instances[arrow.from], instances[arrow.to]).coords_of_map(arrow.map)) {
            report.failures.push_back(tag + "map is not colinear");
            continue;
        }
        const Matrix lhs =
            coind_compatible_on_map(coind[arrow.from], coind[arrow.to], arrow.map) *
            tau[arrow.to];
        const Matrix rhs =
            tau[arrow.from] * ad_induction_on_map(ad[arrow.from], ad[arrow.to], arrow.map);
        if (lhs != rhs) report.failures.push_back(tag + "naturality square does not commute");
        ++report.squares;
    }
    return report;
}

CenterWitness cotensor_as_center(const MeasuringPairing& q, const Comodule& m,
                                 const LeftComodule& n) {
    if (!q.alpha_flag)
        throw std::invalid_argument("the pairing does not satisfy the alpha condition");
    const Algebra& b = q.coring.base();
    const std::uint32_t p = b.characteristic();
    const std::size_t ds = q.ring.alg.dim();
    const std::size_t dd = q.coring.dim();
    const std::size_t dm = m.dim();
    const std::size_t dn = n.dim();

    std::vector<Matrix> eval;
    for (std::size_t k = 0; k < ds; ++k) eval.push_back(q.evaluation(k));
    for (std::size_t k = 0; k < ds; ++k)
        for (std::size_t u = 0; u < b.dim(); ++u)
            if (q.coring.carrier().right_action(u) * eval[k] !=
                eval[k] * b.right_mult_matrix(Matrix::row_unit(b.dim(), u, p)))
                throw std::invalid_argument("evaluation against the ring is not right linear");

    const TensorProduct mn = tensor_over(m.carrier(), n.carrier());
    const Bimodule m_mod = module_from_comodule(q, m);
    const Matrix rho_n = n.rho_raw();
    const Matrix id_m = Matrix::identity(dm, p);
    const Matrix id_n = Matrix::identity(dn, p);
    std::vector<Matrix> lop, rop;
    for (std::size_t k = 0; k < ds; ++k) {
        lop.push_back(descend(mn, Matrix::kron(m_mod.right_action(k), id_n) * mn.project,
                              "left operator is not balanced"));
        Matrix act(dn, dn, p);
        for (std::size_t i = 0; i < dn; ++i) {
            const Matrix leg = rho_n.row(i).unflatten(dd, dn);
            Matrix row(1, dn, p);
            for (std::size_t d = 0; d < dd; ++d)
                row = row + leg.row(d) * n.carrier().act_left(eval[k].row(d));
            act.set_row(i, row);
        }
        rop.push_back(descend(mn, Matrix::kron(id_m, act) * mn.project,
                              "right operator is not balanced"));
    }

    Matrix stacked = lop[0] - rop[0];
    for (std::size_t k = 1; k < ds; ++k) stacked = Matrix::hstack(stacked, lop[k] - rop[k]);
    Subspace center = Subspace::from_spanning(kernel_basis(stacked));

    CotensorResult cot = cotensor(m, n);
    const bool subspaces_equal = center == cot.kernel;

    const Algebra s_op = q.ring.alg.opposite();
    Bimodule op_bimodule(s_op, s_op, mn.dim(), lop, rop);
    HomSpace hom = hom_space(Bimodule::regular(s_op), op_bimodule, Side::both);

    Matrix gamma(center.dim(), hom.dim(), p);
    bool gamma_total = true;
    for (std::size_t r = 0; r < center.dim(); ++r) {
        Matrix g(ds, mn.dim(), p);
        for (std::size_t k = 0; k < ds; ++k) g.set_row(k, center.basis().row(r) * lop[k]);
        std::optional<Matrix> coords = hom.coords_of_map(g);
        if (!coords) { gamma_total = false; continue; }
        gamma.set_row(r, *coords);
    }
    Matrix beta_inv(hom.dim(), center.dim(), p);
    bool beta_total = true;
    for (std::size_t w = 0; w < hom.dim(); ++w) {
        std::optional<Matrix> coords = center.coords_of(s_op.unit() * hom.map_at(w));
        if (!coords) { beta_total = false; continue; }
        beta_inv.set_row(w, *coords);
    }
    const bool inverse = gamma_total && beta_total &&
                         gamma * beta_inv == Matrix::identity(center.dim(), p) &&
                         beta_inv * gamma == Matrix::identity(hom.dim(), p);
    return {std::move(cot), std::move(center), subspaces_equal, std::move(op_bimodule),
            std::move(hom), gamma, beta_inv, gamma_total, beta_total, inverse};
}

} // namespace coringlab
