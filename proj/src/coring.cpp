#include "coringlab/coring.hpp"

#include <stdexcept>

#include "coringlab/linalg.hpp"

namespace coringlab {

Coring Coring::from_raw_delta(Bimodule carrier, const Matrix& delta_raw, Matrix eps) {
    if (!carrier.left_algebra().same_presentation(carrier.right_algebra()))
        throw std::invalid_argument("coring carrier must be a bimodule over one algebra");
    Coring c;
    c.square_ = tensor_over(carrier, carrier);
    if (delta_raw.rows() != carrier.dim() || delta_raw.cols() != carrier.dim() * carrier.dim())
        throw std::invalid_argument("comultiplication rows must live in the raw tensor grid");
    if (eps.rows() != carrier.dim() || eps.cols() != carrier.left_algebra().dim())
        throw std::invalid_argument("counit must map into the base algebra");
    c.delta_ = delta_raw * c.square_.project;
    c.eps_ = std::move(eps);
    c.carrier_ = std::move(carrier);
    return c;
}

Coring Coring::trivial(const Algebra& a) {
    Bimodule reg = Bimodule::regular(a);
    Matrix delta_raw = insert_unit_left(a, a.dim());
    return from_raw_delta(std::move(reg), delta_raw, Matrix::identity(a.dim(), a.characteristic()));
}

std::vector<std::string> Coring::validate() const {
    std::vector<std::string> issues = carrier_.validate();
    const Algebra& a = base();
    const std::size_t d = dim();
    const Matrix id_c = Matrix::identity(d, characteristic());

    for (std::size_t k = 0; k < a.dim(); ++k) {
        Matrix e = Matrix::row_unit(a.dim(), k, characteristic());
        if (carrier_.left_action(k) * delta_ != delta_ * square_.module.left_action(k))
            issues.push_back("comultiplication is not left linear at base element " + std::to_string(k));
        if (carrier_.right_action(k) * delta_ != delta_ * square_.module.right_action(k))
            issues.push_back("comultiplication is not right linear at base element " + std::to_string(k));
        if (carrier_.left_action(k) * eps_ != eps_ * a.left_mult_matrix(e))
            issues.push_back("counit is not left linear at base element " + std::to_string(k));
        if (carrier_.right_action(k) * eps_ != eps_ * a.right_mult_matrix(e))
            issues.push_back("counit is not right linear at base element " + std::to_string(k));
    }

    TripleTensor t3 = triple_tensor(carrier_, carrier_, carrier_);
    Matrix dr = delta_raw();
    Matrix route_first = delta_ * square_.lift * Matrix::kron(dr, id_c) * t3.project;
    Matrix route_second = delta_ * square_.lift * Matrix::kron(id_c, dr) * t3.project;
    for (std::size_t i = 0; i < d; ++i)
        if (route_first.row(i) != route_second.row(i)) {
            issues.push_back("comultiplication is not coassociative at basis vector " +
                             std::to_string(i));
            break;
        }

    Matrix left_tri = delta_ * square_.lift * Matrix::kron(eps_, id_c) * collapse_left_action(carrier_);
    for (std::size_t i = 0; i < d; ++i)
        if (left_tri.row(i) != id_c.row(i)) {
            issues.push_back("left counit triangle fails at basis vector " + std::to_string(i));
            break;
        }
    Matrix right_tri = delta_ * square_.lift * Matrix::kron(id_c, eps_) * collapse_right_action(carrier_);
    for (std::size_t i = 0; i < d; ++i)
        if (right_tri.row(i) != id_c.row(i)) {
            issues.push_back("right counit triangle fails at basis vector " + std::to_string(i));
            break;
        }
    return issues;
}

namespace {

Matrix convolution_product(const Coring& c, const Matrix& f, const Matrix& g, DualSide side) {
    // f and g are dim C x dim A maps; the result is the convolution f * g,
    // where the product follows the side convention of the dual.
    const std::uint32_t p = c.characteristic();
    const std::size_t d = c.dim(), da = c.base().dim();
    Matrix out(d, da, p);
    Matrix dr = c.delta_raw();
    for (std::size_t i = 0; i < d; ++i) {
        Matrix acc(1, da, p);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                const std::uint32_t coeff = dr.at(i, j * d + k);
                if (!coeff) continue;
                Matrix term(1, da, p);
                switch (side) {
                    case DualSide::left:
                        // (f *l g)(c) = sum g(c1 . f(c2))
                        term = (c.carrier().act_right(f.row(k)).row(j)) * g;
                        break;
                    case DualSide::right:
                        // (f *r g)(c) = sum f(g(c1) . c2)
                        term = (c.carrier().act_left(g.row(j)).row(k)) * f;
                        break;
                    case DualSide::bilinear:
                        // (f * g)(c) = sum g(c1) f(c2) in A
                        term = c.base().multiply(g.row(j), f.row(k));
                        break;
                }
                acc = acc + term.scaled(coeff);
            }
        out.set_row(i, acc);
    }
    return out;
}

} // namespace

DualRing dual_ring(const Coring& c, DualSide side) {
    Bimodule reg = Bimodule::regular(c.base());
    HomSpace maps;
    switch (side) {
        case DualSide::left:
            maps = hom_space(c.carrier().as_left_module(), reg.as_left_module(), Side::left);
            break;
        case DualSide::right:
            maps = hom_space(c.carrier().as_right_module(), reg.as_right_module(), Side::right);
            break;
        case DualSide::bilinear:
            maps = hom_space(c.carrier(), reg, Side::both);
            break;
    }
    const std::size_t n = maps.dim();
    Matrix table(n * n, n, c.characteristic());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
            Matrix prod = convolution_product(c, maps.map_at(r), maps.map_at(s), side);
            auto coords = maps.coords_of_map(prod);
            if (!coords) throw std::logic_error("convolution left the dual subspace");
            table.set_row(r * n + s, *coords);
        }
    auto unit = maps.coords_of_map(c.eps());
    if (!unit) throw std::logic_error("counit is missing from the dual subspace");
    DualRing out;
    out.side = side;
    out.alg = Algebra(c.characteristic(), n, std::move(table), *unit);
    out.maps = std::move(maps);
    return out;
}

AlgebraMorphism dual_unit_morphism(const Coring& c, const DualRing& dual) {
    if (dual.side != DualSide::left)
        throw std::invalid_argument("the canonical unit morphism targets the left dual");
    const Algebra& a = c.base();
    Matrix map(a.dim(), dual.alg.dim(), c.characteristic());
    for (std::size_t k = 0; k < a.dim(); ++k) {
        Matrix e = Matrix::row_unit(a.dim(), k, c.characteristic());
        auto coords = dual.maps.coords_of_map(c.eps() * a.right_mult_matrix(e));
        if (!coords) throw std::logic_error("eps(-).a is missing from the left dual");
        map.set_row(k, *coords);
    }
    return {std::move(map)};
}

std::vector<std::string> validate_coring_morphism(const CoringMorphism& phi) {
    std::vector<std::string> issues;
    const Algebra& a = phi.source.base();
    const Algebra& b = phi.target.base();
    for (auto& issue : phi.beta.validate(a, b)) issues.push_back("base morphism: " + issue);
    if (phi.theta.rows() != phi.source.dim() || phi.theta.cols() != phi.target.dim()) {
        issues.push_back("structure map shape mismatch");
        return issues;
    }
    for (std::size_t k = 0; k < a.dim(); ++k) {
        Matrix ba = phi.beta.map.row(k);
        if (phi.source.carrier().left_action(k) * phi.theta !=
            phi.theta * phi.target.carrier().act_left(ba))
            issues.push_back("structure map is not left linear over the base at " + std::to_string(k));
        if (phi.source.carrier().right_action(k) * phi.theta !=
            phi.theta * phi.target.carrier().act_right(ba))
            issues.push_back("structure map is not right linear over the base at " + std::to_string(k));
    }
    if (phi.theta * phi.target.eps() != phi.source.eps() * phi.beta.map)
        issues.push_back("counits do not match along the morphism");

    Matrix via_pair = phi.source.delta() * phi.source.square().lift *
                      Matrix::kron(phi.theta, phi.theta) * phi.target.square().project;
    Matrix via_target = phi.theta * phi.target.delta();
    if (via_pair != via_target)
        issues.push_back("comultiplications do not match along the morphism");
    return issues;
}

Comodule::Comodule(Coring coring, Bimodule carrier, Matrix rho)
    : coring_(std::move(coring)), carrier_(std::move(carrier)) {
    if (!carrier_.right_algebra().same_presentation(coring_.base()))
        throw std::invalid_argument("comodule carrier must be a right module over the base");
    mc_ = tensor_over(carrier_, coring_.carrier());
    if (rho.rows() != carrier_.dim() || rho.cols() != mc_.dim())
        throw std::invalid_argument("coaction shape mismatch");
    rho_ = std::move(rho);
}

Comodule Comodule::from_raw_rho(Coring coring, Bimodule carrier, const Matrix& rho_raw) {
    TensorProduct mc = tensor_over(carrier, coring.carrier());
    return Comodule(std::move(coring), std::move(carrier), rho_raw * mc.project);
}

Comodule Comodule::regular(const Coring& c) {
    return Comodule(c, c.carrier().as_right_module(), c.delta());
}

Comodule Comodule::cofree(const Coring& c, const Bimodule& v) {
    TensorProduct vc = tensor_over(v, c.carrier());
    TensorProduct vc_c = tensor_over(vc.module, c.carrier());
    TripleTensor t3 = triple_tensor(v, c.carrier(), c.carrier());
    Identification ident = identify_nested12(t3, vc, vc_c);
    Matrix iv = Matrix::identity(v.dim(), c.characteristic());
    Matrix rho = vc.lift * Matrix::kron(iv, c.delta_raw()) * t3.project * ident.from;
    return Comodule(c, vc.module, std::move(rho));
}

std::vector<std::string> Comodule::validate() const {
    std::vector<std::string> issues = carrier_.validate();
    const Algebra& a = coring_.base();
    const std::uint32_t p = coring_.characteristic();
    const Matrix id_m = Matrix::identity(dim(), p);
    const Matrix id_c = Matrix::identity(coring_.dim(), p);
    for (std::size_t k = 0; k < a.dim(); ++k)
        if (carrier_.right_action(k) * rho_ != rho_ * mc_.module.right_action(k))
            issues.push_back("coaction is not right linear at base element " + std::to_string(k));

    TripleTensor t3 = triple_tensor(carrier_, coring_.carrier(), coring_.carrier());
    Matrix rr = rho_raw();
    Matrix route_coaction = rho_ * mc_.lift * Matrix::kron(rr, id_c) * t3.project;
    Matrix route_delta = rho_ * mc_.lift * Matrix::kron(id_m, coring_.delta_raw()) * t3.project;
    if (route_coaction != route_delta) issues.push_back("coaction is not coassociative");

    Matrix counit = rho_ * mc_.lift * Matrix::kron(id_m, coring_.eps()) *
                    collapse_right_action(carrier_);
    if (!counit.is_identity()) issues.push_back("counit law fails on the coaction");
    return issues;
}

LeftComodule::LeftComodule(Coring coring, Bimodule carrier, Matrix rho)
    : coring_(std::move(coring)), carrier_(std::move(carrier)) {
    if (!carrier_.left_algebra().same_presentation(coring_.base()))
        throw std::invalid_argument("left comodule carrier must be a left module over the base");
    cn_ = tensor_over(coring_.carrier(), carrier_);
    if (rho.rows() != carrier_.dim() || rho.cols() != cn_.dim())
        throw std::invalid_argument("coaction shape mismatch");
    rho_ = std::move(rho);
}

LeftComodule LeftComodule::from_raw_rho(Coring coring, Bimodule carrier, const Matrix& rho_raw) {
    TensorProduct cn = tensor_over(coring.carrier(), carrier);
    return LeftComodule(std::move(coring), std::move(carrier), rho_raw * cn.project);
}

LeftComodule LeftComodule::regular(const Coring& c) {
    return LeftComodule(c, c.carrier().as_left_module(), c.delta());
}

LeftComodule LeftComodule::cofree(const Coring& c, const Bimodule& v) {
    TensorProduct cv = tensor_over(c.carrier(), v);
    TensorProduct c_cv = tensor_over(c.carrier(), cv.module);
    TripleTensor t3 = triple_tensor(c.carrier(), c.carrier(), v);
    Identification ident = identify_nested23(t3, cv, c_cv);
    Matrix iv = Matrix::identity(v.dim(), c.characteristic());
    Matrix rho = cv.lift * Matrix::kron(c.delta_raw(), iv) * t3.project * ident.from;
    return LeftComodule(c, cv.module, std::move(rho));
}

std::vector<std::string> LeftComodule::validate() const {
    std::vector<std::string> issues = carrier_.validate();
    const Algebra& b = coring_.base();
    const std::uint32_t p = coring_.characteristic();
    const Matrix id_n = Matrix::identity(dim(), p);
    for (std::size_t k = 0; k < b.dim(); ++k)
        if (carrier_.left_action(k) * rho_ != rho_ * cn_.module.left_action(k))
            issues.push_back("coaction is not left linear at base element " + std::to_string(k));

    TripleTensor t3 = triple_tensor(coring_.carrier(), coring_.carrier(), carrier_);
    Matrix rr = rho_raw();
    Matrix route_delta = rho_ * cn_.lift * Matrix::kron(coring_.delta_raw(), id_n) * t3.project;
    Matrix route_coaction = rho_ * cn_.lift *
                            Matrix::kron(Matrix::identity(coring_.dim(), p), rr) * t3.project;
    if (route_delta != route_coaction) issues.push_back("coaction is not coassociative");

    Matrix counit = rho_ * cn_.lift * Matrix::kron(coring_.eps(), id_n) *
                    collapse_left_action(carrier_);
    if (!counit.is_identity()) issues.push_back("counit law fails on the coaction");
    return issues;
}

HomSpace hom_colinear(const Comodule& m, const Comodule& n) {
    if (!m.coring().same_structure(n.coring()))
        throw std::invalid_argument("colinear maps need both comodules over one coring");
    const std::uint32_t p = m.coring().characteristic();
    const std::size_t dm = m.dim(), dn = n.dim();
    const Algebra& a = m.coring().base();
    const std::size_t lin_len = a.dim() * dm * dn;
    const std::size_t col_len = dm * n.tensor_mc().dim();
    const Matrix id_c = Matrix::identity(m.coring().dim(), p);

    Matrix rows(dm * dn, lin_len + col_len, p);
    for (std::size_t r = 0; r < dm; ++r)
        for (std::size_t c = 0; c < dn; ++c) {
            Matrix e(dm, dn, p);
            e.at(r, c) = 1;
            std::size_t col = 0;
            for (std::size_t k = 0; k < a.dim(); ++k) {
                Matrix diff = m.carrier().right_action(k) * e - e * n.carrier().right_action(k);
                for (std::size_t i = 0; i < dm; ++i)
                    for (std::size_t j = 0; j < dn; ++j) rows.at(r * dn + c, col++) = diff.at(i, j);
            }
            Matrix tensored = m.tensor_mc().lift * Matrix::kron(e, id_c) * n.tensor_mc().project;
            Matrix diff = m.rho() * tensored - e * n.rho();
            for (std::size_t i = 0; i < diff.rows(); ++i)
                for (std::size_t j = 0; j < diff.cols(); ++j) rows.at(r * dn + c, col++) = diff.at(i, j);
        }
    HomSpace out;
    out.dom_dim = dm;
    out.cod_dim = dn;
    out.space = Subspace::from_spanning(kernel_basis(rows));
    return out;
}

CotensorResult cotensor(const Comodule& m, const LeftComodule& n) {
    if (!m.coring().same_structure(n.coring()))
        throw std::invalid_argument("cotensor needs both comodules over one coring");
    const std::uint32_t p = m.coring().characteristic();
    CotensorResult out;
    out.mn = tensor_over(m.carrier(), n.carrier());
    TripleTensor t3 = triple_tensor(m.carrier(), m.coring().carrier(), n.carrier());
    Matrix w1 = Matrix::kron(m.rho_raw(), Matrix::identity(n.dim(), p)) * t3.project;
    Matrix w2 = Matrix::kron(Matrix::identity(m.dim(), p), n.rho_raw()) * t3.project;
    Matrix omega_raw = w1 - w2;
    out.omega = out.mn.lift * omega_raw;
    if (out.mn.project * out.omega != omega_raw)
        throw std::logic_error("cotensor map does not descend to the balanced tensor");
    out.kernel = Subspace::from_spanning(kernel_basis(out.omega));
    return out;
}

} // namespace coringlab
