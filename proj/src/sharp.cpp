#include "coringlab/sharp.hpp"

#include <stdexcept>

namespace coringlab {

namespace {

// c |-> sum c1 f(c2) as a matrix on the carrier of c, for f: C -> A.
Matrix sweep_right(const Coring& c, const Matrix& f) {
    const std::size_t d = c.dim();
    const Matrix draw = c.delta_raw();
    Matrix out(d, d, c.characteristic());
    for (std::size_t i = 0; i < d; ++i) {
        Matrix acc(1, d, c.characteristic());
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                const std::uint32_t coeff = draw.at(i, j * d + k);
                if (!coeff) continue;
                acc = acc + c.carrier().act_right(f.row(k)).row(j).scaled(coeff);
            }
        out.set_row(i, acc);
    }
    return out;
}

// c |-> (h <- g)(c) = sum g(theta(c1) h(c2)) for h: C -> B, g: D -> B.
Matrix sweep_theta(const CoringMorphism& phi, const Matrix& h, const Matrix& g) {
    const Coring& c = phi.source;
    const Bimodule& dcar = phi.target.carrier();
    const std::size_t d = c.dim();
    const Matrix draw = c.delta_raw();
    Matrix out(d, g.cols(), c.characteristic());
    for (std::size_t i = 0; i < d; ++i) {
        Matrix acc(1, g.cols(), c.characteristic());
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                const std::uint32_t coeff = draw.at(i, j * d + k);
                if (!coeff) continue;
                const Matrix prod = phi.theta.row(j) * dcar.act_right(h.row(k));
                acc = acc + (prod * g).scaled(coeff);
            }
        out.set_row(i, acc);
    }
    return out;
}

} // namespace

Matrix SharpSpaces::act_left(const Matrix& f_coords, const Matrix& h_coords) const {
    Matrix out(1, maps.dim(), maps.space.characteristic());
    for (std::size_t r = 0; r < lact_c.size(); ++r) {
        const std::uint32_t a = f_coords.at(0, r);
        if (a) out = out + (h_coords * lact_c[r]).scaled(a);
    }
    return out;
}

Matrix SharpSpaces::act_right(const Matrix& h_coords, const Matrix& g_coords) const {
    Matrix out(1, maps.dim(), maps.space.characteristic());
    for (std::size_t r = 0; r < ract_d.size(); ++r) {
        const std::uint32_t a = g_coords.at(0, r);
        if (a) out = out + (h_coords * ract_d[r]).scaled(a);
    }
    return out;
}

SharpSpaces sharp_spaces(const CoringMorphism& phi) {
    SharpSpaces s;
    s.phi = phi;
    s.dual_c = dual_ring(phi.source, DualSide::left);
    s.dual_d = dual_ring(phi.target, DualSide::left);

    const Algebra& a = phi.source.base();
    const Algebra& b = phi.target.base();
    const Bimodule src = phi.source.carrier().as_left_module();
    const Bimodule dst = restrict_left(Bimodule::regular(b), phi.beta, a).as_left_module();
    s.maps = hom_space(src, dst, Side::left);
    const std::size_t h = s.maps.dim();

    auto coords = [&s](const Matrix& m) {
        auto c = s.maps.coords_of_map(m);
        if (!c) throw std::logic_error("action left the left-linear dual space");
        return *c;
    };

    s.lact_c.reserve(s.dual_c.maps.dim());
    for (std::size_t r = 0; r < s.dual_c.maps.dim(); ++r) {
        const Matrix sweep = sweep_right(phi.source, s.dual_c.map_at(r));
        Matrix act(h, h, s.maps.space.characteristic());
        for (std::size_t j = 0; j < h; ++j)
            act.set_row(j, coords(sweep * s.maps.map_at(j)));
        s.lact_c.push_back(std::move(act));
    }
    s.ract_d.reserve(s.dual_d.maps.dim());
    for (std::size_t r = 0; r < s.dual_d.maps.dim(); ++r) {
        Matrix act(h, h, s.maps.space.characteristic());
        for (std::size_t j = 0; j < h; ++j)
            act.set_row(j, coords(sweep_theta(phi, s.maps.map_at(j), s.dual_d.map_at(r))));
        s.ract_d.push_back(std::move(act));
    }

    s.beta_into = Matrix(s.dual_c.maps.dim(), h, s.maps.space.characteristic());
    for (std::size_t r = 0; r < s.dual_c.maps.dim(); ++r)
        s.beta_into.set_row(r, coords(s.dual_c.map_at(r) * phi.beta.map));
    s.theta_into = Matrix(s.dual_d.maps.dim(), h, s.maps.space.characteristic());
    for (std::size_t r = 0; r < s.dual_d.maps.dim(); ++r)
        s.theta_into.set_row(r, coords(phi.theta * s.dual_d.map_at(r)));

    s.img_beta = Subspace::image(s.beta_into);
    s.img_theta = Subspace::image(s.theta_into);
    s.compatible = s.img_beta.contains(s.img_theta);

    const Matrix unit_beta = coords(phi.source.eps() * phi.beta.map);
    Matrix orbit_left(s.lact_c.size(), h, s.maps.space.characteristic());
    for (std::size_t r = 0; r < s.lact_c.size(); ++r)
        orbit_left.set_row(r, unit_beta * s.lact_c[r]);
    s.cyclic_left = Subspace::from_spanning(orbit_left) == s.img_beta;

    const Matrix unit_theta = coords(phi.theta * phi.target.eps());
    Matrix orbit_right(s.ract_d.size(), h, s.maps.space.characteristic());
    for (std::size_t r = 0; r < s.ract_d.size(); ++r)
        orbit_right.set_row(r, unit_theta * s.ract_d[r]);
    s.cyclic_right = Subspace::from_spanning(orbit_right) == s.img_theta;

    return s;
}

SharpRing sharp_ring(const SharpSpaces& s) {
    SharpRing out;
    const std::uint32_t p = s.maps.space.characteristic();
    const std::size_t dc = s.dual_c.maps.dim();

    // Ambiguity witness: a kernel element of beta o - whose one-sided
    // convolution products escape the kernel.
    const Matrix ker = kernel_basis(s.beta_into);
    for (std::size_t i = 0; i < ker.rows(); ++i)
        for (std::size_t j = 0; j < dc; ++j) {
            const Matrix e = Matrix::row_unit(dc, j, p);
            if (!(s.dual_c.alg.multiply(ker.row(i), e) * s.beta_into).is_zero()) {
                out.witness = {ker.row(i), e};
                return out;
            }
            if (!(s.dual_c.alg.multiply(e, ker.row(i)) * s.beta_into).is_zero()) {
                out.witness = {e, ker.row(i)};
                return out;
            }
        }
    out.well_defined = true;

    const std::size_t q = s.img_beta.dim();
    auto lower = [&s](const Matrix& v) {
        auto c = s.img_beta.coords_of(v);
        if (!c) throw std::logic_error("convolution product left the beta image");
        return *c;
    };
    std::vector<Matrix> reps;
    reps.reserve(q);
    for (std::size_t v = 0; v < q; ++v) {
        auto r = solve_linear(s.beta_into, s.img_beta.basis().row(v));
        if (!r) throw std::logic_error("beta image basis vector has no representative");
        reps.push_back(*r);
    }
    Matrix table(q * q, q, p);
    for (std::size_t u = 0; u < q; ++u)
        for (std::size_t v = 0; v < q; ++v)
            table.set_row(u * q + v,
                          lower(s.dual_c.alg.multiply(reps[u], reps[v]) * s.beta_into));
    out.unit_coords = lower(s.dual_c.alg.unit() * s.beta_into);
    out.alg = Algebra(p, q, std::move(table), out.unit_coords);
    return out;
}

Bimodule lower_sharp_module(const SharpSpaces& s) {
    if (!s.compatible)
        throw std::invalid_argument(
            "the beta image is a right module over the target dual only for a "
            "compatible morphism");
    const std::size_t q = s.img_beta.dim();
    std::vector<Matrix> ract;
    ract.reserve(s.ract_d.size());
    for (const Matrix& act : s.ract_d) {
        Matrix m(q, q, s.maps.space.characteristic());
        for (std::size_t v = 0; v < q; ++v) {
            auto c = s.img_beta.coords_of(s.img_beta.basis().row(v) * act);
            if (!c) throw std::logic_error("right dual action left the beta image");
            m.set_row(v, *c);
        }
        ract.push_back(std::move(m));
    }
    return Bimodule::right_module(s.dual_d.alg, q, std::move(ract));
}

std::vector<Matrix> lower_left_action(const SharpSpaces& s) {
    const std::size_t q = s.img_beta.dim();
    std::vector<Matrix> lact;
    lact.reserve(s.lact_c.size());
    for (const Matrix& act : s.lact_c) {
        Matrix m(q, q, s.maps.space.characteristic());
        for (std::size_t v = 0; v < q; ++v) {
            auto c = s.img_beta.coords_of(s.img_beta.basis().row(v) * act);
            if (!c) throw std::logic_error("left dual action left the beta image");
            m.set_row(v, *c);
        }
        lact.push_back(std::move(m));
    }
    return lact;
}

} // namespace coringlab
