#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "coringlab/sharp.hpp"
#include "fixtures.hpp"

using namespace coringlab;
using namespace fixtures;

namespace {

// Sweedler coring of F_2 inside the upper triangular matrices, collapsed
// onto the trivial coring of F_2 x F_2 through the diagonal projection.
CoringMorphism diagonal_collapse() {
    Algebra a = upper_triangular2(2);
    Algebra b = product_field2(2);
    Matrix beta({{1, 0}, {0, 1}, {0, 0}}, 2);
    Coring c = sweedler(a);
    Matrix theta = c.eps() * beta;
    return {std::move(c), Coring::trivial(b), AlgebraMorphism{beta}, theta};
}

CoringMorphism field_extension_morphism() {
    Matrix beta({{1, 0}}, 2);
    return {Coring::trivial(Algebra::field(2)), Coring::trivial(f4()),
            AlgebraMorphism{beta}, beta};
}

// The two dual actions commute past each other and satisfy the exchange law
// (beta o f) <- g = f -> (g o theta) on all basis pairs.
void check_mixed_laws(const SharpSpaces& s) {
    for (const Matrix& l : s.lact_c)
        for (const Matrix& r : s.ract_d) CHECK(l * r == r * l);
    for (std::size_t i = 0; i < s.beta_into.rows(); ++i)
        for (std::size_t j = 0; j < s.theta_into.rows(); ++j)
            CHECK(s.beta_into.row(i) * s.ract_d[j] == s.theta_into.row(j) * s.lact_c[i]);
}

// Module laws for the two actions: -> is a left action of the source dual,
// <- a right action of the target dual, and both units act as the identity.
void check_action_laws(const SharpSpaces& s) {
    const std::uint32_t p = s.maps.space.characteristic();
    const std::size_t h = s.maps.dim();
    const std::size_t dc = s.dual_c.maps.dim();
    const std::size_t dd = s.dual_d.maps.dim();
    auto combo = [&](const std::vector<Matrix>& acts, const Matrix& coords) {
        Matrix out(h, h, p);
        for (std::size_t r = 0; r < acts.size(); ++r)
            if (coords.at(0, r)) out = out + acts[r].scaled(coords.at(0, r));
        return out;
    };
    for (std::size_t u = 0; u < dc; ++u)
        for (std::size_t v = 0; v < dc; ++v) {
            const Matrix prod = s.dual_c.alg.basis_product(u, v);
            CHECK(combo(s.lact_c, prod) == s.lact_c[v] * s.lact_c[u]);
        }
    for (std::size_t u = 0; u < dd; ++u)
        for (std::size_t v = 0; v < dd; ++v) {
            const Matrix prod = s.dual_d.alg.basis_product(u, v);
            CHECK(combo(s.ract_d, prod) == s.ract_d[u] * s.ract_d[v]);
        }
    CHECK(combo(s.lact_c, s.dual_c.alg.unit()).is_identity());
    CHECK(combo(s.ract_d, s.dual_d.alg.unit()).is_identity());
}

} // namespace

TEST_CASE("identity morphism keeps the full dual") {
    for (std::uint32_t p : {2u, 3u}) {
        CAPTURE(p);
        CoringMorphism phi = identity_morphism(grouplike_z2(p));
        REQUIRE(validate_coring_morphism(phi).empty());
        SharpSpaces s = sharp_spaces(phi);
        CHECK(s.maps.dim() == 2);
        CHECK(s.img_beta.dim() == 2);
        CHECK(s.img_theta.dim() == 2);
        CHECK(s.compatible);
        CHECK(s.cyclic_left);
        CHECK(s.cyclic_right);
        check_mixed_laws(s);
        check_action_laws(s);

        SharpRing ring = sharp_ring(s);
        CHECK(ring.well_defined);
        CHECK_FALSE(ring.witness.has_value());
        CHECK(ring.alg.same_presentation(s.dual_c.alg));
        CHECK(ring.unit_coords == s.dual_c.alg.unit());

        Bimodule lower = lower_sharp_module(s);
        CHECK(lower.dim() == 2);
        CHECK(lower.validate().empty());
    }
}

TEST_CASE("counit morphism onto the trivial coring") {
    Coring c = grouplike_z2(2);
    CoringMorphism phi = counit_morphism(c);
    REQUIRE(validate_coring_morphism(phi).empty());
    SharpSpaces s = sharp_spaces(phi);
    CHECK(s.maps.dim() == 2);
    CHECK(s.img_beta.dim() == 2);
    CHECK(s.img_theta.dim() == 1);
    CHECK(s.compatible);
    CHECK(s.cyclic_left);
    CHECK(s.cyclic_right);
    auto eps_coords = s.maps.coords_of_map(c.eps());
    REQUIRE(eps_coords.has_value());
    CHECK(s.img_theta.contains_vector(*eps_coords));
    check_mixed_laws(s);
    check_action_laws(s);

    // The lowered ring is the split pair algebra of the group coalgebra dual.
    SharpRing ring = sharp_ring(s);
    REQUIRE(ring.well_defined);
    Algebra split(2, 2, Matrix({{1, 0}, {0, 0}, {0, 0}, {0, 1}}, 2), Matrix({{1, 1}}, 2));
    CHECK(ring.alg.same_presentation(split));

    Bimodule lower = lower_sharp_module(s);
    CHECK(lower.dim() == 2);
    CHECK(lower.validate().empty());
    CHECK(lower_left_action(s).size() == 2);
}

TEST_CASE("base change between trivial corings is not compatible") {
    CoringMorphism phi = field_extension_morphism();
    REQUIRE(validate_coring_morphism(phi).empty());
    SharpSpaces s = sharp_spaces(phi);
    CHECK(s.maps.dim() == 2);
    CHECK(s.img_beta.dim() == 1);
    CHECK(s.img_theta.dim() == 2);
    CHECK_FALSE(s.compatible);
    CHECK(s.cyclic_left);
    CHECK(s.cyclic_right);
    CHECK(s.img_beta.contains_vector(Matrix({{1, 0}}, 2)));
    check_mixed_laws(s);
    check_action_laws(s);

    SharpRing ring = sharp_ring(s);
    CHECK(ring.well_defined);
    CHECK(ring.alg.same_presentation(Algebra::field(2)));

    CHECK_THROWS_AS(lower_sharp_module(s), std::invalid_argument);
}

TEST_CASE("convolution products can escape the beta kernel") {
    CoringMorphism phi = diagonal_collapse();
    REQUIRE(validate_coring_morphism(phi).empty());
    SharpSpaces s = sharp_spaces(phi);
    CHECK(s.dual_c.maps.dim() == 9);
    CHECK(s.maps.dim() == 6);
    CHECK(s.img_beta.dim() == 6);
    CHECK(s.img_theta.dim() == 2);
    CHECK(s.compatible);
    CHECK(s.cyclic_left);
    CHECK(s.cyclic_right);
    check_mixed_laws(s);
    check_action_laws(s);

    // Postcomposition with beta has a kernel that is not a convolution
    // ideal, so the representative product is ambiguous.
    SharpRing ring = sharp_ring(s);
    CHECK_FALSE(ring.well_defined);
    REQUIRE(ring.witness.has_value());
    const Matrix& u = ring.witness->first;
    const Matrix& v = ring.witness->second;
    CHECK(((u * s.beta_into).is_zero() || (v * s.beta_into).is_zero()));
    CHECK_FALSE((s.dual_c.alg.multiply(u, v) * s.beta_into).is_zero());

    Bimodule lower = lower_sharp_module(s);
    CHECK(lower.dim() == 6);
    CHECK(lower.validate().empty());
}
