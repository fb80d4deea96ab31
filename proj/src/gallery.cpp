#include "coringlab/gallery.hpp"

namespace coringlab {

namespace {

// F_4 = F_2[t]/(t^2 + t + 1) with basis {1, t}.
Algebra f4() {
    Matrix table({{1, 0}, {0, 1}, {0, 1}, {1, 1}}, 2);
    return Algebra(2, 2, table, Matrix({{1, 0}}, 2));
}

// F_2[x]/(x^2) with basis {1, x}.
Algebra dual_numbers2() {
    Matrix table(4, 2, 2);
    table.at(0, 0) = 1;
    table.at(1, 1) = 1;
    table.at(2, 1) = 1;
    return Algebra(2, 2, table, Matrix::row_unit(2, 0, 2));
}

// Group coalgebra F_2[Z/2]: delta(g) = g (x) g, eps(g) = 1.
Coring grouplike_z2() {
    Algebra k = Algebra::field(2);
    Matrix id2 = Matrix::identity(2, 2);
    Bimodule carrier(k, k, 2, {id2}, {id2});
    Matrix delta_raw(2, 4, 2);
    delta_raw.at(0, 0) = 1;
    delta_raw.at(1, 3) = 1;
    Matrix eps(2, 1, 2);
    eps.at(0, 0) = 1;
    eps.at(1, 0) = 1;
    return Coring::from_raw_delta(std::move(carrier), delta_raw, eps);
}

// Canonical coring of the base-field extension k in A: carrier A (x)_k A with
// basis grid a_i (x) a_j at row i*dim + j.
Coring sweedler(const Algebra& a) {
    const std::uint32_t p = a.characteristic();
    const std::size_t d = a.dim();
    std::vector<Matrix> lact, ract;
    for (std::size_t k = 0; k < d; ++k) {
        const Matrix row = Matrix::row_unit(d, k, p);
        lact.push_back(Matrix::kron(a.left_mult_matrix(row), Matrix::identity(d, p)));
        ract.push_back(Matrix::kron(Matrix::identity(d, p), a.right_mult_matrix(row)));
    }
    Bimodule carrier(a, a, d * d, std::move(lact), std::move(ract));
    Matrix delta_raw(d * d, d * d * d * d, p);
    Matrix eps(d * d, d, p);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Matrix left = Matrix::kron(Matrix::row_unit(d, i, p), a.unit());
            const Matrix right = Matrix::kron(a.unit(), Matrix::row_unit(d, j, p));
            delta_raw.set_row(i * d + j, Matrix::kron(left, right));
            eps.set_row(i * d + j, a.basis_product(i, j));
        }
    return Coring::from_raw_delta(std::move(carrier), delta_raw, eps);
}

// Z/2-graded vector space as a comodule over the group coalgebra: the first
// d0 basis vectors in degree 0, the rest in degree 1.
Comodule grading(const Coring& c, std::size_t d0, std::size_t d1) {
    const std::uint32_t p = c.characteristic();
    const std::size_t d = d0 + d1;
    Bimodule carrier(Algebra::field(p), Algebra::field(p), d,
                     {Matrix::identity(d, p)}, {Matrix::identity(d, p)});
    Matrix rho_raw(d, d * 2, p);
    for (std::size_t i = 0; i < d; ++i) rho_raw.at(i, i * 2 + (i < d0 ? 0 : 1)) = 1;
    return Comodule::from_raw_rho(c, std::move(carrier), rho_raw);
}

LeftComodule grading_left(const Coring& c, std::size_t d0, std::size_t d1) {
    const std::uint32_t p = c.characteristic();
    const std::size_t d = d0 + d1;
    Bimodule carrier(Algebra::field(p), Algebra::field(p), d,
                     {Matrix::identity(d, p)}, {Matrix::identity(d, p)});
    Matrix rho_raw(d, 2 * d, p);
    for (std::size_t i = 0; i < d; ++i) rho_raw.at(i, (i < d0 ? 0 : 1) * d + i) = 1;
    return LeftComodule::from_raw_rho(c, std::move(carrier), rho_raw);
}

AlgebraDecl adecl(std::string name, Algebra a) { return {std::move(name), std::move(a), 0}; }

ComoduleDecl right_decl(std::string name, std::string coring, Comodule m) {
    ComoduleDecl d;
    d.name = std::move(name);
    d.coring = std::move(coring);
    d.right_comodule = std::move(m);
    return d;
}

ComoduleDecl left_decl(std::string name, std::string coring, LeftComodule m) {
    ComoduleDecl d;
    d.name = std::move(name);
    d.coring = std::move(coring);
    d.left_side = true;
    d.left_comodule = std::move(m);
    return d;
}

// Smallest example: the base algebra seen as a coring over itself.
ModelFile trivial_model() {
    ModelFile m;
    m.p = 2;
    Algebra f2 = Algebra::field(2);
    Coring triv = Coring::trivial(f2);
    m.algebras.push_back(adecl("f2", f2));
    m.bimodules.push_back({"cf2", "f2", "f2", Bimodule::regular(f2), 0});
    m.corings.push_back({"triv", "cf2", triv, 0});
    m.comodules.push_back(right_decl("m0", "triv", Comodule::regular(triv)));
    return m;
}

// Group coalgebra with two graded comodules, a left comodule, and two
// degree-preserving (hence colinear) maps between the right ones.
ModelFile grouplike_model() {
    ModelFile m;
    m.p = 2;
    Algebra f2 = Algebra::field(2);
    Coring grp = grouplike_z2();
    m.algebras.push_back(adecl("f2", f2));
    m.bimodules.push_back({"cg", "f2", "f2", grp.carrier(), 0});
    m.corings.push_back({"grp", "cg", grp, 0});
    m.comodules.push_back(right_decl("m11", "grp", grading(grp, 1, 1)));
    m.comodules.push_back(right_decl("m21", "grp", grading(grp, 2, 1)));
    m.comodules.push_back(left_decl("l11", "grp", grading_left(grp, 1, 1)));
    m.comodule_maps.push_back({"u", "m11", "m21", Matrix({{1, 0, 0}, {0, 0, 1}}, 2), 0});
    m.comodule_maps.push_back({"v", "m21", "m11", Matrix({{1, 0}, {1, 0}, {0, 1}}, 2), 0});
    return m;
}

// The canonical coring of F_2 in F_4 on the carrier F_4 (x)_{F_2} F_4.
ModelFile sweedler_model() {
    ModelFile m;
    m.p = 2;
    Algebra a = f4();
    Coring sw = sweedler(a);
    m.algebras.push_back(adecl("f4", a));
    m.bimodules.push_back({"cs", "f4", "f4", sw.carrier(), 0});
    m.corings.push_back({"sw", "cs", sw, 0});
    m.comodules.push_back(right_decl("reg", "sw", Comodule::regular(sw)));
    return m;
}

// F_2[x]/(x^2) measuring the trivial coring: <1, a> = a and <x, a> = 0, so
// the regular module splits into a rational line spanned by x and a torsion
// complement.
ModelFile nilpotent_model() {
    ModelFile m;
    m.p = 2;
    Algebra f2 = Algebra::field(2);
    Algebra t2 = dual_numbers2();
    Coring triv = Coring::trivial(f2);
    m.algebras.push_back(adecl("f2", f2));
    m.algebras.push_back(adecl("t2", t2));
    m.bimodules.push_back({"cf2", "f2", "f2", Bimodule::regular(f2), 0});
    m.corings.push_back({"triv", "cf2", triv, 0});
    std::vector<Matrix> ract;
    for (std::size_t k = 0; k < 2; ++k)
        ract.push_back(t2.right_mult_matrix(Matrix::row_unit(2, k, 2)));
    m.bimodules.push_back({"wreg", "f2", "t2", Bimodule(f2, t2, 2, {Matrix::identity(2, 2)}, ract), 0});

    DualRing dual = dual_ring(triv, DualSide::left);
    Matrix kappa(2, dual.alg.dim(), 2);
    kappa.at(0, 0) = 1;  // 1 acts by the counit, x acts by zero
    Matrix eta(1, 2, 2);
    eta.at(0, 0) = 1;
    m.pairings.push_back({"nil", "t2", "triv",
                          make_pairing(ARing{t2, AlgebraMorphism{eta}}, triv, AlgebraMorphism{kappa}), 0});
    return m;
}

// The counit of the group coalgebra as a same-base morphism onto the trivial
// coring.
ModelFile counit_model() {
    ModelFile m;
    m.p = 2;
    Algebra f2 = Algebra::field(2);
    Coring grp = grouplike_z2();
    Coring triv = Coring::trivial(f2);
    m.algebras.push_back(adecl("f2", f2));
    m.morphisms.push_back({"idf", "f2", "f2", AlgebraMorphism::identity(f2), 0});
    m.bimodules.push_back({"cg", "f2", "f2", grp.carrier(), 0});
    m.bimodules.push_back({"ct", "f2", "f2", Bimodule::regular(f2), 0});
    m.corings.push_back({"grp", "cg", grp, 0});
    m.corings.push_back({"triv", "ct", triv, 0});
    m.coring_morphisms.push_back(
        {"eps_gt", "grp", "triv", "idf",
         CoringMorphism{grp, triv, AlgebraMorphism::identity(f2), grp.eps()}, 0});
    m.comodules.push_back(right_decl("m11", "grp", grading(grp, 1, 1)));
    m.comodules.push_back(right_decl("n0", "triv", Comodule::regular(triv)));
    return m;
}

// Base change F_2 into F_4: the unit of the canonical coring of the extension
// is a coring morphism from the trivial coring; coinduction along it is
// obstructed, which is the compatibility counterexample.
ModelFile base_change_model() {
    ModelFile m;
    m.p = 2;
    Algebra f2 = Algebra::field(2);
    Algebra a = f4();
    Coring triv = Coring::trivial(f2);
    Coring sw = sweedler(a);
    m.algebras.push_back(adecl("f2", f2));
    m.algebras.push_back(adecl("f4", a));
    m.morphisms.push_back({"inc", "f2", "f4", AlgebraMorphism{Matrix({{1, 0}}, 2)}, 0});
    m.bimodules.push_back({"ct", "f2", "f2", Bimodule::regular(f2), 0});
    m.bimodules.push_back({"cs", "f4", "f4", sw.carrier(), 0});
    m.corings.push_back({"triv", "ct", triv, 0});
    m.corings.push_back({"sw", "cs", sw, 0});
    m.coring_morphisms.push_back(
        {"chi", "triv", "sw", "inc",
         CoringMorphism{triv, sw, AlgebraMorphism{Matrix({{1, 0}}, 2)}, Matrix({{1, 0, 0, 0}}, 2)}, 0});
    m.comodules.push_back(right_decl("n0", "sw", Comodule::regular(sw)));
    return m;
}

} // namespace

std::vector<GalleryEntry> gallery_entries() {
    std::vector<GalleryEntry> out;
    out.push_back({"trivial_f2.model", render_model(trivial_model())});
    out.push_back({"grouplike_z2.model", render_model(grouplike_model())});
    out.push_back({"sweedler_f4.model", render_model(sweedler_model())});
    out.push_back({"nilpotent_pairing.model", render_model(nilpotent_model())});
    out.push_back({"counit_grouplike.model", render_model(counit_model())});
    out.push_back({"base_change_f4.model", render_model(base_change_model())});
    return out;
}

const GalleryEntry* find_gallery_entry(const std::string& filename) {
    static const std::vector<GalleryEntry> entries = gallery_entries();
    for (const auto& e : entries)
        if (e.filename == filename) return &e;
    return nullptr;
}

} // namespace coringlab

