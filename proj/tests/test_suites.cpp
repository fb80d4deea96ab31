#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coringlab/functors.hpp"
#include "coringlab/gallery.hpp"
#include "coringlab/model.hpp"
#include "coringlab/suites.hpp"
#include "fixtures.hpp"

using namespace coringlab;

namespace {

ModelFile load(const char* filename) {
    const GalleryEntry* e = find_gallery_entry(filename);
    REQUIRE(e != nullptr);
    ParseResult r = parse_model(e->text);
    REQUIRE(r.ok());
    return std::move(*r.model);
}

VerdictReport run(const ModelFile& m, const std::string& suite, const SuiteParams& prm) {
    VerdictReport report;
    run_suite(m, suite, prm, report);
    return report;
}

} // namespace

TEST_CASE("random comodules satisfy the comodule axioms") {
    ModelFile m = load("grouplike_z2.model");
    const Coring& c = m.find_coring("grp")->coring;
    Rng rng(11);
    for (int i = 0; i < 25; ++i) {
        Comodule w = random_comodule(c, rng, 3);
        CHECK(w.dim() >= 1);
        CHECK(w.dim() <= 3);
        CHECK(w.validate().empty());
        LeftComodule l = random_left_comodule(c, rng, 3);
        CHECK(l.dim() >= 1);
        CHECK(l.dim() <= 3);
        CHECK(l.validate().empty());
    }
}

TEST_CASE("random comodules over the extension coring satisfy the axioms") {
    ModelFile m = load("sweedler_f4.model");
    const Coring& c = m.find_coring("sw")->coring;
    Rng rng(5);
    for (int i = 0; i < 10; ++i) {
        Comodule w = random_comodule(c, rng, 3);
        CHECK(w.validate().empty());
        LeftComodule l = random_left_comodule(c, rng, 3);
        CHECK(l.validate().empty());
    }
}

TEST_CASE("random colinear maps are colinear") {
    ModelFile m = load("grouplike_z2.model");
    const Coring& c = m.find_coring("grp")->coring;
    Rng rng(21);
    for (int i = 0; i < 10; ++i) {
        Comodule a = random_comodule(c, rng, 3);
        Comodule b = random_comodule(c, rng, 3);
        Matrix f = random_colinear_map(a, b, rng);
        CHECK(hom_colinear(a, b).coords_of_map(f).has_value());
    }
}

TEST_CASE("axiom suite passes on every gallery file") {
    for (const auto& entry : gallery_entries()) {
        CAPTURE(entry.filename);
        ParseResult r = parse_model(entry.text);
        REQUIRE(r.ok());
        VerdictReport report = run(*r.model, "axioms", {});
        for (const auto& line : report.lines) CAPTURE(line.name + ": " + line.details);
        CHECK(report.ok());
    }
}

TEST_CASE("adjunction-main passes on the counit morphism and rejects the base change") {
    ModelFile counit = load("counit_grouplike.model");
    SuiteParams prm;
    prm.trials = 10;
    prm.seed = 7;
    VerdictReport good = run(counit, "adjunction-main", prm);
    CHECK(good.ok());
    CHECK(good.failed() == 0);
    std::size_t passes = 0;
    for (const auto& line : good.lines)
        if (line.verdict && line.pass) ++passes;
    CHECK(passes == 20);  // trials witness checks plus trials naturality squares

    ModelFile base_change = load("base_change_f4.model");
    VerdictReport bad = run(base_change, "adjunction-main", prm);
    CHECK(!bad.ok());
    REQUIRE(bad.failed() == 1);
    bool names_hypothesis = false;
    for (const auto& line : bad.lines)
        if (!line.pass && line.details.find("hypothesis unmet") != std::string::npos &&
            line.details.find("beta image") != std::string::npos)
            names_hypothesis = true;
    CHECK(names_hypothesis);
}

TEST_CASE("natural-iso passes on the counit morphism") {
    ModelFile counit = load("counit_grouplike.model");
    SuiteParams prm;
    prm.trials = 10;
    prm.seed = 3;
    VerdictReport report = run(counit, "natural-iso", prm);
    for (const auto& line : report.lines)
        if (!line.pass) CAPTURE(line.name + ": " + line.details);
    CHECK(report.ok());
    std::size_t instances = 0, arrows = 0;
    for (const auto& line : report.lines) {
        if (line.name.find("instance") != std::string::npos) ++instances;
        if (line.name.find("arrow") != std::string::npos) ++arrows;
    }
    CHECK(instances == 10);
    CHECK(arrows == 9);
}

TEST_CASE("adjunction-sg passes over the quadratic field extension") {
    ModelFile m = load("sweedler_f4.model");
    SuiteParams prm;
    prm.trials = 6;
    prm.seed = 13;
    VerdictReport report = run(m, "adjunction-sg", prm);
    CHECK(report.ok());
    CHECK(report.lines.size() == 6);
}

TEST_CASE("cotensor-center passes on the grouplike coring") {
    ModelFile m = load("grouplike_z2.model");
    SuiteParams prm;
    prm.trials = 8;
    prm.seed = 2;
    VerdictReport report = run(m, "cotensor-center", prm);
    CHECK(report.ok());
}

TEST_CASE("rat-sp-agreement passes on the nilpotent pairing file") {
    ModelFile m = load("nilpotent_pairing.model");
    SuiteParams prm;
    prm.trials = 10;
    prm.seed = 4;
    VerdictReport report = run(m, "rat-sp-agreement", prm);
    CHECK(report.ok());
}

TEST_CASE("identical seeds render byte-identical reports") {
    ModelFile m = load("counit_grouplike.model");
    SuiteParams prm;
    prm.trials = 12;
    prm.seed = 42;
    VerdictReport a = run(m, "adjunction-main", prm);
    VerdictReport b = run(m, "adjunction-main", prm);
    a.digest = b.digest = "same";
    CHECK(a.render() == b.render());

    prm.seed = 43;
    VerdictReport c = run(m, "adjunction-main", prm);
    c.digest = "same";
    CHECK(a.render() != c.render());  // the seed actually steers the sampling
}

TEST_CASE("compute rat reproduces the nilpotent rational part") {
    ModelFile m = load("nilpotent_pairing.model");
    VerdictReport report;
    run_compute(m, {"rat", "nil", "wreg"}, report);
    CHECK(report.ok());
    bool dim_one = false, basis_x = false;
    for (const auto& line : report.lines) {
        if (line.pass && line.details.find("dim 1 inside dim 2") != std::string::npos)
            dim_one = true;
        if (!line.verdict && line.details == "0 1") basis_x = true;
    }
    CHECK(dim_one);
    CHECK(basis_x);
}

TEST_CASE("compute cotensor matches the degree-diagonal on the grouplike gallery") {
    ModelFile m = load("grouplike_z2.model");
    VerdictReport report;
    run_compute(m, {"cotensor", "m11", "l11"}, report);
    CHECK(report.ok());
    bool dim_two = false;
    for (const auto& line : report.lines)
        if (line.pass && line.details.find("dim 2") != std::string::npos) dim_two = true;
    CHECK(dim_two);
}

TEST_CASE("compute coind succeeds on the counit morphism and rejects the base change") {
    ModelFile counit = load("counit_grouplike.model");
    VerdictReport good;
    run_compute(counit, {"coind", "eps_gt", "n0"}, good);
    CHECK(good.ok());
    bool dim_two = false;
    for (const auto& line : good.lines)
        if (line.pass && line.details.find("dim 2") != std::string::npos) dim_two = true;
    CHECK(dim_two);

    ModelFile base_change = load("base_change_f4.model");
    VerdictReport bad;
    run_compute(base_change, {"coind", "chi", "n0"}, bad);
    CHECK(!bad.ok());
    bool not_compatible = false;
    for (const auto& line : bad.lines)
        if (!line.pass && line.details.find("not compatible") != std::string::npos)
            not_compatible = true;
    CHECK(not_compatible);
}

TEST_CASE("compute rejects unknown names and mismatched kinds") {
    ModelFile m = load("grouplike_z2.model");
    VerdictReport r1;
    run_compute(m, {"rat", "missing", "also_missing"}, r1);
    CHECK(!r1.ok());
    VerdictReport r2;
    run_compute(m, {"cotensor", "l11", "m11"}, r2);  // sides swapped
    CHECK(!r2.ok());
    VerdictReport r3;
    run_compute(m, {"frobnicate"}, r3);
    CHECK(!r3.ok());
}

TEST_CASE("unknown suites fail instead of silently passing") {
    ModelFile m = load("trivial_f2.model");
    VerdictReport report = run(m, "no-such-suite", {});
    CHECK(!report.ok());
    CHECK(is_suite("axioms"));
    CHECK(is_suite("rat-sp-agreement"));
    CHECK(!is_suite("no-such-suite"));
}

TEST_CASE("sampling and adjunctions hold over F_3 and F_5") {
    for (std::uint32_t p : {3u, 5u}) {
        CAPTURE(p);
        Coring grp = fixtures::grouplike_z2(p);
        Rng rng(31 + p);
        for (int i = 0; i < 5; ++i) {
            Comodule w = random_comodule(grp, rng, 3);
            CHECK(w.validate().empty());
            LeftComodule l = random_left_comodule(grp, rng, 3);
            CHECK(l.validate().empty());
        }
        CoringMorphism eps = fixtures::counit_morphism(grp);
        Comodule m = random_comodule(eps.source, rng, 3);
        Comodule n = random_comodule(eps.target, rng, 3);
        AdjunctionWitness w = adjunction_witness(adjunction_context(eps, m, n));
        CHECK(w.mutually_inverse);
        CHECK(w.phi_colinear);
        CHECK(w.psi_colinear);
        MeasuringPairing q = canonical_pairing(grp);
        CenterWitness cw =
            cotensor_as_center(q, random_comodule(grp, rng, 3), random_left_comodule(grp, rng, 3));
        CHECK(cw.subspaces_equal);
        CHECK(cw.mutually_inverse);
    }
}
