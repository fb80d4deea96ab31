#include "coringlab/suites.hpp"

#include <stdexcept>

#include "coringlab/functors.hpp"
#include "coringlab/linalg.hpp"
#include "coringlab/sharp.hpp"

namespace coringlab {

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& s : parts) {
        if (!out.empty()) out += "; ";
        out += s;
    }
    return out;
}

std::string num(std::size_t n) { return std::to_string(n); }

std::string row_text(const Matrix& m, std::size_t r) {
    std::string out;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!out.empty()) out += " ";
        out += std::to_string(m.at(r, c));
    }
    return out;
}

void emit_basis(VerdictReport& report, const std::string& name, const Subspace& s) {
    for (std::size_t i = 0; i < s.dim(); ++i)
        report.note(name + " basis " + num(i), row_text(s.basis(), i));
}

// Smallest subspace containing the seed and stable under every operator.
Subspace stable_closure(const std::vector<Matrix>& ops, const Matrix& seed) {
    Subspace s = Subspace::from_spanning(seed);
    for (;;) {
        Subspace grown = s;
        for (const Matrix& op : ops) grown = grown.sum(s.pushforward(op));
        if (grown.dim() == s.dim()) return s;
        s = grown;
    }
}

// Raw collapse A (x) N -> N of the left action: row a*dim + j holds a_a . e_j.
Matrix left_collapse(const Bimodule& m) {
    const std::size_t da = m.left_algebra().dim();
    Matrix out(da * m.dim(), m.dim(), m.characteristic());
    for (std::size_t a = 0; a < da; ++a)
        for (std::size_t j = 0; j < m.dim(); ++j)
            out.set_row(a * m.dim() + j, m.left_action(a).row(j));
    return out;
}

} // namespace

Comodule random_comodule(const Coring& c, Rng& rng, std::size_t max_dim) {
    const std::uint32_t p = c.characteristic();
    const MeasuringPairing q = canonical_pairing(c);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Bimodule v = Bimodule::free_right(c.base(), 1 + rng.below(2));
        Comodule big = Comodule::cofree(c, v);
        if (big.dim() == 0) continue;
        // Stability under the dual-ring and base actions makes the subspace a
        // subcomodule, so restricting the coaction always succeeds.
        Bimodule acted = module_from_comodule(q, big);
        std::vector<Matrix> ops;
        for (std::size_t k = 0; k < acted.right_algebra().dim(); ++k)
            ops.push_back(acted.right_action(k));
        for (std::size_t k = 0; k < big.carrier().right_algebra().dim(); ++k)
            ops.push_back(big.carrier().right_action(k));
        Subspace s = stable_closure(ops, rng.nonzero_row(big.dim(), p));
        if (s.dim() == 0 || s.dim() > max_dim) continue;
        Bimodule carrier = submodule(big.carrier(), s);
        TensorProduct sc = tensor_over(carrier, c.carrier());
        Matrix incl = sc.lift * Matrix::kron(s.basis(), Matrix::identity(c.dim(), p)) *
                      big.tensor_mc().project;
        Matrix rho(s.dim(), sc.dim(), p);
        bool ok = true;
        for (std::size_t i = 0; i < s.dim(); ++i) {
            auto sol = solve_linear(incl, s.basis().row(i) * big.rho());
            if (!sol) {
                ok = false;
                break;
            }
            rho.set_row(i, *sol);
        }
        if (!ok) continue;
        return Comodule(c, std::move(carrier), std::move(rho));
    }
    throw std::runtime_error("comodule sampling exhausted its attempts");
}

LeftComodule random_left_comodule(const Coring& c, Rng& rng, std::size_t max_dim) {
    const std::uint32_t p = c.characteristic();
    const MeasuringPairing q = canonical_pairing(c);
    const std::size_t dc = c.dim();
    for (int attempt = 0; attempt < 64; ++attempt) {
        Bimodule v = Bimodule::free_right(c.base(), 1 + rng.below(2)).flip();
        LeftComodule big = LeftComodule::cofree(c, v);
        if (big.dim() == 0) continue;
        const std::size_t dn = big.dim();
        Matrix collapse = left_collapse(big.carrier());
        Matrix raw = big.rho_raw();
        std::vector<Matrix> ops;
        // f . n = sum <f, n(-1)> n(0): evaluate the dual on the left leg, then
        // collapse the base coefficient through the carrier action.
        for (std::size_t k = 0; k < q.ring.alg.dim(); ++k)
            ops.push_back(raw * Matrix::kron(q.evaluation(k), Matrix::identity(dn, p)) * collapse);
        for (std::size_t k = 0; k < big.carrier().left_algebra().dim(); ++k)
            ops.push_back(big.carrier().left_action(k));
        Subspace s = stable_closure(ops, rng.nonzero_row(dn, p));
        if (s.dim() == 0 || s.dim() > max_dim) continue;
        Bimodule carrier = submodule(big.carrier(), s);
        TensorProduct cs = tensor_over(c.carrier(), carrier);
        Matrix incl = cs.lift * Matrix::kron(Matrix::identity(dc, p), s.basis()) *
                      big.tensor_cn().project;
        Matrix rho(s.dim(), cs.dim(), p);
        bool ok = true;
        for (std::size_t i = 0; i < s.dim(); ++i) {
            auto sol = solve_linear(incl, s.basis().row(i) * big.rho());
            if (!sol) {
                ok = false;
                break;
            }
            rho.set_row(i, *sol);
        }
        if (!ok) continue;
        return LeftComodule(c, std::move(carrier), std::move(rho));
    }
    throw std::runtime_error("left comodule sampling exhausted its attempts");
}

Bimodule random_right_module(const Algebra& t, Rng& rng, std::size_t max_dim) {
    Bimodule free = Bimodule::free_right(t, 2);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Subspace span = closure_under_action(free, rng.nonzero_row(free.dim(), t.characteristic()));
        if (span.dim() == 0 || span.dim() > max_dim) continue;
        return submodule(free, span);
    }
    throw std::runtime_error("module sampling exhausted its attempts");
}

Matrix random_colinear_map(const Comodule& m, const Comodule& n, Rng& rng) {
    HomSpace h = hom_colinear(m, n);
    if (h.dim() == 0) return Matrix(m.dim(), n.dim(), m.coring().characteristic());
    return h.map_from_coords(rng.nonzero_row(h.dim(), m.coring().characteristic()));
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"axioms",      "adjunction-sg",
                                                "adjunction-main", "natural-iso",
                                                "cotensor-center", "rat-sp-agreement"};
    return names;
}

bool is_suite(const std::string& name) {
    for (const auto& s : suite_names())
        if (s == name) return true;
    return false;
}

void run_validation(const ModelFile& model, VerdictReport& report) {
    for (const auto& d : model.algebras) {
        auto errs = d.algebra.validate();
        if (errs.empty())
            report.pass("algebra " + d.name,
                        "associative unital, dim " + num(d.algebra.dim()) + " over F_" + num(model.p));
        else
            report.fail("algebra " + d.name, join(errs));
    }
    for (const auto& d : model.morphisms) {
        const Algebra& src = model.find_algebra(d.src)->algebra;
        const Algebra& dst = model.find_algebra(d.dst)->algebra;
        auto errs = d.morphism.validate(src, dst);
        if (errs.empty())
            report.pass("morphism " + d.name, "unital algebra morphism " + d.src + " -> " + d.dst);
        else
            report.fail("morphism " + d.name, join(errs));
    }
    for (const auto& d : model.bimodules) {
        auto errs = d.bimodule.validate();
        if (errs.empty())
            report.pass("bimodule " + d.name,
                        "(" + d.left + ", " + d.right + ")-bimodule axioms hold, dim " +
                            num(d.bimodule.dim()));
        else
            report.fail("bimodule " + d.name, join(errs));
    }
    for (const auto& d : model.corings) {
        auto errs = d.coring.validate();
        if (errs.empty())
            report.pass("coring " + d.name, "coassociative counital over " + d.carrier);
        else
            report.fail("coring " + d.name, join(errs));
        const std::pair<DualSide, const char*> sides[] = {
            {DualSide::left, "left"}, {DualSide::right, "right"}, {DualSide::bilinear, "bilinear"}};
        for (const auto& [side, label] : sides) {
            const std::string name = "dual(" + d.name + ", " + label + ")";
            try {
                DualRing dr = dual_ring(d.coring, side);
                auto alg_errs = dr.alg.validate();
                if (alg_errs.empty())
                    report.pass(name, "convolution ring of dim " + num(dr.alg.dim()) +
                                          " is associative and unital");
                else
                    report.fail(name, join(alg_errs));
            } catch (const std::exception& e) {
                report.fail(name, e.what());
            }
        }
    }
    for (const auto& d : model.coring_morphisms) {
        auto errs = validate_coring_morphism(d.morphism);
        if (errs.empty())
            report.pass("coring_morphism " + d.name,
                        "bilinear over beta, compatible with comultiplication and counit");
        else
            report.fail("coring_morphism " + d.name, join(errs));
        try {
            SharpSpaces s = sharp_spaces(d.morphism);
            report.note("coring_morphism " + d.name + " compatibility",
                        s.compatible
                            ? "restriction along theta lands in the beta image"
                            : "restriction along theta leaves the beta image; coinduction along "
                              "this morphism is obstructed");
        } catch (const std::exception& e) {
            report.note("coring_morphism " + d.name + " compatibility", e.what());
        }
    }
    for (const auto& d : model.comodules) {
        auto errs = d.left_side ? d.left_comodule->validate() : d.right_comodule->validate();
        const std::string side = d.left_side ? "left " : "";
        if (errs.empty())
            report.pass("comodule " + d.name,
                        "counital coassociative " + side + "coaction, dim " + num(d.dim()));
        else
            report.fail("comodule " + d.name, join(errs));
    }
    for (const auto& d : model.comodule_maps) {
        const Comodule& src = *model.find_comodule(d.src)->right_comodule;
        const Comodule& dst = *model.find_comodule(d.dst)->right_comodule;
        if (hom_colinear(src, dst).coords_of_map(d.map).has_value())
            report.pass("comodule_map " + d.name, "colinear " + d.src + " -> " + d.dst);
        else
            report.fail("comodule_map " + d.name, "map is not colinear");
    }
    for (const auto& d : model.pairings) {
        auto errs = validate_pairing(d.pairing);
        if (errs.empty())
            report.pass("pairing " + d.name,
                        "measuring pairing of " + d.ring + " against " + d.coring);
        else
            report.fail("pairing " + d.name, join(errs));
        AlphaCheck a = alpha_check(d.pairing);
        report.note("pairing " + d.name + " alpha",
                    a.ok() ? "carrier is projective and evaluation separates" : a.reason());
        report.note("pairing " + d.name + " density",
                    d.pairing.kappa_surjective ? "the ring covers the full convolution dual"
                                               : "the ring image is a proper subring of the dual");
    }
}

namespace {

void suite_adjunction_sg(const ModelFile& model, const SuiteParams& prm, VerdictReport& report,
                         Rng& rng) {
    if (model.algebras.empty()) {
        report.fail("adjunction-sg", "hypothesis unmet: the model declares no algebra");
        return;
    }
    Algebra base = Algebra::field(model.p);
    for (const auto& d : model.algebras) {
        ARing ring{d.algebra, AlgebraMorphism{d.algebra.unit()}};
        InductionContext self{base,
                              base,
                              AlgebraMorphism::identity(base),
                              ring,
                              ring,
                              AlgebraMorphism::identity(d.algebra)};
        InductionContext sub{base,
                             base,
                             AlgebraMorphism::identity(base),
                             ring,
                             ARing{base, AlgebraMorphism::identity(base)},
                             AlgebraMorphism{d.algebra.unit()}};
        for (std::size_t trial = 0; trial < prm.trials; ++trial) {
            const bool use_self = (trial % 2 == 0) || d.algebra.dim() == 1;
            const InductionContext& ctx = use_self ? self : sub;
            const Algebra& s_alg = use_self ? d.algebra : base;
            const std::string name = "adjunction-sg " + d.name + (use_self ? " self" : " base") +
                                     " trial " + num(trial);
            try {
                Bimodule m = random_right_module(d.algebra, rng, prm.max_dim);
                Bimodule n = random_right_module(s_alg, rng, prm.max_dim).as_right_module();
                GeneralAdjunction adj = verify_adjunction_general(
                    ctx, Bimodule::regular(d.algebra), Bimodule::regular(s_alg), m, n);
                const bool ok = adj.agree && adj.bijective && adj.hom_s.dim() == adj.hom_t.dim();
                std::string details = "dim M=" + num(m.dim()) + ", dim N=" + num(n.dim()) +
                                      ", hom dims " + num(adj.hom_s.dim()) + "=" +
                                      num(adj.hom_t.dim()) +
                                      (adj.agree ? ", chain matches the direct bijection"
                                                 : ", chain differs from the direct map");
                if (ok)
                    report.pass(name, details);
                else
                    report.fail(name, details);
            } catch (const std::exception& e) {
                report.fail(name, e.what());
            }
        }
    }
}

void suite_adjunction_main(const ModelFile& model, const SuiteParams& prm, VerdictReport& report,
                           Rng& rng) {
    if (model.coring_morphisms.empty()) {
        report.fail("adjunction-main", "hypothesis unmet: the model declares no coring morphism");
        return;
    }
    for (const auto& d : model.coring_morphisms) {
        bool compatible = false;
        try {
            compatible = sharp_spaces(d.morphism).compatible;
        } catch (const std::exception& e) {
            report.fail("adjunction-main " + d.name, e.what());
            continue;
        }
        if (!compatible) {
            report.fail("adjunction-main " + d.name,
                        "hypothesis unmet: restriction along theta leaves the beta image, so "
                        "coinduction along this morphism is undefined");
            continue;
        }
        for (std::size_t trial = 0; trial < prm.trials; ++trial) {
            const std::string name = "adjunction-main " + d.name + " trial " + num(trial);
            try {
                Comodule m = random_comodule(d.morphism.source, rng, prm.max_dim);
                Comodule n = random_comodule(d.morphism.target, rng, prm.max_dim);
                AdjunctionWitness w = adjunction_witness(adjunction_context(d.morphism, m, n));
                const bool ok = w.phi_colinear && w.psi_colinear && w.mutually_inverse &&
                                w.hom_d.dim() == w.hom_c.dim();
                std::string details = "dim M=" + num(m.dim()) + ", dim N=" + num(n.dim()) +
                                      ", hom dims " + num(w.hom_d.dim()) + "=" +
                                      num(w.hom_c.dim()) +
                                      (w.mutually_inverse ? ", bijections mutually inverse"
                                                          : ", bijections do not invert");
                if (ok)
                    report.pass(name, details);
                else
                    report.fail(name, details);
            } catch (const std::exception& e) {
                report.fail(name, e.what());
            }
        }
        for (std::size_t square = 0; square < prm.trials; ++square) {
            const std::string name = "adjunction-main " + d.name + " square " + num(square);
            try {
                Comodule m = random_comodule(d.morphism.source, rng, prm.max_dim);
                Comodule n = random_comodule(d.morphism.target, rng, prm.max_dim);
                AdjunctionContext ctx = adjunction_context(d.morphism, m, n);
                Matrix u = random_colinear_map(m, m, rng);
                Matrix v = random_colinear_map(n, n, rng);
                Matrix ub = induction_on_map(ctx.induced, ctx.induced, u);
                Matrix cv = coind_compatible_on_map(ctx.coind, ctx.coind, v);
                HomSpace hom_d = hom_colinear(ctx.induced.comodule, n);
                bool ok = true;
                for (std::size_t w = 0; w < hom_d.dim(); ++w) {
                    const Matrix kappa = hom_d.map_at(w);
                    if (adjunction_phi(ctx, ub * kappa * v) !=
                        u * adjunction_phi(ctx, kappa) * cv)
                        ok = false;
                }
                std::string details = "naturality through " + num(hom_d.dim()) +
                                      " hom basis maps at dim M=" + num(m.dim()) +
                                      ", dim N=" + num(n.dim());
                if (ok)
                    report.pass(name, details);
                else
                    report.fail(name, "a naturality square does not commute; " + details);
            } catch (const std::exception& e) {
                report.fail(name, e.what());
            }
        }
    }
}

void suite_natural_iso(const ModelFile& model, const SuiteParams& prm, VerdictReport& report,
                       Rng& rng) {
    if (model.coring_morphisms.empty()) {
        report.fail("natural-iso", "hypothesis unmet: the model declares no coring morphism");
        return;
    }
    for (const auto& d : model.coring_morphisms) {
        bool compatible = false;
        try {
            compatible = sharp_spaces(d.morphism).compatible;
        } catch (const std::exception& e) {
            report.fail("natural-iso " + d.name, e.what());
            continue;
        }
        if (!compatible) {
            report.fail("natural-iso " + d.name,
                        "hypothesis unmet: restriction along theta leaves the beta image, so "
                        "coinduction along this morphism is undefined");
            continue;
        }
        std::vector<Comodule> instances;
        std::vector<ComoduleArrow> arrows;
        try {
            const std::size_t count = prm.trials < 2 ? 2 : prm.trials;
            for (std::size_t i = 0; i < count; ++i)
                instances.push_back(random_comodule(d.morphism.target, rng, prm.max_dim));
            for (std::size_t i = 0; i + 1 < instances.size(); ++i)
                arrows.push_back({i, i + 1, random_colinear_map(instances[i], instances[i + 1], rng)});
        } catch (const std::exception& e) {
            report.fail("natural-iso " + d.name, e.what());
            continue;
        }
        NaturalIsoReport rep = verify_natural_iso(d.morphism, instances, arrows);
        for (std::size_t i = 0; i < instances.size(); ++i) {
            const std::string prefix = "instance " + num(i) + ":";
            std::string found;
            for (const auto& f : rep.failures)
                if (f.compare(0, prefix.size(), prefix) == 0) found += f.substr(prefix.size() + 1) + "; ";
            const std::string name = "natural-iso " + d.name + " instance " + num(i);
            if (found.empty())
                report.pass(name, "comparison map is a colinear isomorphism at dim " +
                                      num(instances[i].dim()));
            else
                report.fail(name, found);
        }
        for (const auto& a : arrows) {
            const std::string prefix = "arrow " + num(a.from) + " -> " + num(a.to) + ":";
            std::string found;
            for (const auto& f : rep.failures)
                if (f.compare(0, prefix.size(), prefix) == 0) found += f.substr(prefix.size() + 1) + "; ";
            const std::string name =
                "natural-iso " + d.name + " arrow " + num(a.from) + " -> " + num(a.to);
            if (found.empty())
                report.pass(name, "naturality square commutes");
            else
                report.fail(name, found);
        }
    }
}

void suite_cotensor_center(const ModelFile& model, const SuiteParams& prm, VerdictReport& report,
                           Rng& rng) {
    if (model.corings.empty()) {
        report.fail("cotensor-center", "hypothesis unmet: the model declares no coring");
        return;
    }
    for (const auto& d : model.corings) {
        MeasuringPairing q;
        try {
            q = canonical_pairing(d.coring);
        } catch (const std::exception& e) {
            report.fail("cotensor-center " + d.name, e.what());
            continue;
        }
        for (std::size_t trial = 0; trial < prm.trials; ++trial) {
            const std::string name = "cotensor-center " + d.name + " trial " + num(trial);
            try {
                Comodule m = random_comodule(d.coring, rng, prm.max_dim);
                LeftComodule n = random_left_comodule(d.coring, rng, prm.max_dim);
                CenterWitness w = cotensor_as_center(q, m, n);
                const bool ok =
                    w.subspaces_equal && w.gamma_total && w.beta_total && w.mutually_inverse;
                std::string details =
                    "cotensor dim " + num(w.cot.kernel.dim()) + ", centralizer dim " +
                    num(w.center.dim()) +
                    (w.subspaces_equal ? ", identical reduced bases" : ", bases differ") +
                    (w.mutually_inverse ? ", hom comparison inverts" : ", hom comparison fails");
                if (ok)
                    report.pass(name, details);
                else
                    report.fail(name, details);
            } catch (const std::exception& e) {
                report.fail(name, e.what());
            }
        }
    }
}

void suite_rat_sp(const ModelFile& model, const SuiteParams& prm, VerdictReport& report,
                  Rng& rng) {
    struct Entry {
        std::string label;
        MeasuringPairing q;
    };
    std::vector<Entry> entries;
    for (const auto& d : model.corings) {
        try {
            entries.push_back({d.name + " canonical", canonical_pairing(d.coring)});
        } catch (const std::exception& e) {
            report.fail("rat-sp " + d.name, e.what());
        }
    }
    for (const auto& d : model.pairings) entries.push_back({d.name, d.pairing});
    if (entries.empty()) {
        report.fail("rat-sp-agreement", "hypothesis unmet: the model declares no coring or pairing");
        return;
    }
    for (const auto& e : entries) {
        AlphaCheck a = alpha_check(e.q);
        report.note("rat-sp " + e.label + " alpha",
                    a.ok() ? "carrier is projective and evaluation separates"
                           : a.reason() + "; recovery is not guaranteed");
        Bimodule cmod;
        try {
            cmod = coring_as_module(e.q);
        } catch (const std::exception& ex) {
            report.fail("rat-sp " + e.label, ex.what());
            continue;
        }
        for (std::size_t trial = 0; trial < prm.trials; ++trial) {
            const std::string name = "rat-sp " + e.label + " trial " + num(trial);
            try {
                if (trial % 2 == 0) {
                    Comodule m = random_comodule(e.q.coring, rng, prm.max_dim);
                    Bimodule w = module_from_comodule(e.q, m);
                    RationalPart r = rat_functor(e.q, w);
                    Subspace tr = trace_sp(cmod, w);
                    const bool ok = r.subspace.dim() == w.dim() && r.subspace == tr &&
                                    r.comodule.validate().empty();
                    std::string details = "coaction-induced module of dim " + num(w.dim()) +
                                          ": rational part dim " + num(r.subspace.dim()) +
                                          ", trace dim " + num(tr.dim());
                    if (ok)
                        report.pass(name, details);
                    else
                        report.fail(name, details);
                } else {
                    Bimodule w = random_right_module(e.q.ring.alg, rng, prm.max_dim);
                    RationalPart r = rat_functor(e.q, w);
                    Subspace tr = trace_sp(cmod, w);
                    const bool ok = r.subspace == tr && r.comodule.validate().empty();
                    std::string details = "module of dim " + num(w.dim()) + ": rational part dim " +
                                          num(r.subspace.dim()) + ", trace dim " + num(tr.dim()) +
                                          (r.subspace == tr ? ", subspaces agree" : ", subspaces differ");
                    if (ok)
                        report.pass(name, details);
                    else
                        report.fail(name, details);
                }
            } catch (const std::exception& ex) {
                report.fail(name, ex.what());
            }
        }
    }
}

} // namespace

void run_suite(const ModelFile& model, const std::string& suite, const SuiteParams& params,
               VerdictReport& report) {
    Rng rng(params.seed);
    if (suite == "axioms") return run_validation(model, report);
    if (suite == "adjunction-sg") return suite_adjunction_sg(model, params, report, rng);
    if (suite == "adjunction-main") return suite_adjunction_main(model, params, report, rng);
    if (suite == "natural-iso") return suite_natural_iso(model, params, report, rng);
    if (suite == "cotensor-center") return suite_cotensor_center(model, params, report, rng);
    if (suite == "rat-sp-agreement") return suite_rat_sp(model, params, report, rng);
    report.fail("suite", "unknown suite '" + suite + "'; expected one of " + join(suite_names()));
}

void run_compute(const ModelFile& model, const std::vector<std::string>& expr,
                 VerdictReport& report) {
    auto usage = [&report] {
        report.fail("compute",
                    "expected: rat <pairing> <bimodule> | cotensor <M> <N> | coind "
                    "<coring_morphism> <N> | dual <coring> <left|right|bilinear>");
    };
    if (expr.empty()) return usage();
    const std::string& op = expr[0];

    if (op == "rat") {
        if (expr.size() != 3) return usage();
        const PairingDecl* q = model.find_pairing(expr[1]);
        if (!q) return report.fail("compute rat", "unknown pairing '" + expr[1] + "'");
        const BimoduleDecl* w = model.find_bimodule(expr[2]);
        if (!w) return report.fail("compute rat", "unknown bimodule '" + expr[2] + "'");
        if (!w->bimodule.right_algebra().same_presentation(q->pairing.ring.alg))
            return report.fail("compute rat",
                               "'" + expr[2] + "' is not a right module over the ring of '" +
                                   expr[1] + "'");
        const std::string name = "compute rat " + expr[1] + " " + expr[2];
        try {
            RationalPart r = rat_functor(q->pairing, w->bimodule.as_right_module());
            report.pass(name, "rational part has dim " + num(r.subspace.dim()) + " inside dim " +
                                  num(w->bimodule.dim()));
            emit_basis(report, "rat", r.subspace);
        } catch (const std::exception& e) {
            report.fail(name, e.what());
        }
        return;
    }
    if (op == "cotensor") {
        if (expr.size() != 3) return usage();
        const ComoduleDecl* m = model.find_comodule(expr[1]);
        const ComoduleDecl* n = model.find_comodule(expr[2]);
        if (!m || m->left_side)
            return report.fail("compute cotensor",
                               "'" + expr[1] + "' is not a declared right comodule");
        if (!n || !n->left_side)
            return report.fail("compute cotensor",
                               "'" + expr[2] + "' is not a declared left comodule");
        if (m->coring != n->coring)
            return report.fail("compute cotensor", "'" + expr[1] + "' and '" + expr[2] +
                                                       "' live over different corings");
        const std::string name = "compute cotensor " + expr[1] + " " + expr[2];
        try {
            CotensorResult cot = cotensor(*m->right_comodule, *n->left_comodule);
            report.pass(name, "cotensor product has dim " + num(cot.kernel.dim()) +
                                  " inside the tensor product of dim " + num(cot.mn.dim()));
            emit_basis(report, "cotensor", cot.kernel);
        } catch (const std::exception& e) {
            report.fail(name, e.what());
        }
        return;
    }
    if (op == "coind") {
        if (expr.size() != 3) return usage();
        const CoringMorphismDecl* phi = model.find_coring_morphism(expr[1]);
        if (!phi) return report.fail("compute coind", "unknown coring morphism '" + expr[1] + "'");
        const ComoduleDecl* n = model.find_comodule(expr[2]);
        if (!n || n->left_side)
            return report.fail("compute coind", "'" + expr[2] + "' is not a declared right comodule");
        if (n->coring != phi->dst)
            return report.fail("compute coind",
                               "'" + expr[2] + "' does not live over the target of '" + expr[1] + "'");
        const std::string name = "compute coind " + expr[1] + " " + expr[2];
        try {
            CoindCompatible cc = coind_compatible(phi->morphism, *n->right_comodule);
            report.pass(name, "coinduced comodule has dim " + num(cc.comodule.dim()) +
                                  " inside the right-linear map space of dim " + num(cc.maps.dim()));
            emit_basis(report, "coind", cc.rat.subspace);
        } catch (const std::invalid_argument& e) {
            const std::string what = e.what();
            if (what.find("beta image") != std::string::npos)
                report.fail(name, "not compatible: " + what);
            else
                report.fail(name, what);
        } catch (const std::exception& e) {
            report.fail(name, e.what());
        }
        return;
    }
    if (op == "dual") {
        if (expr.size() != 3) return usage();
        const CoringDecl* c = model.find_coring(expr[1]);
        if (!c) return report.fail("compute dual", "unknown coring '" + expr[1] + "'");
        DualSide side;
        if (expr[2] == "left")
            side = DualSide::left;
        else if (expr[2] == "right")
            side = DualSide::right;
        else if (expr[2] == "bilinear")
            side = DualSide::bilinear;
        else
            return report.fail("compute dual", "side must be left, right, or bilinear");
        const std::string name = "compute dual " + expr[1] + " " + expr[2];
        try {
            DualRing dr = dual_ring(c->coring, side);
            auto errs = dr.alg.validate();
            if (errs.empty())
                report.pass(name, "convolution ring of dim " + num(dr.alg.dim()) +
                                      ", associative and unital");
            else
                report.fail(name, join(errs));
        } catch (const std::exception& e) {
            report.fail(name, e.what());
        }
        return;
    }
    usage();
}

} // namespace coringlab
