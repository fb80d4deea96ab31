#include "coringlab/model.hpp"

#include <set>
#include <sstream>

namespace coringlab {

namespace {

bool is_prime(std::size_t n) {
    if (n < 2) return false;
    for (std::size_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Strict decimal: digits only, small enough to never overflow.
std::optional<std::size_t> parse_number(const std::string& tok) {
    if (tok.empty() || tok.size() > 9) return std::nullopt;
    std::size_t value = 0;
    for (char ch : tok) {
        if (ch < '0' || ch > '9') return std::nullopt;
        value = value * 10 + static_cast<std::size_t>(ch - '0');
    }
    return value;
}

// "key=value" -> value.
std::optional<std::string> attr(const std::string& tok, const std::string& key) {
    if (tok.size() < key.size() + 2) return std::nullopt;
    if (tok.compare(0, key.size(), key) != 0 || tok[key.size()] != '=') return std::nullopt;
    return tok.substr(key.size() + 1);
}

std::vector<std::string> tokenize(std::string line) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

bool is_section(const std::string& head) {
    return head == "algebra" || head == "morphism" || head == "bimodule" ||
           head == "coring" || head == "coring_morphism" || head == "comodule" ||
           head == "comodule_map" || head == "pairing";
}

constexpr std::size_t max_dim = 32;
constexpr std::size_t max_errors = 64;

struct Parser {
    ModelFile model;
    std::vector<ParseError> errors;

    enum class Kind {
        none,
        skip,  // header failed; swallow rows until the next section
        algebra,
        morphism,
        bimodule,
        coring,
        coring_morphism,
        comodule,
        comodule_map,
        pairing,
    };

    Kind kind = Kind::none;
    std::size_t header_line = 0;
    std::string name, ref_a, ref_b, ref_c;
    bool left_side = false;
    std::size_t dim = 0;    // main dimension of the section
    std::size_t dim_a = 0;  // auxiliary: base / source dimension
    std::size_t dim_b = 0;  // auxiliary: second dimension
    Matrix table{0, 0, 2}, unit{0, 0, 2}, map{0, 0, 2};
    Matrix delta{0, 0, 2}, eps{0, 0, 2}, rho{0, 0, 2}, eta{0, 0, 2};
    std::vector<Matrix> lact, ract, kappa;
    std::set<std::string> filled;
    std::set<std::string> declared;

    void fail(std::size_t line, std::string msg) {
        if (errors.size() < max_errors) errors.push_back({line, std::move(msg)});
    }

    bool claim_name(std::size_t line, const std::string& n) {
        if (n.empty() || n.find('=') != std::string::npos || n.find(':') != std::string::npos) {
            fail(line, "bad name '" + n + "'");
            return false;
        }
        if (!declared.insert(n).second) {
            fail(line, "name '" + n + "' already declared");
            return false;
        }
        return true;
    }

    // `filled` guards against a row being given twice within one section.
    bool claim_row(std::size_t line, const std::string& key) {
        if (!filled.insert(key).second) {
            fail(line, "duplicate row '" + key + "'");
            return false;
        }
        return true;
    }

    std::optional<std::size_t> bounded_number(std::size_t line, const std::string& tok,
                                              std::size_t bound, const std::string& what) {
        auto n = parse_number(tok);
        if (!n || *n >= bound) {
            fail(line, what + " '" + tok + "' out of range (max " +
                           std::to_string(bound ? bound - 1 : 0) + ")");
            return std::nullopt;
        }
        return n;
    }

    // Reads "<i>:<c>" or "<i>,<j>:<c>" terms from toks[from..], accumulating
    // into a single target row laid out with `stride` for the second index.
    // Scalars must already be reduced: out-of-range coefficients are errors.
    bool read_terms(const std::vector<std::string>& toks, std::size_t from, std::size_t line,
                    std::size_t nidx, std::size_t bound0, std::size_t bound1, Matrix& target,
                    std::size_t target_row) {
        for (std::size_t t = from; t < toks.size(); ++t) {
            const std::string& tok = toks[t];
            if (tok == "+") continue;
            auto colon = tok.find(':');
            if (colon == std::string::npos || tok.find(':', colon + 1) != std::string::npos) {
                fail(line, "bad term '" + tok + "'");
                return false;
            }
            std::string head = tok.substr(0, colon);
            auto coeff = parse_number(tok.substr(colon + 1));
            if (!coeff) {
                fail(line, "bad coefficient in '" + tok + "'");
                return false;
            }
            if (*coeff >= model.p) {
                fail(line, "scalar " + std::to_string(*coeff) + " is out of range for p=" +
                               std::to_string(model.p));
                return false;
            }
            std::size_t col = 0;
            auto comma = head.find(',');
            if (nidx == 1) {
                if (comma != std::string::npos) {
                    fail(line, "term '" + tok + "' takes a single index");
                    return false;
                }
                auto i = bounded_number(line, head, bound0, "index");
                if (!i) return false;
                col = *i;
            } else {
                if (comma == std::string::npos || head.find(',', comma + 1) != std::string::npos) {
                    fail(line, "term '" + tok + "' needs exactly two indices");
                    return false;
                }
                auto i = bounded_number(line, head.substr(0, comma), bound0, "index");
                auto j = bounded_number(line, head.substr(comma + 1), bound1, "index");
                if (!i || !j) return false;
                col = *i * bound1 + *j;
            }
            target.at(target_row, col) =
                (target.at(target_row, col) + static_cast<std::uint32_t>(*coeff)) % model.p;
        }
        return true;
    }

    void start(const std::vector<std::string>& toks, std::size_t line) {
        finalize();
        kind = Kind::skip;
        header_line = line;
        left_side = false;
        filled.clear();
        const std::string& head = toks[0];

        if (head == "algebra") {
            if (toks.size() != 3) return fail(line, "expected: algebra <name> dim=<n>");
            if (!claim_name(line, toks[1])) return;
            auto d = attr(toks[2], "dim");
            auto n = d ? parse_number(*d) : std::nullopt;
            if (!n || *n == 0 || *n > max_dim)
                return fail(line, "algebra dim must be in 1.." + std::to_string(max_dim));
            name = toks[1];
            dim = *n;
            table = Matrix(dim * dim, dim, model.p);
            unit = Matrix(1, dim, model.p);
            kind = Kind::algebra;
            return;
        }
        if (head == "morphism") {
            if (toks.size() != 6 || toks[2] != ":" || toks[4] != "->")
                return fail(line, "expected: morphism <name> : <src> -> <dst>");
            if (!claim_name(line, toks[1])) return;
            const AlgebraDecl* src = model.find_algebra(toks[3]);
            const AlgebraDecl* dst = model.find_algebra(toks[5]);
            if (!src) return fail(line, "unknown algebra '" + toks[3] + "'");
            if (!dst) return fail(line, "unknown algebra '" + toks[5] + "'");
            name = toks[1];
            ref_a = toks[3];
            ref_b = toks[5];
            dim = src->algebra.dim();
            dim_a = dst->algebra.dim();
            map = Matrix(dim, dim_a, model.p);
            kind = Kind::morphism;
            return;
        }
        if (head == "bimodule") {
            if (toks.size() != 5) return fail(line, "expected: bimodule <name> left=<alg> right=<alg> dim=<n>");
            if (!claim_name(line, toks[1])) return;
            auto l = attr(toks[2], "left");
            auto r = attr(toks[3], "right");
            auto d = attr(toks[4], "dim");
            if (!l || !r || !d) return fail(line, "expected: bimodule <name> left=<alg> right=<alg> dim=<n>");
            const AlgebraDecl* la = model.find_algebra(*l);
            const AlgebraDecl* ra = model.find_algebra(*r);
            if (!la) return fail(line, "unknown algebra '" + *l + "'");
            if (!ra) return fail(line, "unknown algebra '" + *r + "'");
            auto n = parse_number(*d);
            if (!n || *n > max_dim) return fail(line, "bimodule dim must be in 0.." + std::to_string(max_dim));
            name = toks[1];
            ref_a = *l;
            ref_b = *r;
            dim = *n;
            lact.assign(la->algebra.dim(), Matrix(dim, dim, model.p));
            ract.assign(ra->algebra.dim(), Matrix(dim, dim, model.p));
            kind = Kind::bimodule;
            return;
        }
        if (head == "coring") {
            if (toks.size() != 4 || toks[2] != "on") return fail(line, "expected: coring <name> on <bimodule>");
            if (!claim_name(line, toks[1])) return;
            const BimoduleDecl* bim = model.find_bimodule(toks[3]);
            if (!bim) return fail(line, "unknown bimodule '" + toks[3] + "'");
            name = toks[1];
            ref_a = toks[3];
            dim = bim->bimodule.dim();
            dim_a = bim->bimodule.left_algebra().dim();
            delta = Matrix(dim, dim * dim, model.p);
            eps = Matrix(dim, dim_a, model.p);
            kind = Kind::coring;
            return;
        }
        if (head == "coring_morphism") {
            if (toks.size() != 7 || toks[2] != ":" || toks[4] != "->")
                return fail(line, "expected: coring_morphism <name> : <C> -> <D> beta=<morphism>");
            if (!claim_name(line, toks[1])) return;
            const CoringDecl* src = model.find_coring(toks[3]);
            const CoringDecl* dst = model.find_coring(toks[5]);
            if (!src) return fail(line, "unknown coring '" + toks[3] + "'");
            if (!dst) return fail(line, "unknown coring '" + toks[5] + "'");
            auto b = attr(toks[6], "beta");
            if (!b) return fail(line, "expected beta=<morphism>");
            const MorphismDecl* beta = model.find_morphism(*b);
            if (!beta) return fail(line, "unknown morphism '" + *b + "'");
            const Algebra& beta_src = model.find_algebra(beta->src)->algebra;
            const Algebra& beta_dst = model.find_algebra(beta->dst)->algebra;
            if (!beta_src.same_presentation(src->coring.base()))
                return fail(line, "beta must start at the base of '" + toks[3] + "'");
            if (!beta_dst.same_presentation(dst->coring.base()))
                return fail(line, "beta must end at the base of '" + toks[5] + "'");
            name = toks[1];
            ref_a = toks[3];
            ref_b = toks[5];
            ref_c = *b;
            dim = src->coring.dim();
            dim_a = dst->coring.dim();
            map = Matrix(dim, dim_a, model.p);
            kind = Kind::coring_morphism;
            return;
        }
        if (head == "comodule") {
            if (toks.size() != 5 && toks.size() != 6)
                return fail(line, "expected: comodule <name> over <coring> dim=<n> [side=left]");
            if (toks[2] != "over") return fail(line, "expected: comodule <name> over <coring> dim=<n> [side=left]");
            if (!claim_name(line, toks[1])) return;
            const CoringDecl* cor = model.find_coring(toks[3]);
            if (!cor) return fail(line, "unknown coring '" + toks[3] + "'");
            auto d = attr(toks[4], "dim");
            auto n = d ? parse_number(*d) : std::nullopt;
            if (!n || *n > max_dim) return fail(line, "comodule dim must be in 0.." + std::to_string(max_dim));
            left_side = false;
            if (toks.size() == 6) {
                auto s = attr(toks[5], "side");
                if (!s || (*s != "left" && *s != "right")) return fail(line, "side must be left or right");
                left_side = (*s == "left");
            }
            name = toks[1];
            ref_a = toks[3];
            dim = *n;
            dim_a = cor->coring.dim();
            dim_b = cor->coring.base().dim();
            lact.assign(dim_b, Matrix(dim, dim, model.p));
            ract.assign(dim_b, Matrix(dim, dim, model.p));
            rho = left_side ? Matrix(dim, dim_a * dim, model.p) : Matrix(dim, dim * dim_a, model.p);
            kind = Kind::comodule;
            return;
        }
        if (head == "comodule_map") {
            if (toks.size() != 6 || toks[2] != ":" || toks[4] != "->")
                return fail(line, "expected: comodule_map <name> : <M> -> <N>");
            if (!claim_name(line, toks[1])) return;
            const ComoduleDecl* src = model.find_comodule(toks[3]);
            const ComoduleDecl* dst = model.find_comodule(toks[5]);
            if (!src) return fail(line, "unknown comodule '" + toks[3] + "'");
            if (!dst) return fail(line, "unknown comodule '" + toks[5] + "'");
            if (src->left_side || dst->left_side)
                return fail(line, "comodule maps must join right comodules");
            if (src->coring != dst->coring)
                return fail(line, "comodule map endpoints must share a coring");
            name = toks[1];
            ref_a = toks[3];
            ref_b = toks[5];
            dim = src->dim();
            dim_a = dst->dim();
            map = Matrix(dim, dim_a, model.p);
            kind = Kind::comodule_map;
            return;
        }
        if (head == "pairing") {
            if (toks.size() != 4) return fail(line, "expected: pairing <name> t=<alg> coring=<C>");
            if (!claim_name(line, toks[1])) return;
            auto t = attr(toks[2], "t");
            auto c = attr(toks[3], "coring");
            if (!t || !c) return fail(line, "expected: pairing <name> t=<alg> coring=<C>");
            const AlgebraDecl* ring = model.find_algebra(*t);
            const CoringDecl* cor = model.find_coring(*c);
            if (!ring) return fail(line, "unknown algebra '" + *t + "'");
            if (!cor) return fail(line, "unknown coring '" + *c + "'");
            name = toks[1];
            ref_a = *t;
            ref_b = *c;
            dim = ring->algebra.dim();
            dim_a = cor->coring.dim();
            dim_b = cor->coring.base().dim();
            eta = Matrix(dim_b, dim, model.p);
            kappa.assign(dim, Matrix(dim_a, dim_b, model.p));
            kind = Kind::pairing;
            return;
        }
        fail(line, "unknown directive '" + head + "'");
    }

    void row(const std::vector<std::string>& toks, std::size_t line) {
        if (kind == Kind::skip) return;
        const std::string& head = toks[0];

        // "<key> = terms" rows with one leading index.
        auto one_index_row = [&](std::size_t bound, std::size_t term_bound, Matrix& target,
                                 const std::string& what) {
            if (toks.size() < 3 || toks[2] != "=") return fail(line, "expected: " + head + " <i> = <terms>");
            auto i = bounded_number(line, toks[1], bound, what);
            if (!i || !claim_row(line, head + " " + toks[1])) return;
            read_terms(toks, 3, line, 1, term_bound, 0, target, *i);
        };
        // "<key> <a> <i> = terms" action rows.
        auto action_row = [&](std::vector<Matrix>& acts, std::size_t alg_dim, const std::string& what) {
            if (toks.size() < 4 || toks[3] != "=") return fail(line, "expected: " + head + " <a> <i> = <terms>");
            auto a = bounded_number(line, toks[1], alg_dim, what);
            auto i = bounded_number(line, toks[2], dim, "index");
            if (!a || !i || !claim_row(line, head + " " + toks[1] + " " + toks[2])) return;
            read_terms(toks, 4, line, 1, dim, 0, acts[*a], *i);
        };

        if (head == "mul" && kind == Kind::algebra) {
            if (toks.size() < 4 || toks[3] != "=") return fail(line, "expected: mul <i> <j> = <terms>");
            auto i = bounded_number(line, toks[1], dim, "index");
            auto j = bounded_number(line, toks[2], dim, "index");
            if (!i || !j || !claim_row(line, "mul " + toks[1] + " " + toks[2])) return;
            read_terms(toks, 4, line, 1, dim, 0, table, *i * dim + *j);
            return;
        }
        if (head == "unit" && kind == Kind::algebra) {
            if (toks.size() < 2 || toks[1] != "=") return fail(line, "expected: unit = <terms>");
            if (!claim_row(line, "unit")) return;
            read_terms(toks, 2, line, 1, dim, 0, unit, 0);
            return;
        }
        if (head == "map" && (kind == Kind::morphism || kind == Kind::comodule_map))
            return one_index_row(dim, dim_a, map, "index");
        if (head == "theta" && kind == Kind::coring_morphism)
            return one_index_row(dim, dim_a, map, "index");
        if (head == "lact" && kind == Kind::bimodule)
            return action_row(lact, lact.size(), "algebra index");
        if (head == "ract" && kind == Kind::bimodule)
            return action_row(ract, ract.size(), "algebra index");
        if (head == "lact" && kind == Kind::comodule) {
            if (!left_side) return fail(line, "right comodules take ract rows");
            return action_row(lact, dim_b, "algebra index");
        }
        if (head == "ract" && kind == Kind::comodule) {
            if (left_side) return fail(line, "left comodules take lact rows");
            return action_row(ract, dim_b, "algebra index");
        }
        if (head == "delta" && kind == Kind::coring) {
            if (toks.size() < 3 || toks[2] != "=") return fail(line, "expected: delta <i> = <terms>");
            auto i = bounded_number(line, toks[1], dim, "index");
            if (!i || !claim_row(line, "delta " + toks[1])) return;
            read_terms(toks, 3, line, 2, dim, dim, delta, *i);
            return;
        }
        if (head == "eps" && kind == Kind::coring)
            return one_index_row(dim, dim_a, eps, "index");
        if (head == "rho" && kind == Kind::comodule) {
            if (toks.size() < 3 || toks[2] != "=") return fail(line, "expected: rho <i> = <terms>");
            auto i = bounded_number(line, toks[1], dim, "index");
            if (!i || !claim_row(line, "rho " + toks[1])) return;
            if (left_side)
                read_terms(toks, 3, line, 2, dim_a, dim, rho, *i);
            else
                read_terms(toks, 3, line, 2, dim, dim_a, rho, *i);
            return;
        }
        if (head == "eta" && kind == Kind::pairing)
            return one_index_row(dim_b, dim, eta, "index");
        if (head == "kappa" && kind == Kind::pairing) {
            if (toks.size() < 4 || toks[3] != "=") return fail(line, "expected: kappa <k> <i> = <terms>");
            auto k = bounded_number(line, toks[1], dim, "ring index");
            auto i = bounded_number(line, toks[2], dim_a, "index");
            if (!k || !i || !claim_row(line, "kappa " + toks[1] + " " + toks[2])) return;
            read_terms(toks, 4, line, 1, dim_b, 0, kappa[*k], *i);
            return;
        }
        fail(line, "'" + head + "' does not belong to this section");
    }

    void finalize() {
        Kind k = kind;
        kind = Kind::none;
        switch (k) {
            case Kind::none:
            case Kind::skip:
                return;
            case Kind::algebra:
                try {
                    model.algebras.push_back({name, Algebra(model.p, dim, table, unit), header_line});
                } catch (const std::exception& e) {
                    fail(header_line, name + ": " + e.what());
                }
                return;
            case Kind::morphism:
                model.morphisms.push_back({name, ref_a, ref_b, AlgebraMorphism{map}, header_line});
                return;
            case Kind::bimodule:
                try {
                    const Algebra& la = model.find_algebra(ref_a)->algebra;
                    const Algebra& ra = model.find_algebra(ref_b)->algebra;
                    model.bimodules.push_back({name, ref_a, ref_b, Bimodule(la, ra, dim, lact, ract), header_line});
                } catch (const std::exception& e) {
                    fail(header_line, name + ": " + e.what());
                }
                return;
            case Kind::coring:
                try {
                    const Bimodule& carrier = model.find_bimodule(ref_a)->bimodule;
                    model.corings.push_back({name, ref_a, Coring::from_raw_delta(carrier, delta, eps), header_line});
                } catch (const std::exception& e) {
                    fail(header_line, name + ": " + e.what());
                }
                return;
            case Kind::coring_morphism: {
                const CoringDecl* src = model.find_coring(ref_a);
                const CoringDecl* dst = model.find_coring(ref_b);
                const MorphismDecl* beta = model.find_morphism(ref_c);
                model.coring_morphisms.push_back(
                    {name, ref_a, ref_b, ref_c,
                     CoringMorphism{src->coring, dst->coring, beta->morphism, map}, header_line});
                return;
            }
            case Kind::comodule:
                try {
                    const Coring& cor = model.find_coring(ref_a)->coring;
                    ComoduleDecl decl;
                    decl.name = name;
                    decl.coring = ref_a;
                    decl.left_side = left_side;
                    decl.line = header_line;
                    if (left_side) {
                        Bimodule carrier = Bimodule::left_module(cor.base(), dim, lact);
                        decl.left_comodule = LeftComodule::from_raw_rho(cor, carrier, rho);
                    } else {
                        Bimodule carrier = Bimodule::right_module(cor.base(), dim, ract);
                        decl.right_comodule = Comodule::from_raw_rho(cor, carrier, rho);
                    }
                    model.comodules.push_back(std::move(decl));
                } catch (const std::exception& e) {
                    fail(header_line, name + ": " + e.what());
                }
                return;
            case Kind::comodule_map:
                model.comodule_maps.push_back({name, ref_a, ref_b, map, header_line});
                return;
            case Kind::pairing:
                try {
                    const Algebra& ring = model.find_algebra(ref_a)->algebra;
                    const Coring& cor = model.find_coring(ref_b)->coring;
                    DualRing dual = dual_ring(cor, DualSide::left);
                    Matrix kappa_map(dim, dual.alg.dim(), model.p);
                    for (std::size_t r = 0; r < dim; ++r) {
                        auto coords = dual.maps.coords_of_map(kappa[r]);
                        if (!coords) {
                            fail(header_line, name + ": kappa row " + std::to_string(r) +
                                                  " is not left linear over the base");
                            return;
                        }
                        kappa_map.set_row(r, *coords);
                    }
                    model.pairings.push_back(
                        {name, ref_a, ref_b,
                         make_pairing(ARing{ring, AlgebraMorphism{eta}}, cor, AlgebraMorphism{kappa_map}),
                         header_line});
                } catch (const std::exception& e) {
                    fail(header_line, name + ": " + e.what());
                }
                return;
        }
    }
};

std::string term_list_single(const Matrix& row_source, std::size_t row) {
    std::string out;
    for (std::size_t c = 0; c < row_source.cols(); ++c) {
        if (row_source.at(row, c) == 0) continue;
        if (!out.empty()) out += " + ";
        out += std::to_string(c) + ":" + std::to_string(row_source.at(row, c));
    }
    return out;
}

std::string term_list_pair(const Matrix& row_source, std::size_t row, std::size_t stride) {
    std::string out;
    for (std::size_t c = 0; c < row_source.cols(); ++c) {
        if (row_source.at(row, c) == 0) continue;
        if (!out.empty()) out += " + ";
        out += std::to_string(c / stride) + "," + std::to_string(c % stride) + ":" +
               std::to_string(row_source.at(row, c));
    }
    return out;
}

void emit_actions(std::ostream& os, const std::string& key, const Bimodule& m, bool left) {
    const std::size_t n = left ? m.left_algebra().dim() : m.right_algebra().dim();
    for (std::size_t a = 0; a < n; ++a) {
        const Matrix& act = left ? m.left_action(a) : m.right_action(a);
        for (std::size_t i = 0; i < m.dim(); ++i) {
            std::string terms = term_list_single(act, i);
            if (!terms.empty())
                os << key << " " << a << " " << i << " = " << terms << "\n";
        }
    }
}

} // namespace

const AlgebraDecl* ModelFile::find_algebra(const std::string& name) const {
    for (const auto& d : algebras)
        if (d.name == name) return &d;
    return nullptr;
}

const MorphismDecl* ModelFile::find_morphism(const std::string& name) const {
    for (const auto& d : morphisms)
        if (d.name == name) return &d;
    return nullptr;
}

const BimoduleDecl* ModelFile::find_bimodule(const std::string& name) const {
    for (const auto& d : bimodules)
        if (d.name == name) return &d;
    return nullptr;
}

const CoringDecl* ModelFile::find_coring(const std::string& name) const {
    for (const auto& d : corings)
        if (d.name == name) return &d;
    return nullptr;
}

const CoringMorphismDecl* ModelFile::find_coring_morphism(const std::string& name) const {
    for (const auto& d : coring_morphisms)
        if (d.name == name) return &d;
    return nullptr;
}

const ComoduleDecl* ModelFile::find_comodule(const std::string& name) const {
    for (const auto& d : comodules)
        if (d.name == name) return &d;
    return nullptr;
}

const ComoduleMapDecl* ModelFile::find_comodule_map(const std::string& name) const {
    for (const auto& d : comodule_maps)
        if (d.name == name) return &d;
    return nullptr;
}

const PairingDecl* ModelFile::find_pairing(const std::string& name) const {
    for (const auto& d : pairings)
        if (d.name == name) return &d;
    return nullptr;
}

std::string ParseError::render() const {
    if (line == 0) return "error: " + message;
    return "line " + std::to_string(line) + ": " + message;
}

ParseResult parse_model(const std::string& text) {
    Parser ps;
    std::vector<std::string> lines;
    {
        std::string cur;
        for (char ch : text) {
            if (ch == '\n') {
                lines.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        if (!cur.empty()) lines.push_back(cur);
    }

    bool saw_field = false;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        if (ps.errors.size() >= max_errors) break;
        std::string& raw = lines[li];
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        auto toks = tokenize(raw);
        if (toks.empty()) continue;
        const std::size_t line = li + 1;
        const std::string& head = toks[0];

        if (head == "field") {
            if (saw_field) {
                ps.fail(line, "duplicate field declaration");
                continue;
            }
            auto v = toks.size() == 2 ? attr(toks[1], "p") : std::nullopt;
            auto n = v ? parse_number(*v) : std::nullopt;
            if (toks.size() != 2 || !n || !is_prime(*n) || *n > 251) {
                ps.fail(line, "expected: field p=<prime>, with p a prime at most 251");
                break;
            }
            ps.model.p = static_cast<std::uint32_t>(*n);
            saw_field = true;
            continue;
        }
        if (!saw_field) {
            ps.fail(line, "field declaration must come first");
            break;
        }
        if (is_section(head))
            ps.start(toks, line);
        else
            ps.row(toks, line);
    }
    ps.finalize();
    if (!saw_field && ps.errors.empty()) ps.fail(0, "missing field declaration");

    ParseResult out;
    out.errors = std::move(ps.errors);
    if (out.errors.empty()) out.model = std::move(ps.model);
    return out;
}

std::string render_model(const ModelFile& model) {
    std::ostringstream os;
    os << "field p=" << model.p << "\n";

    for (const auto& d : model.algebras) {
        const std::size_t n = d.algebra.dim();
        os << "\nalgebra " << d.name << " dim=" << n << "\n";
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::string terms = term_list_single(d.algebra.table(), i * n + j);
                if (!terms.empty()) os << "mul " << i << " " << j << " = " << terms << "\n";
            }
        std::string u = term_list_single(d.algebra.unit(), 0);
        if (!u.empty()) os << "unit = " << u << "\n";
    }
    for (const auto& d : model.morphisms) {
        os << "\nmorphism " << d.name << " : " << d.src << " -> " << d.dst << "\n";
        for (std::size_t i = 0; i < d.morphism.map.rows(); ++i) {
            std::string terms = term_list_single(d.morphism.map, i);
            if (!terms.empty()) os << "map " << i << " = " << terms << "\n";
        }
    }
    for (const auto& d : model.bimodules) {
        os << "\nbimodule " << d.name << " left=" << d.left << " right=" << d.right
           << " dim=" << d.bimodule.dim() << "\n";
        emit_actions(os, "lact", d.bimodule, true);
        emit_actions(os, "ract", d.bimodule, false);
    }
    for (const auto& d : model.corings) {
        os << "\ncoring " << d.name << " on " << d.carrier << "\n";
        Matrix raw = d.coring.delta_raw();
        for (std::size_t i = 0; i < d.coring.dim(); ++i) {
            std::string terms = term_list_pair(raw, i, d.coring.dim());
            if (!terms.empty()) os << "delta " << i << " = " << terms << "\n";
        }
        for (std::size_t i = 0; i < d.coring.dim(); ++i) {
            std::string terms = term_list_single(d.coring.eps(), i);
            if (!terms.empty()) os << "eps " << i << " = " << terms << "\n";
        }
    }
    for (const auto& d : model.coring_morphisms) {
        os << "\ncoring_morphism " << d.name << " : " << d.src << " -> " << d.dst
           << " beta=" << d.beta << "\n";
        for (std::size_t i = 0; i < d.morphism.theta.rows(); ++i) {
            std::string terms = term_list_single(d.morphism.theta, i);
            if (!terms.empty()) os << "theta " << i << " = " << terms << "\n";
        }
    }
    for (const auto& d : model.comodules) {
        os << "\ncomodule " << d.name << " over " << d.coring << " dim=" << d.dim()
           << (d.left_side ? " side=left" : "") << "\n";
        if (d.left_side) {
            const LeftComodule& com = *d.left_comodule;
            emit_actions(os, "lact", com.carrier(), true);
            Matrix raw = com.rho_raw();
            for (std::size_t i = 0; i < com.dim(); ++i) {
                std::string terms = term_list_pair(raw, i, com.dim());
                if (!terms.empty()) os << "rho " << i << " = " << terms << "\n";
            }
        } else {
            const Comodule& com = *d.right_comodule;
            emit_actions(os, "ract", com.carrier(), false);
            Matrix raw = com.rho_raw();
            for (std::size_t i = 0; i < com.dim(); ++i) {
                std::string terms = term_list_pair(raw, i, com.coring().dim());
                if (!terms.empty()) os << "rho " << i << " = " << terms << "\n";
            }
        }
    }
    for (const auto& d : model.comodule_maps) {
        os << "\ncomodule_map " << d.name << " : " << d.src << " -> " << d.dst << "\n";
        for (std::size_t i = 0; i < d.map.rows(); ++i) {
            std::string terms = term_list_single(d.map, i);
            if (!terms.empty()) os << "map " << i << " = " << terms << "\n";
        }
    }
    for (const auto& d : model.pairings) {
        os << "\npairing " << d.name << " t=" << d.ring << " coring=" << d.coring << "\n";
        const Matrix& eta = d.pairing.ring.unit_map.map;
        for (std::size_t i = 0; i < eta.rows(); ++i) {
            std::string terms = term_list_single(eta, i);
            if (!terms.empty()) os << "eta " << i << " = " << terms << "\n";
        }
        for (std::size_t k = 0; k < d.pairing.ring.alg.dim(); ++k) {
            Matrix ev = d.pairing.evaluation(k);
            for (std::size_t i = 0; i < ev.rows(); ++i) {
                std::string terms = term_list_single(ev, i);
                if (!terms.empty()) os << "kappa " << k << " " << i << " = " << terms << "\n";
            }
        }
    }
    return os.str();
}

} // namespace coringlab
