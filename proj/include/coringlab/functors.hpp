#pragma once

#include <string>
#include <vector>

#include "coringlab/pairing.hpp"
#include "coringlab/sharp.hpp"

namespace coringlab {

// ---------- comodule induction along a coring morphism ----------

// M (x)_A B as a right D-comodule: the coaction sends m (x) b to
// sum m0 (x) theta(m1).b through the identification (M(x)_A B)(x)_B D =
// M(x)_A D, which is materialized and checked on construction.
struct InducedComodule {
    TensorProduct tensor;  // M (x)_A B over the source base
    Comodule comodule;     // carrier = tensor.module as a right B-module
};

InducedComodule induction(const CoringMorphism& phi, const Comodule& m);

// Same carrier, coaction pushed through theta; same-base morphisms only.
Comodule corestriction(const CoringMorphism& phi, const Comodule& m);

// Transport f (x) id of a colinear map f: M -> M' through induction.
Matrix induction_on_map(const InducedComodule& a, const InducedComodule& b, const Matrix& f);

// ---------- bicomodules and the cotensor functor ----------

// A carrier that is simultaneously a right C-comodule and a left D-comodule
// with commuting coactions, together with the unit section C -> X and the
// counit collapse X -> B used by the hom-set bijections.
struct Bicomodule {
    Comodule right_side;
    LeftComodule left_side;
    Matrix unit_embed{0, 0, 2};       // c |-> 1_B (x) c
    Matrix counit_collapse{0, 0, 2};  // b (x) c |-> b.beta(eps(c))

    std::vector<std::string> validate() const;
};

// X = B (x)_A C with coactions b (x) c |-> sum b.theta(c1) (x) c2 and
// id (x) delta.
Bicomodule bicomodule_induced(const CoringMorphism& phi);
// X = C with coactions (theta (x) id) o delta and delta; same base only.
Bicomodule bicomodule_corestrict(const CoringMorphism& phi);

// N box_D X: the cotensor kernel carrying the right C-coaction inherited
// from the bicomodule, id box rho.
struct AdInduction {
    Bicomodule bicomodule;
    CotensorResult cot;         // N (x)_B X with the defining kernel
    Bimodule module;            // the kernel as a right A-module
    Matrix embedding{0, 0, 2};  // module coords -> N (x) X quotient coords
    Comodule comodule;          // right C-comodule on the kernel
};

AdInduction cotensor_comodule(const Comodule& n, const Bicomodule& x);
AdInduction ad_induction(const CoringMorphism& phi, const Comodule& n);

// Transport of a colinear map f: N -> N' through the cotensor, f box id.
Matrix ad_induction_on_map(const AdInduction& a, const AdInduction& b, const Matrix& f);

// ---------- module-level induction and coinduction ----------

// Ring data for M |-> M (x)_A B from right T-modules to right S-modules:
// T a ring over A, S a ring over B, and xi: S -> T matching the units
// through beta.
struct InductionContext {
    Algebra base_a;
    Algebra base_b;
    AlgebraMorphism beta;  // A -> B
    ARing t;               // over A
    ARing s;               // over B
    AlgebraMorphism xi;    // S -> T

    std::vector<std::string> validate() const;
};

struct InducedModule {
    TensorProduct tensor;  // M (x)_A B
    Bimodule module;       // right S-module acting through xi
};

InducedModule induced_module_functor(const InductionContext& ctx, const Bimodule& m);

// Hom_{-S}(T (x)_A B, N) as a right T-module, (phi.t)(x) = phi(t.x).
struct HomModule {
    InducedModule tb;            // T (x)_A B with its right S-action
    std::vector<Matrix> left_t;  // left multiplication by T on the quotient
    Bimodule tb_bimodule;        // T (x)_A B as a (T, S)-bimodule
    HomSpace maps;               // right S-linear maps into N
    Bimodule module;             // right T-module on the hom space
};

HomModule hom_module_functor(const InductionContext& ctx, const Bimodule& n);

// Trace of the k-subgenerated class inside Hom_{-S}(T (x)_A B, N); defined
// when both k (x)_A B and n are subgenerated by l.
struct CoindGeneral {
    HomModule hom;
    Subspace subspace;
    Bimodule module;
    Matrix embedding{0, 0, 2};
};

CoindGeneral coind_general(const InductionContext& ctx, const Bimodule& k, const Bimodule& l,
                           const Bimodule& n);

// The canonical-isomorphism chain Hom_S(M(x)B, N) = Hom_S(M(x)_T(T(x)B), N)
// = Hom_T(M, Hom_S(T(x)B, N)) = Hom_T(M, Coind(N)), every step a matrix,
// against the one-shot currying map.
struct GeneralAdjunction {
    InducedModule induced;
    CoindGeneral coind;
    HomSpace hom_s;  // Hom_S(M (x) B, N)
    HomSpace hom_t;  // Hom_T(M, Coind(N))
    Matrix chain{0, 0, 2};
    Matrix direct{0, 0, 2};
    bool agree = false;
    bool bijective = false;
};

GeneralAdjunction verify_adjunction_general(const InductionContext& ctx, const Bimodule& k,
                                            const Bimodule& l, const Bimodule& m,
                                            const Bimodule& n);

// ---------- pairing morphisms and measured coinduction ----------

// A morphism of measuring pairings (T, C) -> (S, D): a coring morphism
// theta over beta and a ring morphism xi: S -> T with
// <s, theta(c)> = beta(<xi(s), c>).
struct PairingMorphism {
    MeasuringPairing p;  // (T, C) over A
    MeasuringPairing q;  // (S, D) over B
    CoringMorphism phi;  // C -> D over beta
    AlgebraMorphism xi;  // S -> T
};

std::vector<std::string> validate_pairing_morphism(const PairingMorphism& pm);

InductionContext induction_context(const PairingMorphism& pm);

// Rational part of Hom_{-S}(T (x)_A B, N) over the source pairing.
struct CoindComodule {
    HomModule hom;
    RationalPart rat;
    Comodule comodule;
};

CoindComodule coind_measuring(const PairingMorphism& pm, const Comodule& n);

// ---------- coinduction from the compatible sharp module ----------

// Rational part of Hom_{-*D}(_#C, N), where _#C is the beta image of the
// source dual with its lowered actions; requires a compatible morphism and
// alpha-sound canonical pairings on both corings.
struct CoindCompatible {
    SharpSpaces sharp;
    Bimodule lower;       // _#C as a right module over the target dual
    HomSpace maps;        // right-linear maps _#C -> N
    Bimodule hom_module;  // right module over the source dual
    RationalPart rat;
    Comodule comodule;
};

CoindCompatible coind_compatible(const CoringMorphism& phi, const Comodule& n);

Matrix coind_compatible_on_map(const CoindCompatible& a, const CoindCompatible& b,
                               const Matrix& f);

// ---------- hom-set bijections of the compatible coinduction ----------

struct AdjunctionContext {
    CoringMorphism phi;
    Comodule m;  // over the source coring
    Comodule n;  // over the target coring
    InducedComodule induced;
    CoindCompatible coind;
};

AdjunctionContext adjunction_context(const CoringMorphism& phi, const Comodule& m,
                                     const Comodule& n);

// kappa: carrier matrix of a D-colinear map induction(m) -> n; the result
// sends m to the map h |-> kappa(sum m0 (x) h(m1)) inside the coinduction.
Matrix adjunction_phi(const AdjunctionContext& ctx, const Matrix& kappa);
// zeta: carrier matrix of a C-colinear map m -> coind(n); the result sends
// m (x) b to zeta(m)(beta o eps).b.
Matrix adjunction_psi(const AdjunctionContext& ctx, const Matrix& zeta);

// The two bijections realized between the colinear hom subspaces.
struct AdjunctionWitness {
    HomSpace hom_d;  // colinear maps induction(m) -> n
    HomSpace hom_c;  // colinear maps m -> coind(n)
    Matrix phi_matrix{0, 0, 2};
    Matrix psi_matrix{0, 0, 2};
    bool phi_colinear = false;
    bool psi_colinear = false;
    bool mutually_inverse = false;
};

AdjunctionWitness adjunction_witness(const AdjunctionContext& ctx);

// ---------- hom-set bijections of the cotensor coinduction ----------

struct AdAdjunctionContext {
    CoringMorphism phi;
    Comodule m;  // over the source coring
    Comodule n;  // over the target coring
    InducedComodule induced;
    AdInduction ad;
};

AdAdjunctionContext ad_adjunction_context(const CoringMorphism& phi, const Comodule& m,
                                          const Comodule& n);

// f |-> (m |-> sum f(m0 (x) 1) (x) m1), landing in the cotensor subspace.
Matrix ad_forward(const AdAdjunctionContext& ctx, const Matrix& f);
// g |-> (m (x) b |-> collapse(g(m)).b) with the counit collapse on X.
Matrix ad_backward(const AdAdjunctionContext& ctx, const Matrix& g);

struct AdAdjunction {
    HomSpace hom_d;  // colinear maps induction(m) -> n
    HomSpace hom_c;  // colinear maps m -> cotensor coinduction of n
    Matrix forward{0, 0, 2};
    Matrix backward{0, 0, 2};
    bool forward_colinear = false;
    bool backward_colinear = false;
    bool mutually_inverse = false;
};

AdAdjunction ad_adjunction(const AdAdjunctionContext& ctx);

// ---------- the natural comparison of the two coinductions ----------

struct ComoduleArrow {
    std::size_t from = 0;  // indices into the instance list
    std::size_t to = 0;
    Matrix map{0, 0, 2};  // carrier matrix N_from -> N_to
};

struct NaturalIsoReport {
    std::size_t instances = 0;
    std::size_t squares = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

// For every instance N builds the comparison map by transporting the
// identity through the two hom-set bijections, checks it is a colinear
// isomorphism, and checks one naturality square per supplied arrow.
NaturalIsoReport verify_natural_iso(const CoringMorphism& phi,
                                    const std::vector<Comodule>& instances,
                                    const std::vector<ComoduleArrow>& arrows);

// ---------- the cotensor as a centralizer ----------

// For a pairing whose evaluations are bilinear, the cotensor M box N equals
// the centralizer of the two opposite ring actions on M (x)_B N, and is the
// bimodule hom space from the opposite ring; gamma and beta realize the
// isomorphism, gamma(x)(s) = s.x and beta(f) = f(1).
struct CenterWitness {
    CotensorResult cot;
    Subspace center;
    bool subspaces_equal = false;
    Bimodule op_bimodule;  // M (x)_B N over the opposite ring on both sides
    HomSpace hom;          // bimodule maps from the opposite ring
    Matrix gamma{0, 0, 2};
    Matrix beta_inv{0, 0, 2};
    bool gamma_total = false;
    bool beta_total = false;
    bool mutually_inverse = false;
};

CenterWitness cotensor_as_center(const MeasuringPairing& q, const Comodule& m,
                                 const LeftComodule& n);

} // namespace coringlab
