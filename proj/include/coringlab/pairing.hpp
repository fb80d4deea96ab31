#pragma once

#include <optional>

#include "coringlab/coring.hpp"

namespace coringlab {

// An algebra T together with a unit morphism from the coring base, making T a
// ring over that base.
struct ARing {
    Algebra alg;
    AlgebraMorphism unit_map;  // base -> T

    std::vector<std::string> validate(const Algebra& base) const;
};

// Measuring pairing (T, C): kappa lands in the left convolution dual, so that
// <t, c> = kappa(t)(c) in the base algebra.
struct MeasuringPairing {
    ARing ring;
    Coring coring;
    DualRing dual;          // left convolution dual of the coring
    AlgebraMorphism kappa;  // T -> dual.alg
    bool alpha_flag = false;        // verdict of alpha_check at construction
    bool kappa_surjective = false;  // density read as surjectivity onto the dual

    // <t_k, -> as a dim C x dim A matrix for the k-th ring basis vector.
    Matrix evaluation(std::size_t k) const { return dual.map_from_coords(kappa.map.row(k)); }
};

MeasuringPairing make_pairing(ARing ring, Coring coring, AlgebraMorphism kappa);

// T = *C with kappa the identity.
MeasuringPairing canonical_pairing(const Coring& c);

std::vector<std::string> validate_pairing(const MeasuringPairing& p);

// Two-leg injectivity criterion: the carrier is projective as a left module
// over the base, and evaluation against the ring separates the carrier.
struct AlphaCheck {
    bool carrier_projective = false;
    bool separates = false;

    bool ok() const { return carrier_projective && separates; }
    std::string reason() const;
};

AlphaCheck alpha_check(const MeasuringPairing& p);

// Right T-module on the comodule carrier, m.t = sum m0 <t, m1>.
Bimodule module_from_comodule(const MeasuringPairing& p, const Comodule& m);

// The coring as a right module over its own pairing ring, c.t = sum c1 <t, c2>.
Bimodule coring_as_module(const MeasuringPairing& p);

// w as a right module over the coring base, acting through the ring unit.
Bimodule restrict_to_base(const MeasuringPairing& p, const Bimodule& w);

// The flattened right action w -> Hom(T, w): row i gives t |-> e_i.t.
Matrix rho_hom_matrix(const Bimodule& w);

// Evaluation map Q(w (x)_A C) -> Hom(T, w) sending w (x) c to t |-> w<t, c>;
// wc must be the tensor context over restrict_to_base(p, w).
Matrix alpha_matrix(const MeasuringPairing& p, const Bimodule& w, const TensorProduct& wc);

// The largest subspace of w whose T-action is induced by a coaction: the
// preimage of Im(alpha) under rho_hom, with the coaction obtained by
// inverting alpha on it.
struct RationalPart {
    Subspace subspace;          // inside w
    Bimodule module;            // the subspace as a right T-module
    Matrix embedding{0, 0, 2};  // module coordinates -> w coordinates
    Comodule comodule;          // carrier = base restriction of `module`
};

RationalPart rat_functor(const MeasuringPairing& p, const Bimodule& w);

// Full-module comodule recovery; when the module is not rational the
// obstruction is an element outside the rational part.
struct ComoduleRecovery {
    std::optional<Comodule> comodule;
    std::optional<Matrix> obstruction;
};

ComoduleRecovery comodule_from_module(const MeasuringPairing& p, const Bimodule& w);

} // namespace coringlab
