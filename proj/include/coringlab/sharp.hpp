#pragma once

#include <utility>

#include "coringlab/coring.hpp"

namespace coringlab {

// For a coring morphism theta: C -> D over beta: A -> B, the space
// #C = Hom_{A-}(C, B) of left-linear maps into the larger base, carrying a
// left *C-action (f -> h)(c) = sum h(c1 f(c2)) and a right *D-action
// (h <- g)(c) = sum g(theta(c1) h(c2)).  Inside it sit the images of
// postcomposition with beta (on *C) and precomposition with theta (on *D);
// both are cyclic, and the morphism is compatible when the theta image is
// contained in the beta image.
struct SharpSpaces {
    CoringMorphism phi;
    DualRing dual_c;  // left convolution dual of the source
    DualRing dual_d;  // left convolution dual of the target
    HomSpace maps;    // #C as a subspace of dim C x dim B matrices

    std::vector<Matrix> lact_c;  // coordinates of f_r -> h per *C basis element
    std::vector<Matrix> ract_d;  // coordinates of h <- g_r per *D basis element

    Matrix beta_into{0, 0, 2};   // *C coords -> #C coords, f |-> beta o f
    Matrix theta_into{0, 0, 2};  // *D coords -> #C coords, g |-> g o theta
    Subspace img_beta;           // image of beta o -
    Subspace img_theta;          // image of - o theta
    bool compatible = false;     // img_theta inside img_beta
    bool cyclic_left = false;    // img_beta = *C -> (beta o eps_C)
    bool cyclic_right = false;   // img_theta = (eps_D o theta) <- *D

    Matrix map_at(std::size_t i) const { return maps.map_at(i); }

    // Actions on #C coordinate rows; f_coords lives in *C, g_coords in *D.
    Matrix act_left(const Matrix& f_coords, const Matrix& h_coords) const;
    Matrix act_right(const Matrix& h_coords, const Matrix& g_coords) const;
};

SharpSpaces sharp_spaces(const CoringMorphism& phi);

// Ring structure on the beta image by multiplying representatives,
// (beta o f) * (beta o g) := beta o (f *_l g).  When postcomposition with
// beta has a kernel that is not a convolution ideal the product depends on
// the representatives; the witness holds *C coordinate rows (u, v) with
// beta o u = 0 yet beta o (u *_l v) != 0 (or mirrored).
struct SharpRing {
    bool well_defined = false;
    std::optional<std::pair<Matrix, Matrix>> witness;
    Algebra alg;                   // on the img_beta basis when well defined
    Matrix unit_coords{0, 0, 2};   // beta o eps_C in img_beta coordinates
};

SharpRing sharp_ring(const SharpSpaces& s);

// The beta image as a right *D-module in its own coordinates; requires a
// compatible morphism (otherwise the action leaves the subspace).
Bimodule lower_sharp_module(const SharpSpaces& s);

// The left *C-action restricted to the beta image (stable by cyclicity),
// one coordinate matrix per *C basis element.
std::vector<Matrix> lower_left_action(const SharpSpaces& s);

} // namespace coringlab
