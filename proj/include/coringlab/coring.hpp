#pragma once

#include "coringlab/tensor.hpp"

namespace coringlab {

// A-coring: an (A, A)-bimodule with comultiplication into C (x)_A C and
// counit into A.  The comultiplication is stored post-projection, i.e. as a
// map into the computed quotient basis of C (x)_A C.
class Coring {
public:
    Coring() = default;

    // delta_raw has one row per basis element of C, giving raw C (x) C
    // coordinates (row-major pairs); it is projected on construction.
    static Coring from_raw_delta(Bimodule carrier, const Matrix& delta_raw, Matrix eps);

    // C = A with a (x) a' -> a a' as counit and a -> 1 (x) a as
    // comultiplication.
    static Coring trivial(const Algebra& a);

    const Bimodule& carrier() const { return carrier_; }
    const Algebra& base() const { return carrier_.left_algebra(); }
    std::size_t dim() const { return carrier_.dim(); }
    std::uint32_t characteristic() const { return carrier_.characteristic(); }

    const TensorProduct& square() const { return square_; }
    const Matrix& delta() const { return delta_; }
    const Matrix& eps() const { return eps_; }

    // Canonical raw representative of the comultiplication.
    Matrix delta_raw() const { return delta_ * square_.lift; }

    // Same base presentation and identical structure maps (quotient bases
    // are deterministic, so matrix equality is meaningful).
    bool same_structure(const Coring& other) const {
        return base().same_presentation(other.base()) && dim() == other.dim() &&
               delta_ == other.delta_ && eps_ == other.eps_;
    }

    std::vector<std::string> validate() const;

private:
    Bimodule carrier_;
    TensorProduct square_;
    Matrix delta_{0, 0, 2};
    Matrix eps_{0, 0, 2};
};

enum class DualSide { left, right, bilinear };

// Convolution ring on a one-sided (or two-sided) linear dual of the coring.
// `maps` is the subspace of dim C x dim A matrices with the chosen linearity;
// `alg` carries the convolution product on its canonical basis, with the
// counit as unit.
struct DualRing {
    DualSide side = DualSide::left;
    HomSpace maps;
    Algebra alg;

    Matrix map_at(std::size_t i) const { return maps.map_at(i); }
    Matrix map_from_coords(const Matrix& coords) const { return maps.map_from_coords(coords); }
};

DualRing dual_ring(const Coring& c, DualSide side);

// The unit morphism A -> *C of the left dual, a |-> eps(-).a.
AlgebraMorphism dual_unit_morphism(const Coring& c, const DualRing& dual);

// theta: C -> D over beta: A -> B, compatible with both structures.
struct CoringMorphism {
    Coring source;
    Coring target;
    AlgebraMorphism beta;
    Matrix theta{0, 0, 2};

    bool same_base() const { return beta.map.is_identity(); }
};

std::vector<std::string> validate_coring_morphism(const CoringMorphism& phi);

// Right C-comodule: right A-module with coaction into M (x)_A C, stored
// post-projection.
class Comodule {
public:
    Comodule() = default;
    Comodule(Coring coring, Bimodule carrier, Matrix rho);

    static Comodule from_raw_rho(Coring coring, Bimodule carrier, const Matrix& rho_raw);

    // C over itself with the comultiplication as coaction.
    static Comodule regular(const Coring& c);

    // V (x)_A C with coaction id (x) delta.
    static Comodule cofree(const Coring& c, const Bimodule& v);

    const Coring& coring() const { return coring_; }
    const Bimodule& carrier() const { return carrier_; }
    std::size_t dim() const { return carrier_.dim(); }
    const TensorProduct& tensor_mc() const { return mc_; }
    const Matrix& rho() const { return rho_; }
    Matrix rho_raw() const { return rho_ * mc_.lift; }

    std::vector<std::string> validate() const;

private:
    Coring coring_;
    Bimodule carrier_;
    TensorProduct mc_;
    Matrix rho_{0, 0, 2};
};

// Left C-comodule: left A-module with coaction into C (x)_A N.
class LeftComodule {
public:
    LeftComodule() = default;
    LeftComodule(Coring coring, Bimodule carrier, Matrix rho);

    static LeftComodule from_raw_rho(Coring coring, Bimodule carrier, const Matrix& rho_raw);
    static LeftComodule regular(const Coring& c);
    static LeftComodule cofree(const Coring& c, const Bimodule& v);

    const Coring& coring() const { return coring_; }
    const Bimodule& carrier() const { return carrier_; }
    std::size_t dim() const { return carrier_.dim(); }
    const TensorProduct& tensor_cn() const { return cn_; }
    const Matrix& rho() const { return rho_; }
    Matrix rho_raw() const { return rho_ * cn_.lift; }

    std::vector<std::string> validate() const;

private:
    Coring coring_;
    Bimodule carrier_;
    TensorProduct cn_;
    Matrix rho_{0, 0, 2};
};

// Right A-linear colinear maps M -> N as a subspace of the matrix space.
HomSpace hom_colinear(const Comodule& m, const Comodule& n);

// Kernel of rho_M (x) id - id (x) rho_N inside M (x)_B N.
struct CotensorResult {
    TensorProduct mn;
    Matrix omega{0, 0, 2};  // the defining map on the quotient
    Subspace kernel;
};

CotensorResult cotensor(const Comodule& m, const LeftComodule& n);

} // namespace coringlab
