#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coringlab/algebra.hpp"
#include "coringlab/subspace.hpp"

namespace coringlab {

enum class Side { left, right, both };

// (L, R)-bimodule presented by one action matrix per algebra basis element;
// matrices act on row vectors from the right, so the left action is an
// anti-homomorphism L -> End and the right action a homomorphism R -> End.
class Bimodule {
public:
    Bimodule() = default;
    Bimodule(Algebra left, Algebra right, std::size_t dim,
             std::vector<Matrix> lact, std::vector<Matrix> ract);

    // One-sided right module: the left structure is the base field acting by
    // identity.
    static Bimodule right_module(Algebra alg, std::size_t dim, std::vector<Matrix> ract);
    static Bimodule left_module(Algebra alg, std::size_t dim, std::vector<Matrix> lact);

    // A as an (A, A)-bimodule by multiplication.
    static Bimodule regular(const Algebra& a);

    // Free right module a^g with basis grid (copy, algebra-basis) flattened
    // copy-major.
    static Bimodule free_right(const Algebra& a, std::size_t copies);

    std::uint32_t characteristic() const { return left_.characteristic(); }
    std::size_t dim() const { return dim_; }
    const Algebra& left_algebra() const { return left_; }
    const Algebra& right_algebra() const { return right_; }
    const Matrix& left_action(std::size_t k) const { return lact_[k]; }
    const Matrix& right_action(std::size_t k) const { return ract_[k]; }

    Matrix act_left(const Matrix& a) const;
    Matrix act_right(const Matrix& a) const;

    // Same underlying space seen as an (R^op, L^op)-bimodule; turns left
    // module questions into right module ones.
    Bimodule flip() const;

    // Forget one side (the forgotten side becomes the base field acting by
    // identity).
    Bimodule as_left_module() const;
    Bimodule as_right_module() const;

    std::vector<std::string> validate() const;

private:
    Algebra left_;
    Algebra right_;
    std::size_t dim_ = 0;
    std::vector<Matrix> lact_;
    std::vector<Matrix> ract_;
};

struct ModuleMorphism {
    Matrix map{0, 0, 2};

    std::vector<std::string> validate(const Bimodule& src, const Bimodule& dst, Side side) const;
};

// Change of the acting algebra along beta; the space is untouched.
Bimodule restrict_right(const Bimodule& m, const AlgebraMorphism& beta, const Algebra& smaller);
Bimodule restrict_left(const Bimodule& m, const AlgebraMorphism& beta, const Algebra& smaller);

// Linear maps src -> dst that are linear for the requested sides, as a
// subspace of the row-major flattened matrix space.
struct HomSpace {
    Subspace space;
    std::size_t dom_dim = 0;
    std::size_t cod_dim = 0;

    std::size_t dim() const { return space.dim(); }
    Matrix map_at(std::size_t i) const { return space.basis().row(i).unflatten(dom_dim, cod_dim); }
    Matrix map_from_coords(const Matrix& coords) const {
        return (coords * space.basis()).unflatten(dom_dim, cod_dim);
    }
    std::optional<Matrix> coords_of_map(const Matrix& f) const { return space.coords_of(f.flatten()); }
};

HomSpace hom_space(const Bimodule& m, const Bimodule& n, Side side);

// {t in R : w * t = 0}; always a right ideal, and two-sided when w is a
// submodule.
struct AnnihilatorResult {
    Subspace ann;
    bool two_sided = false;
};

AnnihilatorResult annihilator(const Bimodule& m, const Subspace& w);

// Splitting of the basis-indexed free cover m.right^dim -> m.
struct ProjectivityReport {
    bool projective = false;
    Matrix cover{0, 0, 2};               // free -> m
    std::optional<Matrix> section;       // m -> free with section * cover = id
};

ProjectivityReport projectivity_test(const Bimodule& m);

// Largest submodule of m annihilated by Ann(k); the trace of the class of
// k-subgenerated modules inside m.
Subspace trace_sp(const Bimodule& k, const Bimodule& m);

bool subgenerated_check(const Bimodule& x, const Bimodule& l);

// Smallest action-stable subspace containing the seed rows.
Subspace closure_under_action(const Bimodule& m, const Matrix& seed);

// Module structure on an action-stable subspace, in subspace coordinates.
Bimodule submodule(const Bimodule& m, const Subspace& w);

Bimodule direct_sum(const Bimodule& a, const Bimodule& b);

} // namespace coringlab
