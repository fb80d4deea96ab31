#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coringlab/pairing.hpp"

namespace coringlab {

// Parsed declarations keep their source name and header line so that later
// diagnostics can point back into the file.
struct AlgebraDecl {
    std::string name;
    Algebra algebra;
    std::size_t line = 0;
};

struct MorphismDecl {
    std::string name;
    std::string src;
    std::string dst;
    AlgebraMorphism morphism;
    std::size_t line = 0;
};

struct BimoduleDecl {
    std::string name;
    std::string left;
    std::string right;
    Bimodule bimodule;
    std::size_t line = 0;
};

struct CoringDecl {
    std::string name;
    std::string carrier;
    Coring coring;
    std::size_t line = 0;
};

struct CoringMorphismDecl {
    std::string name;
    std::string src;
    std::string dst;
    std::string beta;
    CoringMorphism morphism;
    std::size_t line = 0;
};

struct ComoduleDecl {
    std::string name;
    std::string coring;
    bool left_side = false;
    std::optional<Comodule> right_comodule;
    std::optional<LeftComodule> left_comodule;
    std::size_t line = 0;

    std::size_t dim() const {
        return left_side ? left_comodule->dim() : right_comodule->dim();
    }
};

// Linear map between two declared right comodules over the same coring;
// colinearity is a validation verdict, not a parse requirement.
struct ComoduleMapDecl {
    std::string name;
    std::string src;
    std::string dst;
    Matrix map{0, 0, 2};
    std::size_t line = 0;
};

struct PairingDecl {
    std::string name;
    std::string ring;
    std::string coring;
    MeasuringPairing pairing;
    std::size_t line = 0;
};

struct ModelFile {
    std::uint32_t p = 0;
    std::vector<AlgebraDecl> algebras;
    std::vector<MorphismDecl> morphisms;
    std::vector<BimoduleDecl> bimodules;
    std::vector<CoringDecl> corings;
    std::vector<CoringMorphismDecl> coring_morphisms;
    std::vector<ComoduleDecl> comodules;
    std::vector<ComoduleMapDecl> comodule_maps;
    std::vector<PairingDecl> pairings;

    const AlgebraDecl* find_algebra(const std::string& name) const;
    const MorphismDecl* find_morphism(const std::string& name) const;
    const BimoduleDecl* find_bimodule(const std::string& name) const;
    const CoringDecl* find_coring(const std::string& name) const;
    const CoringMorphismDecl* find_coring_morphism(const std::string& name) const;
    const ComoduleDecl* find_comodule(const std::string& name) const;
    const ComoduleMapDecl* find_comodule_map(const std::string& name) const;
    const PairingDecl* find_pairing(const std::string& name) const;
};

// line == 0 marks a file-level error with no useful position.
struct ParseError {
    std::size_t line = 0;
    std::string message;

    std::string render() const;
};

struct ParseResult {
    std::optional<ModelFile> model;  // engaged exactly when errors is empty
    std::vector<ParseError> errors;

    bool ok() const { return errors.empty(); }
};

// Total parser: any input yields either a model or positioned errors, never
// an exception.
ParseResult parse_model(const std::string& text);

// Canonical serialization; parse(render(m)) reproduces render(m) verbatim.
std::string render_model(const ModelFile& model);

} // namespace coringlab
