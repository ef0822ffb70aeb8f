#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "blue_field.hpp"
#include "presentation.hpp"
#include "spectrum.hpp"

namespace f1tits {

// A term of Delta(T): sign * (primed monomial) (x) (double-primed monomial).
struct TensorTerm {
    int sign = 0;
    std::vector<int> left, right;
};

// Delta: generator index -> formal sum of tensor monomials.
struct Comultiplication {
    std::vector<std::vector<TensorTerm>> images;
};

// Points supplied as data rather than derived from relations; rank points
// carry their unit-field normal forms.
struct DeclaredSpectrum {
    std::vector<std::string> labels;  // per point
    std::vector<PrimePoint> points;
    std::vector<int> rank_points;     // indices into points
    std::vector<NormalFormBlueField> rank_fields;
};

struct ExpectedMetadata {
    std::optional<std::size_t> rank;
    std::optional<std::size_t> weyl_order;
    std::string weyl_type;
};

struct GroupModel {
    std::string name;
    BlueprintPresentation presentation;
    Comultiplication comult;
    // generators sent to 1 by the counit (all others to 0); absent when the
    // presentation admits no counit to F1
    std::optional<GenSet> counit;
    // Tits identity when it is not visible through a counit
    std::optional<GenSet> identity_point;
    std::optional<DeclaredSpectrum> declared;
    // keep only rank points whose pattern passes (SO_2m inside O_2m)
    std::function<bool(GenSet)> rank_filter;
    std::string rank_filter_name;
    // matrix layout: entry (i,j) -> generator index, or -1 for a constant entry
    // (1 on the diagonal, 0 elsewhere)
    std::size_t dim = 0;
    std::vector<std::vector<int>> entry_generator;
    std::vector<int> aux_generators;  // e.g. d = det^-1
    std::optional<bool> tits_weyl;
    ExpectedMetadata expected;
};

}  // namespace f1tits
