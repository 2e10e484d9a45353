#pragma once

#include "visev/groebner.hpp"

namespace visev {

// Dimension and degree of a homogeneous ideal from the Hilbert series of its
// lead-term ideal. Projective convention: dim(curve) = 1, empty set = -1.
HilbertData hilbert_data(const Ideal& I, const EngineOpts& opts = {});

// Degrees of a minimal homogeneous generating set (graded Nakayama profile),
// e.g. {5,5,...} for ten quintics. Also returns the chosen generators.
struct MinimalGenerators {
    std::vector<Polynomial> gens;
    std::map<int, int> profile;  // degree -> count
};
MinimalGenerators minimal_generators(const Ideal& I, const EngineOpts& opts = {});

std::string profile_to_string(const std::map<int, int>& profile);

}  // namespace visev
