#pragma once

#include <optional>
#include <string>
#include <vector>

#include "morseb/morse.hpp"
#include "morseb/simplicial_complex.hpp"

namespace morseb {

struct BoundaryMorseData {
    BoundaryMorseMode mode = BoundaryMorseMode::Bott;
    std::vector<BoundaryCriticalEntry> inventory;
};

/// A verification instance: a triangulation with Morse data plus the class
/// label of every boundary component (aligned with detect_boundary order).
struct Instance {
    std::string name;
    SimplicialComplex complex;
    std::vector<BoundaryClass> labels;
    std::vector<std::pair<int, int>> critical_points; // optional explicit (vertex, index)
    std::optional<BoundaryMorseData> boundary_morse;

    BoundaryDecomposition decomposition() const;
};

/// Replaces f by -f and flips the sign half of every class label (a+ <-> a-,
/// r+ <-> r-), the transformation behind the index-reversal and parity
/// arguments.
Instance negate_morse_function(Instance instance);

/// Changes the a/r half of the labels, keeping the signs.
Instance with_labels(Instance instance, const std::vector<BoundaryClass>& labels,
                     const std::string& new_name);

} // namespace morseb
