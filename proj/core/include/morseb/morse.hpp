#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "morseb/cohomology.hpp"
#include "morseb/simplicial_complex.hpp"

namespace morseb {

enum class BoundaryMorseMode { Bott, General };

/// Boundary critical counts for general mode: number of critical points of f
/// on a boundary component with full index k and tangential index k_prime.
/// Only k_prime in {k-1, k} occurs (normal contribution is 0 or 1).
struct BoundaryCriticalEntry {
    int component = 0;
    int k = 0;
    int k_prime = 0;
    long long count = 0;
};

struct CriticalInventory {
    std::vector<long long> interior;                 // c_k, length n+1
    std::vector<std::pair<int, int>> located;        // (vertex id, index)
    BoundaryMorseMode mode = BoundaryMorseMode::Bott;
    std::vector<BoundaryCriticalEntry> boundary;     // general mode only
};

/// PL classification of interior vertices by the reduced rational homology of
/// their lower links: empty -> index 0, point profile -> regular, S^{k-1}
/// profile -> index k, anything else -> DegenerateVertexError. Ties in f are
/// broken lexicographically by (f, vertex id). In Bott mode the vertices on
/// the boundary and in the first collar layer (edge-adjacent to the boundary)
/// are never classified.
CriticalInventory classify_pl_critical(const SimplicialComplex& complex,
                                       const std::vector<BoundaryComponent>& boundary,
                                       std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

struct MuVector {
    std::vector<long long> mu; // length n+1
};

/// Bott mode: mu_k = c_k + eta_k + gamma_{k-1} (gamma_{-1} = 0).
/// General mode: mu_k = c_k + c_{k,k}(N_a) + c_{k,k-1}(N_r).
MuVector mu_vector(const CriticalInventory& inventory,
                   const std::vector<int>& gamma,
                   const std::vector<int>& eta,
                   BoundaryMorseMode mode,
                   const BoundaryDecomposition* decomposition = nullptr);

} // namespace morseb
