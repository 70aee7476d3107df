#pragma once

#include <cstdint>
#include <vector>

#include "morseb/exact.hpp"
#include "morseb/simplicial_complex.hpp"

namespace morseb {

/// Cochain complex of the pair (M, N_r): the basis in each degree consists of
/// the simplices of M not contained in the closure of the boundary components
/// carrying a relative label. With empty N_r this is the full (absolute)
/// complex.
struct RelativeCochainComplex {
    int n = 0;
    // basis[k][i] = index into complex.faces[k] of the i-th retained simplex
    std::vector<std::vector<int>> basis;
    // coboundary[k]: C^k -> C^{k+1}, exact entries +-1, k = 0..n-1
    std::vector<IntMatrix> coboundary;
    // deleted[k] = indices of faces[k] lying in the closure of N_r
    std::vector<std::vector<int>> deleted;

    int basis_count(int k) const {
        return (k < 0 || k > n) ? 0 : static_cast<int>(basis[k].size());
    }
};

RelativeCochainComplex relative_cochain_complex(const SimplicialComplex& complex,
                                                const BoundaryDecomposition& decomposition);

/// Full cochain complex of the complex itself (no relative deletion).
RelativeCochainComplex absolute_cochain_complex(const SimplicialComplex& complex);

/// beta_k = dim C^k - rank d^k - rank d^{k-1}, all ranks exact.
std::vector<int> betti(const RelativeCochainComplex& rcc,
                       std::uint64_t seed = 0x9e3779b97f4a7c15ULL,
                       RankWitness* witness = nullptr);

/// Extracts a labeled boundary piece as a standalone closed complex of
/// dimension n-1. Component selection by predicate on the class.
SimplicialComplex boundary_subcomplex(const SimplicialComplex& complex,
                                      const BoundaryDecomposition& decomposition,
                                      bool (*select)(BoundaryClass));

struct BoundaryBetti {
    std::vector<int> gamma; // H^*(N_{r-}), length n (degrees 0..n-1)
    std::vector<int> eta;   // H^*(N_{a+}), length n
};

BoundaryBetti boundary_betti(const SimplicialComplex& complex,
                             const BoundaryDecomposition& decomposition,
                             std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

enum class EulerMode { BettiSum, SimplexCount };

/// Alternating sum over the retained basis (SimplexCount) or the Betti vector
/// (BettiSum); the two agree by rank-nullity.
long long euler(const RelativeCochainComplex& rcc, EulerMode mode,
                std::uint64_t seed = 0x9e3779b97f4a7c15ULL);
long long euler(const std::vector<int>& betti_vector);

/// Betti numbers of an arbitrary face-closed set of simplices (need not be a
/// pseudo-manifold); used for links. Maximal simplices may have mixed degree.
std::vector<int> face_set_betti(const std::vector<Simplex>& maximal_simplices,
                                std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

/// Full link-condition check (strict mode): every vertex link must be
/// connected with the rational homology of a sphere (interior vertex) or of a
/// point (boundary vertex). Throws NonManifoldError.
void check_links_strict(const SimplicialComplex& complex);

} // namespace morseb
