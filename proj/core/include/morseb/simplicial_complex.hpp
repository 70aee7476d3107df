#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "morseb/errors.hpp"

namespace morseb {

/// A simplex is its ascending list of vertex ids. The ascending order is the
/// reference orientation; incidence signs are permutation signs relative to it.
using Simplex = std::vector<int>;

struct VertexRecord {
    int id = 0;
    std::vector<double> coords; // may be empty
    std::optional<double> f;    // Morse value sampled at the vertex
};

/// Oriented triangulation of an n-manifold with boundary, with the full face
/// lattice. Immutable after construction; safe to share across threads.
struct SimplicialComplex {
    int n = 0;                                 // top dimension
    std::vector<VertexRecord> vertices;        // ascending by id
    std::vector<Simplex> top_simplices;        // sorted tuples, lexicographic

    // faces[k] lists all k-simplices in lexicographic order; face_index[k]
    // maps a sorted tuple to its contiguous index within degree k.
    std::vector<std::vector<Simplex>> faces;
    std::vector<std::map<Simplex, int>> face_index;

    int simplex_count(int k) const {
        return (k < 0 || k > n) ? 0 : static_cast<int>(faces[k].size());
    }
    int index_of(const Simplex& s) const;

    const VertexRecord& vertex(int id) const;
    bool has_morse_values() const;
    double morse_value(int id) const; // throws MissingMorseValuesError

    /// Top simplices containing a given vertex (indices into top_simplices).
    const std::vector<int>& star_of_vertex(int id) const;

    /// Vertex ids adjacent to `id` through an edge.
    std::vector<int> neighbors(int id) const;

    /// Alternating simplex count sum_k (-1)^k #faces[k].
    long long euler_characteristic_by_count() const;

    // construction caches
    std::map<int, int> vertex_pos;                 // id -> index in vertices
    std::map<int, std::vector<int>> vertex_star;   // id -> top simplex indices
};

/// Builds the face lattice from top simplices and validates the
/// pseudo-manifold-with-boundary condition.
SimplicialComplex build_complex(std::vector<Simplex> top_simplices,
                                std::vector<VertexRecord> vertex_records);

/// One connected boundary component: indices into faces[n-1].
struct BoundaryComponent {
    int id = 0;
    std::vector<int> simplices;
};

/// (n-1)-simplices lying in exactly one top simplex, grouped into components
/// connected through shared (n-2)-faces. Components are ordered (and assigned
/// ids) by their lexicographically smallest member simplex. For n = 1 every
/// boundary vertex is its own component.
std::vector<BoundaryComponent> detect_boundary(const SimplicialComplex& complex);

/// Boundary class: the sign encodes the collar normal form of the Morse
/// function (+ for an index-0 boundary critical manifold, - for index 1);
/// a/r selects the absolute or relative boundary condition.
enum class BoundaryClass { APlus, AMinus, RPlus, RMinus };

bool is_relative(BoundaryClass c);
bool is_plus(BoundaryClass c);
std::string to_string(BoundaryClass c);
BoundaryClass boundary_class_from_string(const std::string& s);

struct BoundaryDecomposition {
    std::vector<BoundaryComponent> components;
    std::vector<BoundaryClass> classes; // aligned with components
};

/// Pairs one class label per component. Throws LabelCountMismatchError.
BoundaryDecomposition assign_labels(std::vector<BoundaryComponent> components,
                                    const std::vector<BoundaryClass>& labels);

/// Vertices lying on any boundary (n-1)-simplex.
std::vector<int> boundary_vertices(const SimplicialComplex& complex,
                                   const std::vector<BoundaryComponent>& components);

/// True if a global orientation of the top simplices exists (found by sign
/// propagation across shared ridges).
bool is_orientable(const SimplicialComplex& complex);

} // namespace morseb
