#include "morseb/morse.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace morseb {

namespace {

// simulation-of-simplicity order: compare (f, id) lexicographically
bool lower_than(double fa, int ida, double fb, int idb) {
    if (fa != fb) return fa < fb;
    return ida < idb;
}

enum class LinkProfile { Empty, Point, Sphere, Other };

struct ProfileResult {
    LinkProfile kind = LinkProfile::Other;
    int sphere_dim = -1; // for Sphere: the k-1 of S^(k-1)
};

ProfileResult classify_profile(const std::vector<int>& betti) {
    if (betti.empty()) return {LinkProfile::Empty, -1};
    // reduced Betti: subtract one component in degree 0
    std::vector<int> reduced = betti;
    reduced[0] -= 1;
    int nonzero_degree = -1;
    int nonzero_count = 0;
    for (std::size_t j = 0; j < reduced.size(); ++j) {
        if (reduced[j] != 0) {
            ++nonzero_count;
            nonzero_degree = static_cast<int>(j);
        }
    }
    if (nonzero_count == 0) return {LinkProfile::Point, -1};
    if (nonzero_count == 1 && reduced[nonzero_degree] == 1)
        return {LinkProfile::Sphere, nonzero_degree};
    return {LinkProfile::Other, -1};
}

} // namespace

CriticalInventory classify_pl_critical(const SimplicialComplex& complex,
                                       const std::vector<BoundaryComponent>& boundary,
                                       std::uint64_t seed) {
    if (!complex.has_morse_values())
        throw MissingMorseValuesError("PL classification needs a Morse value on every vertex");

    CriticalInventory inventory;
    inventory.interior.assign(complex.n + 1, 0);
    inventory.mode = BoundaryMorseMode::Bott;

    // Bott mode: skip the boundary and the first collar layer; the collar
    // normal form puts no interior critical point there and sampled quadratic
    // flats would otherwise produce spurious PL critical vertices.
    std::set<int> excluded;
    if (!boundary.empty()) {
        for (int v : boundary_vertices(complex, boundary)) excluded.insert(v);
        std::set<int> collar;
        for (int v : excluded)
            for (int w : complex.neighbors(v)) collar.insert(w);
        excluded.insert(collar.begin(), collar.end());
    }

    for (const VertexRecord& vr : complex.vertices) {
        if (excluded.count(vr.id)) continue;
        const double fv = *vr.f;

        std::vector<Simplex> lower_link;
        bool any_lower = false;
        for (int t : complex.star_of_vertex(vr.id)) {
            Simplex s;
            for (int w : complex.top_simplices[t]) {
                if (w == vr.id) continue;
                if (lower_than(complex.morse_value(w), w, fv, vr.id)) s.push_back(w);
            }
            if (!s.empty()) {
                any_lower = true;
                lower_link.push_back(std::move(s));
            }
        }

        if (!any_lower) {
            // empty lower link: reduced cohomology of rank 1 in degree -1
            inventory.interior[0] += 1;
            inventory.located.push_back({vr.id, 0});
            continue;
        }

        const ProfileResult profile = classify_profile(face_set_betti(lower_link, seed ^ vr.id));
        switch (profile.kind) {
            case LinkProfile::Point:
                break; // regular vertex
            case LinkProfile::Sphere: {
                const int index = profile.sphere_dim + 1;
                inventory.interior[index] += 1;
                inventory.located.push_back({vr.id, index});
                break;
            }
            case LinkProfile::Empty:
            case LinkProfile::Other: {
                std::ostringstream msg;
                msg << "vertex " << vr.id
                    << ": lower link matches no sphere or point profile";
                throw DegenerateVertexError(msg.str());
            }
        }
    }
    return inventory;
}

MuVector mu_vector(const CriticalInventory& inventory, const std::vector<int>& gamma,
                   const std::vector<int>& eta, BoundaryMorseMode mode,
                   const BoundaryDecomposition* decomposition) {
    if (inventory.mode != mode)
        throw ModeMismatchError("inventory mode does not match the requested mu formula");

    const int n = static_cast<int>(inventory.interior.size()) - 1;
    MuVector out;
    out.mu.assign(n + 1, 0);

    if (mode == BoundaryMorseMode::Bott) {
        auto at = [](const std::vector<int>& v, int k) -> long long {
            return (k >= 0 && k < static_cast<int>(v.size())) ? v[k] : 0;
        };
        for (int k = 0; k <= n; ++k)
            out.mu[k] = inventory.interior[k] + at(eta, k) + at(gamma, k - 1);
        return out;
    }

    // general mode: mu_k = c_k + c_{k,k}(N_a) + c_{k,k-1}(N_r)
    if (!decomposition)
        throw ModeMismatchError("general mode needs the boundary decomposition");
    for (const BoundaryCriticalEntry& e : inventory.boundary) {
        if (e.k_prime != e.k && e.k_prime != e.k - 1)
            throw ModeMismatchError("boundary inventory entry with k' outside {k-1, k}");
        if (e.component < 0 ||
            e.component >= static_cast<int>(decomposition->classes.size()))
            throw ModeMismatchError("boundary inventory references unknown component");
        const bool relative = is_relative(decomposition->classes[e.component]);
        if (e.k < 0 || e.k > n) continue;
        if (!relative && e.k_prime == e.k) out.mu[e.k] += e.count;
        if (relative && e.k_prime == e.k - 1) out.mu[e.k] += e.count;
    }
    for (int k = 0; k <= n; ++k) out.mu[k] += inventory.interior[k];
    return out;
}

} // namespace morseb
