#include "morseb/cohomology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace morseb {

namespace {

// positions of retained faces within their degree, -1 for deleted
std::vector<std::vector<int>> basis_positions(const SimplicialComplex& complex,
                                              const std::vector<std::vector<int>>& basis) {
    std::vector<std::vector<int>> pos(complex.n + 1);
    for (int k = 0; k <= complex.n; ++k) {
        pos[k].assign(complex.simplex_count(k), -1);
        for (std::size_t i = 0; i < basis[k].size(); ++i) pos[k][basis[k][i]] = static_cast<int>(i);
    }
    return pos;
}

IntMatrix coboundary_matrix(const SimplicialComplex& complex,
                            const std::vector<std::vector<int>>& basis,
                            const std::vector<std::vector<int>>& pos, int k) {
    IntMatrix d{static_cast<int>(basis[k + 1].size()), static_cast<int>(basis[k].size()), {}};
    for (std::size_t row = 0; row < basis[k + 1].size(); ++row) {
        const Simplex& tau = complex.faces[k + 1][basis[k + 1][row]];
        for (std::size_t skip = 0; skip < tau.size(); ++skip) {
            Simplex sigma;
            for (std::size_t i = 0; i < tau.size(); ++i)
                if (i != skip) sigma.push_back(tau[i]);
            const int global = complex.index_of(sigma);
            const int col = pos[k][global];
            if (col < 0) continue; // deleted face: relative cochains vanish there
            d.add(static_cast<int>(row), col, (skip % 2 == 0) ? 1 : -1);
        }
    }
    return d;
}

} // namespace

RelativeCochainComplex relative_cochain_complex(const SimplicialComplex& complex,
                                                const BoundaryDecomposition& decomposition) {
    const int n = complex.n;
    RelativeCochainComplex rcc;
    rcc.n = n;
    rcc.basis.resize(n + 1);
    rcc.deleted.resize(n + 1);

    // closure of N_r: every face of an (n-1)-simplex in a relative component
    std::vector<std::set<int>> deleted(n + 1);
    for (std::size_t c = 0; c < decomposition.components.size(); ++c) {
        if (!is_relative(decomposition.classes[c])) continue;
        for (int s : decomposition.components[c].simplices) {
            const Simplex& ridge = complex.faces[n - 1][s];
            const int m = static_cast<int>(ridge.size());
            for (unsigned mask = 1; mask < (1u << m); ++mask) {
                Simplex f;
                for (int i = 0; i < m; ++i)
                    if (mask & (1u << i)) f.push_back(ridge[i]);
                deleted[f.size() - 1].insert(complex.index_of(f));
            }
        }
    }

    for (int k = 0; k <= n; ++k) {
        rcc.deleted[k].assign(deleted[k].begin(), deleted[k].end());
        for (int i = 0; i < complex.simplex_count(k); ++i)
            if (!deleted[k].count(i)) rcc.basis[k].push_back(i);
    }

    const auto pos = basis_positions(complex, rcc.basis);
    for (int k = 0; k < n; ++k) rcc.coboundary.push_back(coboundary_matrix(complex, rcc.basis, pos, k));
    return rcc;
}

RelativeCochainComplex absolute_cochain_complex(const SimplicialComplex& complex) {
    return relative_cochain_complex(complex, BoundaryDecomposition{});
}

std::vector<int> betti(const RelativeCochainComplex& rcc, std::uint64_t seed,
                       RankWitness* witness) {
    std::vector<int> ranks(rcc.n, 0);
    for (int k = 0; k < rcc.n; ++k) ranks[k] = rank_exact(rcc.coboundary[k], seed + k, witness);
    std::vector<int> out(rcc.n + 1, 0);
    for (int k = 0; k <= rcc.n; ++k) {
        const int up = (k < rcc.n) ? ranks[k] : 0;
        const int down = (k > 0) ? ranks[k - 1] : 0;
        out[k] = rcc.basis_count(k) - up - down;
    }
    return out;
}

SimplicialComplex boundary_subcomplex(const SimplicialComplex& complex,
                                      const BoundaryDecomposition& decomposition,
                                      bool (*select)(BoundaryClass)) {
    std::vector<Simplex> tops;
    std::set<int> used;
    for (std::size_t c = 0; c < decomposition.components.size(); ++c) {
        if (!select(decomposition.classes[c])) continue;
        for (int s : decomposition.components[c].simplices) {
            tops.push_back(complex.faces[complex.n - 1][s]);
            for (int v : tops.back()) used.insert(v);
        }
    }
    if (tops.empty()) throw Error("empty boundary selection");
    std::vector<VertexRecord> records;
    for (int v : used) records.push_back(complex.vertex(v));
    return build_complex(std::move(tops), std::move(records));
}

BoundaryBetti boundary_betti(const SimplicialComplex& complex,
                             const BoundaryDecomposition& decomposition, std::uint64_t seed) {
    BoundaryBetti out;
    out.gamma.assign(std::max(complex.n, 1), 0);
    out.eta.assign(std::max(complex.n, 1), 0);

    auto piece = [&](bool (*select)(BoundaryClass), std::vector<int>& target,
                     std::uint64_t piece_seed) {
        bool any = false;
        for (std::size_t c = 0; c < decomposition.components.size(); ++c)
            any = any || select(decomposition.classes[c]);
        if (!any) return;
        const SimplicialComplex sub = boundary_subcomplex(complex, decomposition, select);
        const std::vector<int> b = betti(absolute_cochain_complex(sub), piece_seed);
        for (std::size_t k = 0; k < b.size() && k < target.size(); ++k) target[k] = b[k];
    };

    piece([](BoundaryClass c) { return c == BoundaryClass::RMinus; }, out.gamma, seed ^ 0x67a3u);
    piece([](BoundaryClass c) { return c == BoundaryClass::APlus; }, out.eta, seed ^ 0x1b5du);
    return out;
}

long long euler(const RelativeCochainComplex& rcc, EulerMode mode, std::uint64_t seed) {
    if (mode == EulerMode::SimplexCount) {
        long long chi = 0;
        for (int k = 0; k <= rcc.n; ++k) chi += (k % 2 == 0 ? 1 : -1) * rcc.basis_count(k);
        return chi;
    }
    return euler(betti(rcc, seed));
}

long long euler(const std::vector<int>& betti_vector) {
    long long chi = 0;
    for (std::size_t k = 0; k < betti_vector.size(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * betti_vector[k];
    return chi;
}

std::vector<int> face_set_betti(const std::vector<Simplex>& maximal_simplices,
                                std::uint64_t seed) {
    if (maximal_simplices.empty()) return {};
    int dim = 0;
    for (const Simplex& s : maximal_simplices)
        dim = std::max(dim, static_cast<int>(s.size()) - 1);

    std::vector<std::set<Simplex>> by_degree(dim + 1);
    for (Simplex s : maximal_simplices) {
        std::sort(s.begin(), s.end());
        const int m = static_cast<int>(s.size());
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
            Simplex f;
            for (int i = 0; i < m; ++i)
                if (mask & (1u << i)) f.push_back(s[i]);
            by_degree[f.size() - 1].insert(std::move(f));
        }
    }

    std::vector<std::vector<Simplex>> faces(dim + 1);
    std::vector<std::map<Simplex, int>> index(dim + 1);
    for (int k = 0; k <= dim; ++k) {
        faces[k].assign(by_degree[k].begin(), by_degree[k].end());
        for (std::size_t i = 0; i < faces[k].size(); ++i) index[k][faces[k][i]] = static_cast<int>(i);
    }

    std::vector<int> ranks(dim, 0);
    for (int k = 0; k < dim; ++k) {
        IntMatrix d{static_cast<int>(faces[k + 1].size()), static_cast<int>(faces[k].size()), {}};
        for (std::size_t row = 0; row < faces[k + 1].size(); ++row) {
            const Simplex& tau = faces[k + 1][row];
            for (std::size_t skip = 0; skip < tau.size(); ++skip) {
                Simplex sigma;
                for (std::size_t i = 0; i < tau.size(); ++i)
                    if (i != skip) sigma.push_back(tau[i]);
                d.add(static_cast<int>(row), index[k].at(sigma), (skip % 2 == 0) ? 1 : -1);
            }
        }
        ranks[k] = rank_exact(d, seed + k);
    }

    std::vector<int> out(dim + 1, 0);
    for (int k = 0; k <= dim; ++k) {
        const int up = (k < dim) ? ranks[k] : 0;
        const int down = (k > 0) ? ranks[k - 1] : 0;
        out[k] = static_cast<int>(faces[k].size()) - up - down;
    }
    return out;
}

void check_links_strict(const SimplicialComplex& complex) {
    const auto boundary = detect_boundary(complex);
    std::set<int> on_boundary;
    if (!boundary.empty())
        for (int v : boundary_vertices(complex, boundary)) on_boundary.insert(v);

    for (const VertexRecord& vr : complex.vertices) {
        std::vector<Simplex> link;
        for (int t : complex.star_of_vertex(vr.id)) {
            Simplex s;
            for (int v : complex.top_simplices[t])
                if (v != vr.id) s.push_back(v);
            if (!s.empty()) link.push_back(std::move(s));
        }
        if (link.empty()) {
            if (complex.n > 0)
                throw NonManifoldError("vertex " + std::to_string(vr.id) + " has empty link");
            continue;
        }
        const std::vector<int> b = face_set_betti(link);
        const int d = static_cast<int>(b.size()) - 1;

        std::vector<int> expected(d + 1, 0);
        expected[0] = 1;
        const bool interior = !on_boundary.count(vr.id);
        if (interior) {
            // link of an interior vertex: rational homology of S^(n-1)
            if (complex.n - 1 == 0)
                expected[0] = 2;
            else if (d == complex.n - 1)
                expected[d] += 1;
        }
        if (d != complex.n - 1 || b != expected)
            throw NonManifoldError("link of vertex " + std::to_string(vr.id) +
                                   " fails the strict manifold check");
    }
}

} // namespace morseb
