#include "morseb/simplicial_complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace morseb {

namespace {

std::string simplex_string(const Simplex& s) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
    out << "]";
    return out.str();
}

// disjoint-set forest
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int size) : parent(size) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

int SimplicialComplex::index_of(const Simplex& s) const {
    const int k = static_cast<int>(s.size()) - 1;
    if (k < 0 || k > n) return -1;
    auto it = face_index[k].find(s);
    return it == face_index[k].end() ? -1 : it->second;
}

const VertexRecord& SimplicialComplex::vertex(int id) const {
    auto it = vertex_pos.find(id);
    if (it == vertex_pos.end())
        throw DanglingVertexError("unknown vertex id " + std::to_string(id));
    return vertices[it->second];
}

bool SimplicialComplex::has_morse_values() const {
    return !vertices.empty() &&
           std::all_of(vertices.begin(), vertices.end(),
                       [](const VertexRecord& v) { return v.f.has_value(); });
}

double SimplicialComplex::morse_value(int id) const {
    const VertexRecord& v = vertex(id);
    if (!v.f)
        throw MissingMorseValuesError("vertex " + std::to_string(id) + " carries no Morse value");
    return *v.f;
}

const std::vector<int>& SimplicialComplex::star_of_vertex(int id) const {
    auto it = vertex_star.find(id);
    if (it == vertex_star.end())
        throw DanglingVertexError("unknown vertex id " + std::to_string(id));
    return it->second;
}

std::vector<int> SimplicialComplex::neighbors(int id) const {
    std::set<int> out;
    for (int t : star_of_vertex(id))
        for (int v : top_simplices[t])
            if (v != id) out.insert(v);
    return {out.begin(), out.end()};
}

long long SimplicialComplex::euler_characteristic_by_count() const {
    long long chi = 0;
    for (int k = 0; k <= n; ++k) chi += (k % 2 == 0 ? 1 : -1) * simplex_count(k);
    return chi;
}

SimplicialComplex build_complex(std::vector<Simplex> top_simplices,
                                std::vector<VertexRecord> vertex_records) {
    if (top_simplices.empty()) throw Error("complex needs at least one top simplex");

    SimplicialComplex c;
    c.n = static_cast<int>(top_simplices.front().size()) - 1;

    std::sort(vertex_records.begin(), vertex_records.end(),
              [](const VertexRecord& a, const VertexRecord& b) { return a.id < b.id; });
    c.vertices = std::move(vertex_records);
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        if (i > 0 && c.vertices[i].id == c.vertices[i - 1].id)
            throw Error("duplicate vertex record for id " + std::to_string(c.vertices[i].id));
        c.vertex_pos[c.vertices[i].id] = static_cast<int>(i);
    }

    for (Simplex& t : top_simplices) {
        if (static_cast<int>(t.size()) != c.n + 1)
            throw Error("top simplices must all have dimension " + std::to_string(c.n));
        std::sort(t.begin(), t.end());
        if (std::adjacent_find(t.begin(), t.end()) != t.end())
            throw Error("top simplex " + simplex_string(t) + " repeats a vertex id");
        for (int v : t)
            if (!c.vertex_pos.count(v))
                throw DanglingVertexError("top simplex references missing vertex " +
                                          std::to_string(v));
    }
    std::sort(top_simplices.begin(), top_simplices.end());
    for (std::size_t i = 1; i < top_simplices.size(); ++i)
        if (top_simplices[i] == top_simplices[i - 1])
            throw DuplicateTopSimplexError("duplicate top simplex " +
                                           simplex_string(top_simplices[i]));
    c.top_simplices = std::move(top_simplices);

    // face lattice: every non-empty subset of every top simplex
    std::vector<std::set<Simplex>> by_degree(c.n + 1);
    for (const Simplex& t : c.top_simplices) {
        const int m = static_cast<int>(t.size());
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
            Simplex f;
            for (int i = 0; i < m; ++i)
                if (mask & (1u << i)) f.push_back(t[i]);
            by_degree[f.size() - 1].insert(std::move(f));
        }
    }
    c.faces.resize(c.n + 1);
    c.face_index.resize(c.n + 1);
    for (int k = 0; k <= c.n; ++k) {
        c.faces[k].assign(by_degree[k].begin(), by_degree[k].end());
        for (std::size_t i = 0; i < c.faces[k].size(); ++i)
            c.face_index[k][c.faces[k][i]] = static_cast<int>(i);
    }

    // every vertex record must appear in the lattice
    for (const VertexRecord& v : c.vertices)
        if (!c.face_index[0].count(Simplex{v.id}))
            throw DanglingVertexError("vertex " + std::to_string(v.id) +
                                      " lies in no top simplex");

    // pseudo-manifold-with-boundary: each ridge in one or two top simplices
    if (c.n >= 1) {
        std::map<Simplex, int> ridge_count;
        for (const Simplex& t : c.top_simplices) {
            for (std::size_t skip = 0; skip < t.size(); ++skip) {
                Simplex r;
                for (std::size_t i = 0; i < t.size(); ++i)
                    if (i != skip) r.push_back(t[i]);
                if (++ridge_count[r] > 2)
                    throw NonManifoldError("ridge " + simplex_string(r) +
                                           " lies in more than two top simplices");
            }
        }
    }

    for (std::size_t t = 0; t < c.top_simplices.size(); ++t)
        for (int v : c.top_simplices[t]) c.vertex_star[v].push_back(static_cast<int>(t));

    return c;
}

std::vector<BoundaryComponent> detect_boundary(const SimplicialComplex& complex) {
    const int n = complex.n;
    if (n == 0) return {};

    std::map<Simplex, int> ridge_count;
    for (const Simplex& t : complex.top_simplices) {
        for (std::size_t skip = 0; skip < t.size(); ++skip) {
            Simplex r;
            for (std::size_t i = 0; i < t.size(); ++i)
                if (i != skip) r.push_back(t[i]);
            ++ridge_count[r];
        }
    }

    std::vector<int> boundary_ridges;
    for (const auto& [ridge, count] : ridge_count)
        if (count == 1) boundary_ridges.push_back(complex.index_of(ridge));
    std::sort(boundary_ridges.begin(), boundary_ridges.end());

    if (boundary_ridges.empty()) return {};

    const int b = static_cast<int>(boundary_ridges.size());
    UnionFind uf(b);
    if (n >= 2) {
        // connect ridges sharing an (n-2)-face
        std::map<Simplex, int> last_seen;
        for (int i = 0; i < b; ++i) {
            const Simplex& r = complex.faces[n - 1][boundary_ridges[i]];
            for (std::size_t skip = 0; skip < r.size(); ++skip) {
                Simplex f;
                for (std::size_t j = 0; j < r.size(); ++j)
                    if (j != skip) f.push_back(r[j]);
                auto [it, inserted] = last_seen.try_emplace(f, i);
                if (!inserted) uf.unite(it->second, i);
            }
        }
    }
    // n = 1: boundary points are separate components (no (n-2)-faces)

    std::map<int, BoundaryComponent> groups;
    for (int i = 0; i < b; ++i) groups[uf.find(i)].simplices.push_back(boundary_ridges[i]);

    std::vector<BoundaryComponent> components;
    for (auto& [root, comp] : groups) components.push_back(std::move(comp));
    std::sort(components.begin(), components.end(),
              [&](const BoundaryComponent& a, const BoundaryComponent& bc) {
                  return complex.faces[n - 1][a.simplices.front()] <
                         complex.faces[n - 1][bc.simplices.front()];
              });
    for (std::size_t i = 0; i < components.size(); ++i)
        components[i].id = static_cast<int>(i);
    return components;
}

bool is_relative(BoundaryClass c) {
    return c == BoundaryClass::RPlus || c == BoundaryClass::RMinus;
}

bool is_plus(BoundaryClass c) {
    return c == BoundaryClass::APlus || c == BoundaryClass::RPlus;
}

std::string to_string(BoundaryClass c) {
    switch (c) {
        case BoundaryClass::APlus: return "a+";
        case BoundaryClass::AMinus: return "a-";
        case BoundaryClass::RPlus: return "r+";
        case BoundaryClass::RMinus: return "r-";
    }
    return "?";
}

BoundaryClass boundary_class_from_string(const std::string& s) {
    if (s == "a+") return BoundaryClass::APlus;
    if (s == "a-") return BoundaryClass::AMinus;
    if (s == "r+") return BoundaryClass::RPlus;
    if (s == "r-") return BoundaryClass::RMinus;
    throw ParseError("unknown boundary class '" + s + "'");
}

BoundaryDecomposition assign_labels(std::vector<BoundaryComponent> components,
                                    const std::vector<BoundaryClass>& labels) {
    if (components.size() != labels.size())
        throw LabelCountMismatchError("have " + std::to_string(components.size()) +
                                      " boundary components but " +
                                      std::to_string(labels.size()) + " labels");
    return BoundaryDecomposition{std::move(components), labels};
}

std::vector<int> boundary_vertices(const SimplicialComplex& complex,
                                   const std::vector<BoundaryComponent>& components) {
    std::set<int> out;
    for (const BoundaryComponent& comp : components)
        for (int s : comp.simplices)
            for (int v : complex.faces[complex.n - 1][s]) out.insert(v);
    return {out.begin(), out.end()};
}

bool is_orientable(const SimplicialComplex& complex) {
    const int n = complex.n;
    const int m = static_cast<int>(complex.top_simplices.size());
    if (n == 0) return true;

    // ridge -> (top index, position of the omitted vertex)
    std::map<Simplex, std::vector<std::pair<int, int>>> ridge_users;
    for (int t = 0; t < m; ++t) {
        const Simplex& top = complex.top_simplices[t];
        for (std::size_t skip = 0; skip < top.size(); ++skip) {
            Simplex r;
            for (std::size_t i = 0; i < top.size(); ++i)
                if (i != skip) r.push_back(top[i]);
            ridge_users[r].push_back({t, static_cast<int>(skip)});
        }
    }

    std::vector<int> sign(m, 0);
    for (int start = 0; start < m; ++start) {
        if (sign[start] != 0) continue;
        sign[start] = 1;
        std::queue<int> queue;
        queue.push(start);
        while (!queue.empty()) {
            const int t = queue.front();
            queue.pop();
            const Simplex& top = complex.top_simplices[t];
            for (std::size_t skip = 0; skip < top.size(); ++skip) {
                Simplex r;
                for (std::size_t i = 0; i < top.size(); ++i)
                    if (i != skip) r.push_back(top[i]);
                for (const auto& [other, other_skip] : ridge_users[r]) {
                    if (other == t) continue;
                    // induced orientations on the shared ridge must be opposite
                    const int induced_t = sign[t] * ((skip % 2 == 0) ? 1 : -1);
                    const int required = -induced_t * ((other_skip % 2 == 0) ? 1 : -1);
                    if (sign[other] == 0) {
                        sign[other] = required;
                        queue.push(other);
                    } else if (sign[other] != required) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

} // namespace morseb
