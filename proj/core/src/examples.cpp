#include "morseb/examples.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace morseb {

namespace {

// Morse amplitudes for the bundled meshes. Small so that the deformed
// coboundary entries stay tame over the default deformation scales.
constexpr double kAmplitude = 0.1;
constexpr double kTilt = 1e-5;        // in-layer symmetry breaking
constexpr double kPi = 3.14159265358979323846;

double smoothstep(double t) {
    t = std::clamp(t, 0.0, 1.0);
    return t * t * (3.0 - 2.0 * t);
}

// height profile along a core circle: one max (i = 0), one min (i = m/2)
double core_height(int i, int m) { return std::cos(2.0 * kPi * i / m); }

void require_resolution(const std::string& name, int resolution, int minimum) {
    if (resolution < minimum)
        throw ResolutionTooSmallError(name + " needs resolution >= " + std::to_string(minimum) +
                                      ", got " + std::to_string(resolution));
}

Instance make_interval(int m) {
    require_resolution("interval", m, 3);
    std::vector<VertexRecord> vertices;
    for (int i = 0; i <= m; ++i) {
        VertexRecord v;
        v.id = i;
        v.coords = {static_cast<double>(i) / m};
        // monotone, flattened at both ends: f(0) = f(1), f(m-1) = f(m)
        double f;
        if (i == 0)
            f = 0.0;
        else if (i == m)
            f = kAmplitude;
        else
            f = kAmplitude * smoothstep(static_cast<double>(i - 1) / (m - 2));
        v.f = f;
        vertices.push_back(std::move(v));
    }
    std::vector<Simplex> tops;
    for (int i = 0; i < m; ++i) tops.push_back({i, i + 1});

    Instance out;
    out.name = "interval";
    out.complex = build_complex(std::move(tops), std::move(vertices));
    // f rises into the interior at vertex 0 (+) and falls inward at vertex m (-)
    out.labels = {BoundaryClass::APlus, BoundaryClass::AMinus};
    return out;
}

Instance make_disk(int m) {
    require_resolution("disk", m, 3);
    // center + two concentric rings; the outer ring is the boundary and the
    // inner ring duplicates its Morse values (discrete collar flatness)
    std::vector<VertexRecord> vertices;
    VertexRecord center;
    center.id = 0;
    center.coords = {0.0, 0.0};
    center.f = -kAmplitude;
    vertices.push_back(center);
    for (int ring = 1; ring <= 2; ++ring) {
        const double r = 0.5 * ring;
        for (int i = 0; i < m; ++i) {
            VertexRecord v;
            v.id = (ring - 1) * m + 1 + i;
            const double angle = 2.0 * kPi * i / m;
            v.coords = {r * std::cos(angle), r * std::sin(angle)};
            v.f = kTilt * i;
            vertices.push_back(std::move(v));
        }
    }
    auto ring1 = [&](int i) { return 1 + (i % m); };
    auto ring2 = [&](int i) { return m + 1 + (i % m); };
    std::vector<Simplex> tops;
    for (int i = 0; i < m; ++i) {
        tops.push_back({0, ring1(i), ring1(i + 1)});
        tops.push_back({ring1(i), ring1(i + 1), ring2(i)});
        tops.push_back({ring1(i + 1), ring2(i + 1), ring2(i)});
    }

    Instance out;
    out.name = "disk";
    out.complex = build_complex(std::move(tops), std::move(vertices));
    out.labels = {BoundaryClass::RMinus}; // interior minimum, f falls inward
    return out;
}

Instance make_annulus(int m) {
    require_resolution("annulus", m, 3);
    // four rings; rings 0/1 and 2/3 carry equal Morse values (flat collars),
    // f rises from the inner circle (+) to the outer circle (-)
    const int rings = 4;
    std::vector<VertexRecord> vertices;
    for (int j = 0; j < rings; ++j) {
        const double base = (j <= 1) ? 0.0 : kAmplitude;
        const double r = 0.5 + 0.5 * j / (rings - 1);
        for (int i = 0; i < m; ++i) {
            VertexRecord v;
            v.id = j * m + i;
            const double angle = 2.0 * kPi * i / m;
            v.coords = {r * std::cos(angle), r * std::sin(angle)};
            v.f = base + kTilt * i;
            vertices.push_back(std::move(v));
        }
    }
    auto at = [&](int j, int i) { return j * m + ((i % m + m) % m); };
    std::vector<Simplex> tops;
    for (int j = 0; j + 1 < rings; ++j) {
        for (int i = 0; i < m; ++i) {
            tops.push_back({at(j, i), at(j, i + 1), at(j + 1, i)});
            tops.push_back({at(j, i + 1), at(j + 1, i + 1), at(j + 1, i)});
        }
    }

    Instance out;
    out.name = "annulus";
    out.complex = build_complex(std::move(tops), std::move(vertices));
    out.labels = {BoundaryClass::APlus, BoundaryClass::RMinus};
    return out;
}

Instance make_moebius(int m) {
    require_resolution("moebius", m, 5);
    // five rows of m columns, glued with a flip; row 2 is the core circle and
    // carries the interior minimum + saddle, rows 0/1 and 3/4 are flat collars
    const int rows = 5;
    auto id = [&](int col, int row) { return col * rows + row; };
    std::vector<VertexRecord> vertices;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < rows; ++j) {
            VertexRecord v;
            v.id = id(i, j);
            double f;
            if (j == 2)
                f = -kAmplitude * (0.85 + 0.15 * core_height(i, m));
            else if (j <= 1)
                f = kTilt * (2 * i);
            else
                f = kTilt * (2 * i + 1);
            v.f = f;
            vertices.push_back(std::move(v));
        }
    }
    auto wrapped = [&](int col, int row) {
        if (col < m) return id(col, row);
        return id(0, rows - 1 - row); // the twist
    };
    std::vector<Simplex> tops;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j + 1 < rows; ++j) {
            const int p = wrapped(i, j), q = wrapped(i, j + 1);
            const int pn = wrapped(i + 1, j), qn = wrapped(i + 1, j + 1);
            tops.push_back({p, q, qn});
            tops.push_back({p, qn, pn});
        }
    }

    Instance out;
    out.name = "moebius";
    out.complex = build_complex(std::move(tops), std::move(vertices));
    out.labels = {BoundaryClass::RMinus};
    return out;
}

// octahedron triangles in local vertex indices 0..5 (+x,-x,+y,-y,+z,-z)
const std::vector<Simplex>& octahedron_triangles() {
    static const std::vector<Simplex> tris = [] {
        std::vector<Simplex> t;
        for (int x : {0, 1})
            for (int y : {2, 3})
                for (int z : {4, 5}) t.push_back({x, y, z});
        return t;
    }();
    return tris;
}

// staircase tetrahedra for the prism over a sorted triangle
void emit_prism(std::vector<Simplex>& tops, int a0, int b0, int c0, int a1, int b1, int c1) {
    tops.push_back({a0, b0, c0, c1});
    tops.push_back({a0, b0, b1, c1});
    tops.push_back({a0, a1, b1, c1});
}

Instance make_ball3(int layers) {
    require_resolution("ball3", layers, 2);
    // center + concentric octahedron layers; f peaks at the center and is
    // flat across the outermost two layers (class +)
    auto layer_vertex = [&](int j, int t) { return 1 + 6 * (j - 1) + t; };
    std::vector<VertexRecord> vertices;
    VertexRecord center;
    center.id = 0;
    center.coords = {0.0, 0.0, 0.0};
    center.f = kAmplitude;
    vertices.push_back(center);
    const double axes[6][3] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    for (int j = 1; j <= layers; ++j) {
        const double r = static_cast<double>(j) / layers;
        const int u = layers - j; // layers from the boundary
        const int flattened = std::max(u - 1, 0);
        const double base =
            kAmplitude * (static_cast<double>(flattened) / std::max(layers - 1, 1)) *
            (static_cast<double>(flattened) / std::max(layers - 1, 1));
        for (int t = 0; t < 6; ++t) {
            VertexRecord v;
            v.id = layer_vertex(j, t);
            v.coords = {r * axes[t][0], r * axes[t][1], r * axes[t][2]};
            v.f = base + kTilt * t;
            vertices.push_back(std::move(v));
        }
    }
    std::vector<Simplex> tops;
    for (const Simplex& tri : octahedron_triangles())
        tops.push_back({0, layer_vertex(1, tri[0]), layer_vertex(1, tri[1]), layer_vertex(1, tri[2])});
    for (int j = 1; j < layers; ++j)
        for (const Simplex& tri : octahedron_triangles())
            emit_prism(tops, layer_vertex(j, tri[0]), layer_vertex(j, tri[1]), layer_vertex(j, tri[2]),
                       layer_vertex(j + 1, tri[0]), layer_vertex(j + 1, tri[1]),
                       layer_vertex(j + 1, tri[2]));

    Instance out;
    out.name = "ball3";
    out.complex = build_complex(std::move(tops), std::move(vertices));
    out.labels = {BoundaryClass::APlus};
    return out;
}

Instance make_solid_torus(int m) {
    require_resolution("solid_torus", m, 4);
    // m disk slices around the core circle, each with a center, an inner ring
    // and an outer (boundary) ring of m vertices; f peaks on the core circle
    // with one max and one saddle, flat across the outer two rings (class +)
    const int p = m;
    const int slice = 1 + 2 * p;
    auto center = [&](int i) { return ((i % m + m) % m) * slice; };
    auto inner = [&](int i, int t) { return ((i % m + m) % m) * slice + 1 + ((t % p + p) % p); };
    auto outer = [&](int i, int t) { return ((i % m + m) % m) * slice + 1 + p + ((t % p + p) % p); };

    std::vector<VertexRecord> vertices;
    for (int i = 0; i < m; ++i) {
        const double phi = 2.0 * kPi * i / m;
        VertexRecord c;
        c.id = center(i);
        c.coords = {2.0 * std::cos(phi), 2.0 * std::sin(phi), 0.0};
        c.f = kAmplitude * (0.85 + 0.15 * core_height(i, m));
        vertices.push_back(std::move(c));
        for (int ring = 0; ring < 2; ++ring) {
            const double rho = 0.5 * (ring + 1);
            for (int t = 0; t < p; ++t) {
                const double theta = 2.0 * kPi * t / p;
                VertexRecord v;
                v.id = (ring == 0) ? inner(i, t) : outer(i, t);
                v.coords = {(2.0 + rho * std::cos(theta)) * std::cos(phi),
                            (2.0 + rho * std::cos(theta)) * std::sin(phi),
                            rho * std::sin(theta)};
                v.f = kTilt * t;
                vertices.push_back(std::move(v));
            }
        }
    }

    // slice triangles in local ids, sorted: center < inner ring < outer ring
    std::vector<Simplex> slice_tris;
    for (int t = 0; t < p; ++t) {
        const int a = 1 + t, an = 1 + (t + 1) % p;
        const int b = 1 + p + t, bn = 1 + p + (t + 1) % p;
        slice_tris.push_back({0, a, an});
        slice_tris.push_back({a, an, b});
        slice_tris.push_back({an, bn, b});
    }
    for (Simplex& s : slice_tris) std::sort(s.begin(), s.end());

    std::vector<Simplex> tops;
    for (int i = 0; i < m; ++i) {
        const int bottom = i * slice, top = ((i + 1) % m) * slice;
        for (const Simplex& tri : slice_tris)
            emit_prism(tops, bottom + tri[0], bottom + tri[1], bottom + tri[2], top + tri[0],
                       top + tri[1], top + tri[2]);
    }

    Instance out;
    out.name = "solid_torus";
    out.complex = build_complex(std::move(tops), std::move(vertices));
    out.labels = {BoundaryClass::APlus};
    return out;
}

} // namespace

BoundaryDecomposition Instance::decomposition() const {
    return assign_labels(detect_boundary(complex), labels);
}

Instance negate_morse_function(Instance instance) {
    for (VertexRecord& v : instance.complex.vertices)
        if (v.f) v.f = -*v.f;
    for (BoundaryClass& c : instance.labels) {
        switch (c) {
            case BoundaryClass::APlus: c = BoundaryClass::AMinus; break;
            case BoundaryClass::AMinus: c = BoundaryClass::APlus; break;
            case BoundaryClass::RPlus: c = BoundaryClass::RMinus; break;
            case BoundaryClass::RMinus: c = BoundaryClass::RPlus; break;
        }
    }
    instance.name += "_neg";
    return instance;
}

Instance with_labels(Instance instance, const std::vector<BoundaryClass>& labels,
                     const std::string& new_name) {
    if (labels.size() != instance.labels.size())
        throw LabelCountMismatchError("relabeling with a different component count");
    instance.labels = labels;
    if (!new_name.empty()) instance.name = new_name;
    return instance;
}

std::vector<std::string> example_names() {
    return {"interval", "disk", "annulus", "moebius", "ball3", "solid_torus"};
}

int example_minimum_resolution(const std::string& name) {
    if (name == "interval") return 3;
    if (name == "disk") return 3;
    if (name == "annulus") return 3;
    if (name == "moebius") return 5;
    if (name == "ball3") return 2;
    if (name == "solid_torus") return 4;
    throw UnknownExampleError("unknown example '" + name + "'");
}

Instance generate_example(const std::string& name, int resolution) {
    if (name == "interval") return make_interval(resolution);
    if (name == "disk") return make_disk(resolution);
    if (name == "annulus") return make_annulus(resolution);
    if (name == "moebius") return make_moebius(resolution);
    if (name == "ball3") return make_ball3(resolution);
    if (name == "solid_torus") return make_solid_torus(resolution);
    throw UnknownExampleError("unknown example '" + name + "'");
}

} // namespace morseb
