#include "lzeta/geometry.hpp"

#include <algorithm>
#include <numeric>

namespace lzeta {

namespace {

__int128 cross3(LatticePoint o, LatticePoint a, LatticePoint b) {
    return static_cast<__int128>(a.i - o.i) * (b.j - o.j) -
           static_cast<__int128>(a.j - o.j) * (b.i - o.i);
}

long long to_ll(__int128 v) {
    if (v > static_cast<__int128>(0x7fffffffffffffffLL) ||
        v < -static_cast<__int128>(0x7fffffffffffffffLL) - 1)
        throw OverflowError("inner product outside signed 64-bit range");
    return static_cast<long long>(v);
}

}  // namespace

std::string to_string(LatticeVector v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

std::string to_string(LatticePoint p) {
    return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

std::string Face::name() const {
    switch (dim) {
        case 0:
            return "vertex " + lzeta::to_string(vertices[0]);
        case 1:
            return "edge (" + lzeta::to_string(vertices[0]) + "," +
                   lzeta::to_string(vertices[1]) + ")";
        default:
            return "polytope";
    }
}

FaceKey::FaceKey(const Face& f) : dim(f.dim), sorted_vertices(f.vertices) {
    std::sort(sorted_vertices.begin(), sorted_vertices.end());
}

NewtonPolytope newton_polytope(const LaurentPolynomial& f) {
    if (f.is_zero()) throw HullDimensionError("Newton polytope of the zero polynomial", -1);
    std::vector<LatticePoint> pts = support(f);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() == 1) throw HullDimensionError("Newton polytope is a point", 0);

    // Andrew monotone chain; "<= 0" drops collinear points, so the vertex
    // list is strictly convex and counterclockwise from the lex-min vertex.
    std::size_t n = pts.size();
    std::vector<LatticePoint> h(2 * n);
    std::size_t k = 0;
    for (std::size_t idx = 0; idx < n; ++idx) {
        while (k >= 2 && cross3(h[k - 2], h[k - 1], pts[idx]) <= 0) --k;
        h[k++] = pts[idx];
    }
    for (std::size_t idx = n - 1, t = k + 1; idx-- > 0;) {
        while (k >= t && cross3(h[k - 2], h[k - 1], pts[idx]) <= 0) --k;
        h[k++] = pts[idx];
    }
    h.resize(k - 1);
    if (h.size() < 3) throw HullDimensionError("Newton polytope is a segment", 1);

    NewtonPolytope P;
    P.vertices = std::move(h);
    std::size_t m = P.vertices.size();
    for (std::size_t idx = 0; idx < m; ++idx) {
        LatticePoint v = P.vertices[idx];
        LatticePoint w = P.vertices[(idx + 1) % m];
        LatticeVector dir = primitive({w.i - v.i, w.j - v.j});
        LatticeVector normal{-dir.y, dir.x};  // left of the directed edge = inward
        P.edges.push_back(Face{1, {v, w}, normal});
        P.normals.push_back(normal);
    }
    return P;
}

long long d_value(const NewtonPolytope& P, LatticeVector a) {
    __int128 best = dot(a, P.vertices[0]);
    for (std::size_t idx = 1; idx < P.vertices.size(); ++idx)
        best = std::min(best, dot(a, P.vertices[idx]));
    return to_ll(best);
}

Face full_face(const NewtonPolytope& P) { return Face{2, P.vertices, std::nullopt}; }

Face first_meet_locus(const NewtonPolytope& P, LatticeVector a) {
    if (a.x == 0 && a.y == 0) return full_face(P);
    __int128 d = dot(a, P.vertices[0]);
    for (std::size_t idx = 1; idx < P.vertices.size(); ++idx)
        d = std::min(d, dot(a, P.vertices[idx]));
    std::vector<std::size_t> arg;
    for (std::size_t idx = 0; idx < P.vertices.size(); ++idx)
        if (dot(a, P.vertices[idx]) == d) arg.push_back(idx);
    if (arg.size() == 1) return Face{0, {P.vertices[arg[0]]}, std::nullopt};
    // Two minimizers on a strictly convex polygon are consecutive.
    if (arg.size() != 2) throw Error("first_meet_locus: non-face minimizer set");
    std::size_t m = P.vertices.size();
    std::size_t i0 = arg[0], i1 = arg[1];
    if ((i0 + 1) % m == i1) return P.edges[i0];
    if ((i1 + 1) % m == i0) return P.edges[i1];
    throw Error("first_meet_locus: minimizers are not an edge");
}

const std::vector<LatticeVector>& inward_normals(const NewtonPolytope& P) { return P.normals; }

LatticeVector primitive(LatticeVector v) {
    if (v.x == 0 && v.y == 0) throw Error("primitive: zero vector");
    long long g = std::gcd(v.x < 0 ? -v.x : v.x, v.y < 0 ? -v.y : v.y);
    return {v.x / g, v.y / g};
}

namespace {

bool on_segment(LatticePoint v, LatticePoint w, LatticePoint pt) {
    __int128 cr = static_cast<__int128>(w.i - v.i) * (pt.j - v.j) -
                  static_cast<__int128>(w.j - v.j) * (pt.i - v.i);
    if (cr != 0) return false;
    return std::min(v.i, w.i) <= pt.i && pt.i <= std::max(v.i, w.i) &&
           std::min(v.j, w.j) <= pt.j && pt.j <= std::max(v.j, w.j);
}

}  // namespace

LaurentPolynomial face_function(const LaurentPolynomial& f, const Face& face) {
    NewtonPolytope P = newton_polytope(f);
    auto is_vertex = [&](const LatticePoint& v) {
        return std::find(P.vertices.begin(), P.vertices.end(), v) != P.vertices.end();
    };
    bool valid = false;
    switch (face.dim) {
        case 0:
            valid = face.vertices.size() == 1 && is_vertex(face.vertices[0]);
            break;
        case 1: {
            if (face.vertices.size() != 2) break;
            FaceKey key(face);
            for (const Face& e : P.edges)
                if (FaceKey(e) == key) {
                    valid = true;
                    break;
                }
            break;
        }
        case 2:
            valid = FaceKey(face) == FaceKey(full_face(P));
            break;
        default:
            break;
    }
    if (!valid) throw Error("face_function: face does not belong to the Newton polytope of f");

    if (face.dim == 2) return f;
    LaurentPolynomial out;
    for (const auto& [e, c] : f.terms()) {
        bool keep = face.dim == 0 ? (e == face.vertices[0])
                                  : on_segment(face.vertices[0], face.vertices[1], e);
        if (keep) out = out + LaurentPolynomial::monomial(c, e);
    }
    return out;
}

}  // namespace lzeta
