#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lzeta/laurent.hpp"

namespace lzeta {

/// Direction/normal vector in the dual lattice.
struct LatticeVector {
    long long x = 0;
    long long y = 0;
    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
};

inline __int128 cross(LatticeVector a, LatticeVector b) {
    return static_cast<__int128>(a.x) * b.y - static_cast<__int128>(a.y) * b.x;
}
inline __int128 dot(LatticeVector a, LatticeVector b) {
    return static_cast<__int128>(a.x) * b.x + static_cast<__int128>(a.y) * b.y;
}
inline __int128 dot(LatticeVector a, LatticePoint p) {
    return static_cast<__int128>(a.x) * p.i + static_cast<__int128>(a.y) * p.j;
}

std::string to_string(LatticeVector v);  // "(x,y)"
std::string to_string(LatticePoint p);   // "(i,j)"

/// Face of the Newton polytope: a vertex (dim 0), an edge (dim 1, carries its
/// primitive inward normal), or the whole polytope (dim 2).
struct Face {
    int dim = 0;
    std::vector<LatticePoint> vertices;
    std::optional<LatticeVector> inward_normal;  // present iff dim == 1

    std::string name() const;
    friend bool operator==(const Face&, const Face&) = default;
};

/// Order-insensitive identity of a face, for deduplication.
struct FaceKey {
    int dim;
    std::vector<LatticePoint> sorted_vertices;
    explicit FaceKey(const Face& f);
    friend bool operator==(const FaceKey&, const FaceKey&) = default;
    friend auto operator<=>(const FaceKey&, const FaceKey&) = default;
};

/// 2D lattice polytope: counterclockwise vertices starting at the
/// lexicographically smallest one, edges between consecutive vertices, and
/// one primitive inward normal per edge.
struct NewtonPolytope {
    std::vector<LatticePoint> vertices;
    std::vector<Face> edges;
    std::vector<LatticeVector> normals;
};

/// Convex hull of the support; collinear support points stay out of the
/// vertex list. Throws HullDimensionError when the hull is a point or a
/// segment.
NewtonPolytope newton_polytope(const LaurentPolynomial& f);

/// d(a) = min over vertices of <a, v>; d(0) = 0.
long long d_value(const NewtonPolytope& P, LatticeVector a);

/// The face on which <a, .> attains d(a); the whole polytope for a = 0.
Face first_meet_locus(const NewtonPolytope& P, LatticeVector a);

const std::vector<LatticeVector>& inward_normals(const NewtonPolytope& P);

/// v / gcd(|x|, |y|); throws Error on the zero vector.
LatticeVector primitive(LatticeVector v);

Face full_face(const NewtonPolytope& P);

/// Restriction of f to the terms whose exponents lie on the (closed) face.
/// Throws Error when the face is not a face of f's Newton polytope.
LaurentPolynomial face_function(const LaurentPolynomial& f, const Face& face);

}  // namespace lzeta
