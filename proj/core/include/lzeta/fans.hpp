#pragma once

#include <string>
#include <vector>

#include "lzeta/geometry.hpp"

namespace lzeta {

/// Rational cone strictly spanned by one or two primitive generators, carrying
/// the face it maps to under the first-meet-locus map.
struct Cone {
    std::vector<LatticeVector> gens;  // 1 or 2, primitive; 2-generator cones
                                      // are stored with cross(gens[0], gens[1]) > 0
    std::string label;                // e.g. "(0,1),(2,3)"
    Face face;
};

std::string cone_label(const std::vector<LatticeVector>& gens);

/// Exact membership in the strictly spanned (open) cone.
bool cone_contains(const Cone& c, LatticeVector v);

/// The conical partition of the closed positive quadrant minus the origin:
/// the two axis rays, every inward normal strictly inside the open quadrant,
/// and the open sectors between angularly consecutive rays. Rays are sorted
/// ascending by angle starting at e1; cones list the rays first, then the
/// sectors.
struct ConicalPartition {
    std::vector<LatticeVector> rays;
    std::vector<Cone> cones;
};

ConicalPartition conical_partition(const NewtonPolytope& P);

/// The cone of directions whose first meet locus is the given proper face:
/// the inward-normal ray for an edge, the open span of the two adjacent edge
/// normals for a vertex. Throws Error for the full polytope.
Cone cone_of_face(const NewtonPolytope& P, const Face& tau);

/// Lattice points of the half-open fundamental parallelepiped
/// { l1*a1 + l2*a2 : 0 <= l < 1 }; {(0,0)} for a single generator.
std::vector<LatticePoint> fundamental_points(const Cone& c);

/// Fan with unimodular maximal cones supported on the positive quadrant.
struct SimpleFan {
    std::vector<LatticeVector> rays;
    std::vector<Cone> maximal_cones;
};

/// Refine every non-unimodular sector by repeatedly inserting the unique
/// fundamental-parallelepiped point closest to the first generator
/// (determinant 1 with it), which strictly decreases the remaining
/// multiplicity. With force_nontrivial, a fan whose only rays are the axes
/// additionally gets the ray (1,1).
SimpleFan make_simple(const ConicalPartition& part, bool force_nontrivial = false);

/// Partition of a fan's rays: inward normals of P, axis vectors, and the
/// extra rays introduced by subdivision. A ray that qualifies both as a
/// normal and as an axis vector counts as a normal.
struct GeneratorClasses {
    std::vector<LatticeVector> normals;  // subset of the polytope's inward normals
    std::vector<LatticeVector> axes;     // subset of {e1, e2}
    std::vector<LatticeVector> extras;   // subdivision rays
};

GeneratorClasses classify_generators(const SimpleFan& F, const NewtonPolytope& P);

}  // namespace lzeta
