#include "lzeta/fans.hpp"

#include <algorithm>

namespace lzeta {

namespace {

// Ascending angle inside the closed first quadrant.
bool angle_less(LatticeVector a, LatticeVector b) { return cross(a, b) > 0; }

LatticeVector sum(LatticeVector a, LatticeVector b) { return {a.x + b.x, a.y + b.y}; }

}  // namespace

std::string cone_label(const std::vector<LatticeVector>& gens) {
    std::string out;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (k) out += ",";
        out += to_string(gens[k]);
    }
    return out;
}

bool cone_contains(const Cone& c, LatticeVector v) {
    if (c.gens.size() == 1) {
        return cross(c.gens[0], v) == 0 && dot(c.gens[0], v) > 0;
    }
    __int128 det = cross(c.gens[0], c.gens[1]);
    __int128 l1 = cross(v, c.gens[1]);  // = l1 * det
    __int128 l2 = cross(c.gens[0], v);  // = l2 * det
    if (det < 0) {
        det = -det;
        l1 = -l1;
        l2 = -l2;
    }
    return l1 > 0 && l2 > 0;
}

ConicalPartition conical_partition(const NewtonPolytope& P) {
    std::vector<LatticeVector> interior;
    for (LatticeVector n : P.normals)
        if (n.x > 0 && n.y > 0) interior.push_back(n);
    std::sort(interior.begin(), interior.end(), angle_less);

    ConicalPartition part;
    part.rays.push_back({1, 0});
    part.rays.insert(part.rays.end(), interior.begin(), interior.end());
    part.rays.push_back({0, 1});

    for (LatticeVector r : part.rays) {
        Cone c{{r}, cone_label({r}), first_meet_locus(P, r)};
        part.cones.push_back(std::move(c));
    }
    for (std::size_t k = 0; k + 1 < part.rays.size(); ++k) {
        LatticeVector a = part.rays[k], b = part.rays[k + 1];
        Cone c{{a, b}, cone_label({a, b}), first_meet_locus(P, sum(a, b))};
        part.cones.push_back(std::move(c));
    }
    return part;
}

Cone cone_of_face(const NewtonPolytope& P, const Face& tau) {
    if (tau.dim == 2) throw Error("cone_of_face: the full polytope maps to {0}");
    if (tau.dim == 1) {
        FaceKey key(tau);
        for (const Face& e : P.edges)
            if (FaceKey(e) == key) {
                LatticeVector n = *e.inward_normal;
                return Cone{{n}, cone_label({n}), e};
            }
        throw Error("cone_of_face: edge not found");
    }
    std::size_t m = P.vertices.size();
    for (std::size_t k = 0; k < m; ++k) {
        if (P.vertices[k] == tau.vertices[0]) {
            // Edges incident to vertex k: edges[k-1] (incoming) and edges[k]
            // (outgoing); their normals span the vertex cone counterclockwise.
            LatticeVector a = *P.edges[(k + m - 1) % m].inward_normal;
            LatticeVector b = *P.edges[k].inward_normal;
            return Cone{{a, b}, cone_label({a, b}), Face{0, {P.vertices[k]}, std::nullopt}};
        }
    }
    throw Error("cone_of_face: vertex not found");
}

std::vector<LatticePoint> fundamental_points(const Cone& c) {
    if (c.gens.size() == 1) return {LatticePoint{0, 0}};
    LatticeVector a = c.gens[0], b = c.gens[1];
    __int128 det = cross(a, b);
    if (det == 0) throw Error("fundamental_points: dependent generators");

    long long min_x = std::min({0LL, a.x, b.x, a.x + b.x});
    long long max_x = std::max({0LL, a.x, b.x, a.x + b.x});
    long long min_y = std::min({0LL, a.y, b.y, a.y + b.y});
    long long max_y = std::max({0LL, a.y, b.y, a.y + b.y});

    auto coeff_in_range = [det](__int128 num) {
        // num/det in [0, 1)
        return det > 0 ? (num >= 0 && num < det) : (num <= 0 && num > det);
    };

    std::vector<LatticePoint> out;
    for (long long x = min_x; x <= max_x; ++x)
        for (long long y = min_y; y <= max_y; ++y) {
            LatticeVector v{x, y};
            if (coeff_in_range(cross(v, b)) && coeff_in_range(cross(a, v)))
                out.push_back({x, y});
        }
    std::sort(out.begin(), out.end(), GradedLex{});
    return out;
}

namespace {

// Insert the unique parallelepiped point h with det(a, h) = +-1; cone(a, h) is
// unimodular and |det(h, b)| < |det(a, b)|, so the recursion terminates.
void refine_sector(LatticeVector a, LatticeVector b, const Face& face,
                   std::vector<LatticeVector>& rays, std::vector<Cone>& out) {
    __int128 det = cross(a, b);
    if (det == 1 || det == -1) {
        out.push_back(Cone{{a, b}, cone_label({a, b}), face});
        return;
    }
    Cone parent{{a, b}, "", face};
    LatticeVector h{0, 0};
    bool found = false;
    for (LatticePoint pt : fundamental_points(parent)) {
        if (pt.i == 0 && pt.j == 0) continue;
        LatticeVector v{pt.i, pt.j};
        __int128 c1 = cross(a, v);
        if (c1 == 1 || c1 == -1) {
            h = v;
            found = true;
            break;
        }
    }
    if (!found) throw Error("make_simple: no unimodular insertion point");
    rays.push_back(h);
    out.push_back(Cone{{a, h}, cone_label({a, h}), face});
    refine_sector(h, b, face, rays, out);
}

}  // namespace

SimpleFan make_simple(const ConicalPartition& part, bool force_nontrivial) {
    SimpleFan fan;
    fan.rays = part.rays;
    for (const Cone& c : part.cones) {
        if (c.gens.size() != 2) continue;
        LatticeVector a = c.gens[0], b = c.gens[1];
        if (cross(a, b) < 0) std::swap(a, b);
        refine_sector(a, b, c.face, fan.rays, fan.maximal_cones);
    }
    bool trivial = true;
    for (LatticeVector r : fan.rays)
        if (!(r == LatticeVector{1, 0}) && !(r == LatticeVector{0, 1})) trivial = false;
    if (force_nontrivial && trivial && fan.maximal_cones.size() == 1) {
        Face face = fan.maximal_cones[0].face;
        fan.maximal_cones.clear();
        LatticeVector e1{1, 0}, e2{0, 1}, h{1, 1};
        fan.rays.push_back(h);
        fan.maximal_cones.push_back(Cone{{e1, h}, cone_label({e1, h}), face});
        fan.maximal_cones.push_back(Cone{{h, e2}, cone_label({h, e2}), face});
    }
    std::sort(fan.rays.begin(), fan.rays.end(), angle_less);
    std::sort(fan.maximal_cones.begin(), fan.maximal_cones.end(),
              [](const Cone& l, const Cone& r) { return angle_less(l.gens[0], r.gens[0]); });
    return fan;
}

GeneratorClasses classify_generators(const SimpleFan& F, const NewtonPolytope& P) {
    GeneratorClasses cls;
    for (LatticeVector r : F.rays) {
        bool is_normal =
            std::find(P.normals.begin(), P.normals.end(), r) != P.normals.end();
        if (is_normal)
            cls.normals.push_back(r);
        else if (r == LatticeVector{1, 0} || r == LatticeVector{0, 1})
            cls.axes.push_back(r);
        else
            cls.extras.push_back(r);
    }
    return cls;
}

}  // namespace lzeta
