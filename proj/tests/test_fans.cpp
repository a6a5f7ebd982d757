#include <doctest.h>

#include <algorithm>
#include <set>

#include "test_support.hpp"

using namespace lzeta;
using testutil::rng;

namespace {

LatticePoint pt(long long i, long long j) { return {i, j}; }
LatticeVector vec(long long x, long long y) { return {x, y}; }

std::set<std::vector<LatticeVector>> gen_sets(const std::vector<Cone>& cones) {
    std::set<std::vector<LatticeVector>> s;
    for (const Cone& c : cones) {
        std::vector<LatticeVector> g = c.gens;
        std::sort(g.begin(), g.end());
        s.insert(g);
    }
    return s;
}

__int128 det2(const Cone& c) { return cross(c.gens[0], c.gens[1]); }

}  // namespace

TEST_CASE("conical_partition: reference triangle has five cones") {
    auto P = newton_polytope(parse("x^-3+y^-2+y^4"));
    auto part = conical_partition(P);
    CHECK(part.rays == std::vector<LatticeVector>{vec(1, 0), vec(2, 3), vec(0, 1)});
    REQUIRE(part.cones.size() == 5);
    CHECK(gen_sets(part.cones) ==
          std::set<std::vector<LatticeVector>>{{vec(1, 0)},
                                               {vec(2, 3)},
                                               {vec(0, 1)},
                                               {vec(1, 0), vec(2, 3)},
                                               {vec(0, 1), vec(2, 3)}});
    // faces per cone
    for (const Cone& c : part.cones) {
        if (c.label == "(2,3)") {
            CHECK(c.face.dim == 1);
        } else if (c.label == "(1,0)" || c.label == "(1,0),(2,3)") {
            CHECK(c.face.vertices == std::vector<LatticePoint>{pt(-3, 0)});
        } else {
            CHECK(c.face.vertices == std::vector<LatticePoint>{pt(0, -2)});
        }
    }
}

TEST_CASE("conical_partition: no interior normal means three cones") {
    auto P = newton_polytope(parse("(y^-1+x)^2+y^3"));
    auto part = conical_partition(P);
    CHECK(part.rays == std::vector<LatticeVector>{vec(1, 0), vec(0, 1)});
    CHECK(part.cones.size() == 3);

    // square with vertices (+-1, +-1): axis normals only
    auto Q = newton_polytope(parse("x*y + x*y^-1 + x^-1*y + x^-1*y^-1"));
    auto qpart = conical_partition(Q);
    CHECK(qpart.rays == std::vector<LatticeVector>{vec(1, 0), vec(0, 1)});
    CHECK(qpart.cones.size() == 3);
}

TEST_CASE("partition covers [0,20]^2 minus the origin exactly once") {
    auto P = newton_polytope(parse("x^-3+y^-2+y^4"));
    auto part = conical_partition(P);
    for (long long x = 0; x <= 20; ++x)
        for (long long y = 0; y <= 20; ++y) {
            if (x == 0 && y == 0) continue;
            CHECK(testutil::containing_cones(part, {x, y}) == 1);
        }
}

TEST_CASE("cone faces are constant on sampled interior points") {
    for (int k = 0; k < 60; ++k) {
        LaurentPolynomial f = testutil::random_polytope_poly(rng());
        auto P = newton_polytope(f);
        auto part = conical_partition(P);
        std::uniform_int_distribution<int> coeff(1, 7);
        for (const Cone& c : part.cones) {
            for (int t = 0; t < 10; ++t) {
                LatticeVector v;
                if (c.gens.size() == 1) {
                    long long l = coeff(rng());
                    v = {l * c.gens[0].x, l * c.gens[0].y};
                } else {
                    long long l1 = coeff(rng()), l2 = coeff(rng());
                    v = {l1 * c.gens[0].x + l2 * c.gens[1].x,
                         l1 * c.gens[0].y + l2 * c.gens[1].y};
                }
                CHECK(FaceKey(first_meet_locus(P, v)) == FaceKey(c.face));
            }
        }
    }
}

TEST_CASE("cone_of_face: examples") {
    auto P = newton_polytope(parse("x^-3+y^-2+y^4"));

    // vertex (0,-2) sits between the edges with normals (2,3) and (-1,0)
    Cone c = cone_of_face(P, Face{0, {pt(0, -2)}, std::nullopt});
    CHECK(c.gens == std::vector<LatticeVector>{vec(2, 3), vec(-1, 0)});
    CHECK(cone_contains(c, vec(0, 1)));

    // Example with vertices (0,3),(2,0),(0,-2): vertex (0,-2) -> ((1,0),(-1,1))
    auto P2 = newton_polytope(parse("(y^-1+x)^2+y^3"));
    Cone c2 = cone_of_face(P2, Face{0, {pt(0, -2)}, std::nullopt});
    CHECK(c2.gens == std::vector<LatticeVector>{vec(1, 0), vec(-1, 1)});

    Face gamma = first_meet_locus(P, vec(2, 3));
    Cone c3 = cone_of_face(P, gamma);
    CHECK(c3.gens == std::vector<LatticeVector>{vec(2, 3)});

    CHECK_THROWS_AS(cone_of_face(P, full_face(P)), Error);
}

TEST_CASE("fundamental_points: examples") {
    Cone c1{{vec(0, 1), vec(2, 3)}, "", {}};
    CHECK(fundamental_points(c1) == std::vector<LatticePoint>{pt(0, 0), pt(1, 2)});

    Cone c2{{vec(2, 3), vec(1, 0)}, "", {}};
    CHECK(fundamental_points(c2) ==
          std::vector<LatticePoint>{pt(0, 0), pt(1, 1), pt(2, 2)});

    Cone c3{{vec(1, 0), vec(0, 1)}, "", {}};
    CHECK(fundamental_points(c3) == std::vector<LatticePoint>{pt(0, 0)});

    Cone ray{{vec(5, 3)}, "", {}};
    CHECK(fundamental_points(ray) == std::vector<LatticePoint>{pt(0, 0)});
}

TEST_CASE("fundamental point count equals |det|") {
    for (int k = 0; k < 250; ++k) {
        LatticeVector a = testutil::random_primitive_quadrant(rng());
        LatticeVector b = testutil::random_primitive_quadrant(rng());
        if (cross(a, b) == 0) continue;
        Cone c{{a, b}, "", {}};
        __int128 det = cross(a, b);
        CHECK(fundamental_points(c).size() ==
              static_cast<std::size_t>(det < 0 ? -det : det));
    }
}

TEST_CASE("make_simple: reference partition refines to unimodular cones") {
    auto P = newton_polytope(parse("x^-3+y^-2+y^4"));
    auto part = conical_partition(P);
    SimpleFan fan = make_simple(part);
    CHECK(fan.rays == std::vector<LatticeVector>{vec(1, 0), vec(1, 1), vec(2, 3),
                                                 vec(1, 2), vec(0, 1)});
    REQUIRE(fan.maximal_cones.size() == 4);
    for (const Cone& c : fan.maximal_cones) {
        __int128 d = det2(c);
        CHECK((d == 1 || d == -1));
    }
    // the original rays survive
    for (LatticeVector r : part.rays)
        CHECK(std::find(fan.rays.begin(), fan.rays.end(), r) != fan.rays.end());
}

TEST_CASE("make_simple: sector ((0,1),(2,3)) inserts (1,2)") {
    ConicalPartition part;
    part.rays = {vec(0, 1), vec(2, 3)};
    Face dummy{0, {pt(0, 0)}, std::nullopt};
    part.cones = {Cone{{vec(0, 1), vec(2, 3)}, "", dummy}};
    SimpleFan fan = make_simple(part);
    CHECK(std::find(fan.rays.begin(), fan.rays.end(), vec(1, 2)) != fan.rays.end());
    CHECK(fan.maximal_cones.size() == 2);
}

TEST_CASE("make_simple: terminates on cone((1,0),(1,3))") {
    ConicalPartition part;
    part.rays = {vec(1, 0), vec(1, 3)};
    Face dummy{0, {pt(0, 0)}, std::nullopt};
    part.cones = {Cone{{vec(1, 0), vec(1, 3)}, "", dummy}};
    SimpleFan fan = make_simple(part);
    REQUIRE(fan.maximal_cones.size() == 3);
    CHECK(std::find(fan.rays.begin(), fan.rays.end(), vec(1, 1)) != fan.rays.end());
    CHECK(std::find(fan.rays.begin(), fan.rays.end(), vec(1, 2)) != fan.rays.end());
}

TEST_CASE("make_simple: already-simple sector passes through; forcing adds (1,1)") {
    auto P = newton_polytope(parse("(y^-1+x)^2+y^3"));
    auto part = conical_partition(P);
    SimpleFan fan = make_simple(part);
    CHECK(fan.rays == std::vector<LatticeVector>{vec(1, 0), vec(0, 1)});
    CHECK(fan.maximal_cones.size() == 1);

    SimpleFan forced = make_simple(part, /*force_nontrivial=*/true);
    CHECK(forced.rays == std::vector<LatticeVector>{vec(1, 0), vec(1, 1), vec(0, 1)});
    CHECK(forced.maximal_cones.size() == 2);
}

TEST_CASE("make_simple: determinants and support on random sectors") {
    for (int k = 0; k < 250; ++k) {
        LatticeVector a = testutil::random_primitive_quadrant(rng());
        LatticeVector b = testutil::random_primitive_quadrant(rng());
        if (cross(a, b) == 0) continue;
        if (cross(a, b) < 0) std::swap(a, b);
        ConicalPartition part;
        part.rays = {a, b};
        Face dummy{0, {pt(0, 0)}, std::nullopt};
        Cone parent{{a, b}, "", dummy};
        part.cones = {parent};
        SimpleFan fan = make_simple(part);
        for (const Cone& c : fan.maximal_cones) {
            __int128 d = det2(c);
            CHECK((d == 1 || d == -1));
        }
        // sampled support preservation: points of the parent lie in exactly
        // one piece (subcone interior or inserted ray)
        std::uniform_int_distribution<int> coeff(1, 9);
        for (int t = 0; t < 8; ++t) {
            long long l1 = coeff(rng()), l2 = coeff(rng());
            LatticeVector v{l1 * a.x + l2 * b.x, l1 * a.y + l2 * b.y};
            int hits = 0;
            for (const Cone& c : fan.maximal_cones)
                if (cone_contains(c, v)) ++hits;
            for (LatticeVector r : fan.rays) {
                if (r == a || r == b) continue;
                Cone rc{{r}, "", dummy};
                if (cone_contains(rc, v)) ++hits;
            }
            CHECK(hits == 1);
        }
    }
}

TEST_CASE("classify_generators") {
    // reference triangle: (2,3) is a normal; axes are not
    auto P = newton_polytope(parse("x^-3+y^-2+y^4"));
    auto part = conical_partition(P);

    // before refinement, no extras at all
    SimpleFan unrefined{part.rays, {}};
    GeneratorClasses cls0 = classify_generators(unrefined, P);
    CHECK(cls0.normals == std::vector<LatticeVector>{vec(2, 3)});
    CHECK(cls0.axes == std::vector<LatticeVector>{vec(1, 0), vec(0, 1)});
    CHECK(cls0.extras.empty());

    SimpleFan fan = make_simple(part);
    GeneratorClasses cls = classify_generators(fan, P);
    CHECK(cls.normals == std::vector<LatticeVector>{vec(2, 3)});
    CHECK(cls.axes == std::vector<LatticeVector>{vec(1, 0), vec(0, 1)});
    CHECK(cls.extras == std::vector<LatticeVector>{vec(1, 1), vec(1, 2)});

    // (y^-1+x)^2+y^3: e1 is an inward normal and lands in the normal class
    auto P2 = newton_polytope(parse("(y^-1+x)^2+y^3"));
    SimpleFan fan2 = make_simple(conical_partition(P2), true);
    GeneratorClasses cls2 = classify_generators(fan2, P2);
    CHECK(cls2.normals == std::vector<LatticeVector>{vec(1, 0)});
    CHECK(cls2.axes == std::vector<LatticeVector>{vec(0, 1)});
    CHECK(cls2.extras == std::vector<LatticeVector>{vec(1, 1)});

    // square with vertices (+-1,+-1): both axes are normals
    auto Q = newton_polytope(parse("x*y + x*y^-1 + x^-1*y + x^-1*y^-1"));
    GeneratorClasses cls3 = classify_generators(make_simple(conical_partition(Q)), Q);
    CHECK(cls3.normals == std::vector<LatticeVector>{vec(1, 0), vec(0, 1)});
    CHECK(cls3.axes.empty());
    CHECK(cls3.extras.empty());
}

TEST_CASE("partition coverage on random polytopes") {
    for (int k = 0; k < 200; ++k) {
        LaurentPolynomial f = testutil::random_polytope_poly(rng());
        auto P = newton_polytope(f);
        auto part = conical_partition(P);
        std::uniform_int_distribution<int> coord(0, 20);
        for (int t = 0; t < 25; ++t) {
            LatticeVector v{coord(rng()), coord(rng())};
            if (v.x == 0 && v.y == 0) continue;
            CAPTURE(f.to_string());
            CAPTURE(v);
            CHECK(testutil::containing_cones(part, v) == 1);
        }
    }
}

TEST_CASE("vertex cones have two generators, edge cones one (2 - dim tau)") {
    for (int k = 0; k < 100; ++k) {
        LaurentPolynomial f = testutil::random_polytope_poly(rng());
        auto P = newton_polytope(f);
        for (const Face& e : P.edges)
            CHECK(cone_of_face(P, e).gens.size() == 1);
        for (const LatticePoint& v : P.vertices)
            CHECK(cone_of_face(P, Face{0, {v}, std::nullopt}).gens.size() == 2);
    }
}
