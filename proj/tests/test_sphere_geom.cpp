#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <tropbraid/rng.hpp>
#include <tropbraid/sphere_geom.hpp>

#include "helpers.hpp"

#include <algorithm>
#include <cmath>

using namespace tropbraid;
using testutil::sph;

namespace {

// Independent hull oracle: plane normal via cross product, side via dot
// product, no shared code with the library's determinant expansion.
std::vector<Face> brute_faces(const std::vector<SpherePoint>& pts) {
    const int n = static_cast<int>(pts.size());
    std::vector<Face> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const SpherePoint nrm = cross(pts[j] - pts[i], pts[k] - pts[i]);
                int side = 0;
                bool mixed = false;
                for (int s = 0; s < n && !mixed; ++s) {
                    if (s == i || s == j || s == k) continue;
                    const double d = dot(nrm, pts[s] - pts[i]);
                    const int sg = d > 0 ? 1 : (d < 0 ? -1 : 0);
                    if (sg == 0 || (side != 0 && sg != side)) mixed = true;
                    side = sg;
                }
                if (mixed) continue;
                if (side < 0)
                    out.push_back(canonical_face(i + 1, j + 1, k + 1));
                else
                    out.push_back(canonical_face(i + 1, k + 1, j + 1));
            }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Face> sorted_faces(const Triangulation& t) {
    std::vector<Face> fs = t.faces();
    std::sort(fs.begin(), fs.end());
    return fs;
}

std::vector<SpherePoint> rotated(const std::vector<SpherePoint>& pts) {
    // fixed rotation: 0.7 rad about z, then 0.4 rad about x
    std::vector<SpherePoint> out;
    const double cz = std::cos(0.7), sz = std::sin(0.7);
    const double cx = std::cos(0.4), sx = std::sin(0.4);
    for (const SpherePoint& p : pts) {
        const double x1 = cz * p.x - sz * p.y;
        const double y1 = sz * p.x + cz * p.y;
        out.push_back({x1, cx * y1 - sx * p.z, sx * y1 + cx * p.z});
    }
    return out;
}

} // namespace

TEST_CASE("coplanarity determinant basics") {
    const SpherePoint p{1, 0, 0}, q{0, 1, 0}, r{0, 0, 1}, s{-1, 0, 0};
    CHECK(coplanarity_det(p, q, r, s) == -2.0);

    // four points on the equator are exactly coplanar
    const SpherePoint e1{1, 0, 0}, e2{0, 1, 0}, e3{-1, 0, 0}, e4{0, -1, 0};
    CHECK(coplanarity_det(e1, e2, e3, e4) == 0.0);

    // swapping two arguments negates the determinant: the (c,d) swap only
    // reverses subtractions, so it is bitwise exact; the (a,b) swap rebuilds
    // the difference vectors and is exact only up to rounding
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_sphere_point(rng), b = random_sphere_point(rng);
        auto c = random_sphere_point(rng), d = random_sphere_point(rng);
        const double ref = coplanarity_det(a, b, c, d);
        CHECK(ref == doctest::Approx(-coplanarity_det(b, a, c, d))
                         .epsilon(1e-12));
        CHECK(ref == -coplanarity_det(a, b, d, c));
    }
}

TEST_CASE("coplanarity sign with exact fallback") {
    const SpherePoint p{1, 0, 0}, q{0, 1, 0}, r{0, 0, 1};
    CHECK(coplanarity_sign(p, q, r, {-1, 0, 0}) == -1);
    CHECK(coplanarity_sign(q, p, r, {-1, 0, 0}) == 1);
    // s = q + r - p lies exactly in the plane of p, q, r
    CHECK(coplanarity_sign(p, q, r, {-1, 1, 1}) == 0);
}

TEST_CASE("in_circumcircle on the regular tetrahedron") {
    const double c = 1.0 / std::sqrt(3.0);
    const SpherePoint v1{c, c, c}, v2{c, -c, -c}, v3{-c, c, -c}, v4{-c, -c, c};
    // v4 is on the far side of the circumcircle of the outward face (v1,v2,v3)
    CHECK(in_circumcircle(v1, v2, v3, v4) == -1);
    // the normalized face centroid (= the antipode of v4) is inside the cap
    CHECK(in_circumcircle(v1, v2, v3, {c, c, -c}) == 1);
    // a query point on the circle itself reports 0
    CHECK(in_circumcircle(v1, v2, v3, v1) == 0);
    // three points on a great circle have no circumcap side
    CHECK_THROWS_AS(in_circumcircle({1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, 0, 1}),
                    GeometryError);
}

TEST_CASE("delaunay of four points is the tetrahedron") {
    Configuration c = Configuration::from_raw(
        {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}});
    Triangulation t = delaunay(c);
    CHECK(t.vertex_count() == 4);
    CHECK(t.faces().size() == 4);
    CHECK(t.edges().size() == 6);
    CHECK(validate(t).empty());
}

TEST_CASE("fewer than four points is an error") {
    Configuration c = Configuration::from_raw({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK_THROWS_AS(delaunay(c), GeometryError);
}

TEST_CASE("exact octahedron is degenerate") {
    Configuration c = Configuration::from_raw({{1, 0, 0},
                                               {-1, 0, 0},
                                               {0, 1, 0},
                                               {0, -1, 0},
                                               {0, 0, 1},
                                               {0, 0, -1}});
    CHECK_THROWS_AS(delaunay(c), GeneralPositionViolation);
    try {
        delaunay(c);
    } catch (const GeneralPositionViolation& e) {
        bool has_quad = false;
        for (const auto& v : e.violations)
            if (v.kind == Violation::Kind::CocircularQuadruple) has_quad = true;
        CHECK(has_quad);
    }
}

TEST_CASE("perturbed octahedron matches the brute-force hull") {
    Rng rng(2024);
    std::vector<SpherePoint> raw = {{1, 0, 0},  {-1, 0, 0}, {0, 1, 0},
                                    {0, -1, 0}, {0, 0, 1},  {0, 0, -1}};
    for (auto& p : raw) {
        p.x += rng.uniform(-0.05, 0.05);
        p.y += rng.uniform(-0.05, 0.05);
        p.z += rng.uniform(-0.05, 0.05);
    }
    Configuration c = Configuration::from_raw(raw);
    Triangulation t = delaunay(c);
    CHECK(t.faces().size() == 8);
    CHECK(t.edges().size() == 12);
    CHECK(sorted_faces(t) == brute_faces(c.points));
}

TEST_CASE("random configurations: counts, oracle, empty circumcircles") {
    Rng rng(7);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(5, 16));
        Rng sub = rng.fork(trial);
        Configuration c = random_configuration(n, sub);
        Triangulation t = delaunay(c);
        CHECK(t.vertex_count() == n);
        CHECK(static_cast<int>(t.edges().size()) == 3 * n - 6);
        CHECK(static_cast<int>(t.faces().size()) == 2 * n - 4);
        CHECK(validate(t).empty());
        CHECK(sorted_faces(t) == brute_faces(c.points));

        // every face's circumcircle is empty of all other points
        for (const Face& f : t.faces()) {
            const SpherePoint &p = c.points[f[0] - 1], &q = c.points[f[1] - 1],
                              &r = c.points[f[2] - 1];
            for (int s = 1; s <= n; ++s) {
                if (s == f[0] || s == f[1] || s == f[2]) continue;
                REQUIRE(in_circumcircle(p, q, r, c.points[s - 1]) == -1);
            }
        }
    }
}

TEST_CASE("hemispherical configuration (all points on one cap)") {
    // downward-facing hull triangles have inward normals here; the empty-cap
    // convention must still hold
    Rng rng(99);
    std::vector<SpherePoint> raw;
    for (int i = 0; i < 10; ++i)
        raw.push_back(sph(rng.uniform(0.05, 1.2), rng.uniform(0.0, 6.28)));
    Configuration c = Configuration::from_raw(raw);
    Triangulation t = delaunay(c);
    CHECK(validate(t).empty());
    CHECK(sorted_faces(t) == brute_faces(c.points));
    for (const Face& f : t.faces())
        for (int s = 1; s <= 10; ++s) {
            if (s == f[0] || s == f[1] || s == f[2]) continue;
            REQUIRE(in_circumcircle(c.points[f[0] - 1], c.points[f[1] - 1],
                                    c.points[f[2] - 1], c.points[s - 1]) == -1);
        }
}

TEST_CASE("delaunay is rotation-equivariant and relabeling-equivariant") {
    Rng rng(4242);
    Configuration c = random_configuration(12, rng);
    Triangulation t = delaunay(c);

    CHECK(sorted_faces(delaunay(Configuration::from_raw(rotated(c.points)))) ==
          sorted_faces(t));

    // reverse the point order; faces relabel v -> 13 - v with their cyclic
    // orientation intact (outward orientation is geometric, not label order)
    std::vector<SpherePoint> rev;
    for (int i = 11; i >= 0; --i) rev.push_back(c.points[i]);
    Triangulation tr = delaunay(Configuration::from_raw(rev));
    std::vector<Face> relabeled;
    for (const Face& f : t.faces())
        relabeled.push_back(canonical_face(13 - f[0], 13 - f[1], 13 - f[2]));
    std::sort(relabeled.begin(), relabeled.end());
    CHECK(sorted_faces(tr) == relabeled);
}

TEST_CASE("general position scan") {
    Rng rng(31337);
    Configuration good = random_configuration(10, rng);
    CHECK(is_general_position(good).empty());

    // duplicated point
    std::vector<SpherePoint> dup = good.points;
    dup.push_back(dup[3]);
    auto v1 = is_general_position(Configuration::from_raw(dup));
    REQUIRE_FALSE(v1.empty());
    CHECK(v1[0].kind == Violation::Kind::CoincidentPair);

    // square on the colatitude-1.047 circle: one cocircular quadruple and
    // nothing else (the circle is not a great circle, so no triple fires)
    std::vector<SpherePoint> sq;
    const double z0 = 0.5, r0 = std::sqrt(1.0 - z0 * z0);
    sq.push_back({r0, 0, z0});
    sq.push_back({0, r0, z0});
    sq.push_back({-r0, 0, z0});
    sq.push_back({0, -r0, z0});
    sq.push_back({0.1, -0.2, -0.97}); // generic spectators
    sq.push_back({-0.5, 0.6, -0.62});
    auto v2 = is_general_position(Configuration::from_raw(sq));
    REQUIRE(v2.size() == 1);
    CHECK(v2[0].kind == Violation::Kind::CocircularQuadruple);
    CHECK(v2[0].vertices == std::vector<int>{1, 2, 3, 4});

    // three points on a great circle
    std::vector<SpherePoint> gc = {
        {1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0.2, 0.3, 0.93}, {-0.4, -0.5, 0.77}};
    auto v3 = is_general_position(Configuration::from_raw(gc));
    REQUIRE_FALSE(v3.empty());
    bool has_triple = false;
    for (const auto& v : v3)
        if (v.kind == Violation::Kind::GreatCircleTriple) has_triple = true;
    CHECK(has_triple);
}

TEST_CASE("random_configuration is deterministic per seed") {
    Rng a(5), b(5), c(6);
    Configuration ca = random_configuration(8, a);
    Configuration cb = random_configuration(8, b);
    Configuration cc = random_configuration(8, c);
    for (int i = 0; i < 8; ++i) {
        CHECK(ca.points[i].x == cb.points[i].x);
        CHECK(ca.points[i].y == cb.points[i].y);
        CHECK(ca.points[i].z == cb.points[i].z);
    }
    bool same = true;
    for (int i = 0; i < 8; ++i)
        same = same && ca.points[i].x == cc.points[i].x;
    CHECK_FALSE(same);
}
