#pragma once

#include <string>
#include <vector>

#include "tropbraid/errors.hpp"
#include "tropbraid/rng.hpp"
#include "tropbraid/triangulation.hpp"

namespace tropbraid {

// default tolerances (overridable per call / via CLI --eps)
inline constexpr double kEpsGeo = 1e-9;   // degeneracy threshold on determinants
inline constexpr double kEpsNorm = 1e-12; // unit-vector slack
inline constexpr double kEpsExact = 1e-12; // below this, re-evaluate exactly

struct SpherePoint {
    double x = 0, y = 0, z = 0;
};

SpherePoint operator-(const SpherePoint& a, const SpherePoint& b);
double dot(const SpherePoint& a, const SpherePoint& b);
SpherePoint cross(const SpherePoint& a, const SpherePoint& b);
double norm(const SpherePoint& a);
double dist(const SpherePoint& a, const SpherePoint& b);
SpherePoint normalized(const SpherePoint& a); // GeometryError on ~zero input
std::string to_string(const SpherePoint& p);

// Ordered point set on the unit sphere. The coordinates as given are kept in
// raw; predicates run on the normalized copies in points (exact input, one
// division per coordinate), so predicate signs are reproducible.
struct Configuration {
    std::vector<SpherePoint> raw;
    std::vector<SpherePoint> points;

    static Configuration from_raw(std::vector<SpherePoint> pts);
    int n() const { return static_cast<int>(points.size()); }
};

// det [q-p; r-p; s-p], double arithmetic. Zero iff p,q,r,s are coplanar,
// which on the sphere means cocircular.
double coplanarity_det(const SpherePoint& p, const SpherePoint& q,
                       const SpherePoint& r, const SpherePoint& s);

// det [p; q; r]: zero iff the plane through p,q,r passes through the origin,
// i.e. the three points sit on a great circle.
double det3(const SpherePoint& p, const SpherePoint& q, const SpherePoint& r);

// Sign of coplanarity_det with exact escalation: when the double value is
// within escalate_eps of zero the determinant is recomputed in rational
// arithmetic (doubles convert exactly), so the returned -1/0/+1 is the true
// sign. The event detector probes arbitrarily close to cocircularity, where
// double noise would otherwise decide.
int coplanarity_sign(const SpherePoint& p, const SpherePoint& q,
                     const SpherePoint& r, const SpherePoint& s,
                     double escalate_eps = kEpsExact);

// Side of s relative to the circumcircle of the oriented face (p,q,r):
//   +1  strictly on the side the face normal points to (the cap a hull face
//       keeps empty; "inside the circumcircle"),
//   -1  strictly on the hull side,
//    0  within eps_geo of the face plane (cocircular up to tolerance).
// Faces should be oriented with the empty cap on the normal side; for hulls
// that contain the origin this is the usual outward orientation,
// det3(p,q,r) > 0. Throws DegenerateFace if p,q,r are within eps_geo of a
// common great circle.
int in_circumcircle(const SpherePoint& p, const SpherePoint& q,
                    const SpherePoint& r, const SpherePoint& s,
                    double eps_geo = kEpsGeo);

struct Violation {
    enum class Kind { CoincidentPair, GreatCircleTriple, CocircularQuadruple };
    Kind kind;
    std::vector<int> vertices; // 1-based ids, matching triangulation vertices
    double det = 0;            // the offending determinant (distance for pairs)
};

std::string to_string(const Violation& v);

// Carries the full list of degeneracies found by the general-position sweep.
struct GeneralPositionViolation : GeometryError {
    std::vector<Violation> violations;
    explicit GeneralPositionViolation(std::vector<Violation> vs);
    GeneralPositionViolation(std::string msg, std::vector<Violation> vs);
};

// Sweeps all pairs (coincident within eps_geo), triples (great circle) and
// quadruples (cocircular) and lists every violation, in lexicographic index
// order. Empty result = general position at tolerance eps_geo.
std::vector<Violation> is_general_position(const Configuration& c,
                                           double eps_geo = kEpsGeo);

// Convex-hull triangulation with no general-position pre-sweep: a triple is
// a face iff every other point lies strictly on one side (signs from
// coplanarity_sign, so exact near zero). Faces are oriented with the empty
// side on the normal side. Throws GeneralPositionViolation when an exact tie
// spoils a face decision or the selected faces fail validation; the kinetic
// event detector relies on this to probe close to events and retry.
Triangulation hull_triangulation(const Configuration& c);

// Spherical Delaunay triangulation (= hull boundary): general-position sweep
// at eps_geo first (throws GeneralPositionViolation listing all offenders),
// then hull_triangulation. Point i (0-based) becomes vertex i+1.
Triangulation delaunay(const Configuration& c, double eps_geo = kEpsGeo);

// Area-uniform seeded sampling (z and longitude uniform).
SpherePoint random_sphere_point(Rng& rng);
Configuration random_configuration(int n, Rng& rng);

} // namespace tropbraid
