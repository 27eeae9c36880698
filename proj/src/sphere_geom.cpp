#include "tropbraid/sphere_geom.hpp"

#include <cmath>
#include <sstream>

#include "tropbraid/tropical.hpp" // Rational

namespace tropbraid {

SpherePoint operator-(const SpherePoint& a, const SpherePoint& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}

double dot(const SpherePoint& a, const SpherePoint& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

SpherePoint cross(const SpherePoint& a, const SpherePoint& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double norm(const SpherePoint& a) { return std::sqrt(dot(a, a)); }

double dist(const SpherePoint& a, const SpherePoint& b) { return norm(a - b); }

SpherePoint normalized(const SpherePoint& a) {
    const double n = norm(a);
    if (!(n > 1e-300))
        throw GeometryError("cannot normalize near-zero vector " + to_string(a));
    return {a.x / n, a.y / n, a.z / n};
}

std::string to_string(const SpherePoint& p) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << p.x << ", " << p.y << ", " << p.z << ")";
    return os.str();
}

Configuration Configuration::from_raw(std::vector<SpherePoint> pts) {
    Configuration c;
    c.points.reserve(pts.size());
    for (const SpherePoint& p : pts) c.points.push_back(normalized(p));
    c.raw = std::move(pts);
    return c;
}

double coplanarity_det(const SpherePoint& p, const SpherePoint& q,
                       const SpherePoint& r, const SpherePoint& s) {
    return det3(q - p, r - p, s - p);
}

double det3(const SpherePoint& p, const SpherePoint& q, const SpherePoint& r) {
    return p.x * (q.y * r.z - q.z * r.y) - p.y * (q.x * r.z - q.z * r.x) +
           p.z * (q.x * r.y - q.y * r.x);
}

namespace {

struct RationalPoint {
    Rational x, y, z;
    explicit RationalPoint(const SpherePoint& p) : x(p.x), y(p.y), z(p.z) {}
};

int exact_coplanarity_sign(const SpherePoint& pp, const SpherePoint& qq,
                           const SpherePoint& rr, const SpherePoint& ss) {
    const RationalPoint p(pp), q(qq), r(rr), s(ss);
    const Rational ax = q.x - p.x, ay = q.y - p.y, az = q.z - p.z;
    const Rational bx = r.x - p.x, by = r.y - p.y, bz = r.z - p.z;
    const Rational cx = s.x - p.x, cy = s.y - p.y, cz = s.z - p.z;
    const Rational det = ax * (by * cz - bz * cy) - ay * (bx * cz - bz * cx) +
                         az * (bx * cy - by * cx);
    return det == 0 ? 0 : (det > 0 ? 1 : -1);
}

} // namespace

int coplanarity_sign(const SpherePoint& p, const SpherePoint& q,
                     const SpherePoint& r, const SpherePoint& s,
                     double escalate_eps) {
    const double det = coplanarity_det(p, q, r, s);
    if (std::abs(det) > escalate_eps) return det > 0 ? 1 : -1;
    return exact_coplanarity_sign(p, q, r, s);
}

int in_circumcircle(const SpherePoint& p, const SpherePoint& q,
                    const SpherePoint& r, const SpherePoint& s,
                    double eps_geo) {
    if (std::abs(det3(p, q, r)) <= eps_geo)
        throw DegenerateFace("face vertices lie on a great circle: " +
                             to_string(p) + ", " + to_string(q) + ", " +
                             to_string(r));
    const double det = coplanarity_det(p, q, r, s);
    if (std::abs(det) <= eps_geo) return 0;
    return det > 0 ? 1 : -1;
}

std::string to_string(const Violation& v) {
    std::ostringstream os;
    switch (v.kind) {
    case Violation::Kind::CoincidentPair:
        os << "coincident pair";
        break;
    case Violation::Kind::GreatCircleTriple:
        os << "great-circle triple";
        break;
    case Violation::Kind::CocircularQuadruple:
        os << "cocircular quadruple";
        break;
    }
    os << " {";
    for (size_t i = 0; i < v.vertices.size(); ++i)
        os << (i ? "," : "") << v.vertices[i];
    os.precision(3);
    os << "} (det " << std::scientific << v.det << ")";
    return os.str();
}

namespace {

std::string violations_message(const std::vector<Violation>& vs) {
    std::ostringstream os;
    os << vs.size() << " general-position violation(s):";
    for (const Violation& v : vs) os << "\n  " << to_string(v);
    return os.str();
}

} // namespace

GeneralPositionViolation::GeneralPositionViolation(std::vector<Violation> vs)
    : GeometryError(violations_message(vs)), violations(std::move(vs)) {}

GeneralPositionViolation::GeneralPositionViolation(std::string msg,
                                                   std::vector<Violation> vs)
    : GeometryError(std::move(msg)), violations(std::move(vs)) {}

std::vector<Violation> is_general_position(const Configuration& c,
                                           double eps_geo) {
    std::vector<Violation> out;
    const auto& p = c.points;
    const int n = c.n();

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double d = dist(p[i], p[j]);
            if (d <= eps_geo)
                out.push_back({Violation::Kind::CoincidentPair, {i + 1, j + 1}, d});
        }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const double d = det3(p[i], p[j], p[k]);
                if (std::abs(d) <= eps_geo)
                    out.push_back({Violation::Kind::GreatCircleTriple,
                                   {i + 1, j + 1, k + 1},
                                   d});
            }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    const double d = coplanarity_det(p[i], p[j], p[k], p[l]);
                    if (std::abs(d) <= eps_geo)
                        out.push_back({Violation::Kind::CocircularQuadruple,
                                       {i + 1, j + 1, k + 1, l + 1},
                                       d});
                }

    return out;
}

Triangulation hull_triangulation(const Configuration& c) {
    const auto& p = c.points;
    const int n = c.n();
    if (n < 4)
        throw GeometryError("need at least 4 points, got " + std::to_string(n));

    std::vector<Face> faces;
    std::vector<Violation> ties;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                int common = 0; // -1 / +1 once set, 2 = mixed
                int zero_with = -1;
                for (int s = 0; s < n && common != 2; ++s) {
                    if (s == i || s == j || s == k) continue;
                    const int sg = coplanarity_sign(p[i], p[j], p[k], p[s]);
                    if (sg == 0) {
                        zero_with = s;
                    } else if (common == 0) {
                        common = sg;
                    } else if (sg != common) {
                        common = 2;
                    }
                }
                if (common == 2) continue; // not a hull face
                if (zero_with >= 0) {
                    // a point exactly on the supporting plane of a face
                    ties.push_back({Violation::Kind::CocircularQuadruple,
                                    {i + 1, j + 1, k + 1, zero_with + 1},
                                    0.0});
                    continue;
                }
                // orient so the empty cap is on the normal side
                faces.push_back(common < 0 ? Face{i + 1, j + 1, k + 1}
                                           : Face{i + 1, k + 1, j + 1});
            }
    if (!ties.empty()) throw GeneralPositionViolation(std::move(ties));

    Triangulation t = Triangulation::from_faces(std::move(faces));
    const auto bad = validate(t);
    if (!bad.empty() || t.vertex_count() != n) {
        std::string msg = "hull face selection is inconsistent";
        for (const auto& b : bad) msg += "\n  " + b;
        if (t.vertex_count() != n)
            msg += "\n  only " + std::to_string(t.vertex_count()) + " of " +
                   std::to_string(n) + " points on the hull";
        throw GeneralPositionViolation(std::move(msg), {});
    }
    return t;
}

Triangulation delaunay(const Configuration& c, double eps_geo) {
    if (c.n() < 4)
        throw GeometryError("need at least 4 points, got " +
                            std::to_string(c.n()));
    auto violations = is_general_position(c, eps_geo);
    if (!violations.empty())
        throw GeneralPositionViolation(std::move(violations));
    return hull_triangulation(c);
}

SpherePoint random_sphere_point(Rng& rng) {
    const double z = rng.uniform(-1.0, 1.0);
    const double phi = rng.uniform(0.0, 6.283185307179586476925286766559);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
}

Configuration random_configuration(int n, Rng& rng) {
    std::vector<SpherePoint> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) pts.push_back(random_sphere_point(rng));
    return Configuration::from_raw(std::move(pts));
}

} // namespace tropbraid
