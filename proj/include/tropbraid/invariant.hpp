#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tropbraid/braid_motion.hpp"
#include "tropbraid/labeling.hpp"

namespace tropbraid {

// How the fixed initial labeling A_1 is produced. Labels are never invented
// silently: even all-zero labels must be requested explicitly.
struct LabelScheme {
    enum class Kind { Constant, SeededRandom, File };
    Kind kind = Kind::Constant;
    Rational constant_value{0};
    std::uint64_t seed = 0;
    long long lo = -10, hi = 10;
    std::string path;

    static LabelScheme constant(Rational v);
    static LabelScheme seeded_random(std::uint64_t seed, long long lo,
                                     long long hi);
    static LabelScheme from_file(std::string path);
};

// One label per edge, deterministic given the scheme. Seeded-random draws
// integers in [lo, hi] for the edges in canonical (lexicographic) order.
LabeledTriangulation initial_labels(const Triangulation& t,
                                    const LabelScheme& scheme);

// The invariant: final labels after the flip sequence, on edges renamed back
// to start positions (final vertex v held the start position of vertex
// perm[v-1]+1), listed in canonical lexicographic edge order.
struct InvariantVector {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<TropicalValue> labels;

    bool operator==(const InvariantVector&) const = default;
};

// Relabel the final labeled triangulation through the strand permutation and
// order its edges canonically.
InvariantVector finalize_invariant(const LabeledTriangulation& lt_final,
                                   const std::vector<int>& perm);

// Push labels through every event of the plan's flip sequence, then
// canonicalize. labels.complex must equal the Delaunay triangulation at t=0
// (ShapeMismatch otherwise); motion errors propagate.
InvariantVector compute_invariant(const MotionPlan& plan,
                                  const LabeledTriangulation& labels,
                                  double eps_geo = kEpsGeo,
                                  double dt_init = kDtInit,
                                  double dt_min = kDtMin);

// Exact componentwise equality. Throws ShapeMismatch when n or the edge sets
// differ (invariants from different initial data are not comparable).
bool compare(const InvariantVector& v1, const InvariantVector& v2);

} // namespace tropbraid
