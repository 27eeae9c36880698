#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tropbraid/sphere_geom.hpp"
#include "tropbraid/triangulation.hpp"

namespace tropbraid {

inline constexpr double kDtInit = 1e-3;
inline constexpr double kDtMin = 1e-12;

// Point on the great-circle arc from a to b at fraction s in [0,1].
// Returns a and b bitwise at the endpoints.
SpherePoint slerp(const SpherePoint& a, const SpherePoint& b, double s);

// Rodrigues rotation of v by angle about the unit axis u.
SpherePoint rotate(const SpherePoint& v, const SpherePoint& u, double angle);

struct Keyframe {
    double t = 0;
    SpherePoint p;
};

// Piecewise great-circle path on the sphere. Keyframe times are strictly
// increasing from 0 to 1; evaluation at a keyframe time returns that keyframe
// point bitwise, which keeps endpoint triangulations exactly reproducible.
struct Trajectory {
    std::vector<Keyframe> keyframes;
    SpherePoint at(double t) const;
};

// n trajectories forming a loop in the unordered configuration space: every
// trajectory ends at some trajectory's start point (pointwise for pure
// braids). See strand_permutation.
struct MotionPlan {
    std::vector<Trajectory> trajectories;
    int n() const { return static_cast<int>(trajectories.size()); }
};

Configuration eval(const MotionPlan& plan, double t);

// Checks the plan invariants: per-trajectory time grid (0 = t_0 < ... = 1),
// consecutive keyframes non-antipodal, the set-level loop condition, and
// pairwise-distinct points on a sample grid. Throws MotionError.
void validate_plan(const MotionPlan& plan, double eps_geo = kEpsGeo);

// perm[i] = j when trajectory i ends where trajectory j starts (within tol).
// Throws MotionError unless this yields a bijection.
std::vector<int> strand_permutation(const MotionPlan& plan, double tol = 1e-6);

// letters: (generator index in 1..n-1, sign +1/-1)
struct BraidWord {
    int n = 0;
    std::vector<std::pair<int, int>> letters;
};

// Grammar: word := (letter)*, letter := "s" INT ("^-1")?, whitespace-separated.
// Throws ParseError (with character position) / IndexOutOfRange.
BraidWord parse_braid_word(const std::string& text, int n);

// perm[i] = final slot of the strand that starts in slot i (0-based).
std::vector<int> word_permutation(const BraidWord& w);

// Realizes a word as a looped motion: base points on the latitude-45° circle
// (seeded jitter breaks the layout's mirror symmetry), one time slot per
// letter, sigma_i rotating the two points in slots i, i+1 by +-pi about their
// midpoint axis. Slot-boundary keyframes are bitwise copies of the base
// points. Throws LayoutError when the swap orbits cannot clear the other
// points.
MotionPlan word_to_motion(const BraidWord& w, std::uint64_t seed);

struct FlipEvent {
    double t = 0;
    Edge flipped;
    Edge created;
};

// Events in time order plus the triangulation list T_1 .. T_{l+1};
// consecutive triangulations differ by exactly the recorded flip.
struct FlipSequence {
    std::vector<FlipEvent> events;
    std::vector<Triangulation> triangulations;
};

// Samples the Delaunay triangulation along the plan in steps of dt_init and
// bisects every change down to dt_min, validating each localized change as a
// single flip whose quadruple's coplanarity determinant changes sign. Throws
// NonGenericMotion when events cannot be separated, GeneralPositionViolation
// when an endpoint configuration is degenerate.
FlipSequence detect_flip_events(const MotionPlan& plan, double eps_geo = kEpsGeo,
                                double dt_init = kDtInit, double dt_min = kDtMin);

struct SimplifyReport {
    int length = 0;            // events in the input sequence
    int reduced_length = 0;    // after cancelling adjacent involution pairs
    int involution_pairs = 0;  // pairs cancelled
    int far_adjacent_pairs = 0; // adjacent pairs that commute (far quads)
    int pentagon_cycles = 0;   // 5-windows matching the pentagon pattern
    std::string text;          // human-readable summary
};

// Diagnostic only: the invariant never needs reduction.
SimplifyReport simplify_check(const FlipSequence& seq);

// Applies a strictly increasing time warp with warp(0)=0, warp(1)=1 to every
// keyframe time. The traced path (hence the flip edge sequence) is unchanged.
MotionPlan reparametrize(const MotionPlan& plan,
                         const std::function<double(double)>& warp);

// Deterministically perturbs every interior keyframe point by a seeded
// tangent offset of the given magnitude (endpoints untouched, so the loop and
// the endpoint triangulations are preserved).
MotionPlan jitter_keyframes(const MotionPlan& plan, double magnitude,
                            std::uint64_t seed);

} // namespace tropbraid
