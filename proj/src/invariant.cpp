#include "tropbraid/invariant.hpp"

#include <utility>

#include "tropbraid/io.hpp"
#include "tropbraid/rng.hpp"

namespace tropbraid {

LabelScheme LabelScheme::constant(Rational v) {
    LabelScheme s;
    s.kind = Kind::Constant;
    s.constant_value = std::move(v);
    return s;
}

LabelScheme LabelScheme::seeded_random(std::uint64_t seed, long long lo,
                                       long long hi) {
    if (lo > hi) throw DataError("seeded-random label range is empty");
    LabelScheme s;
    s.kind = Kind::SeededRandom;
    s.seed = seed;
    s.lo = lo;
    s.hi = hi;
    return s;
}

LabelScheme LabelScheme::from_file(std::string path) {
    LabelScheme s;
    s.kind = Kind::File;
    s.path = std::move(path);
    return s;
}

LabeledTriangulation initial_labels(const Triangulation& t,
                                    const LabelScheme& scheme) {
    LabeledTriangulation lt;
    lt.complex = t;
    switch (scheme.kind) {
    case LabelScheme::Kind::Constant:
        for (const Edge& e : t.edges())
            lt.labels.emplace(e, TropicalValue(scheme.constant_value));
        break;
    case LabelScheme::Kind::SeededRandom: {
        Rng rng(scheme.seed);
        for (const Edge& e : t.edges())
            lt.labels.emplace(e,
                              TropicalValue(rng.uniform_int(scheme.lo, scheme.hi)));
        break;
    }
    case LabelScheme::Kind::File:
        lt.labels = read_label_map(scheme.path);
        break;
    }
    require_full_labeling(lt); // MissingEdgeLabel / FileFormatError
    return lt;
}

InvariantVector finalize_invariant(const LabeledTriangulation& lt_final,
                                   const std::vector<int>& perm) {
    InvariantVector out;
    out.n = static_cast<int>(perm.size());
    const auto rename = [&perm, &out](int v) {
        if (v < 1 || v > out.n)
            throw ShapeMismatch("vertex " + std::to_string(v) +
                                " outside 1.." + std::to_string(out.n));
        return perm[v - 1] + 1;
    };
    LabelMap renamed;
    for (const auto& [e, lab] : lt_final.labels)
        renamed.emplace(Edge(rename(e.u), rename(e.v)), lab);
    if (renamed.size() != lt_final.labels.size())
        throw ShapeMismatch("strand permutation does not rename edges injectively");
    for (const auto& [e, lab] : renamed) { // map order = lexicographic
        out.edges.push_back(e);
        out.labels.push_back(lab);
    }
    return out;
}

InvariantVector compute_invariant(const MotionPlan& plan,
                                  const LabeledTriangulation& labels,
                                  double eps_geo, double dt_init,
                                  double dt_min) {
    const Triangulation t0 = delaunay(eval(plan, 0), eps_geo);
    if (labels.complex != t0)
        throw ShapeMismatch(
            "initial labeling is not on the Delaunay triangulation at t=0");
    require_full_labeling(labels);

    const FlipSequence seq = detect_flip_events(plan, eps_geo, dt_init, dt_min);
    LabeledTriangulation lt = labels;
    for (const FlipEvent& ev : seq.events) lt = labeled_flip(lt, ev.flipped);

    return finalize_invariant(lt, strand_permutation(plan));
}

bool compare(const InvariantVector& v1, const InvariantVector& v2) {
    if (v1.n != v2.n)
        throw ShapeMismatch("invariants have different n: " +
                            std::to_string(v1.n) + " vs " +
                            std::to_string(v2.n));
    if (v1.edges != v2.edges)
        throw ShapeMismatch("invariants have different edge sets");
    return v1.labels == v2.labels;
}

} // namespace tropbraid
