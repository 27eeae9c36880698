#pragma once

#include <array>
#include <map>
#include <vector>

#include "tropbraid/triangulation.hpp"
#include "tropbraid/tropical.hpp"

namespace tropbraid {

using LabelMap = std::map<Edge, TropicalValue>;

// A complex together with one tropical label per edge.
struct LabeledTriangulation {
    Triangulation complex;
    LabelMap labels;

    bool operator==(const LabeledTriangulation& o) const {
        return complex == o.complex && labels == o.labels;
    }
    bool operator!=(const LabeledTriangulation& o) const { return !(*this == o); }
};

// Throws MissingEdgeLabel / FileFormatError unless labels cover exactly the
// edge set of the complex.
void require_full_labeling(const LabeledTriangulation& lt);

// Labels in canonical edge order (lexicographic on vertex pairs).
std::vector<TropicalValue> label_vector(const LabeledTriangulation& lt);

// Flip e in the complex and give the created diagonal the tropical Ptolemy
// label; every other label is carried over unchanged.
LabeledTriangulation labeled_flip(const LabeledTriangulation& lt, const Edge& e);

// Two flips on the same quad restore the labeled complex exactly.
bool check_involution(const LabeledTriangulation& lt, const Edge& e);

// Flips on far quads commute as maps on labeled complexes.
// Throws NotFar unless are_far(e1, e2).
bool check_far_commutativity(const LabeledTriangulation& lt, const Edge& e1,
                             const Edge& e2);

// Labels the canonical pentagon patch (boundary {1,2},{2,3},{3,4},{4,5},{5,1}
// and diagonals {1,3},{1,4}), walks the five-flip cycle, and reports whether
// the walk returns the initial labeled patch exactly.
bool check_pentagon(const std::array<TropicalValue, 5>& boundary,
                    const std::array<TropicalValue, 2>& diagonals);

// The labeled pentagon walk itself: flip {1,3}, then {1,4}, then each newly
// created diagonal in creation order. Returns the five successive patches
// (T1..T5, where T5 has the shape of the start).
std::vector<LabeledTriangulation>
pentagon_walk(const std::array<TropicalValue, 5>& boundary,
              const std::array<TropicalValue, 2>& diagonals);

LabeledTriangulation label_pentagon(const std::array<TropicalValue, 5>& boundary,
                                    const std::array<TropicalValue, 2>& diagonals);

} // namespace tropbraid
