#include "tropbraid/labeling.hpp"

#include <algorithm>

namespace tropbraid {

void require_full_labeling(const LabeledTriangulation& lt) {
    std::vector<Edge> missing;
    for (const Edge& e : lt.complex.edges())
        if (!lt.labels.count(e)) missing.push_back(e);
    if (!missing.empty()) {
        std::string msg = "unlabeled edge(s):";
        for (const Edge& e : missing) msg += " " + to_string(e);
        throw MissingEdgeLabel(msg);
    }
    for (const auto& [e, _] : lt.labels)
        if (!lt.complex.has_edge(e))
            throw FileFormatError("label for unknown edge " + to_string(e));
}

std::vector<TropicalValue> label_vector(const LabeledTriangulation& lt) {
    require_full_labeling(lt);
    std::vector<TropicalValue> out;
    out.reserve(lt.labels.size());
    for (const Edge& e : lt.complex.edges()) out.push_back(lt.labels.at(e));
    return out;
}

LabeledTriangulation labeled_flip(const LabeledTriangulation& lt, const Edge& e) {
    const Quad q = edge_quad(lt.complex, e);
    auto [complex, created] = apply_flip(lt.complex, e);

    QuadLabels ql;
    ql.a = lt.labels.at(q.boundary[0]);
    ql.b = lt.labels.at(q.boundary[1]);
    ql.c = lt.labels.at(q.boundary[2]);
    ql.d = lt.labels.at(q.boundary[3]);
    ql.x = lt.labels.at(e);

    LabelMap labels = lt.labels;
    labels.erase(e);
    labels.emplace(created, flip_label(ql));
    return LabeledTriangulation{std::move(complex), std::move(labels)};
}

bool check_involution(const LabeledTriangulation& lt, const Edge& e) {
    LabeledTriangulation once = labeled_flip(lt, e);
    Edge created = edge_quad(lt.complex, e).opposite();
    LabeledTriangulation twice = labeled_flip(once, created);
    return twice == lt;
}

bool check_far_commutativity(const LabeledTriangulation& lt, const Edge& e1,
                             const Edge& e2) {
    if (!are_far(lt.complex, e1, e2))
        throw NotFar("edges " + to_string(e1) + " and " + to_string(e2) +
                     " do not have far quads");
    LabeledTriangulation ab = labeled_flip(labeled_flip(lt, e1), e2);
    LabeledTriangulation ba = labeled_flip(labeled_flip(lt, e2), e1);
    return ab == ba;
}

LabeledTriangulation label_pentagon(const std::array<TropicalValue, 5>& boundary,
                                    const std::array<TropicalValue, 2>& diagonals) {
    LabeledTriangulation lt;
    lt.complex = pentagon_patch();
    for (int i = 0; i < 5; ++i)
        lt.labels.emplace(Edge(i + 1, i == 4 ? 1 : i + 2), boundary[i]);
    lt.labels.emplace(Edge(1, 3), diagonals[0]);
    lt.labels.emplace(Edge(1, 4), diagonals[1]);
    return lt;
}

std::vector<LabeledTriangulation>
pentagon_walk(const std::array<TropicalValue, 5>& boundary,
              const std::array<TropicalValue, 2>& diagonals) {
    LabeledTriangulation cur = label_pentagon(boundary, diagonals);

    // flip {1,3}, then {1,4}, then the created diagonals in creation order
    std::vector<Edge> queue = {Edge(1, 3), Edge(1, 4)};
    std::vector<LabeledTriangulation> states;
    for (size_t k = 0; k < 5; ++k) {
        const Edge e = queue[k];
        queue.push_back(edge_quad(cur.complex, e).opposite());
        cur = labeled_flip(cur, e);
        states.push_back(cur);
    }
    return states;
}

bool check_pentagon(const std::array<TropicalValue, 5>& boundary,
                    const std::array<TropicalValue, 2>& diagonals) {
    const LabeledTriangulation start = label_pentagon(boundary, diagonals);
    return pentagon_walk(boundary, diagonals).back() == start;
}

} // namespace tropbraid
