#include "tropbraid/triangulation.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace tropbraid {

std::string to_string(const Edge& e) {
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

Edge parse_edge(const std::string& text) {
    const auto dash = text.find('-', 1); // skip a possible leading minus sign
    if (dash == std::string::npos)
        throw FileFormatError("not an edge: \"" + text + "\" (expected \"u-v\")");
    try {
        int u = std::stoi(text.substr(0, dash));
        int v = std::stoi(text.substr(dash + 1));
        if (u == v) throw FileFormatError("degenerate edge: \"" + text + "\"");
        return Edge(u, v);
    } catch (const FileFormatError&) {
        throw;
    } catch (const std::exception&) {
        throw FileFormatError("not an edge: \"" + text + "\"");
    }
}

Face canonical_face(int a, int b, int c) {
    // rotate the smallest vertex to the front; cyclic order is preserved
    if (a <= b && a <= c) return {a, b, c};
    if (b <= a && b <= c) return {b, c, a};
    return {c, a, b};
}

std::string to_string(const Face& f) {
    return "(" + std::to_string(f[0]) + "," + std::to_string(f[1]) + "," +
           std::to_string(f[2]) + ")";
}

Triangulation Triangulation::from_faces(std::vector<Face> faces) {
    Triangulation t;
    t.faces_.reserve(faces.size());
    std::set<int> verts;
    for (const Face& f : faces) {
        Face cf = canonical_face(f[0], f[1], f[2]);
        int idx = static_cast<int>(t.faces_.size());
        t.faces_.push_back(cf);
        for (int k = 0; k < 3; ++k) {
            verts.insert(cf[k]);
            t.incidence_[Edge(cf[k], cf[(k + 1) % 3])].push_back(idx);
        }
    }
    t.vertices_.assign(verts.begin(), verts.end());
    t.face_set_ = t.faces_;
    std::sort(t.face_set_.begin(), t.face_set_.end());
    return t;
}

std::vector<Edge> Triangulation::edges() const {
    std::vector<Edge> out;
    out.reserve(incidence_.size());
    for (const auto& [e, _] : incidence_) out.push_back(e);
    return out;
}

const std::vector<int>& Triangulation::faces_of(const Edge& e) const {
    auto it = incidence_.find(e);
    if (it == incidence_.end())
        throw MissingEdge("edge " + to_string(e) + " is not in the complex");
    return it->second;
}

bool Triangulation::is_closed() const {
    for (const auto& [e, fs] : incidence_)
        if (fs.size() != 2) return false;
    return true;
}

std::vector<Edge> Triangulation::boundary_edges() const {
    std::vector<Edge> out;
    for (const auto& [e, fs] : incidence_)
        if (fs.size() == 1) out.push_back(e);
    return out;
}

std::vector<Edge> Triangulation::interior_edges() const {
    std::vector<Edge> out;
    for (const auto& [e, fs] : incidence_)
        if (fs.size() == 2) out.push_back(e);
    return out;
}

std::vector<std::string> validate(const Triangulation& t) {
    std::vector<std::string> bad;

    for (const Face& f : t.faces()) {
        if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2])
            bad.push_back("face with repeated vertex: " + to_string(f));
    }
    {
        auto sorted = t.faces();
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i] == sorted[i - 1])
                bad.push_back("duplicate face: " + to_string(sorted[i]));
    }

    // every edge in exactly two faces, traversed once in each direction
    for (const Edge& e : t.edges()) {
        const auto& fs = t.faces_of(e);
        if (fs.size() != 2) {
            bad.push_back("edge in " + std::to_string(fs.size()) +
                          " face(s): " + to_string(e));
            continue;
        }
        int forward = 0;
        for (int fi : fs) {
            const Face& f = t.faces()[fi];
            for (int k = 0; k < 3; ++k)
                if (f[k] == e.u && f[(k + 1) % 3] == e.v) ++forward;
        }
        if (forward != 1)
            bad.push_back("inconsistent orientation on edge " + to_string(e));
    }

    const long long n = t.vertex_count();
    const long long ecount = static_cast<long long>(t.edges().size());
    const long long fcount = static_cast<long long>(t.faces().size());
    if (n < 4) bad.push_back("vertex count " + std::to_string(n) + " < 4");
    if (ecount != 3 * n - 6)
        bad.push_back("edge count " + std::to_string(ecount) + " != 3n-6 = " +
                      std::to_string(3 * n - 6));
    if (fcount != 2 * n - 4)
        bad.push_back("face count " + std::to_string(fcount) + " != 2n-4 = " +
                      std::to_string(2 * n - 4));
    if (n - ecount + fcount != 2)
        bad.push_back("Euler characteristic V-E+F = " +
                      std::to_string(n - ecount + fcount) + " != 2");

    // connectivity over edges
    if (n > 0) {
        std::set<int> seen;
        std::map<int, std::vector<int>> adj;
        for (const Edge& e : t.edges()) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        std::queue<int> q;
        q.push(t.vertices().front());
        seen.insert(t.vertices().front());
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v])
                if (seen.insert(w).second) q.push(w);
        }
        if (static_cast<long long>(seen.size()) != n)
            bad.push_back("complex is not connected");
    }

    return bad;
}

Quad edge_quad(const Triangulation& t, const Edge& e) {
    const auto& fs = t.faces_of(e); // throws MissingEdge
    if (fs.size() != 2)
        throw DegenerateQuad("edge " + to_string(e) + " lies in " +
                             std::to_string(fs.size()) + " face(s), need 2");

    // orient: fa traverses u->v, fb traverses v->u
    const Face* fa = nullptr;
    const Face* fb = nullptr;
    int a = -1, b = -1;
    for (int fi : fs) {
        const Face& f = t.faces()[fi];
        for (int k = 0; k < 3; ++k) {
            if (f[k] == e.u && f[(k + 1) % 3] == e.v) {
                fa = &f;
                a = f[(k + 2) % 3];
            } else if (f[k] == e.v && f[(k + 1) % 3] == e.u) {
                fb = &f;
                b = f[(k + 2) % 3];
            }
        }
    }
    if (!fa || !fb)
        throw DegenerateQuad("faces of edge " + to_string(e) +
                             " are not consistently oriented");
    if (a == b)
        throw DegenerateQuad("faces of edge " + to_string(e) +
                             " share the third vertex " + std::to_string(a));

    Quad q;
    q.diagonal = e;
    q.corners = {e.u, a, e.v, b};
    q.boundary = {Edge(e.u, a), Edge(a, e.v), Edge(e.v, b), Edge(b, e.u)};
    q.faces = {*fa, *fb};
    return q;
}

std::pair<Triangulation, Edge> apply_flip(const Triangulation& t, const Edge& e) {
    const Quad q = edge_quad(t, e);
    const Edge created = q.opposite();
    if (t.has_edge(created))
        throw DuplicateEdge("flip of " + to_string(e) + " would duplicate edge " +
                            to_string(created));

    const int u = q.corners[0], a = q.corners[1], v = q.corners[2], b = q.corners[3];
    std::vector<Face> faces;
    faces.reserve(t.faces().size());
    for (const Face& f : t.faces()) {
        if (f == q.faces[0] || f == q.faces[1]) continue;
        faces.push_back(f);
    }
    // old boundary directions a->u, u->b, b->v, v->a survive in the new pair
    faces.push_back(canonical_face(a, u, b));
    faces.push_back(canonical_face(b, v, a));
    return {Triangulation::from_faces(std::move(faces)), created};
}

bool are_far(const Triangulation& t, const Edge& e1, const Edge& e2) {
    const Quad q1 = edge_quad(t, e1);
    const Quad q2 = edge_quad(t, e2);
    for (const Face& f1 : q1.faces)
        for (const Face& f2 : q2.faces)
            if (f1 == f2) return false;
    return q1.opposite() != q2.opposite();
}

Triangulation pentagon_patch() {
    return Triangulation::from_faces({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}});
}

} // namespace tropbraid
