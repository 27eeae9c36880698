#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "tropbraid/errors.hpp"

namespace tropbraid {

// Unordered vertex pair; stored with u < v so pairs are canonical keys.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool contains(int w) const { return w == u || w == v; }
    auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e); // "u-v"
Edge parse_edge(const std::string& text);

// Oriented triangle, stored with the smallest vertex first (rotation only,
// so the orientation class is preserved).
using Face = std::array<int, 3>;

Face canonical_face(int a, int b, int c);
std::string to_string(const Face& f);

// Combinatorial triangulated surface over integer vertex ids: a closed
// 2-sphere when every edge has two incident faces, or a disk patch when
// boundary edges (one incident face) are present.
class Triangulation {
public:
    Triangulation() = default;
    static Triangulation from_faces(std::vector<Face> faces);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<Face>& faces() const { return faces_; }

    // edges in canonical (lexicographic) order
    std::vector<Edge> edges() const;
    bool has_edge(const Edge& e) const { return incidence_.count(e) > 0; }

    // faces incident to e (one for boundary edges of a patch, two otherwise)
    const std::vector<int>& faces_of(const Edge& e) const;

    bool is_closed() const;
    std::vector<Edge> boundary_edges() const;
    std::vector<Edge> interior_edges() const;

    bool operator==(const Triangulation& o) const { return face_set_ == o.face_set_; }
    bool operator!=(const Triangulation& o) const { return !(*this == o); }

private:
    std::vector<Face> faces_;
    std::vector<int> vertices_;               // sorted distinct ids
    std::map<Edge, std::vector<int>> incidence_; // edge -> indices into faces_
    std::vector<Face> face_set_;              // sorted copy, for equality
};

/*
 * The quadrilateral around a flippable edge {u,v} with opposite corners
 * a and b:
 *
 *          a
 *        /   \
 *       u --- v        corners (u, a, v, b) in cyclic order,
 *        \   /         boundary edges (u,a),(a,v),(v,b),(b,u),
 *          b           flipped diagonal would be {a,b}
 */
struct Quad {
    Edge diagonal;
    std::array<int, 4> corners;   // u, a, v, b
    std::array<Edge, 4> boundary; // (u,a),(a,v),(v,b),(b,u)
    std::array<Face, 2> faces;    // (u,v,a) and (v,u,b), canonicalized

    Edge opposite() const { return Edge(corners[1], corners[3]); }
};

// Diagnostic check of the closed-sphere invariants. Empty result means the
// complex is a combinatorial triangulated 2-sphere.
std::vector<std::string> validate(const Triangulation& t);

// Quad around e. Throws MissingEdge if absent, DegenerateQuad if the two
// incident faces share more than e or e is not interior to two faces.
Quad edge_quad(const Triangulation& t, const Edge& e);

// Replaces e by the opposite diagonal of its quad. Throws DuplicateEdge when
// the opposite pair is already an edge (always the case for n = 4 spheres).
std::pair<Triangulation, Edge> apply_flip(const Triangulation& t, const Edge& e);

// True when the quads of e1 and e2 share no face and their replacement
// diagonals differ, so the two flips act on disjoint parts of the complex
// and commute. Sharing only boundary edges or corners is harmless; what is
// not is a shared face, or both flips producing the same new edge (that
// happens on the n = 5 bipyramid, where two equatorial flips would both
// create the polar edge).
bool are_far(const Triangulation& t, const Edge& e1, const Edge& e2);

// The canonical triangulated pentagon: vertices 1..5 in cyclic order,
// diagonals {1,3} and {1,4}. Its flip graph is a 5-cycle.
Triangulation pentagon_patch();

} // namespace tropbraid
