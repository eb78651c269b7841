#pragma once

// Directed plane graphs with explicit rotation systems, combinatorial face
// tracing, and validation of the pasting-scheme axioms.
//
// Drawing conventions used throughout:
//   * rotations list the darts at each vertex in clockwise drawn order
//     (y axis pointing up);
//   * faces are traced with the face on the left of the traversal direction;
//   * the exterior face is named by one edge side ("edge" + "left"/"right").
//
// For an interior face F the edges seeing F on their right form the source
// path dom_F and the edges seeing F on their left form the target path cod_F.
// For the exterior face the roles flip: left side exterior means the edge is
// on the global source path dom_P, right side exterior means cod_P.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pastelab/error.hpp"

namespace pastelab {

// A dart is one end of an edge sitting at a vertex. `out` is true at the
// source end.
struct Dart {
  int edge = -1;
  bool out = false;
  friend bool operator==(const Dart&, const Dart&) = default;
};

struct EdgeRec {
  std::string id;
  int src = -1;
  int tgt = -1;
};

struct PlaneGraph {
  std::vector<std::string> objects;            // vertex names, input order
  std::vector<EdgeRec> edges;                  // input order
  std::vector<std::vector<Dart>> rotation;     // per vertex, clockwise
  int exterior_edge = 0;                       // marker edge index
  bool exterior_left = true;                   // marker side
  std::map<std::string, std::pair<double, double>> coords;  // optional hints

  std::map<std::string, int> object_lookup;
  std::map<std::string, int> edge_lookup;

  int n_objects() const { return static_cast<int>(objects.size()); }
  int n_edges() const { return static_cast<int>(edges.size()); }
  int object_index(const std::string& name) const;  // -1 when absent
  int edge_index(const std::string& id) const;      // -1 when absent
  void rebuild_lookups();
};

// One step of a face boundary walk: an edge crossed forward (src->tgt) or
// backward. The traced face lies on the left of the walking direction, so a
// forward crossing means the face is the edge's left face.
struct TravDart {
  int edge = -1;
  bool forward = true;
  friend bool operator==(const TravDart&, const TravDart&) = default;
};

struct Face {
  std::vector<TravDart> walk;  // closed boundary walk
  bool exterior = false;
  // Anchoring data, filled by validate_pasting_scheme.
  int src = -1, tgt = -1;
  std::vector<int> dom, cod;  // edge index sequences
  std::string name;           // id of the first dom edge (interior faces)
};

// A directed edge path. Identity paths have empty `edges` and start == end.
struct Path {
  int start = -1;
  std::vector<int> edges;
  int end = -1;

  bool is_empty() const { return edges.empty(); }
  size_t length() const { return edges.size(); }
  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path& a, const Path& b) {
    if (auto c = a.start <=> b.start; c != 0) return c;
    return a.edges <=> b.edges;
  }
};

struct PastingScheme {
  PlaneGraph graph;
  std::vector<Face> faces;    // all faces, exterior included, trace order
  int exterior_face = -1;
  std::vector<int> interior;  // interior face indices, trace order
  int source = -1, sink = -1;
  Path dom, cod;
  std::vector<std::vector<int>> in_order;   // per vertex, edge ids ascending
  std::vector<std::vector<int>> out_order;  // ("ascending" = lower to upper)
  std::vector<int> left_face;               // per edge, face index
  std::vector<int> right_face;
  std::vector<std::vector<char>> reach;     // reach[x][y], reflexive

  int n_objects() const { return graph.n_objects(); }
  int n_edges() const { return graph.n_edges(); }
  int n_interior_faces() const { return static_cast<int>(interior.size()); }
  const std::string& object_name(int v) const { return graph.objects[v]; }
  const std::string& edge_id(int e) const { return graph.edges[e].id; }
  int face_by_name(const std::string& name) const;  // -1 when absent
  int in_rank(int v, int e) const;                  // -1 when absent
  int out_rank(int v, int e) const;
};

// --- construction and IO ---------------------------------------------------

PlaneGraph parse_scheme(const std::string& json_text);
std::string serialize_scheme(const PlaneGraph& g);
std::string serialize_scheme(const PastingScheme& ps);

// Traces the boundary walks of all faces from the rotation system and checks
// the Euler relation V - E + F = 2. Face anchoring is left to the validator.
std::vector<Face> trace_faces(const PlaneGraph& g);

// Checks every pasting-scheme axiom, collecting all violations:
// each face anchorable, a unique local source and sink matching the exterior
// endpoints, acyclicity, the two edge partitions, and no out/in/out/in
// alternation around any vertex. Throws ValidationError when anything fails.
PastingScheme validate_pasting_scheme(const PlaneGraph& g);

// Globular scheme with widths (k_1, ..., k_n): objects "0".."n" and k_j + 1
// parallel edges "e{j}_{i}" from j-1 to j, stacked top (i = 0) to bottom.
PastingScheme build_theta2(const std::vector<int>& widths);

// Total orders on the incoming and outgoing edges at v, lower edge first.
std::pair<std::vector<int>, std::vector<int>> in_out_order(
    const PastingScheme& ps, int v);

// The unique incoming/outgoing edge of p at v, or nullopt at the endpoints.
std::pair<std::optional<int>, std::optional<int>> pred_succ(
    const PastingScheme& ps, const Path& p, int v);

bool reachable(const PastingScheme& ps, int x, int y);

std::string to_dot(const PastingScheme& ps);

// --- path helpers ----------------------------------------------------------

// Builds a path from consecutive edge indices, checking composability.
Path make_path(const PastingScheme& ps, int start,
               const std::vector<int>& edges);
Path empty_path(int v);
Path concat(const PastingScheme& ps, const Path& first, const Path& second);
std::vector<int> path_vertices(const PastingScheme& ps, const Path& p);
bool path_contains_vertex(const PastingScheme& ps, const Path& p, int v);
std::string path_to_string(const PastingScheme& ps, const Path& p);

// Re-indexes a path between schemes that share object and edge names.
Path translate_path(const PastingScheme& from, const PastingScheme& to,
                    const Path& p);

}  // namespace pastelab
