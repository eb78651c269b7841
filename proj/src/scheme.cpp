#include "pastelab/scheme.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "json.hpp"

namespace pastelab {

using nlohmann::json;

// --- PlaneGraph basics -------------------------------------------------------

int PlaneGraph::object_index(const std::string& name) const {
  auto it = object_lookup.find(name);
  return it == object_lookup.end() ? -1 : it->second;
}

int PlaneGraph::edge_index(const std::string& id) const {
  auto it = edge_lookup.find(id);
  return it == edge_lookup.end() ? -1 : it->second;
}

void PlaneGraph::rebuild_lookups() {
  object_lookup.clear();
  edge_lookup.clear();
  for (int i = 0; i < n_objects(); ++i) object_lookup[objects[i]] = i;
  for (int i = 0; i < n_edges(); ++i) edge_lookup[edges[i].id] = i;
}

int PastingScheme::face_by_name(const std::string& name) const {
  for (int f : interior)
    if (faces[f].name == name) return f;
  return -1;
}

int PastingScheme::in_rank(int v, int e) const {
  const auto& ord = in_order[v];
  for (size_t i = 0; i < ord.size(); ++i)
    if (ord[i] == e) return static_cast<int>(i);
  return -1;
}

int PastingScheme::out_rank(int v, int e) const {
  const auto& ord = out_order[v];
  for (size_t i = 0; i < ord.size(); ++i)
    if (ord[i] == e) return static_cast<int>(i);
  return -1;
}

// --- parsing and serialization ----------------------------------------------

namespace {

Dart parse_dart_token(const PlaneGraph& g, const std::string& tok) {
  auto colon = tok.find(':');
  if (colon == std::string::npos)
    throw Error("ParseError", "rotation entry '" + tok + "' lacks out:/in:");
  std::string kind = tok.substr(0, colon);
  std::string id = tok.substr(colon + 1);
  if (kind != "out" && kind != "in")
    throw Error("ParseError", "rotation entry '" + tok + "' must be out:/in:");
  int e = g.edge_index(id);
  if (e < 0)
    throw Error("StructureError", "rotation references unknown edge '" + id + "'");
  return Dart{e, kind == "out"};
}

std::string dart_token(const PlaneGraph& g, const Dart& d) {
  return (d.out ? std::string("out:") : std::string("in:")) + g.edges[d.edge].id;
}

void check_structure(const PlaneGraph& g) {
  if (g.edges.empty())
    throw Error("StructureError", "a pasting scheme needs at least one edge");
  // rotation coverage: every dart exactly once, at the right vertex
  std::vector<int> seen_out(g.n_edges(), 0), seen_in(g.n_edges(), 0);
  for (int v = 0; v < g.n_objects(); ++v) {
    for (const Dart& d : g.rotation[v]) {
      const EdgeRec& e = g.edges[d.edge];
      int expect = d.out ? e.src : e.tgt;
      if (expect != v)
        throw Error("StructureError",
                    "dart " + dart_token(g, d) + " listed at vertex '" +
                        g.objects[v] + "' but belongs to '" +
                        g.objects[expect] + "'");
      (d.out ? seen_out : seen_in)[d.edge] += 1;
    }
  }
  for (int e = 0; e < g.n_edges(); ++e) {
    if (seen_out[e] != 1 || seen_in[e] != 1)
      throw Error("StructureError", "edge '" + g.edges[e].id +
                                        "' must appear in the rotation exactly "
                                        "once per end");
  }
  // undirected connectivity
  std::vector<char> vis(g.n_objects(), 0);
  std::deque<int> bfs{0};
  vis[0] = 1;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop_front();
    for (const Dart& d : g.rotation[v]) {
      const EdgeRec& e = g.edges[d.edge];
      int w = d.out ? e.tgt : e.src;
      if (!vis[w]) {
        vis[w] = 1;
        bfs.push_back(w);
      }
    }
  }
  for (int v = 0; v < g.n_objects(); ++v)
    if (!vis[v])
      throw Error("StructureError",
                  "graph is not connected (vertex '" + g.objects[v] + "')");
}

}  // namespace

PlaneGraph parse_scheme(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& ex) {
    throw Error("ParseError", ex.what());
  }
  if (!j.is_object()) throw Error("ParseError", "top level must be an object");
  for (const char* key : {"objects", "edges", "rotation", "exterior"})
    if (!j.contains(key))
      throw Error("ParseError", std::string("missing key '") + key + "'");

  PlaneGraph g;
  try {
    for (const auto& o : j.at("objects")) {
      std::string name = o.get<std::string>();
      if (g.object_lookup.count(name))
        throw Error("StructureError", "duplicate object '" + name + "'");
      g.object_lookup[name] = g.n_objects();
      g.objects.push_back(name);
    }
    for (const auto& o : j.at("edges")) {
      EdgeRec e;
      e.id = o.at("id").get<std::string>();
      if (g.edge_lookup.count(e.id))
        throw Error("StructureError", "duplicate edge '" + e.id + "'");
      std::string src = o.at("src").get<std::string>();
      std::string tgt = o.at("tgt").get<std::string>();
      e.src = g.object_index(src);
      e.tgt = g.object_index(tgt);
      if (e.src < 0 || e.tgt < 0)
        throw Error("StructureError",
                    "edge '" + e.id + "' references an unknown object");
      g.edge_lookup[e.id] = g.n_edges();
      g.edges.push_back(e);
    }
    g.rotation.assign(g.n_objects(), {});
    const auto& rot = j.at("rotation");
    if (!rot.is_object()) throw Error("ParseError", "'rotation' must map vertices");
    for (auto it = rot.begin(); it != rot.end(); ++it) {
      int v = g.object_index(it.key());
      if (v < 0)
        throw Error("StructureError",
                    "rotation lists unknown vertex '" + it.key() + "'");
      for (const auto& tok : it.value())
        g.rotation[v].push_back(parse_dart_token(g, tok.get<std::string>()));
    }
    const auto& ext = j.at("exterior");
    std::string eid = ext.at("edge").get<std::string>();
    std::string side = ext.at("side").get<std::string>();
    g.exterior_edge = g.edge_index(eid);
    if (g.exterior_edge < 0)
      throw Error("StructureError", "exterior marker names unknown edge '" + eid + "'");
    if (side != "left" && side != "right")
      throw Error("ParseError", "exterior side must be 'left' or 'right'");
    g.exterior_left = side == "left";
    if (j.contains("coords")) {
      for (auto it = j.at("coords").begin(); it != j.at("coords").end(); ++it) {
        auto arr = it.value();
        g.coords[it.key()] = {arr.at(0).get<double>(), arr.at(1).get<double>()};
      }
    }
  } catch (const Error&) {
    throw;
  } catch (const json::exception& ex) {
    throw Error("ParseError", ex.what());
  }
  check_structure(g);
  return g;
}

std::string serialize_scheme(const PlaneGraph& g) {
  json j;
  j["objects"] = json::array();
  for (const auto& o : g.objects) j["objects"].push_back(o);
  j["edges"] = json::array();
  for (const auto& e : g.edges)
    j["edges"].push_back({{"id", e.id},
                          {"src", g.objects[e.src]},
                          {"tgt", g.objects[e.tgt]}});
  json rot = json::object();
  for (int v = 0; v < g.n_objects(); ++v) {
    json darts = json::array();
    for (const Dart& d : g.rotation[v]) darts.push_back(dart_token(g, d));
    rot[g.objects[v]] = darts;
  }
  j["rotation"] = rot;
  j["exterior"] = {{"edge", g.edges[g.exterior_edge].id},
                   {"side", g.exterior_left ? "left" : "right"}};
  if (!g.coords.empty()) {
    json c = json::object();
    for (const auto& [k, xy] : g.coords) c[k] = {xy.first, xy.second};
    j["coords"] = c;
  }
  return j.dump(2) + "\n";
}

std::string serialize_scheme(const PastingScheme& ps) {
  return serialize_scheme(ps.graph);
}

// --- face tracing ------------------------------------------------------------

namespace {

// Traversal darts are numbered 2*edge (forward) and 2*edge+1 (backward).
inline int trav_id(const TravDart& t) { return 2 * t.edge + (t.forward ? 0 : 1); }

}  // namespace

std::vector<Face> trace_faces(const PlaneGraph& g) {
  // Position of each vertex-dart in its rotation.
  // key: (edge, out) -> (vertex, position)
  std::vector<std::pair<int, int>> out_pos(g.n_edges()), in_pos(g.n_edges());
  for (int v = 0; v < g.n_objects(); ++v)
    for (size_t i = 0; i < g.rotation[v].size(); ++i) {
      const Dart& d = g.rotation[v][i];
      (d.out ? out_pos : in_pos)[d.edge] = {v, static_cast<int>(i)};
    }

  auto next_trav = [&](const TravDart& t) -> TravDart {
    // Arrive at the head of t, take the next dart clockwise after the dart of
    // t's edge at that vertex, and leave along it. This keeps the traced face
    // on the left of the walking direction.
    auto [v, pos] = t.forward ? in_pos[t.edge] : out_pos[t.edge];
    const auto& rot = g.rotation[v];
    const Dart& d = rot[(pos + 1) % rot.size()];
    return TravDart{d.edge, d.out};
  };

  std::vector<char> used(2 * g.n_edges(), 0);
  std::vector<Face> faces;
  for (int e = 0; e < g.n_edges(); ++e) {
    for (bool fwd : {true, false}) {
      TravDart start{e, fwd};
      if (used[trav_id(start)]) continue;
      Face f;
      TravDart t = start;
      do {
        used[trav_id(t)] = 1;
        f.walk.push_back(t);
        t = next_trav(t);
      } while (!(t == start));
      faces.push_back(std::move(f));
    }
  }

  long v_count = g.n_objects(), e_count = g.n_edges(),
       f_count = static_cast<long>(faces.size());
  if (v_count - e_count + f_count != 2)
    throw Error("EmbeddingError",
                "rotation system is not planar: V-E+F = " +
                    std::to_string(v_count - e_count + f_count));

  // Mark the exterior face via the marker edge side. Left side = forward dart.
  TravDart marker{g.exterior_edge, g.exterior_left};
  for (Face& f : faces)
    for (const TravDart& t : f.walk)
      if (t == marker) f.exterior = true;
  return faces;
}

// --- validation ----------------------------------------------------------------

namespace {

struct Anchor {
  bool ok = false;
  int src = -1, tgt = -1;
  std::vector<int> dom, cod;
  std::string why;
};

// Splits the cyclic boundary walk into its forward run and backward run. The
// forward run is the path whose edges see this face on their left.
Anchor anchor_face(const PlaneGraph& g, const Face& f) {
  Anchor a;
  const auto& w = f.walk;
  int n = static_cast<int>(w.size());
  int changes = 0;
  for (int i = 0; i < n; ++i)
    if (w[i].forward != w[(i + 1) % n].forward) ++changes;
  if (changes != 2) {
    a.why = changes == 0 ? "boundary walk is a directed cycle"
                         : "boundary walk alternates direction more than once";
    return a;
  }
  // rotate so the walk starts with the forward run
  int start = 0;
  while (!(w[start].forward && !w[(start + n - 1) % n].forward))
    start = (start + 1) % n;
  std::vector<int> fwd, bwd;
  for (int i = 0; i < n; ++i) {
    const TravDart& t = w[(start + i) % n];
    (t.forward ? fwd : bwd).push_back(t.edge);
  }
  std::reverse(bwd.begin(), bwd.end());
  // both runs go from the same start vertex to the same end vertex
  auto run_simple = [&](const std::vector<int>& run) {
    std::set<int> vs{g.edges[run.front()].src};
    for (int e : run)
      if (!vs.insert(g.edges[e].tgt).second) return false;
    return true;
  };
  if (!run_simple(fwd) || !run_simple(bwd)) {
    a.why = "a boundary path revisits a vertex";
    return a;
  }
  int s = g.edges[fwd.front()].src, t = g.edges[fwd.back()].tgt;
  if (g.edges[bwd.front()].src != s || g.edges[bwd.back()].tgt != t) {
    a.why = "boundary paths do not share endpoints";
    return a;
  }
  a.ok = true;
  a.src = s;
  a.tgt = t;
  if (f.exterior) {
    a.dom = fwd;  // exterior on the left = source path
    a.cod = bwd;
  } else {
    a.dom = bwd;  // face on the right = source path
    a.cod = fwd;
  }
  return a;
}

bool internally_disjoint(const PlaneGraph& g, const Anchor& a) {
  std::set<int> dom_edges(a.dom.begin(), a.dom.end());
  for (int e : a.cod)
    if (dom_edges.count(e)) return false;
  std::set<int> dom_inner;
  for (size_t i = 0; i + 1 < a.dom.size(); ++i)
    dom_inner.insert(g.edges[a.dom[i]].tgt);
  for (size_t i = 0; i + 1 < a.cod.size(); ++i)
    if (dom_inner.count(g.edges[a.cod[i]].tgt)) return false;
  return true;
}

std::string face_label(const PlaneGraph& g, const Face& f) {
  std::string s = f.exterior ? "exterior face [" : "face [";
  for (size_t i = 0; i < f.walk.size(); ++i) {
    if (i) s += " ";
    s += (f.walk[i].forward ? "+" : "-") + g.edges[f.walk[i].edge].id;
  }
  return s + "]";
}

}  // namespace

PastingScheme validate_pasting_scheme(const PlaneGraph& g) {
  check_structure(g);
  PastingScheme ps;
  ps.graph = g;
  ps.graph.rebuild_lookups();
  ps.faces = trace_faces(g);

  std::vector<Violation> bad;
  int n_ext = 0;
  for (size_t i = 0; i < ps.faces.size(); ++i) {
    if (ps.faces[i].exterior) {
      ++n_ext;
      ps.exterior_face = static_cast<int>(i);
    }
  }
  if (n_ext != 1)
    throw Error("EmbeddingError", "exterior marker inconsistent with faces");

  // anchor every face
  for (size_t i = 0; i < ps.faces.size(); ++i) {
    Face& f = ps.faces[i];
    Anchor a = anchor_face(g, f);
    if (a.ok && !f.exterior && !internally_disjoint(g, a)) {
      a.ok = false;
      a.why = "source and target paths are not internally disjoint";
    }
    if (!a.ok) {
      bad.push_back({"NotAnchorable", face_label(g, f) + ": " + a.why});
      continue;
    }
    f.src = a.src;
    f.tgt = a.tgt;
    f.dom = a.dom;
    f.cod = a.cod;
    if (!f.exterior) {
      f.name = g.edges[f.dom.front()].id;
      ps.interior.push_back(static_cast<int>(i));
    }
  }
  const Face& ext = ps.faces[ps.exterior_face];
  bool anchored = ext.src >= 0;
  if (anchored) {
    ps.source = ext.src;
    ps.sink = ext.tgt;
    ps.dom = Path{ext.src, ext.dom, ext.tgt};
    ps.cod = Path{ext.src, ext.cod, ext.tgt};
  }

  // unique local source and sink, equal to the exterior endpoints; the
  // degree census runs even when anchoring failed so a bad file reports
  // every violation at once
  std::vector<int> in_deg(g.n_objects(), 0), out_deg(g.n_objects(), 0);
  for (const EdgeRec& e : g.edges) {
    ++out_deg[e.src];
    ++in_deg[e.tgt];
  }
  std::vector<int> sources, sinks;
  for (int v = 0; v < g.n_objects(); ++v) {
    if (in_deg[v] == 0) sources.push_back(v);
    if (out_deg[v] == 0) sinks.push_back(v);
  }
  auto name_list = [&](const std::vector<int>& vs) {
    std::string s;
    for (int v : vs) s += (s.empty() ? "" : ", ") + g.objects[v];
    return s;
  };
  if (sources.size() != 1 || (anchored && sources.front() != ps.source))
    bad.push_back({"MultipleSources",
                   "local sources {" + name_list(sources) +
                       "} must be exactly one vertex" +
                       (anchored ? ", the exterior source '" +
                                       g.objects[ps.source] + "'"
                                 : std::string())});
  if (sinks.size() != 1 || (anchored && sinks.front() != ps.sink))
    bad.push_back({"MultipleSinks",
                   "local sinks {" + name_list(sinks) +
                       "} must be exactly one vertex" +
                       (anchored ? ", the exterior sink '" +
                                       g.objects[ps.sink] + "'"
                                 : std::string())});

  // acyclicity via Kahn's algorithm
  {
    std::vector<int> deg = in_deg;
    std::deque<int> q;
    for (int v = 0; v < g.n_objects(); ++v)
      if (deg[v] == 0) q.push_back(v);
    int seen = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      ++seen;
      for (const Dart& d : g.rotation[v])
        if (d.out && --deg[g.edges[d.edge].tgt] == 0)
          q.push_back(g.edges[d.edge].tgt);
    }
    if (seen != g.n_objects()) {
      std::vector<int> cyc;
      for (int v = 0; v < g.n_objects(); ++v)
        if (deg[v] > 0) cyc.push_back(v);
      bad.push_back({"CycleFound",
                     "directed cycle through {" + name_list(cyc) + "}"});
    }
  }
  if (!bad.empty()) throw ValidationError(bad);

  // left/right faces per edge
  ps.left_face.assign(g.n_edges(), -1);
  ps.right_face.assign(g.n_edges(), -1);
  for (size_t i = 0; i < ps.faces.size(); ++i)
    for (const TravDart& t : ps.faces[i].walk)
      (t.forward ? ps.left_face : ps.right_face)[t.edge] = static_cast<int>(i);

  // the two edge partitions: interior source paths + cod_P, and
  // interior target paths + dom_P
  {
    std::vector<int> dom_hits(g.n_edges(), 0), cod_hits(g.n_edges(), 0);
    for (int fi : ps.interior) {
      for (int e : ps.faces[fi].dom) ++dom_hits[e];
      for (int e : ps.faces[fi].cod) ++cod_hits[e];
    }
    for (int e : ext.cod) ++dom_hits[e];  // cod_P completes the dom partition
    for (int e : ext.dom) ++cod_hits[e];
    for (int e = 0; e < g.n_edges(); ++e) {
      if (dom_hits[e] != 1)
        bad.push_back({"PartitionViolation",
                       "edge '" + g.edges[e].id + "' lies on " +
                           std::to_string(dom_hits[e]) +
                           " source paths (counting cod_P), expected 1"});
      if (cod_hits[e] != 1)
        bad.push_back({"PartitionViolation",
                       "edge '" + g.edges[e].id + "' lies on " +
                           std::to_string(cod_hits[e]) +
                           " target paths (counting dom_P), expected 1"});
    }
  }

  // in/out orders around every vertex; also rejects the out/in/out/in wheel
  ps.in_order.assign(g.n_objects(), {});
  ps.out_order.assign(g.n_objects(), {});
  auto gap_face = [&](const Dart& d) {
    // face sitting in the corner clockwise after dart d
    return d.out ? ps.right_face[d.edge] : ps.left_face[d.edge];
  };
  for (int v = 0; v < g.n_objects(); ++v) {
    const auto& rot = g.rotation[v];
    int n = static_cast<int>(rot.size());
    if (n == 0) continue;  // unreachable: graph is connected with >= 1 edge
    int changes = 0;
    for (int i = 0; i < n; ++i)
      if (rot[i].out != rot[(i + 1) % n].out) ++changes;
    if (changes > 2) {
      bad.push_back({"ProhibitedConfiguration",
                     "incoming and outgoing edges interleave around '" +
                         g.objects[v] + "'"});
      continue;
    }
    int start = -1;
    if (changes == 2) {
      // start of the outgoing arc
      for (int i = 0; i < n; ++i)
        if (rot[i].out && !rot[(i + n - 1) % n].out) start = i;
    } else {
      // all darts point the same way: cut at the exterior corner
      std::vector<int> cuts;
      for (int i = 0; i < n; ++i)
        if (gap_face(rot[i]) == ps.exterior_face) cuts.push_back(i);
      if (cuts.size() != 1) {
        bad.push_back({"ProhibitedConfiguration",
                       "exterior face touches '" + g.objects[v] + "' " +
                           std::to_string(cuts.size()) + " times"});
        continue;
      }
      start = (cuts.front() + 1) % n;
    }
    std::vector<int> outs, ins;
    for (int i = 0; i < n; ++i) {
      const Dart& d = rot[(start + i) % n];
      (d.out ? outs : ins).push_back(d.edge);
    }
    // clockwise outgoing arc runs upper to lower; incoming arc lower to upper
    std::reverse(outs.begin(), outs.end());
    ps.out_order[v] = outs;
    ps.in_order[v] = ins;
  }

  // tie rule at the exterior endpoints: the lowest edge starts cod_P or the
  // highest starts dom_P (both hold with the exterior-corner cut)
  if (bad.empty()) {
    const auto& outs = ps.out_order[ps.source];
    if (!outs.empty() && !(outs.front() == ps.cod.edges.front() ||
                           outs.back() == ps.dom.edges.front()))
      bad.push_back({"TieRuleViolation",
                     "outgoing order at the source misses both boundary edges"});
    const auto& ins = ps.in_order[ps.sink];
    if (!ins.empty() && !(ins.front() == ps.cod.edges.back() ||
                          ins.back() == ps.dom.edges.back()))
      bad.push_back({"TieRuleViolation",
                     "incoming order at the sink misses both boundary edges"});
  }

  if (!bad.empty()) throw ValidationError(bad);

  // reachability closure
  ps.reach.assign(g.n_objects(), std::vector<char>(g.n_objects(), 0));
  for (int v = 0; v < g.n_objects(); ++v) {
    std::deque<int> q{v};
    ps.reach[v][v] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (const Dart& d : g.rotation[u])
        if (d.out) {
          int w = g.edges[d.edge].tgt;
          if (!ps.reach[v][w]) {
            ps.reach[v][w] = 1;
            q.push_back(w);
          }
        }
    }
  }
  // every vertex sits between the source and the sink
  for (int v = 0; v < g.n_objects(); ++v)
    if (!ps.reach[ps.source][v] || !ps.reach[v][ps.sink])
      bad.push_back({"GlobalMinMaxViolation",
                     "vertex '" + g.objects[v] +
                         "' is not between the source and the sink"});
  if (!bad.empty()) throw ValidationError(bad);

  return ps;
}

// --- theta2 builder -----------------------------------------------------------

PastingScheme build_theta2(const std::vector<int>& widths) {
  if (widths.empty()) throw Error("EmptyWidths", "need at least one width");
  for (int k : widths)
    if (k < 0) throw Error("EmptyWidths", "widths must be non-negative");
  int n = static_cast<int>(widths.size());
  PlaneGraph g;
  for (int v = 0; v <= n; ++v) g.objects.push_back(std::to_string(v));
  std::vector<std::vector<int>> col(n + 1);  // column j edges, top to bottom
  for (int j = 1; j <= n; ++j) {
    for (int i = 0; i <= widths[j - 1]; ++i) {
      col[j].push_back(g.n_edges());
      g.edges.push_back(EdgeRec{
          "e" + std::to_string(j) + "_" + std::to_string(i), j - 1, j});
    }
  }
  g.rotation.assign(n + 1, {});
  for (int v = 0; v <= n; ++v) {
    // clockwise: outgoing arc upper to lower, then incoming lower to upper
    if (v < n)
      for (int e : col[v + 1]) g.rotation[v].push_back(Dart{e, true});
    if (v > 0)
      for (auto it = col[v].rbegin(); it != col[v].rend(); ++it)
        g.rotation[v].push_back(Dart{*it, false});
  }
  g.exterior_edge = col[1].front();
  g.exterior_left = true;
  g.rebuild_lookups();
  return validate_pasting_scheme(g);
}

// --- queries -------------------------------------------------------------------

std::pair<std::vector<int>, std::vector<int>> in_out_order(
    const PastingScheme& ps, int v) {
  return {ps.in_order[v], ps.out_order[v]};
}

std::pair<std::optional<int>, std::optional<int>> pred_succ(
    const PastingScheme& ps, const Path& p, int v) {
  std::optional<int> pred, succ;
  for (int e : p.edges) {
    if (ps.graph.edges[e].tgt == v) pred = e;
    if (ps.graph.edges[e].src == v) succ = e;
  }
  return {pred, succ};
}

bool reachable(const PastingScheme& ps, int x, int y) {
  return ps.reach[x][y] != 0;
}

std::string to_dot(const PastingScheme& ps) {
  std::ostringstream os;
  os << "digraph scheme {\n  rankdir=LR;\n";
  for (int v = 0; v < ps.n_objects(); ++v) {
    os << "  \"" << ps.object_name(v) << "\"";
    if (v == ps.source)
      os << " [shape=doublecircle]";
    else if (v == ps.sink)
      os << " [shape=doubleoctagon]";
    os << ";\n";
  }
  for (const EdgeRec& e : ps.graph.edges)
    os << "  \"" << ps.graph.objects[e.src] << "\" -> \""
       << ps.graph.objects[e.tgt] << "\" [label=\"" << e.id << "\"];\n";
  for (int fi : ps.interior) {
    const Face& f = ps.faces[fi];
    os << "  // cell " << f.name << ": ";
    for (size_t i = 0; i < f.dom.size(); ++i)
      os << (i ? "." : "") << ps.edge_id(f.dom[i]);
    os << " => ";
    for (size_t i = 0; i < f.cod.size(); ++i)
      os << (i ? "." : "") << ps.edge_id(f.cod[i]);
    os << "\n";
  }
  os << "}\n";
  return os.str();
}

// --- path helpers ----------------------------------------------------------------

Path make_path(const PastingScheme& ps, int start,
               const std::vector<int>& edges) {
  if (start < 0 || start >= ps.n_objects())
    throw Error("UnknownVertex", "path start out of range");
  Path p{start, edges, start};
  int at = start;
  for (int e : edges) {
    if (e < 0 || e >= ps.n_edges())
      throw Error("NotAnEdge", "path edge index out of range");
    if (ps.graph.edges[e].src != at)
      throw Error("NotAnEdge",
                  "edges do not compose at '" + ps.object_name(at) + "'");
    at = ps.graph.edges[e].tgt;
  }
  p.end = at;
  return p;
}

Path empty_path(int v) { return Path{v, {}, v}; }

Path concat(const PastingScheme& ps, const Path& first, const Path& second) {
  if (first.end != second.start)
    throw Error("NotAnEdge", "paths do not compose");
  Path p = first;
  p.edges.insert(p.edges.end(), second.edges.begin(), second.edges.end());
  p.end = second.end;
  (void)ps;
  return p;
}

std::vector<int> path_vertices(const PastingScheme& ps, const Path& p) {
  std::vector<int> vs{p.start};
  for (int e : p.edges) vs.push_back(ps.graph.edges[e].tgt);
  return vs;
}

bool path_contains_vertex(const PastingScheme& ps, const Path& p, int v) {
  if (p.start == v) return true;
  for (int e : p.edges)
    if (ps.graph.edges[e].tgt == v) return true;
  return false;
}

std::string path_to_string(const PastingScheme& ps, const Path& p) {
  if (p.is_empty()) return "id(" + ps.object_name(p.start) + ")";
  std::string s;
  for (size_t i = 0; i < p.edges.size(); ++i)
    s += (i ? "." : "") + ps.edge_id(p.edges[i]);
  return s;
}

Path translate_path(const PastingScheme& from, const PastingScheme& to,
                    const Path& p) {
  int start = to.graph.object_index(from.object_name(p.start));
  if (start < 0) throw Error("UnknownVertex", "path start not in target scheme");
  std::vector<int> edges;
  for (int e : p.edges) {
    int te = to.graph.edge_index(from.edge_id(e));
    if (te < 0)
      throw Error("NotAnEdge",
                  "edge '" + from.edge_id(e) + "' not in target scheme");
    edges.push_back(te);
  }
  return make_path(to, start, edges);
}

}  // namespace pastelab
