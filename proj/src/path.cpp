#include "pastelab/path.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace pastelab {

namespace {

// Incoming/outgoing edge of the path at each vertex: -2 off the path,
// -1 missing (endpoint), otherwise the edge index.
struct PathProfile {
  std::vector<int> pred, succ;
  explicit PathProfile(const PastingScheme& ps, const Path& p)
      : pred(ps.n_objects(), -2), succ(ps.n_objects(), -2) {
    for (int e : p.edges) {
      succ[ps.graph.edges[e].src] = e;
      pred[ps.graph.edges[e].tgt] = e;
    }
    pred[p.start] = -1;  // acyclic, so no path edge can end at the start
    succ[p.end] = -1;
  }
  bool on_path(int v) const { return pred[v] != -2 || succ[v] != -2; }
};

void require_parallel(const PastingScheme& ps, const Path& p, const Path& q) {
  if (p.start != q.start || p.end != q.end)
    throw Error("NotParallel", "paths " + path_to_string(ps, p) + " and " +
                                   path_to_string(ps, q) +
                                   " do not share endpoints");
}

enum class Half { Both, PredOnly, SuccOnly };

bool lies_above_impl(const PastingScheme& ps, const Path& p, const Path& q,
                     Half half) {
  require_parallel(ps, p, q);
  PathProfile pp(ps, p), qq(ps, q);
  auto at_or_above = [&](int pe, int qe, auto rank) {
    if (pe == -1 && qe == -1) return true;   // both missing at an endpoint
    if (pe == -1 || qe == -1) return false;  // null point is incomparable
    return rank(pe) >= rank(qe);
  };
  for (int v = 0; v < ps.n_objects(); ++v) {
    if (!pp.on_path(v) || !qq.on_path(v)) continue;
    if (half != Half::SuccOnly &&
        !at_or_above(pp.pred[v], qq.pred[v],
                     [&](int e) { return ps.in_rank(v, e); }))
      return false;
    if (half != Half::PredOnly &&
        !at_or_above(pp.succ[v], qq.succ[v],
                     [&](int e) { return ps.out_rank(v, e); }))
      return false;
  }
  return true;
}

}  // namespace

bool lies_above(const PastingScheme& ps, const Path& p, const Path& q) {
  return lies_above_impl(ps, p, q, Half::Both);
}
bool lies_above_pred_only(const PastingScheme& ps, const Path& p,
                          const Path& q) {
  return lies_above_impl(ps, p, q, Half::PredOnly);
}
bool lies_above_succ_only(const PastingScheme& ps, const Path& p,
                          const Path& q) {
  return lies_above_impl(ps, p, q, Half::SuccOnly);
}

// --- parallel factorization ---------------------------------------------------

ParallelFactorization partition_parallel(const PastingScheme& ps,
                                         const Path& p, const Path& q) {
  if (!lies_above(ps, p, q))
    throw Error("NotAbove", path_to_string(ps, p) + " does not lie above " +
                                path_to_string(ps, q));
  std::vector<int> vp = path_vertices(ps, p), vq = path_vertices(ps, q);
  std::vector<int> qpos(ps.n_objects(), -1);
  for (size_t j = 0; j < vq.size(); ++j) qpos[vq[j]] = static_cast<int>(j);

  struct Stop {
    int v, pi, qi;
  };
  std::vector<Stop> common;
  for (size_t i = 0; i < vp.size(); ++i)
    if (qpos[vp[i]] >= 0)
      common.push_back({vp[i], static_cast<int>(i), qpos[vp[i]]});
  for (size_t k = 0; k + 1 < common.size(); ++k)
    if (common[k].qi >= common[k + 1].qi)
      throw Error("NotAbove", "common vertices disagree in order");

  ParallelFactorization out;
  Path cur_shared = empty_path(p.start);
  auto slice = [&](const Path& r, int a, int b) {
    std::vector<int> es(r.edges.begin() + a, r.edges.begin() + b);
    int start = a == 0 ? r.start : ps.graph.edges[r.edges[a - 1]].tgt;
    return make_path(ps, start, es);
  };
  for (size_t k = 0; k + 1 < common.size(); ++k) {
    const Stop& u = common[k];
    const Stop& w = common[k + 1];
    Path pseg = slice(p, u.pi, w.pi), qseg = slice(q, u.qi, w.qi);
    if (pseg == qseg) {
      // consecutive common vertices sharing every edge: a single shared edge
      if (pseg.length() != 1)
        throw Error("NotAbove", "interior of a shared segment is not shared");
      cur_shared = concat(ps, cur_shared, pseg);
    } else {
      out.shared.push_back(cur_shared);
      cur_shared = empty_path(w.v);
      out.blocks.push_back({pseg, qseg});
    }
  }
  out.shared.push_back(cur_shared);

  // reconstruction check
  Path rp = out.shared[0], rq = out.shared[0];
  for (size_t i = 0; i < out.blocks.size(); ++i) {
    rp = concat(ps, concat(ps, rp, out.blocks[i].upper), out.shared[i + 1]);
    rq = concat(ps, concat(ps, rq, out.blocks[i].lower), out.shared[i + 1]);
  }
  if (!(rp == p) || !(rq == q))
    throw Error("NotAbove", "parallel factorization failed to reconstruct");
  return out;
}

// --- extremal paths -------------------------------------------------------------

std::pair<Path, Path> extremal_paths(const PastingScheme& ps, int x, int y) {
  if (!reachable(ps, x, y))
    throw Error("NotReachable", "'" + ps.object_name(y) +
                                    "' is not reachable from '" +
                                    ps.object_name(x) + "'");
  auto usable = [&](int e) {
    return ps.reach[x][ps.graph.edges[e].src] &&
           ps.reach[ps.graph.edges[e].tgt][y];
  };
  auto walk = [&](bool top) {
    std::vector<int> edges;
    int at = x;
    while (at != y) {
      const auto& ord = ps.out_order[at];
      int pick = -1;
      for (int e : ord)
        if (usable(e)) {
          pick = e;          // keep the last usable = highest
          if (!top) break;   // or stop at the first = lowest
        }
      if (pick < 0) throw Error("NotReachable", "greedy walk got stuck");
      edges.push_back(pick);
      at = ps.graph.edges[pick].tgt;
    }
    return make_path(ps, x, edges);
  };
  return {walk(true), walk(false)};
}

// --- sub-schemes -----------------------------------------------------------------

namespace {

PastingScheme rebuild_subgraph(const PastingScheme& ps,
                               const std::set<int>& keep_edges, int marker_edge,
                               bool marker_left) {
  std::set<int> keep_verts;
  for (int e : keep_edges) {
    keep_verts.insert(ps.graph.edges[e].src);
    keep_verts.insert(ps.graph.edges[e].tgt);
  }
  PlaneGraph g;
  std::vector<int> vmap(ps.n_objects(), -1);
  for (int v = 0; v < ps.n_objects(); ++v)
    if (keep_verts.count(v)) {
      vmap[v] = g.n_objects();
      g.objects.push_back(ps.object_name(v));
      auto it = ps.graph.coords.find(ps.object_name(v));
      if (it != ps.graph.coords.end()) g.coords.insert(*it);
    }
  std::vector<int> emap(ps.n_edges(), -1);
  for (int e = 0; e < ps.n_edges(); ++e)
    if (keep_edges.count(e)) {
      emap[e] = g.n_edges();
      g.edges.push_back(EdgeRec{ps.edge_id(e), vmap[ps.graph.edges[e].src],
                                vmap[ps.graph.edges[e].tgt]});
    }
  g.rotation.assign(g.n_objects(), {});
  for (int v = 0; v < ps.n_objects(); ++v)
    if (vmap[v] >= 0)
      for (const Dart& d : ps.graph.rotation[v])
        if (emap[d.edge] >= 0)
          g.rotation[vmap[v]].push_back(Dart{emap[d.edge], d.out});
  g.exterior_edge = emap[marker_edge];
  g.exterior_left = marker_left;
  g.rebuild_lookups();
  return validate_pasting_scheme(g);
}

}  // namespace

PastingScheme sub_scheme_pq(const PastingScheme& ps, const Path& p,
                            const Path& q) {
  require_parallel(ps, p, q);
  if (p.is_empty())
    throw Error("TrivialPath", "the spanning pair must have positive length");
  ParallelFactorization fact = partition_parallel(ps, p, q);  // checks NotAbove

  std::set<int> pq_edges(p.edges.begin(), p.edges.end());
  pq_edges.insert(q.edges.begin(), q.edges.end());

  std::set<int> region_faces;
  for (const ParallelBlock& b : fact.blocks) {
    int seed = ps.right_face[b.upper.edges.front()];
    if (seed == ps.exterior_face)
      throw Error("NotAbove", "no bounded region under the upper path");
    std::deque<int> bfs;
    if (region_faces.insert(seed).second) bfs.push_back(seed);
    while (!bfs.empty()) {
      int fi = bfs.front();
      bfs.pop_front();
      const Face& f = ps.faces[fi];
      for (const std::vector<int>* side : {&f.dom, &f.cod})
        for (int e : *side) {
          if (pq_edges.count(e)) continue;
          int other = ps.left_face[e] == fi ? ps.right_face[e] : ps.left_face[e];
          if (other == ps.exterior_face)
            throw Error("NotAbove", "region between the paths is unbounded");
          if (region_faces.insert(other).second) bfs.push_back(other);
        }
    }
  }

  std::set<int> keep = pq_edges;
  for (int fi : region_faces) {
    keep.insert(ps.faces[fi].dom.begin(), ps.faces[fi].dom.end());
    keep.insert(ps.faces[fi].cod.begin(), ps.faces[fi].cod.end());
  }
  PastingScheme sub = rebuild_subgraph(ps, keep, p.edges.front(), true);

  if (!(translate_path(ps, sub, p) == sub.dom) ||
      !(translate_path(ps, sub, q) == sub.cod))
    throw Error("NotAbove", "spanned sub-scheme has unexpected boundary");
  std::set<std::string> want, got;
  for (int fi : region_faces) want.insert(ps.faces[fi].name);
  for (int fi : sub.interior) got.insert(sub.faces[fi].name);
  if (want != got)
    throw Error("NotAbove", "spanned sub-scheme has unexpected faces");
  return sub;
}

PastingScheme sub_scheme_between(const PastingScheme& ps, int x, int y) {
  if (x == y || !reachable(ps, x, y))
    throw Error("NotReachable", "'" + ps.object_name(y) +
                                    "' is not strictly after '" +
                                    ps.object_name(x) + "'");
  auto [top, bottom] = extremal_paths(ps, x, y);
  return sub_scheme_pq(ps, top, bottom);
}

// --- cells along the boundary -----------------------------------------------------

namespace {

// position of `run` as a contiguous subsequence of `seq`, or -1
int find_run(const std::vector<int>& seq, const std::vector<int>& run) {
  if (run.empty() || run.size() > seq.size()) return -1;
  for (size_t i = 0; i + run.size() <= seq.size(); ++i)
    if (std::equal(run.begin(), run.end(), seq.begin() + i))
      return static_cast<int>(i);
  return -1;
}

std::vector<int> boundary_cells(const PastingScheme& ps, bool top) {
  std::vector<std::pair<int, int>> found;  // (position, face)
  const std::vector<int>& boundary = top ? ps.dom.edges : ps.cod.edges;
  for (int fi : ps.interior) {
    const Face& f = ps.faces[fi];
    int pos = find_run(boundary, top ? f.dom : f.cod);
    if (pos >= 0) found.push_back({pos, fi});
  }
  std::sort(found.begin(), found.end());
  std::vector<int> cells;
  for (auto& [pos, fi] : found) cells.push_back(fi);
  return cells;
}

PastingScheme delete_cell(const PastingScheme& ps, int face, bool top) {
  const Face& f = ps.faces[face];
  const std::vector<int>& boundary = top ? ps.dom.edges : ps.cod.edges;
  int pos = find_run(boundary, top ? f.dom : f.cod);
  if (pos < 0)
    throw Error(top ? "NotTopCell" : "NotBottomCell",
                "face '" + f.name + "' is not a " +
                    (top ? std::string("top") : std::string("bottom")) +
                    " cell");
  std::vector<int> replaced(boundary.begin(), boundary.begin() + pos);
  const std::vector<int>& mid = top ? f.cod : f.dom;
  replaced.insert(replaced.end(), mid.begin(), mid.end());
  size_t skip = (top ? f.dom : f.cod).size();
  replaced.insert(replaced.end(), boundary.begin() + pos + skip,
                  boundary.end());
  Path moved = make_path(ps, ps.source, replaced);
  PastingScheme sub = top ? sub_scheme_pq(ps, moved, ps.cod)
                          : sub_scheme_pq(ps, ps.dom, moved);
  if (sub.n_interior_faces() != ps.n_interior_faces() - 1)
    throw Error("NotTopCell", "cell deletion lost more than one face");
  return sub;
}

}  // namespace

std::vector<int> top_cells(const PastingScheme& ps) {
  return boundary_cells(ps, true);
}
std::vector<int> bottom_cells(const PastingScheme& ps) {
  return boundary_cells(ps, false);
}
PastingScheme delete_top_cell(const PastingScheme& ps, int face) {
  return delete_cell(ps, face, true);
}
PastingScheme delete_bottom_cell(const PastingScheme& ps, int face) {
  return delete_cell(ps, face, false);
}

// --- presentations ----------------------------------------------------------------

namespace {

PresentationEntry record_cell(const PastingScheme& original,
                              const PastingScheme& cur, int face) {
  const Face& f = cur.faces[face];
  int pos = find_run(cur.dom.edges, f.dom);
  std::vector<int> pre(cur.dom.edges.begin(), cur.dom.edges.begin() + pos);
  std::vector<int> suf(cur.dom.edges.begin() + pos + f.dom.size(),
                       cur.dom.edges.end());
  Path prefix = make_path(cur, cur.source, pre);
  Path suffix = make_path(cur, f.tgt, suf);
  return PresentationEntry{f.name, translate_path(cur, original, prefix),
                           translate_path(cur, original, suffix)};
}

void enumerate_rec(const PastingScheme& original, const PastingScheme& cur,
                   Presentation& partial, std::vector<Presentation>& out,
                   size_t cap) {
  if (out.size() >= cap) return;
  std::vector<int> cells = top_cells(cur);
  if (cur.n_interior_faces() == 0) {
    out.push_back(partial);
    return;
  }
  for (int fi : cells) {
    partial.push_back(record_cell(original, cur, fi));
    enumerate_rec(original, delete_top_cell(cur, fi), partial, out, cap);
    partial.pop_back();
    if (out.size() >= cap) return;
  }
}

}  // namespace

Presentation presentation(const PastingScheme& ps) {
  Presentation out;
  PastingScheme cur = ps;
  while (cur.n_interior_faces() > 0) {
    std::vector<int> cells = top_cells(cur);
    if (cells.empty())
      throw Error("NotTopCell", "no top cell available");  // cannot happen
    out.push_back(record_cell(ps, cur, cells.front()));
    cur = delete_top_cell(cur, cells.front());
  }
  return out;
}

std::vector<Presentation> enumerate_presentations(const PastingScheme& ps,
                                                  size_t cap) {
  std::vector<Presentation> out;
  Presentation partial;
  enumerate_rec(ps, ps, partial, out, cap);
  return out;
}

// --- the direct order on faces ------------------------------------------------------

FaceDag directly_above_order(const PastingScheme& ps) {
  FaceDag dag;
  for (int fi : ps.interior) dag.faces.push_back(ps.faces[fi].name);
  int n = ps.n_interior_faces();
  for (int i = 0; i < n; ++i) {
    std::set<int> lower(ps.faces[ps.interior[i]].cod.begin(),
                        ps.faces[ps.interior[i]].cod.end());
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int e : ps.faces[ps.interior[j]].dom)
        if (lower.count(e)) {
          dag.edges.push_back({i, j});
          break;
        }
    }
  }
  // Kahn check: the closure must be antisymmetric
  std::vector<int> deg(n, 0);
  for (auto& [a, b] : dag.edges) ++deg[b];
  std::deque<int> q;
  for (int i = 0; i < n; ++i)
    if (deg[i] == 0) q.push_back(i);
  int seen = 0;
  while (!q.empty()) {
    int i = q.front();
    q.pop_front();
    ++seen;
    for (auto& [a, b] : dag.edges)
      if (a == i && --deg[b] == 0) q.push_back(b);
  }
  if (seen != n)
    throw Error("CycleFound", "'directly above' closure is not a partial order");
  return dag;
}

// --- surgeries ------------------------------------------------------------------------

namespace {

std::string fresh_name(const std::map<std::string, int>& lookup,
                       std::string base) {
  while (lookup.count(base)) base += "x";
  return base;
}

}  // namespace

PastingScheme attach_bottom(const PastingScheme& ps, int x, int y, int cod_len,
                            const std::string& tag) {
  if (cod_len < 1)
    throw Error("NotBottomAttachable", "new target path needs at least one edge");
  auto [top, bottom] = extremal_paths(ps, x, y);  // NotReachable when x !<= y
  if (bottom.is_empty())
    throw Error("NotBottomAttachable", "cannot attach a cell along an identity");
  int pos = find_run(ps.cod.edges, bottom.edges);
  if (pos < 0)
    throw Error("NotBottomAttachable",
                "the bottommost path from '" + ps.object_name(x) + "' to '" +
                    ps.object_name(y) + "' does not run along cod_P");

  PlaneGraph g = ps.graph;
  std::vector<int> new_vs, new_es;
  for (int i = 1; i < cod_len; ++i) {
    std::string name = fresh_name(g.object_lookup, tag + "v" + std::to_string(i));
    g.object_lookup[name] = g.n_objects();
    new_vs.push_back(g.n_objects());
    g.objects.push_back(name);
    g.rotation.push_back({});
  }
  for (int i = 0; i < cod_len; ++i) {
    std::string id = fresh_name(g.edge_lookup, tag + "e" + std::to_string(i));
    int src = i == 0 ? x : new_vs[i - 1];
    int tgt = i == cod_len - 1 ? y : new_vs[i];
    g.edge_lookup[id] = g.n_edges();
    new_es.push_back(g.n_edges());
    g.edges.push_back(EdgeRec{id, src, tgt});
  }
  // middle vertices: one edge in, one edge out
  for (int i = 0; i + 1 < cod_len; ++i) {
    g.rotation[new_vs[i]].push_back(Dart{new_es[i], false});
    g.rotation[new_vs[i]].push_back(Dart{new_es[i + 1], true});
  }
  // at x: the corner under cod_P opens clockwise after the outgoing dart of
  // the old bottom path; the new edge drops into it
  {
    auto& rot = g.rotation[x];
    Dart after{bottom.edges.front(), true};
    auto it = std::find(rot.begin(), rot.end(), after);
    rot.insert(it + 1, Dart{new_es.front(), true});
  }
  // at y: symmetric, immediately before the incoming dart of the old path
  {
    auto& rot = g.rotation[y];
    Dart before{bottom.edges.back(), false};
    auto it = std::find(rot.begin(), rot.end(), before);
    rot.insert(it, Dart{new_es.back(), false});
  }
  g.exterior_edge = new_es.front();
  g.exterior_left = false;  // exterior now sits below the new chain
  g.rebuild_lookups();
  return validate_pasting_scheme(g);
}

PastingScheme subdivide_edge(const PastingScheme& ps, int e, int pieces) {
  if (e < 0 || e >= ps.n_edges())
    throw Error("NotAnEdge", "edge index out of range");
  if (pieces < 1) throw Error("NotAnEdge", "need at least one piece");
  if (pieces == 1) return ps;

  PlaneGraph g = ps.graph;
  const std::string base = ps.edge_id(e);
  int x = g.edges[e].src, y = g.edges[e].tgt;
  std::vector<int> new_vs, chain;
  for (int i = 1; i < pieces; ++i) {
    std::string name = fresh_name(g.object_lookup, base + "_v" + std::to_string(i));
    g.object_lookup[name] = g.n_objects();
    new_vs.push_back(g.n_objects());
    g.objects.push_back(name);
    g.rotation.push_back({});
  }
  for (int i = 0; i < pieces; ++i) {
    std::string id = fresh_name(g.edge_lookup, base + "_p" + std::to_string(i + 1));
    int src = i == 0 ? x : new_vs[i - 1];
    int tgt = i == pieces - 1 ? y : new_vs[i];
    g.edge_lookup[id] = g.n_edges();
    chain.push_back(g.n_edges());
    g.edges.push_back(EdgeRec{id, src, tgt});
  }
  for (int i = 0; i + 1 < pieces; ++i) {
    g.rotation[new_vs[i]].push_back(Dart{chain[i], false});
    g.rotation[new_vs[i]].push_back(Dart{chain[i + 1], true});
  }
  *std::find(g.rotation[x].begin(), g.rotation[x].end(), Dart{e, true}) =
      Dart{chain.front(), true};
  *std::find(g.rotation[y].begin(), g.rotation[y].end(), Dart{e, false}) =
      Dart{chain.back(), false};
  if (g.exterior_edge == e) g.exterior_edge = chain.front();

  // drop the subdivided edge, remapping indices
  PlaneGraph g2;
  g2.coords = g.coords;
  g2.objects = g.objects;
  std::vector<int> emap(g.n_edges(), -1);
  for (int i = 0; i < g.n_edges(); ++i)
    if (i != e) {
      emap[i] = g2.n_edges();
      g2.edges.push_back(g.edges[i]);
    }
  g2.rotation.assign(g2.objects.size(), {});
  for (size_t v = 0; v < g.rotation.size(); ++v)
    for (const Dart& d : g.rotation[v])
      if (emap[d.edge] >= 0)
        g2.rotation[v].push_back(Dart{emap[d.edge], d.out});
  g2.exterior_edge = emap[g.exterior_edge];
  g2.exterior_left = g.exterior_left;
  g2.rebuild_lookups();
  return validate_pasting_scheme(g2);
}

}  // namespace pastelab
