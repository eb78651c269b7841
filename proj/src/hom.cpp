#include "pastelab/hom.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace pastelab {

int HomPoset::index_of(const Path& p) const {
  for (int i = 0; i < size(); ++i)
    if (elements[i] == p) return i;
  return -1;
}

int HomPoset::top() const {
  for (int i = 0; i < size(); ++i) {
    bool least = true;
    for (int j = 0; j < size() && least; ++j) least = leq[i][j];
    if (least) return i;
  }
  return -1;
}

int HomPoset::bottom() const {
  for (int i = 0; i < size(); ++i) {
    bool greatest = true;
    for (int j = 0; j < size() && greatest; ++j) greatest = leq[j][i];
    if (greatest) return i;
  }
  return -1;
}

std::vector<Path> enumerate_paths(const PastingScheme& ps, int x, int y) {
  if (x < 0 || x >= ps.n_objects() || y < 0 || y >= ps.n_objects())
    throw Error("UnknownVertex", "path endpoints out of range");
  std::vector<Path> out;
  if (!reachable(ps, x, y)) return out;
  std::vector<int> stack;
  auto dfs = [&](auto&& self, int at) -> void {
    if (at == y) {
      out.push_back(make_path(ps, x, stack));
      return;
    }
    const auto& ord = ps.out_order[at];
    for (auto it = ord.rbegin(); it != ord.rend(); ++it) {  // upper edge first
      if (!ps.reach[ps.graph.edges[*it].tgt][y]) continue;
      stack.push_back(*it);
      self(self, ps.graph.edges[*it].tgt);
      stack.pop_back();
    }
  };
  dfs(dfs, x);
  return out;
}

HomPoset hom_poset(const PastingScheme& ps, int x, int y) {
  HomPoset h;
  h.x = x;
  h.y = y;
  h.elements = enumerate_paths(ps, x, y);
  int n = h.size();
  h.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      h.leq[i][j] = lies_above(ps, h.elements[i], h.elements[j]);
  for (int i = 0; i < n; ++i) {
    if (!h.leq[i][i]) throw Error("StructureError", "lies-above not reflexive");
    for (int j = 0; j < n; ++j) {
      if (i != j && h.leq[i][j] && h.leq[j][i])
        throw Error("StructureError", "lies-above not antisymmetric");
      for (int k = 0; k < n; ++k)
        if (h.leq[i][j] && h.leq[j][k] && !h.leq[i][k])
          throw Error("StructureError", "lies-above not transitive");
    }
  }
  if (n > 0) {
    auto [top, bottom] = extremal_paths(ps, x, y);
    if (!(h.elements[h.top()] == top) || !(h.elements[h.bottom()] == bottom))
      throw Error("StructureError", "extremal paths are not the poset extremes");
  }
  return h;
}

// --- the constrained cube -------------------------------------------------------

namespace {

// nodes of the dual region graph: interior faces by position, then the
// virtual region below cod_P, then the virtual region above dom_P
struct RegionGraph {
  const PastingScheme& ps;
  std::vector<int> pos;  // global face index -> interior position
  int nbot, ntop;

  explicit RegionGraph(const PastingScheme& s)
      : ps(s), pos(s.faces.size(), -1) {
    for (int i = 0; i < s.n_interior_faces(); ++i) pos[s.interior[i]] = i;
    nbot = s.n_interior_faces();
    ntop = nbot + 1;
  }
  int above(int e) const {
    int f = ps.left_face[e];
    return f == ps.exterior_face ? ntop : pos[f];
  }
  int below(int e) const {
    int f = ps.right_face[e];
    return f == ps.exterior_face ? nbot : pos[f];
  }
  // component flags reachable from `from`, crossing only edges off the path
  std::vector<char> flood(const std::set<int>& path_edges, int from) const {
    std::vector<std::vector<int>> adj(ntop + 1);
    for (int e = 0; e < ps.n_edges(); ++e) {
      if (path_edges.count(e)) continue;
      adj[above(e)].push_back(below(e));
      adj[below(e)].push_back(above(e));
    }
    std::vector<char> seen(ntop + 1, 0);
    std::deque<int> bfs{from};
    seen[from] = 1;
    while (!bfs.empty()) {
      int at = bfs.front();
      bfs.pop_front();
      for (int to : adj[at])
        if (!seen[to]) {
          seen[to] = 1;
          bfs.push_back(to);
        }
    }
    return seen;
  }
};

}  // namespace

CubeStructure cube_structure(const PastingScheme& ps) {
  FaceDag dag = directly_above_order(ps);
  return CubeStructure{dag.faces, dag.edges};
}

bool in_pge(const PastingScheme& ps, const CubePoint& f) {
  if (static_cast<int>(f.size()) != ps.n_interior_faces()) return false;
  for (auto v : f)
    if (v > 1) return false;
  for (auto& [i, j] : directly_above_order(ps).edges)
    if (f[i] < f[j]) return false;
  return true;
}

std::vector<CubePoint> enumerate_cube_points(const PastingScheme& ps) {
  int n = ps.n_interior_faces();
  if (n > 22)
    throw Error("StructureError", "too many faces to enumerate the cube");
  std::vector<CubePoint> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    CubePoint f(n);
    for (int i = 0; i < n; ++i) f[i] = (mask >> i) & 1;
    if (in_pge(ps, f)) out.push_back(std::move(f));
  }
  return out;
}

CubePoint coordinatize(const PastingScheme& ps, const Path& p) {
  if (p.start != ps.source || p.end != ps.sink)
    throw Error("NotFullPath", "coordinates are defined for paths s_P -> t_P");
  RegionGraph rg(ps);
  std::set<int> onp(p.edges.begin(), p.edges.end());
  std::vector<char> upper = rg.flood(onp, rg.ntop);
  std::vector<char> lower = rg.flood(onp, rg.nbot);
  if (upper[rg.nbot])
    throw Error("NotFullPath", "path does not separate the regions");
  CubePoint f(ps.n_interior_faces());
  for (int i = 0; i < ps.n_interior_faces(); ++i) {
    if (upper[i] == lower[i])
      throw Error("NotFullPath", "face is not on exactly one side of the path");
    f[i] = upper[i];
  }
  if (!in_pge(ps, f))
    throw Error("NotFullPath", "coordinates violate the cube constraints");
  return f;
}

std::vector<int> gold_edges(const PastingScheme& ps, const CubePoint& f) {
  if (!in_pge(ps, f))
    throw Error("NotInPge", "point violates a directly-above constraint");
  RegionGraph rg(ps);
  auto val = [&](int node) -> int {
    if (node == rg.ntop) return 1;
    if (node == rg.nbot) return 0;
    return f[node];
  };
  std::vector<int> gold;
  for (int e = 0; e < ps.n_edges(); ++e) {
    int lf = val(rg.above(e)), rf = val(rg.below(e));
    if (lf < rf)
      throw Error("NotInPge", "side values inverted across an edge");
    if (lf > rf) gold.push_back(e);
  }
  return gold;
}

Path pathify(const PastingScheme& ps, const CubePoint& f) {
  std::vector<int> gold = gold_edges(ps, f);
  std::set<int> goldset(gold.begin(), gold.end());
  std::vector<int> walk;
  int at = ps.source;
  while (at != ps.sink) {
    int next = -1;
    for (int e : ps.out_order[at])
      if (goldset.count(e)) {
        if (next >= 0)
          throw Error("NotInPge", "two gold edges leave one vertex");
        next = e;
      }
    if (next < 0) throw Error("NotInPge", "gold edges do not reach the sink");
    walk.push_back(next);
    at = ps.graph.edges[next].tgt;
  }
  if (walk.size() != gold.size())
    throw Error("NotInPge", "gold edges do not form a single path");
  return make_path(ps, ps.source, walk);
}

// --- lattice operations ------------------------------------------------------------

namespace {

Path lattice_op(const PastingScheme& ps, const Path& p, const Path& q,
                bool take_min) {
  if (p.start != q.start || p.end != q.end)
    throw Error("NotParallel", "meet and join need parallel paths");
  if (p == q) return p;
  PastingScheme sub = sub_scheme_between(ps, p.start, p.end);
  CubePoint fp = coordinatize(sub, translate_path(ps, sub, p));
  CubePoint fq = coordinatize(sub, translate_path(ps, sub, q));
  CubePoint r(fp.size());
  for (size_t i = 0; i < fp.size(); ++i)
    r[i] = take_min ? std::min(fp[i], fq[i]) : std::max(fp[i], fq[i]);
  return translate_path(sub, ps, pathify(sub, r));
}

}  // namespace

Path hom_meet(const PastingScheme& ps, const Path& p, const Path& q) {
  return lattice_op(ps, p, q, true);
}
Path hom_join(const PastingScheme& ps, const Path& p, const Path& q) {
  return lattice_op(ps, p, q, false);
}

// --- composition ----------------------------------------------------------------------

bool verify_concat_ff(const PastingScheme& ps, int x, int y, int z,
                      ConcatWitness* witness) {
  HomPoset inner = hom_poset(ps, x, y), outer = hom_poset(ps, y, z);
  HomPoset whole = hom_poset(ps, x, z);
  auto fail = [&](const Path& p1, const Path& p0, const Path& q1,
                  const Path& q0, const std::string& why) {
    if (witness) *witness = ConcatWitness{p1, p0, q1, q0, why};
    return false;
  };
  std::vector<std::pair<int, int>> prod;  // (outer index, inner index)
  std::vector<int> comp;                  // index of the composite in `whole`
  for (int i1 = 0; i1 < outer.size(); ++i1)
    for (int i0 = 0; i0 < inner.size(); ++i0) {
      int idx = whole.index_of(
          concat(ps, inner.elements[i0], outer.elements[i1]));
      if (idx < 0)
        return fail(outer.elements[i1], inner.elements[i0],
                    outer.elements[i1], inner.elements[i0],
                    "composite path not in hom");
      prod.push_back({i1, i0});
      comp.push_back(idx);
    }
  std::vector<int> image = comp;
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end())
    return fail(Path{}, Path{}, Path{}, Path{}, "concatenation not injective");
  for (size_t a = 0; a < prod.size(); ++a)
    for (size_t b = 0; b < prod.size(); ++b) {
      bool product_le = outer.le(prod[a].first, prod[b].first) &&
                        inner.le(prod[a].second, prod[b].second);
      if (product_le != whole.le(comp[a], comp[b]))
        return fail(outer.elements[prod[a].first],
                    inner.elements[prod[a].second],
                    outer.elements[prod[b].first],
                    inner.elements[prod[b].second],
                    product_le ? "composite lost the relation"
                               : "composite gained a relation");
    }
  return true;
}

namespace {

std::vector<Path> replay_presentation(const PastingScheme& ps,
                                      const Presentation& pres) {
  std::vector<Path> chain{ps.dom};
  for (const PresentationEntry& en : pres) {
    const Face& f = ps.faces[ps.face_by_name(en.face)];
    Path mid = make_path(ps, f.src, f.cod);
    chain.push_back(concat(ps, concat(ps, en.prefix, mid), en.suffix));
  }
  return chain;
}

}  // namespace

std::vector<Path> power_composite(const PastingScheme& ps,
                                  std::size_t uniqueness_cap) {
  std::vector<Path> chain = replay_presentation(ps, presentation(ps));
  if (!(chain.back() == ps.cod))
    throw Error("StructureError", "presentation did not land on cod_P");
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (chain[i] == chain[i + 1] ||
        !lies_above(ps, chain[i], chain[i + 1]))
      throw Error("StructureError", "presentation chain is not descending");
  if (uniqueness_cap > 0) {
    for (const Presentation& alt :
         enumerate_presentations(ps, uniqueness_cap)) {
      std::vector<Path> other = replay_presentation(ps, alt);
      if (other.size() != chain.size() || !(other.back() == ps.cod))
        throw Error("StructureError",
                    "another presentation yields a different composite");
    }
  }
  return chain;
}

}  // namespace pastelab
