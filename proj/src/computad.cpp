#include "pastelab/computad.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace pastelab {

FinPoset hom_as_finposet(const PastingScheme& ps, const HomPoset& h) {
  FinPoset p;
  for (const Path& el : h.elements)
    p.elements.push_back(path_to_string(ps, el));
  p.leq.assign(h.size(), std::vector<bool>(h.size(), false));
  for (int i = 0; i < h.size(); ++i)
    for (int j = 0; j < h.size(); ++j) p.leq[i][j] = h.le(i, j);
  p.check();
  return p;
}

namespace {

ChainComplex truncate(const ChainComplex& cx, int level) {
  ChainComplex out;
  out.ambient = cx.ambient;
  for (const Chain& c : cx.chains)
    if (static_cast<int>(c.size()) <= level + 1) out.chains.insert(c);
  return out;
}

std::vector<Path> chain_paths(const HomNerve& hn, const Chain& c) {
  std::vector<Path> out;
  for (int i : c) out.push_back(hn.poset.elements[i]);
  return out;
}

}  // namespace

TruncSCat nerve_f2cat(const PastingScheme& ps, int level) {
  if (level < 0) throw Error("StructureError", "negative truncation level");
  TruncSCat sc;
  sc.level = level;
  sc.objects = ps.graph.objects;
  int n = ps.n_objects();
  sc.homs.assign(n, std::vector<HomNerve>(n));
  for (int a = 0; a < n; ++a)
    for (int z = 0; z < n; ++z) {
      HomNerve& hn = sc.homs[a][z];
      hn.a = a;
      hn.z = z;
      hn.poset = hom_poset(ps, a, z);
      hn.as_poset = hom_as_finposet(ps, hn.poset);
      hn.chains = truncate(nerve(hn.as_poset), level);
    }
  return sc;
}

TruncSCat graph_scat(const PastingScheme& ps, int level) {
  TruncSCat sc = nerve_f2cat(ps, level);
  for (auto& row : sc.homs)
    for (HomNerve& hn : row) {
      ChainComplex filtered;
      filtered.ambient = hn.chains.ambient;
      for (const Chain& c : hn.chains.chains)
        if (chain_in_graph(ps, chain_paths(hn, c)))
          filtered.chains.insert(c);
      filtered.check();  // membership must be face-closed
      hn.chains = std::move(filtered);
    }
  return sc;
}

std::vector<Path> compose_chains(const PastingScheme& ps,
                                 const std::vector<Path>& first,
                                 const std::vector<Path>& second) {
  if (first.size() != second.size() || first.empty())
    throw Error("NotAnArrow", "chains of different simplicial dimension");
  std::vector<Path> out;
  for (size_t i = 0; i < first.size(); ++i) {
    Path c = concat(ps, first[i], second[i]);
    if (out.empty() || !(out.back() == c)) out.push_back(c);
  }
  return out;
}

// --- atomic arrows ------------------------------------------------------------------

std::vector<std::vector<Path>> atomic_arrows(const PastingScheme& ps, int n) {
  if (n < 0) throw Error("NotAnArrow", "negative dimension");
  std::vector<std::vector<Path>> out;
  if (n == 0) {
    for (int e = 0; e < ps.n_edges(); ++e)
      out.push_back({make_path(ps, ps.graph.edges[e].src, {e})});
    return out;
  }
  for (int x = 0; x < ps.n_objects(); ++x)
    for (int y = 0; y < ps.n_objects(); ++y) {
      if (x == y || !reachable(ps, x, y)) continue;
      HomPoset h = hom_poset(ps, x, y);
      std::vector<int> stack;
      auto endpoint_disjoint = [&](int first, int last) {
        std::vector<char> on(ps.n_objects(), 0);
        for (int v : path_vertices(ps, h.elements[first])) on[v] = 1;
        int shared = 0;
        for (int v : path_vertices(ps, h.elements[last])) shared += on[v];
        return shared == 2;
      };
      auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(stack.size()) == n + 1) {
          if (endpoint_disjoint(stack.front(), stack.back()))
            out.push_back(chain_paths(HomNerve{x, y, h, {}, {}}, stack));
          return;
        }
        for (int next = 0; next < h.size(); ++next) {
          if (!stack.empty() &&
              (next == stack.back() || !h.le(stack.back(), next)))
            continue;
          stack.push_back(next);
          self(self);
          stack.pop_back();
        }
      };
      dfs(dfs);
    }
  return out;
}

std::vector<std::vector<Path>> factor_atomic(const PastingScheme& ps,
                                             const std::vector<Path>& chain) {
  if (chain.empty()) throw Error("NotAnArrow", "empty chain");
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    if (chain[i].start != chain[0].start || chain[i + 1].end != chain[0].end)
      throw Error("NotAnArrow", "chain paths are not parallel");
    if (!lies_above(ps, chain[i], chain[i + 1]))
      throw Error("NotAnArrow", "chain is not weakly descending");
  }
  if (chain.front().is_empty()) return {};  // identity chain on an object

  // positions of every vertex along each path
  size_t m = chain.size();
  std::vector<std::vector<int>> pos(m, std::vector<int>(ps.n_objects(), -1));
  for (size_t i = 0; i < m; ++i) {
    std::vector<int> vs = path_vertices(ps, chain[i]);
    for (size_t k = 0; k < vs.size(); ++k) pos[i][vs[k]] = static_cast<int>(k);
  }
  std::vector<int> stops;  // vertices shared by the extreme paths, in order
  for (int v : path_vertices(ps, chain.front()))
    if (pos[m - 1][v] >= 0) stops.push_back(v);

  std::vector<std::vector<Path>> factors;
  for (size_t s = 0; s + 1 < stops.size(); ++s) {
    std::vector<Path> factor;
    for (size_t i = 0; i < m; ++i) {
      int iu = pos[i][stops[s]], iw = pos[i][stops[s + 1]];
      if (iu < 0 || iw < 0 || iu >= iw)
        throw Error("NotAnArrow",
                    "a chain path misses a shared vertex of the extremes");
      std::vector<int> es(chain[i].edges.begin() + iu,
                          chain[i].edges.begin() + iw);
      factor.push_back(make_path(ps, stops[s], es));
    }
    factors.push_back(std::move(factor));
  }
  return factors;
}

namespace {

// distinct values of a weakly descending factor, in order of appearance
std::vector<Path> factor_core(const std::vector<Path>& factor) {
  std::vector<Path> core;
  for (const Path& p : factor)
    if (core.empty() || !(core.back() == p)) core.push_back(p);
  return core;
}

int face_with_boundary(const PastingScheme& ps, const Path& upper,
                       const Path& lower) {
  for (int fi : ps.interior)
    if (ps.faces[fi].dom == upper.edges && ps.faces[fi].cod == lower.edges)
      return fi;
  return -1;
}

}  // namespace

bool chain_in_graph(const PastingScheme& ps, const std::vector<Path>& chain) {
  if (chain.size() == 1) return true;  // every path is a composite of edges
  for (const std::vector<Path>& factor : factor_atomic(ps, chain)) {
    std::vector<Path> core = factor_core(factor);
    if (core.size() == 1) {
      if (core[0].length() != 1)
        throw Error("NotAnArrow", "constant factor wider than one edge");
      continue;
    }
    if (core.size() != 2 || face_with_boundary(ps, core[0], core[1]) < 0)
      return false;
  }
  return true;
}

bool is_subcomputad(const PastingScheme& ps, int level) {
  TruncSCat g = graph_scat(ps, level);
  TruncSCat nf = nerve_f2cat(ps, level);
  for (int a = 0; a < ps.n_objects(); ++a)
    for (int z = 0; z < ps.n_objects(); ++z) {
      const HomNerve& gh = g.hom(a, z);
      if (!subcomplex_of(gh.chains, nf.hom(a, z).chains)) return false;
      for (const Chain& c : gh.chains.chains) {
        std::vector<Path> paths = chain_paths(gh, c);
        auto factors = factor_atomic(ps, paths);
        // factors recompose to the chain
        if (!factors.empty()) {
          std::vector<Path> acc = factors[0];
          for (size_t i = 1; i < factors.size(); ++i)
            for (size_t j = 0; j < acc.size(); ++j)
              acc[j] = concat(ps, acc[j], factors[i][j]);
          if (acc != paths) return false;
        } else if (!paths[0].is_empty()) {
          return false;
        }
        for (const std::vector<Path>& factor : factors) {
          std::vector<Path> core = factor_core(factor);
          // the core is an atomic cell shape and a graph chain itself
          if (core.size() == 1) {
            if (core[0].length() != 1) return false;
          } else {
            if (core.size() != 2 ||
                face_with_boundary(ps, core[0], core[1]) < 0)
              return false;
          }
          if (!chain_in_graph(ps, core)) return false;
        }
      }
    }
  // the generating cells appear as graph chains
  if (level >= 1)
    for (int fi : ps.interior) {
      const Face& f = ps.faces[fi];
      std::vector<Path> gen = {make_path(ps, f.src, f.dom),
                               make_path(ps, f.src, f.cod)};
      const HomNerve& gh = g.hom(f.src, f.tgt);
      Chain c = {gh.poset.index_of(gen[0]), gh.poset.index_of(gen[1])};
      if (c[0] < 0 || c[1] < 0 || !gh.chains.contains(c)) return false;
    }
  return true;
}

// --- the two pushout squares of a bottom-attached cell -------------------------------

namespace {

struct BottomCellSetup {
  int face = -1;           // face index in ps
  PastingScheme base;      // ps without the cell
  int x = -1, y = -1;      // attachment pair, ps indices
  int xb = -1, yb = -1;    // same, base indices
  Path dom_ps, cod_ps;     // boundary paths of the cell inside ps
  Path dom_base;           // the cell's domain as a path of the base
};

BottomCellSetup split_bottom_cell(const PastingScheme& ps,
                                  const std::string& alpha) {
  int fi = ps.face_by_name(alpha);
  if (fi < 0)
    throw Error("NotBottomAttachable", "no face named '" + alpha + "'");
  std::vector<int> bottoms = bottom_cells(ps);
  if (std::find(bottoms.begin(), bottoms.end(), fi) == bottoms.end())
    throw Error("NotBottomAttachable",
                "face '" + alpha + "' is not a bottom cell");
  BottomCellSetup s;
  s.face = fi;
  s.base = delete_bottom_cell(ps, fi);
  s.x = ps.faces[fi].src;
  s.y = ps.faces[fi].tgt;
  s.xb = s.base.graph.object_index(ps.object_name(s.x));
  s.yb = s.base.graph.object_index(ps.object_name(s.y));
  s.dom_ps = make_path(ps, s.x, ps.faces[fi].dom);
  s.cod_ps = make_path(ps, s.x, ps.faces[fi].cod);
  s.dom_base = translate_path(ps, s.base, s.dom_ps);
  auto [top, bottom] = extremal_paths(s.base, s.xb, s.yb);
  if (!(s.dom_base == bottom))
    throw Error("NotBottomAttachable",
                "cell domain is not the lowest path of the base");
  return s;
}

int base_vertex(const PastingScheme& ps, const PastingScheme& base, int v) {
  int b = base.graph.object_index(ps.object_name(v));
  if (b < 0)
    throw Error("UnknownVertex",
                "'" + ps.object_name(v) + "' is not an object of the base");
  return b;
}

// order-preserving bijection check between a pushout poset and a hom-poset,
// given the element mapping into the hom-poset
bool matches_hom(const FinPoset& d, const std::vector<int>& to,
                 const HomPoset& h) {
  if (d.size() != h.size()) return false;
  std::set<int> hit;
  for (int t : to)
    if (t < 0 || !hit.insert(t).second) return false;
  for (int i = 0; i < d.size(); ++i)
    for (int j = 0; j < d.size(); ++j)
      if (d.le(i, j) != h.le(to[i], to[j])) return false;
  return true;
}

}  // namespace

bool verify_hom_pushouts(const PastingScheme& ps, const std::string& alpha,
                         int a, int z) {
  BottomCellSetup s = split_bottom_cell(ps, alpha);
  PosetInclusion two_at0 = make_inclusion(chain_poset(2), {0});

  // square 1: glue the walking arrow onto the cell's domain at (x,y)
  {
    HomPoset homb = hom_poset(s.base, s.xb, s.yb);
    FinPoset cfin = hom_as_finposet(s.base, homb);
    int at = homb.index_of(s.dom_base);
    if (at < 0) throw Error("NotBottomAttachable", "domain path not in hom");
    PosetPushout po = pushout_along_dwyer(PosetMap{{at}}, cfin, two_at0);
    HomPoset homps = hom_poset(ps, s.x, s.y);
    std::vector<int> to(po.result.size(), -1);
    for (int i = 0; i < cfin.size(); ++i)
      to[po.from_c[i]] =
          homps.index_of(translate_path(s.base, ps, homb.elements[i]));
    to[po.from_b[1]] = homps.index_of(s.cod_ps);
    if (!matches_hom(po.result, to, homps)) return false;
  }

  // square 2: the composition square at (a,z)
  {
    int ab = base_vertex(ps, s.base, a), zb = base_vertex(ps, s.base, z);
    HomPoset gz = hom_poset(s.base, s.yb, zb);   // paths y -> z
    HomPoset fx = hom_poset(s.base, ab, s.xb);   // paths a -> x
    HomPoset cz = hom_poset(s.base, ab, zb);
    FinPoset gzf = hom_as_finposet(s.base, gz);
    FinPoset fxf = hom_as_finposet(s.base, fx);
    FinPoset cfin = hom_as_finposet(s.base, cz);
    FinPoset b =
        poset_product_raw(poset_product_raw(gzf, chain_poset(2)), fxf);
    int nf = fx.size();
    std::vector<int> a_elems, fmap;
    for (int gi = 0; gi < gz.size(); ++gi)
      for (int fi = 0; fi < nf; ++fi) {
        a_elems.push_back((gi * 2 + 0) * nf + fi);
        Path comp = concat(
            s.base, concat(s.base, fx.elements[fi], s.dom_base),
            gz.elements[gi]);
        fmap.push_back(cz.index_of(comp));
        if (fmap.back() < 0)
          throw Error("NotBottomAttachable", "composite path not in hom");
      }
    PosetInclusion a_in_b = make_inclusion(b, a_elems);
    if (!dwyer_witness(a_in_b))
      throw Error("NotDwyer", "cylinder end is not a Dwyer inclusion");
    PosetPushout po = pushout_along_dwyer(PosetMap{fmap}, cfin, a_in_b);
    HomPoset homps = hom_poset(ps, a, z);
    std::vector<int> to(po.result.size(), -1);
    for (int i = 0; i < cfin.size(); ++i)
      to[po.from_c[i]] =
          homps.index_of(translate_path(s.base, ps, cz.elements[i]));
    for (int gi = 0; gi < gz.size(); ++gi)
      for (int fi = 0; fi < nf; ++fi) {
        Path comp = concat(
            ps,
            concat(ps, translate_path(s.base, ps, fx.elements[fi]), s.cod_ps),
            translate_path(s.base, ps, gz.elements[gi]));
        to[po.from_b[(gi * 2 + 1) * nf + fi]] = homps.index_of(comp);
      }
    if (!matches_hom(po.result, to, homps)) return false;
  }
  return true;
}

ChainComplex build_glued_inclusion(const PastingScheme& ps,
                                    const std::string& alpha, int a, int z) {
  BottomCellSetup s = split_bottom_cell(ps, alpha);
  int ab = base_vertex(ps, s.base, a), zb = base_vertex(ps, s.base, z);
  HomPoset homps = hom_poset(ps, a, z);
  FinPoset ambient = hom_as_finposet(ps, homps);

  HomPoset cz = hom_poset(s.base, ab, zb);
  std::vector<int> cmap;
  for (const Path& p : cz.elements)
    cmap.push_back(homps.index_of(translate_path(s.base, ps, p)));
  ChainComplex image_c = complex_image(
      nerve(hom_as_finposet(s.base, cz)), PosetMap{cmap}, ambient);

  HomPoset gz = hom_poset(s.base, s.yb, zb);
  HomPoset fx = hom_poset(s.base, ab, s.xb);
  FinPoset b = poset_product_raw(
      poset_product_raw(hom_as_finposet(s.base, gz), chain_poset(2)),
      hom_as_finposet(s.base, fx));
  int nf = fx.size();
  std::vector<int> bmap(b.size(), -1), amap;
  for (int gi = 0; gi < gz.size(); ++gi)
    for (int m = 0; m < 2; ++m)
      for (int fi = 0; fi < nf; ++fi) {
        Path mid = m ? s.cod_ps : s.dom_ps;
        Path comp = concat(
            ps,
            concat(ps, translate_path(s.base, ps, fx.elements[fi]), mid),
            translate_path(s.base, ps, gz.elements[gi]));
        int idx = homps.index_of(comp);
        if (idx < 0)
          throw Error("NotBottomAttachable", "cylinder path not in hom");
        bmap[(gi * 2 + m) * nf + fi] = idx;
        if (m == 0) amap.push_back(idx);
      }
  ChainComplex image_b =
      b.size() ? complex_image(nerve(b), PosetMap{bmap}, ambient)
               : ChainComplex{ambient, {}};

  // the pieces overlap exactly in the cylinder's zero end
  ChainComplex overlap = complex_intersection(image_c, image_b);
  ChainComplex glue{ambient, {}};
  if (!amap.empty()) {
    FinPoset a_end = poset_product_raw(hom_as_finposet(s.base, gz),
                                       hom_as_finposet(s.base, fx));
    glue = complex_image(nerve(a_end), PosetMap{amap}, ambient);
  }
  if (overlap.chains != glue.chains)
    throw Error("StructureError", "cylinder glue is not the zero end");
  return complex_union(image_c, image_b);
}

// --- edge subdivision ----------------------------------------------------------------

namespace {

// bijection data between paths of the subdivided scheme and the original
struct Subdivision {
  const PastingScheme& fine;    // subdivided
  const PastingScheme& coarse;  // original
  int e;                        // subdivided edge, coarse index
  std::vector<int> chain;      // replacement edges, fine indices, in order

  Path to_coarse(const Path& p) const {
    std::vector<int> es;
    size_t run = 0;
    for (int fe : p.edges) {
      if (run < chain.size() && fe == chain[run]) {
        ++run;
        if (run == chain.size()) {
          es.push_back(e);
          run = 0;
        }
        continue;
      }
      if (run != 0) throw Error("NotAnEdge", "partial subdivision run");
      es.push_back(coarse.graph.edge_index(fine.edge_id(fe)));
    }
    if (run != 0) throw Error("NotAnEdge", "partial subdivision run");
    int start = coarse.graph.object_index(fine.object_name(p.start));
    return make_path(coarse, start, es);
  }
  Path to_fine(const Path& p) const {
    std::vector<int> es;
    for (int ce : p.edges) {
      if (ce == e)
        es.insert(es.end(), chain.begin(), chain.end());
      else
        es.push_back(fine.graph.edge_index(coarse.edge_id(ce)));
    }
    int start = fine.graph.object_index(coarse.object_name(p.start));
    return make_path(fine, start, es);
  }
};

bool hom_isomorphic_by(const HomPoset& h1, const HomPoset& h2,
                       const std::function<Path(const Path&)>& fwd) {
  if (h1.size() != h2.size()) return false;
  std::vector<int> to(h1.size(), -1);
  std::set<int> hit;
  for (int i = 0; i < h1.size(); ++i) {
    to[i] = h2.index_of(fwd(h1.elements[i]));
    if (to[i] < 0 || !hit.insert(to[i]).second) return false;
  }
  for (int i = 0; i < h1.size(); ++i)
    for (int j = 0; j < h1.size(); ++j)
      if (h1.le(i, j) != h2.le(to[i], to[j])) return false;
  return true;
}

}  // namespace

bool verify_edge_subdivision(const PastingScheme& ps, int e, int pieces,
                             int level) {
  PastingScheme fine = subdivide_edge(ps, e, pieces);
  if (pieces == 1)
    return serialize_scheme(fine.graph) == serialize_scheme(ps.graph);

  Subdivision sd{fine, ps, e, {}};
  const std::string base = ps.edge_id(e);
  for (int i = 1; i <= pieces; ++i) {
    int fe = fine.graph.edge_index(base + "_p" + std::to_string(i));
    if (fe < 0) throw Error("NotAnEdge", "missing subdivision edge");
    sd.chain.push_back(fe);
  }
  std::vector<int> mids;  // interior vertices of the replacement chain
  for (size_t i = 0; i + 1 < sd.chain.size(); ++i)
    mids.push_back(fine.graph.edges[sd.chain[i]].tgt);
  int xf = fine.graph.edges[sd.chain.front()].src;
  int yf = fine.graph.edges[sd.chain.back()].tgt;

  // old-object homs match under substitution
  for (int a = 0; a < ps.n_objects(); ++a)
    for (int z = 0; z < ps.n_objects(); ++z) {
      int af = fine.graph.object_index(ps.object_name(a));
      int zf = fine.graph.object_index(ps.object_name(z));
      if (!hom_isomorphic_by(hom_poset(fine, af, zf), hom_poset(ps, a, z),
                             [&](const Path& p) { return sd.to_coarse(p); }))
        return false;
    }
  // homs into a fresh vertex whisker down to homs into the edge's source
  for (size_t i = 0; i < mids.size(); ++i) {
    std::vector<int> prefix(sd.chain.begin(), sd.chain.begin() + i + 1);
    for (int a = 0; a < ps.n_objects(); ++a) {
      int af = fine.graph.object_index(ps.object_name(a));
      HomPoset into_mid = hom_poset(fine, af, mids[i]);
      HomPoset into_x = hom_poset(fine, af, xf);
      if (!hom_isomorphic_by(into_x, into_mid, [&](const Path& p) {
            return concat(fine, p, make_path(fine, xf, prefix));
          }))
        return false;
      if (into_mid.size() != into_x.size()) return false;
    }
    std::vector<int> suffix(sd.chain.begin() + i + 1, sd.chain.end());
    for (int z = 0; z < ps.n_objects(); ++z) {
      int zf = fine.graph.object_index(ps.object_name(z));
      HomPoset from_mid = hom_poset(fine, mids[i], zf);
      HomPoset from_y = hom_poset(fine, yf, zf);
      if (!hom_isomorphic_by(from_y, from_mid, [&](const Path& p) {
            return concat(fine, make_path(fine, mids[i], suffix), p);
          }))
        return false;
    }
    for (size_t j = 0; j < mids.size(); ++j) {
      size_t want = i < j ? 1 : 0;
      if (i == j) continue;
      if (enumerate_paths(fine, mids[i], mids[j]).size() != want) return false;
    }
  }
  // graph and nerve homs correspond levelwise under substitution
  TruncSCat gf = graph_scat(fine, level), gc = graph_scat(ps, level);
  TruncSCat nff = nerve_f2cat(fine, level), nfc = nerve_f2cat(ps, level);
  for (int a = 0; a < ps.n_objects(); ++a)
    for (int z = 0; z < ps.n_objects(); ++z) {
      int af = fine.graph.object_index(ps.object_name(a));
      int zf = fine.graph.object_index(ps.object_name(z));
      auto transported = [&](const TruncSCat& from, const TruncSCat& to) {
        const HomNerve& src = from.hom(af, zf);
        const HomNerve& dst = to.hom(a, z);
        std::set<Chain> got;
        for (const Chain& c : src.chains.chains) {
          Chain img;
          for (int i : c) {
            int idx = dst.poset.index_of(sd.to_coarse(src.poset.elements[i]));
            if (idx < 0) return false;
            img.push_back(idx);
          }
          got.insert(img);
        }
        return got == dst.chains.chains;
      };
      if (!transported(gf, gc) || !transported(nff, nfc)) return false;
    }
  return true;
}

// --- homwise uniqueness certification ---------------------------------------

HomwiseReport verify_uniqueness_homwise(const PastingScheme& ps, int level,
                                          std::size_t budget, int threads) {
  HomwiseReport report;
  report.subcomputad = is_subcomputad(ps, level);
  TruncSCat g = graph_scat(ps, level);
  TruncSCat nf = nerve_f2cat(ps, level);
  int n = ps.n_objects();
  report.pairs.resize(static_cast<size_t>(n) * n);

  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      int k = next.fetch_add(1);
      if (k >= n * n) return;
      int a = k / n, z = k % n;
      PairReport& pr = report.pairs[k];
      pr.a = a;
      pr.z = z;
      const HomNerve& gh = g.hom(a, z);
      const HomNerve& nh = nf.hom(a, z);
      pr.g_chains = gh.chains.size();
      pr.nf_chains = nh.chains.size();
      if (nh.chains.chains != nerve(nh.as_poset).chains) continue;  // truncated
      CertifyResult cr = certify_inner_anodyne(gh.chains, budget);
      pr.states = cr.states;
      if (cr.status != CertifyStatus::Certified) continue;
      pr.certified = true;
      pr.certificate_length = cr.cert.size();
      pr.verified = verify_certificate(gh.chains, cr.cert);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  report.all_certified = report.subcomputad;
  for (const PairReport& pr : report.pairs)
    report.all_certified = report.all_certified && pr.certified && pr.verified;
  return report;
}

}  // namespace pastelab
