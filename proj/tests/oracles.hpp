#pragma once

// Brute-force reference implementations the test suites compare against.
// Each one recomputes its answer from first principles and shares no logic
// with the library code it checks.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pastelab/computad.hpp"
#include "pastelab/corpus.hpp"
#include "pastelab/onecat.hpp"

namespace oracles {

using namespace pastelab;

// --- path enumeration: plain DFS over edges sorted by id -------------------

inline void oracle_paths_rec(const PastingScheme& ps, int at, int tgt,
                             std::vector<std::string>& word,
                             std::set<std::vector<std::string>>& out) {
  if (at == tgt) out.insert(word);
  std::vector<std::pair<std::string, int>> next;
  for (int e = 0; e < ps.n_edges(); ++e)
    if (ps.graph.edges[e].src == at) next.push_back({ps.edge_id(e), e});
  std::sort(next.begin(), next.end());
  for (auto& [id, e] : next) {
    word.push_back(id);
    oracle_paths_rec(ps, ps.graph.edges[e].tgt, tgt, word, out);
    word.pop_back();
  }
}

inline std::set<std::vector<std::string>> oracle_paths(const PastingScheme& ps,
                                                       int x, int y) {
  std::set<std::vector<std::string>> out;
  std::vector<std::string> word;
  oracle_paths_rec(ps, x, y, word, out);
  return out;
}

// --- lattice operations: scan for the unique extremal bound ----------------

inline int oracle_glb(const HomPoset& h, int i, int j) {
  std::vector<int> lower;
  for (int k = 0; k < h.size(); ++k)
    if (h.le(k, i) && h.le(k, j)) lower.push_back(k);
  for (int k : lower) {
    bool greatest = true;
    for (int l : lower) greatest = greatest && h.le(l, k);
    if (greatest) return k;
  }
  return -1;
}

inline int oracle_lub(const HomPoset& h, int i, int j) {
  std::vector<int> upper;
  for (int k = 0; k < h.size(); ++k)
    if (h.le(i, k) && h.le(j, k)) upper.push_back(k);
  for (int k : upper) {
    bool least = true;
    for (int l : upper) least = least && h.le(k, l);
    if (least) return k;
  }
  return -1;
}

// --- pushout universal property, checked against a fixed poset family ------

inline bool monotone(const FinPoset& src, const FinPoset& dst,
                     const std::vector<int>& m) {
  for (int i = 0; i < src.size(); ++i)
    for (int j = 0; j < src.size(); ++j)
      if (src.le(i, j) && !dst.le(m[i], m[j])) return false;
  return true;
}

inline std::vector<std::vector<int>> all_monotone(const FinPoset& src,
                                                  const FinPoset& dst) {
  std::vector<std::vector<int>> out;
  std::vector<int> m(src.size(), 0);
  for (;;) {
    if (monotone(src, dst, m)) out.push_back(m);
    int k = 0;
    while (k < src.size() && ++m[k] == dst.size()) m[k++] = 0;
    if (k == src.size()) break;
  }
  if (src.size() == 0) out.assign(1, {});
  return out;
}

// the test-poset family every cocone is checked against
inline std::vector<FinPoset> cocone_targets() {
  std::vector<FinPoset> qs;
  qs.push_back(chain_poset(1));
  qs.push_back(chain_poset(2));
  qs.push_back(chain_poset(3));
  qs.push_back(antichain_poset(2));
  // V: one bottom under two incomparable tops
  qs.push_back(make_poset({"b", "l", "r"}, {{0, 1}, {0, 2}}));
  // 2x2 grid
  qs.push_back(poset_product_raw(chain_poset(2), chain_poset(2)));
  return qs;
}

// every compatible cocone (u: C -> Q, v: B -> Q) must extend to exactly one
// monotone map out of the pushout
inline bool oracle_pushout_universal(const FinPoset& c, const FinPoset& b,
                                     const PosetInclusion& a_in_b,
                                     const PosetMap& f,
                                     const PosetPushout& po) {
  for (const FinPoset& q : cocone_targets()) {
    auto us = all_monotone(c, q);
    auto vs = all_monotone(b, q);
    auto ws = all_monotone(po.result, q);
    for (const auto& u : us)
      for (const auto& v : vs) {
        bool compatible = true;
        for (size_t ai = 0; ai < a_in_b.inj.size() && compatible; ++ai)
          compatible = u[f.to[ai]] == v[a_in_b.inj[ai]];
        if (!compatible) continue;
        int extensions = 0;
        for (const auto& w : ws) {
          bool match = true;
          for (int i = 0; i < c.size() && match; ++i)
            match = w[po.from_c[i]] == u[i];
          for (int i = 0; i < b.size() && match; ++i)
            match = w[po.from_b[i]] == v[i];
          extensions += match;
        }
        if (extensions != 1) return false;
      }
  }
  return true;
}

// --- free words modulo the gluing relations ---------------------------------

// Formal arrows a -> b: either an arrow of C, or a word q . t . p with t a
// fresh generator, q in C(c1,b) or the identity (-1), p in C(a,c0) or the
// identity. Classes are connected components under the relation
// q . t_{f(s)} . p ~ q o g(s) o p, closed by construction under whiskering.
struct WordClasses {
  // per (a,b): node 0..|C(a,b)|-1 are the C arrows, the rest are triples
  std::map<std::pair<int, int>, std::vector<int>> klass;  // node -> class id
  std::map<std::pair<int, int>, int> n_classes;
  std::map<std::pair<int, int>, std::vector<std::array<int, 3>>> triples;
};

inline WordClasses oracle_words(const OneWayCat& c, int c0, int c1,
                                const std::vector<int>& f_of_s,
                                const std::vector<int>& g_of_s, int n_t) {
  WordClasses out;
  int n = c.n_objects();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<std::array<int, 3>> triples;  // (qi, ti, pi), -1 = identity
      std::vector<int> ps, qs;
      for (int pi = 0; pi < (int)c.hom[a][c0].size(); ++pi) ps.push_back(pi);
      if (a == c0) ps.push_back(-1);
      for (int qi = 0; qi < (int)c.hom[c1][b].size(); ++qi) qs.push_back(qi);
      if (b == c1) qs.push_back(-1);
      for (int qi : qs)
        for (int ti = 0; ti < n_t; ++ti)
          for (int pi : ps) triples.push_back({qi, ti, pi});

      int n_plain = (int)c.hom[a][b].size();
      int n_nodes = n_plain + (int)triples.size();
      std::vector<std::vector<int>> adj(n_nodes);
      for (size_t k = 0; k < triples.size(); ++k) {
        auto [qi, ti, pi] = triples[k];
        for (size_t s = 0; s < f_of_s.size(); ++s) {
          if (f_of_s[s] != ti) continue;
          int h = g_of_s[s];  // arrow c0 -> c1 of C
          int left = pi < 0 ? h : c.compose(a, c0, c1, pi, h);
          int whole = qi < 0 ? left : c.compose(a, c1, b, left, qi);
          adj[(int)(n_plain + k)].push_back(whole);
          adj[whole].push_back((int)(n_plain + k));
        }
      }
      std::vector<int> klass(n_nodes, -1);
      int next = 0;
      for (int start = 0; start < n_nodes; ++start) {
        if (klass[start] >= 0) continue;
        std::vector<int> queue = {start};
        klass[start] = next;
        while (!queue.empty()) {
          int at = queue.back();
          queue.pop_back();
          for (int to : adj[at])
            if (klass[to] < 0) {
              klass[to] = next;
              queue.push_back(to);
            }
        }
        ++next;
      }
      out.klass[{a, b}] = klass;
      out.n_classes[{a, b}] = next;
      out.triples[{a, b}] = triples;
    }
  return out;
}

// --- generative closure of the graph homs ------------------------------------

// All weakly descending (n+1)-tuples of parallel paths generated by constant
// tuples, whiskered cell tuples, and pointwise concatenation.
using PathTuple = std::vector<Path>;

inline std::vector<std::vector<std::set<PathTuple>>> oracle_g_tuples(
    const PastingScheme& ps, int n) {
  int nv = ps.n_objects();
  std::vector<std::vector<std::set<PathTuple>>> got(
      nv, std::vector<std::set<PathTuple>>(nv));
  // constants on every path
  for (int a = 0; a < nv; ++a)
    for (int z = 0; z < nv; ++z)
      for (const auto& word : oracle_paths(ps, a, z)) {
        std::vector<int> es;
        for (const std::string& id : word)
          es.push_back(ps.graph.edge_index(id));
        got[a][z].insert(PathTuple(n + 1, make_path(ps, a, es)));
      }
  // whiskered descending tuples over each cell
  for (int fi : ps.interior) {
    const Face& face = ps.faces[fi];
    Path dom = make_path(ps, face.src, face.dom);
    Path cod = make_path(ps, face.src, face.cod);
    for (int a = 0; a < nv; ++a)
      for (int z = 0; z < nv; ++z)
        for (const auto& fword : oracle_paths(ps, a, face.src))
          for (const auto& gword : oracle_paths(ps, face.tgt, z)) {
            std::vector<int> fes, ges;
            for (const std::string& id : fword)
              fes.push_back(ps.graph.edge_index(id));
            for (const std::string& id : gword)
              ges.push_back(ps.graph.edge_index(id));
            Path f = make_path(ps, a, fes), g = make_path(ps, face.tgt, ges);
            // all weakly descending 0/1 splits: dom^k cod^(n+1-k)
            for (int k = 0; k <= n + 1; ++k) {
              PathTuple t;
              for (int i = 0; i <= n; ++i) {
                Path mid = i < k ? dom : cod;
                t.push_back(concat(ps, concat(ps, f, mid), g));
              }
              got[a][z].insert(t);
            }
          }
  }
  // close under pointwise concatenation
  for (bool grew = true; grew;) {
    grew = false;
    for (int a = 0; a < nv; ++a)
      for (int mid = 0; mid < nv; ++mid)
        for (int z = 0; z < nv; ++z) {
          std::vector<PathTuple> fresh;
          for (const PathTuple& t1 : got[a][mid])
            for (const PathTuple& t2 : got[mid][z]) {
              PathTuple t;
              for (int i = 0; i <= n; ++i)
                t.push_back(concat(ps, t1[i], t2[i]));
              if (!got[a][z].count(t)) fresh.push_back(t);
            }
          for (PathTuple& t : fresh) got[a][z].insert(std::move(t));
          grew = grew || !fresh.empty();
        }
  }
  return got;
}

// distinct values of a weakly descending tuple, in order
inline std::vector<Path> collapse_tuple(const PathTuple& t) {
  std::vector<Path> out;
  for (const Path& p : t)
    if (out.empty() || !(out.back() == p)) out.push_back(p);
  return out;
}

// --- atomicity by decomposition scan -----------------------------------------

// a strictly descending chain is decomposable iff some interior vertex lies
// on every one of its paths
inline bool oracle_is_atomic(const PastingScheme& ps,
                             const std::vector<Path>& chain) {
  int x = chain.front().start, y = chain.front().end;
  for (int v = 0; v < ps.n_objects(); ++v) {
    if (v == x || v == y) continue;
    bool on_all = true;
    for (const Path& p : chain) {
      auto vs = path_vertices(ps, p);
      on_all = on_all && std::count(vs.begin(), vs.end(), v) > 0;
    }
    if (on_all) return false;
  }
  return true;
}

inline std::vector<std::vector<Path>> oracle_atomic_scan(
    const PastingScheme& ps, int n) {
  std::vector<std::vector<Path>> out;
  for (int x = 0; x < ps.n_objects(); ++x)
    for (int y = 0; y < ps.n_objects(); ++y) {
      if (x == y) continue;
      HomPoset h = hom_poset(ps, x, y);
      std::vector<int> stack;
      auto rec = [&](auto&& self) -> void {
        if ((int)stack.size() == n + 1) {
          std::vector<Path> chain;
          for (int i : stack) chain.push_back(h.elements[i]);
          if (oracle_is_atomic(ps, chain)) out.push_back(chain);
          return;
        }
        for (int k = 0; k < h.size(); ++k) {
          if (!stack.empty() && (k == stack.back() || !h.le(stack.back(), k)))
            continue;
          stack.push_back(k);
          self(self);
          stack.pop_back();
        }
      };
      rec(rec);
    }
  return out;
}

}  // namespace oracles
