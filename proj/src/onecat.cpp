#include "pastelab/onecat.hpp"

#include <algorithm>
#include <numeric>

namespace pastelab {

int OneWayCat::compose(int a, int b, int c, int fi, int gi) const {
  auto it = comp.find({a, b, c});
  if (it == comp.end()) throw Error("NotOneWay", "missing composition table");
  return it->second.at(fi).at(gi);
}

int OneWayCat::arrow_index(int a, int b, const std::string& name) const {
  const auto& arrows = hom[a][b];
  auto it = std::find(arrows.begin(), arrows.end(), name);
  return it == arrows.end() ? -1 : static_cast<int>(it - arrows.begin());
}

void check_one_way(const OneWayCat& c) {
  int n = c.n_objects();
  if (static_cast<int>(c.hom.size()) != n)
    throw Error("NotOneWay", "hom table size mismatch");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(c.hom[a].size()) != n)
      throw Error("NotOneWay", "hom table size mismatch");
    if (!c.hom[a][a].empty())
      throw Error("NotOneWay", "non-identity endomorphism present");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && !c.hom[a][b].empty() && !c.hom[b][a].empty())
        throw Error("NotOneWay", "arrows in both directions between '" +
                                     c.objects[a] + "' and '" + c.objects[b] +
                                     "'");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) {
        if (c.hom[a][b].empty() || c.hom[b][d].empty()) continue;
        auto it = c.comp.find({a, b, d});
        if (it == c.comp.end())
          throw Error("NotOneWay", "missing composition table");
        size_t nf = c.hom[a][b].size(), ng = c.hom[b][d].size();
        if (it->second.size() != nf)
          throw Error("NotOneWay", "composition table size mismatch");
        for (auto& row : it->second) {
          if (row.size() != ng)
            throw Error("NotOneWay", "composition table size mismatch");
          for (int v : row)
            if (v < 0 || v >= static_cast<int>(c.hom[a][d].size()))
              throw Error("NotOneWay", "composite out of range");
        }
      }
  for (int a = 0; a < n; ++a)  // associativity
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d)
        for (int e = 0; e < n; ++e) {
          if (c.hom[a][b].empty() || c.hom[b][d].empty() ||
              c.hom[d][e].empty())
            continue;
          for (size_t f = 0; f < c.hom[a][b].size(); ++f)
            for (size_t g = 0; g < c.hom[b][d].size(); ++g)
              for (size_t h = 0; h < c.hom[d][e].size(); ++h) {
                int gf = c.compose(a, b, d, f, g);
                int hg = c.compose(b, d, e, g, h);
                if (c.compose(a, d, e, gf, h) != c.compose(a, b, e, f, hg))
                  throw Error("NotOneWay", "composition not associative");
              }
        }
}

OneWayCat thin_one_way(const FinPoset& p) {
  OneWayCat c;
  c.objects = p.elements;
  int n = p.size();
  c.hom.assign(n, std::vector<std::vector<std::string>>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && p.le(a, b))
        c.hom[a][b].push_back(p.elements[a] + "<=" + p.elements[b]);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d)
        if (!c.hom[a][b].empty() && !c.hom[b][d].empty())
          c.comp[{a, b, d}] = {{0}};
  check_one_way(c);
  return c;
}

OneWayCat free_one_way(
    const std::vector<std::string>& objects,
    const std::vector<std::tuple<int, int, std::string>>& edges) {
  int n = static_cast<int>(objects.size());
  OneWayCat c;
  c.objects = objects;
  c.hom.assign(n, std::vector<std::vector<std::string>>(n));
  std::vector<std::vector<std::pair<int, int>>> out(n);  // (target, edge)
  for (size_t e = 0; e < edges.size(); ++e)
    out[std::get<0>(edges[e])].push_back(
        {std::get<1>(edges[e]), static_cast<int>(e)});

  // enumerate all nonempty edge paths; throws on a directed cycle
  std::vector<int> stack;
  auto dfs = [&](auto&& self, int origin, int at, int depth) -> void {
    if (depth > n) throw Error("NotOneWay", "graph has a directed cycle");
    for (auto& [to, e] : out[at]) {
      stack.push_back(e);
      std::string name;
      for (int s : stack)
        name += (name.empty() ? "" : ".") + std::get<2>(edges[s]);
      c.hom[origin][to].push_back(name);
      self(self, origin, to, depth + 1);
      stack.pop_back();
    }
  };
  for (int v = 0; v < n; ++v) dfs(dfs, v, v, 0);

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) {
        if (c.hom[a][b].empty() || c.hom[b][d].empty()) continue;
        auto& table = c.comp[{a, b, d}];
        table.assign(c.hom[a][b].size(),
                     std::vector<int>(c.hom[b][d].size(), -1));
        for (size_t f = 0; f < c.hom[a][b].size(); ++f)
          for (size_t g = 0; g < c.hom[b][d].size(); ++g) {
            int idx = c.arrow_index(a, d, c.hom[a][b][f] + "." + c.hom[b][d][g]);
            if (idx < 0)
              throw Error("NotOneWay", "free composite missing");
            table[f][g] = idx;
          }
      }
  check_one_way(c);
  return c;
}

// --- hom-set pushout --------------------------------------------------------------

namespace {

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
  void unite(int a, int b) { up[find(a)] = find(b); }
};

// arrow handle: index into hom[a][b], or -1 for the identity (a == b only)
struct Triple {
  int q, t, p;  // q: c1 -> b, p: a -> c0
  auto operator<=>(const Triple&) const = default;
};

}  // namespace

OneWayPushout one_way_pushout(const OneWayCat& c, int c0, int c1,
                              const std::vector<int>& f_of_s,
                              const std::vector<int>& g_of_s,
                              const std::vector<std::string>& t_names) {
  check_one_way(c);
  int n = c.n_objects();
  if (c0 < 0 || c1 < 0 || c0 >= n || c1 >= n || c0 == c1 ||
      c.hom[c0][c1].empty())
    throw Error("NotStrictlyBelow", "gluing endpoints must satisfy c0 < c1");
  if (f_of_s.size() != g_of_s.size())
    throw Error("StructureError", "S legs disagree in size");
  int nt = static_cast<int>(t_names.size());
  for (int t : f_of_s)
    if (t < 0 || t >= nt) throw Error("StructureError", "f(s) out of range");
  for (int g : g_of_s)
    if (g < 0 || g >= static_cast<int>(c.hom[c0][c1].size()))
      throw Error("StructureError", "g(s) out of range");

  // composite q . g . p inside C, with -1 as identity handle
  auto compose3 = [&](int a, int b, int p, int g, int q) {
    int mid = p < 0 ? g : c.compose(a, c0, c1, p, g);
    return q < 0 ? mid : c.compose(a, c1, b, mid, q);
  };
  auto handles = [&](int from, int to) {
    std::vector<int> hs;
    if (from == to) hs.push_back(-1);
    for (size_t i = 0; i < c.hom[from][to].size(); ++i)
      hs.push_back(static_cast<int>(i));
    return hs;
  };

  // per-hom node tables: inl arrows first, then inr triples
  struct HomNodes {
    int n_inl = 0;
    std::vector<Triple> triples;
    std::map<Triple, int> triple_id;
    UnionFind uf{0};
    std::vector<int> class_of;  // node -> class index, filled later
    std::vector<std::vector<int>> members;  // class -> nodes
  };
  std::vector<std::vector<HomNodes>> tab(n, std::vector<HomNodes>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      HomNodes& hn = tab[a][b];
      hn.n_inl = static_cast<int>(c.hom[a][b].size());
      if (!c.hom[c1][b].empty() || b == c1)
        if (!c.hom[a][c0].empty() || a == c0)
          for (int q : handles(c1, b))
            for (int t = 0; t < nt; ++t)
              for (int p : handles(a, c0)) {
                hn.triple_id[{q, t, p}] =
                    hn.n_inl + static_cast<int>(hn.triples.size());
                hn.triples.push_back({q, t, p});
              }
      hn.uf = UnionFind(hn.n_inl + static_cast<int>(hn.triples.size()));
      for (size_t s = 0; s < f_of_s.size(); ++s)
        for (int q : handles(c1, b))
          for (int p : handles(a, c0))
            hn.uf.unite(hn.triple_id[{q, f_of_s[s], p}],
                        compose3(a, b, p, g_of_s[s], q));
    }

  OneWayPushout out;
  OneWayCat& d = out.result;
  d.objects = c.objects;
  d.hom.assign(n, std::vector<std::vector<std::string>>(n));
  out.arrow_image.assign(n, {});
  for (int a = 0; a < n; ++a) {
    out.arrow_image[a].assign(n, {});
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      HomNodes& hn = tab[a][b];
      int total = hn.n_inl + static_cast<int>(hn.triples.size());
      hn.class_of.assign(total, -1);
      auto arrow_name = [&](int node) -> std::string {
        if (node < hn.n_inl) return c.hom[a][b][node];
        const Triple& tr = hn.triples[node - hn.n_inl];
        std::string qn = tr.q < 0 ? "id" : c.hom[c1][b][tr.q];
        std::string pn = tr.p < 0 ? "id" : c.hom[a][c0][tr.p];
        return pn + "*" + t_names[tr.t] + "*" + qn;
      };
      for (int node = 0; node < total; ++node) {
        int root = hn.uf.find(node);
        if (hn.class_of[root] < 0) {
          hn.class_of[root] = static_cast<int>(d.hom[a][b].size());
          d.hom[a][b].push_back(arrow_name(root));
          hn.members.push_back({});
        }
        hn.class_of[node] = hn.class_of[root];
        hn.members[hn.class_of[node]].push_back(node);
        // classes touching an old arrow keep the first old name
        if (node < hn.n_inl &&
            hn.members[hn.class_of[node]].front() == node)
          d.hom[a][b][hn.class_of[node]] = arrow_name(node);
      }
      out.arrow_image[a][b].resize(hn.n_inl);
      for (int i = 0; i < hn.n_inl; ++i)
        out.arrow_image[a][b][i] = hn.class_of[i];
    }
  }
  out.t_image.resize(nt);
  for (int t = 0; t < nt; ++t)
    out.t_image[t] = tab[c0][c1].class_of[tab[c0][c1].triple_id[{-1, t, -1}]];

  // composition on representatives; every member pair must agree
  auto compose_nodes = [&](int a, int b, int e, int n1, int n2) -> int {
    HomNodes &h1 = tab[a][b], &h2 = tab[b][e], &h3 = tab[a][e];
    if (n1 < h1.n_inl && n2 < h2.n_inl)
      return h3.class_of[c.compose(a, b, e, n1, n2)];
    if (n1 < h1.n_inl) {  // inl then triple: absorb into p
      const Triple& tr = h2.triples[n2 - h2.n_inl];
      int p = tr.p < 0 ? n1 : c.compose(a, b, c0, n1, tr.p);
      return h3.class_of[h3.triple_id.at({tr.q, tr.t, p})];
    }
    if (n2 < h2.n_inl) {  // triple then inl: absorb into q
      const Triple& tr = h1.triples[n1 - h1.n_inl];
      int q = tr.q < 0 ? n2 : c.compose(c1, b, e, tr.q, n2);
      return h3.class_of[h3.triple_id.at({q, tr.t, tr.p})];
    }
    throw Error("NotOneWay", "two glued cells compose end to end");
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int e = 0; e < n; ++e) {
        if (a == b || b == e || a == e) continue;
        if (d.hom[a][b].empty() || d.hom[b][e].empty()) continue;
        auto& table = d.comp[{a, b, e}];
        table.assign(d.hom[a][b].size(),
                     std::vector<int>(d.hom[b][e].size(), -1));
        for (size_t x = 0; x < tab[a][b].members.size(); ++x)
          for (size_t y = 0; y < tab[b][e].members.size(); ++y) {
            int val = -1;
            for (int m1 : tab[a][b].members[x])
              for (int m2 : tab[b][e].members[y]) {
                int v = compose_nodes(a, b, e, m1, m2);
                if (val < 0) val = v;
                if (v != val)
                  throw Error("NotOneWay",
                              "pushout composition is not well defined");
              }
            table[x][y] = val;
          }
        if (table.empty() || table[0].empty()) d.comp.erase({a, b, e});
      }
  check_one_way(d);
  return out;
}

}  // namespace pastelab
