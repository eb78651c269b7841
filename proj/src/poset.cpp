#include "pastelab/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace pastelab {

int FinPoset::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (elements[i] == name) return i;
  return -1;
}

void FinPoset::check() const {
  int n = size();
  if (static_cast<int>(leq.size()) != n)
    throw Error("StructureError", "relation size mismatch");
  std::set<std::string> names(elements.begin(), elements.end());
  if (static_cast<int>(names.size()) != n)
    throw Error("StructureError", "duplicate poset elements");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(leq[i].size()) != n)
      throw Error("StructureError", "relation size mismatch");
    if (!leq[i][i]) throw Error("StructureError", "relation not reflexive");
    for (int j = 0; j < n; ++j) {
      if (i != j && leq[i][j] && leq[j][i])
        throw Error("StructureError", "relation not antisymmetric");
      for (int k = 0; k < n; ++k)
        if (leq[i][j] && leq[j][k] && !leq[i][k])
          throw Error("StructureError", "relation not transitive");
    }
  }
}

std::vector<std::pair<int, int>> FinPoset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) {
      if (i == j || !leq[i][j]) continue;
      bool cover = true;
      for (int k = 0; k < size() && cover; ++k)
        cover = !(k != i && k != j && leq[i][k] && leq[k][j]);
      if (cover) out.push_back({i, j});
    }
  return out;
}

int FinPoset::top() const {
  for (int i = 0; i < size(); ++i) {
    bool greatest = true;
    for (int j = 0; j < size() && greatest; ++j) greatest = leq[j][i];
    if (greatest) return i;
  }
  return -1;
}

int FinPoset::bottom() const {
  for (int i = 0; i < size(); ++i) {
    bool least = true;
    for (int j = 0; j < size() && least; ++j) least = leq[i][j];
    if (least) return i;
  }
  return -1;
}

FinPoset make_poset(std::vector<std::string> elements,
                    const std::vector<std::pair<int, int>>& relations) {
  FinPoset p;
  int n = static_cast<int>(elements.size());
  p.elements = std::move(elements);
  p.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) p.leq[i][i] = true;
  for (auto& [a, b] : relations) p.leq[a][b] = true;
  for (int k = 0; k < n; ++k)  // Floyd-Warshall closure
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (p.leq[i][k] && p.leq[k][j]) p.leq[i][j] = true;
  p.check();
  return p;
}

FinPoset chain_poset(int n) {
  std::vector<std::string> els;
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < n; ++i) {
    els.push_back(std::to_string(i));
    if (i) rel.push_back({i - 1, i});
  }
  return make_poset(els, rel);
}

FinPoset antichain_poset(int n) {
  std::vector<std::string> els;
  for (int i = 0; i < n; ++i) els.push_back(std::to_string(i));
  return make_poset(els, {});
}

FinPoset poset_product_raw(const FinPoset& a, const FinPoset& b) {
  FinPoset p;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j)
      p.elements.push_back("(" + a.elements[i] + "," + b.elements[j] + ")");
  int n = p.size();
  p.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j)
      for (int k = 0; k < a.size(); ++k)
        for (int l = 0; l < b.size(); ++l)
          p.leq[i * b.size() + j][k * b.size() + l] =
              a.le(i, k) && b.le(j, l);
  p.check();
  return p;
}

void PosetMap::check(const FinPoset& src, const FinPoset& dst) const {
  if (static_cast<int>(to.size()) != src.size())
    throw Error("NotMonotone", "map size mismatch");
  for (int t : to)
    if (t < 0 || t >= dst.size())
      throw Error("NotMonotone", "map target out of range");
  for (int i = 0; i < src.size(); ++i)
    for (int j = 0; j < src.size(); ++j)
      if (src.le(i, j) && !dst.le(to[i], to[j]))
        throw Error("NotMonotone", "map does not preserve the order");
}

void PosetInclusion::check() const {
  std::set<int> seen;
  for (int t : inj) {
    if (t < 0 || t >= ambient.size() || !seen.insert(t).second)
      throw Error("NotFull", "inclusion is not injective");
  }
  if (static_cast<int>(inj.size()) != sub.size())
    throw Error("NotFull", "inclusion size mismatch");
  for (int i = 0; i < sub.size(); ++i)
    for (int j = 0; j < sub.size(); ++j)
      if (sub.le(i, j) != ambient.le(inj[i], inj[j]))
        throw Error("NotFull", "inclusion is not full");
}

PosetInclusion make_inclusion(const FinPoset& ambient,
                              const std::vector<int>& elems) {
  PosetInclusion incl;
  incl.ambient = ambient;
  incl.inj = elems;
  for (int e : elems) incl.sub.elements.push_back(ambient.elements[e]);
  int n = static_cast<int>(elems.size());
  incl.sub.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      incl.sub.leq[i][j] = ambient.le(elems[i], elems[j]);
  incl.sub.check();
  incl.check();
  return incl;
}

std::optional<DwyerWitness> dwyer_witness(const PosetInclusion& incl) {
  incl.check();
  const FinPoset& b = incl.ambient;
  std::vector<int> sub_at(b.size(), -1);
  for (int i = 0; i < incl.sub.size(); ++i) sub_at[incl.inj[i]] = i;

  DwyerWitness w;
  w.sieve_chi.assign(b.size(), 1);
  for (int t : incl.inj) w.sieve_chi[t] = 0;
  for (int i = 0; i < b.size(); ++i)  // sieve: down-closed image
    for (int j = 0; j < b.size(); ++j)
      if (w.sieve_chi[j] == 0 && b.le(i, j) && w.sieve_chi[i] == 1)
        return std::nullopt;

  w.cosieve.assign(b.size(), 0);
  w.retract.assign(b.size(), -1);
  for (int i = 0; i < b.size(); ++i) {
    std::vector<int> below;  // image elements under i
    for (int t : incl.inj)
      if (b.le(t, i)) below.push_back(t);
    if (below.empty()) continue;
    w.cosieve[i] = 1;
    int best = -1;
    for (int t : below) {
      bool greatest = true;
      for (int u : below) greatest = greatest && b.le(u, t);
      if (greatest) best = t;
    }
    if (best < 0) return std::nullopt;  // no right adjoint value at i
    w.retract[i] = sub_at[best];
  }
  return w;
}

std::pair<FinPoset, PosetInclusion> adjoin_terminal(const FinPoset& a) {
  FinPoset b;
  b.elements = a.elements;
  std::string name = "top";
  while (b.index_of(name) >= 0) name += "*";
  b.elements.push_back(name);
  int n = b.size();
  b.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) b.leq[i][j] = a.le(i, j);
  for (int i = 0; i < n; ++i) b.leq[i][n - 1] = true;
  b.check();
  std::vector<int> elems(a.size());
  std::iota(elems.begin(), elems.end(), 0);
  PosetInclusion incl = make_inclusion(b, elems);
  if ((a.size() == 0 || a.top() >= 0) && !dwyer_witness(incl))
    throw Error("StructureError", "terminal adjunction lost its witness");
  return {b, incl};
}

PosetInclusion poset_product(const FinPoset& c, const PosetInclusion& a_in_b) {
  if (!dwyer_witness(a_in_b))
    throw Error("NotDwyer", "product requires a Dwyer inclusion");
  PosetInclusion out;
  out.sub = poset_product_raw(c, a_in_b.sub);
  out.ambient = poset_product_raw(c, a_in_b.ambient);
  for (int i = 0; i < c.size(); ++i)
    for (int j = 0; j < a_in_b.sub.size(); ++j)
      out.inj.push_back(i * a_in_b.ambient.size() + a_in_b.inj[j]);
  out.check();
  if (!dwyer_witness(out))
    throw Error("NotDwyer", "product inclusion lost its witness");
  return out;
}

PosetPushout pushout_along_dwyer(const PosetMap& f, const FinPoset& c,
                                 const PosetInclusion& a_in_b) {
  auto wit = dwyer_witness(a_in_b);
  if (!wit) throw Error("NotDwyer", "pushout requires a Dwyer inclusion");
  f.check(a_in_b.sub, c);
  const FinPoset& b = a_in_b.ambient;

  PosetPushout po;
  FinPoset& d = po.result;
  d.elements = c.elements;
  po.from_c.resize(c.size());
  std::iota(po.from_c.begin(), po.from_c.end(), 0);
  po.from_b.assign(b.size(), -1);
  for (int i = 0; i < a_in_b.sub.size(); ++i)
    po.from_b[a_in_b.inj[i]] = f.to[i];
  std::vector<int> off_image;  // B elements off the image, in B order
  for (int i = 0; i < b.size(); ++i)
    if (wit->sieve_chi[i]) {
      po.from_b[i] = d.size();
      off_image.push_back(i);
      std::string name = b.elements[i];
      while (d.index_of(name) >= 0) name += "'";
      d.elements.push_back(name);
    }
  int n = d.size();
  d.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < c.size(); ++i)
    for (int j = 0; j < c.size(); ++j) d.leq[i][j] = c.le(i, j);
  for (size_t bi = 0; bi < off_image.size(); ++bi) {
    int db = c.size() + static_cast<int>(bi);
    d.leq[db][db] = true;
    for (size_t bj = 0; bj < off_image.size(); ++bj)
      d.leq[db][c.size() + bj] = b.le(off_image[bi], off_image[bj]);
    // c <= b iff b lies over the image and c <= f(R(b)) in C
    if (wit->cosieve[off_image[bi]]) {
      int fr = f.to[wit->retract[off_image[bi]]];
      for (int ci = 0; ci < c.size(); ++ci) d.leq[ci][db] = c.le(ci, fr);
    }
  }
  d.check();

  for (int i = 0; i < a_in_b.sub.size(); ++i)
    if (po.from_b[a_in_b.inj[i]] != po.from_c[f.to[i]])
      throw Error("StructureError", "pushout square does not commute");
  PosetMap{po.from_b}.check(b, d);
  PosetMap{po.from_c}.check(c, d);
  if (!dwyer_witness(make_inclusion(d, po.from_c)))
    throw Error("StructureError", "pushout leg lost its Dwyer witness");
  return po;
}

bool poset_isomorphic(const FinPoset& a, const FinPoset& b) {
  int n = a.size();
  if (n != b.size()) return false;
  // invariant: (down-set size, up-set size) per element
  auto profile = [](const FinPoset& p, int i) {
    int down = 0, up = 0;
    for (int j = 0; j < p.size(); ++j) {
      down += p.le(j, i);
      up += p.le(i, j);
    }
    return std::pair<int, int>(down, up);
  };
  std::multiset<std::pair<int, int>> pa, pb;
  for (int i = 0; i < n; ++i) {
    pa.insert(profile(a, i));
    pb.insert(profile(b, i));
  }
  if (pa != pb) return false;
  std::vector<int> to(n, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
      if (used[j] || profile(a, i) != profile(b, j)) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k)
        ok = a.le(i, k) == b.le(j, to[k]) && a.le(k, i) == b.le(to[k], j);
      if (!ok) continue;
      to[i] = j;
      used[j] = 1;
      if (self(self, i + 1)) return true;
      used[j] = 0;
      to[i] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace pastelab
