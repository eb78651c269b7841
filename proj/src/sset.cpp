#include "pastelab/sset.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_set>

namespace pastelab {

std::vector<Chain> ChainComplex::simplices(int dim) const {
  std::vector<Chain> out;
  for (const Chain& c : chains)
    if (static_cast<int>(c.size()) == dim + 1) out.push_back(c);
  return out;
}

int ChainComplex::dimension() const {
  int d = -1;
  for (const Chain& c : chains)
    d = std::max(d, static_cast<int>(c.size()) - 1);
  return d;
}

void ChainComplex::check() const {
  for (const Chain& c : chains) {
    if (c.empty()) throw Error("NotSubcomplex", "empty chain");
    for (int v : c)
      if (v < 0 || v >= ambient.size())
        throw Error("NotSubcomplex", "chain element out of range");
    for (size_t i = 0; i + 1 < c.size(); ++i)
      if (c[i] == c[i + 1] || !ambient.le(c[i], c[i + 1]))
        throw Error("NotSubcomplex", "chain not strictly increasing");
    for (size_t i = 0; i < c.size(); ++i) {
      if (c.size() == 1) break;
      Chain face = c;
      face.erase(face.begin() + i);
      if (!contains(face))
        throw Error("NotSubcomplex", "chain set not closed under faces");
    }
  }
}

ChainComplex nerve(const FinPoset& p) {
  ChainComplex cx;
  cx.ambient = p;
  Chain cur;
  auto extend = [&](auto&& self, int last) -> void {
    cx.chains.insert(cur);
    for (int next = 0; next < p.size(); ++next) {
      if (next == last || !p.le(last, next)) continue;
      cur.push_back(next);
      self(self, next);
      cur.pop_back();
    }
  };
  for (int v = 0; v < p.size(); ++v) {
    cur = {v};
    extend(extend, v);
  }
  return cx;
}

ChainComplex generated_by(const FinPoset& ambient,
                          const std::vector<Chain>& gens) {
  ChainComplex cx;
  cx.ambient = ambient;
  std::vector<Chain> todo = gens;
  while (!todo.empty()) {
    Chain c = todo.back();
    todo.pop_back();
    if (c.empty() || !cx.chains.insert(c).second) continue;
    for (size_t i = 0; i < c.size() && c.size() > 1; ++i) {
      Chain face = c;
      face.erase(face.begin() + i);
      todo.push_back(face);
    }
  }
  cx.check();
  return cx;
}

namespace {

void require_same_ambient(const ChainComplex& a, const ChainComplex& b) {
  if (a.ambient.elements != b.ambient.elements ||
      a.ambient.leq != b.ambient.leq)
    throw Error("NotSubcomplex", "complexes live in different posets");
}

}  // namespace

ChainComplex complex_union(const ChainComplex& a, const ChainComplex& b) {
  require_same_ambient(a, b);
  ChainComplex cx = a;
  cx.chains.insert(b.chains.begin(), b.chains.end());
  return cx;
}

ChainComplex complex_intersection(const ChainComplex& a,
                                  const ChainComplex& b) {
  require_same_ambient(a, b);
  ChainComplex cx;
  cx.ambient = a.ambient;
  for (const Chain& c : a.chains)
    if (b.contains(c)) cx.chains.insert(c);
  return cx;
}

bool subcomplex_of(const ChainComplex& sub, const ChainComplex& sup) {
  require_same_ambient(sub, sup);
  return std::includes(sup.chains.begin(), sup.chains.end(),
                       sub.chains.begin(), sub.chains.end());
}

ChainComplex complex_image(const ChainComplex& src, const PosetMap& f,
                           const FinPoset& target) {
  f.check(src.ambient, target);
  ChainComplex cx;
  cx.ambient = target;
  for (const Chain& c : src.chains) {
    Chain img;
    for (int v : c)
      if (img.empty() || img.back() != f.to[v]) img.push_back(f.to[v]);
    cx.chains.insert(img);
  }
  cx.check();
  return cx;
}

// --- inner anodyne certification -----------------------------------------------------

namespace {

std::uint64_t chain_hash(const Chain& c) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (int v : c) {
    h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
    h *= 0x100000001b3ull;
  }
  return h;
}

struct CertSearch {
  const ChainComplex& full;
  std::set<Chain> have;
  std::set<Chain> missing;
  std::uint64_t state_hash = 0;
  std::unordered_set<std::uint64_t> visited;
  std::size_t budget, states = 0;
  Certificate steps;

  CertSearch(const ChainComplex& sub, const ChainComplex& nerve_cx,
             std::size_t b)
      : full(nerve_cx), have(sub.chains), budget(b) {
    for (const Chain& c : full.chains)
      if (!have.count(c)) {
        missing.insert(c);
        state_hash ^= chain_hash(c);
      }
  }

  bool face_ok(const Chain& c, int k) const {
    // all faces except the k-th present, the k-th absent
    for (int i = 0; i < static_cast<int>(c.size()); ++i) {
      Chain face = c;
      face.erase(face.begin() + i);
      if (i == k ? have.count(face) > 0 : have.count(face) == 0) return false;
    }
    return true;
  }

  void apply(const Chain& c, const Chain& face) {
    have.insert(c);
    have.insert(face);
    missing.erase(c);
    missing.erase(face);
    state_hash ^= chain_hash(c) ^ chain_hash(face);
  }
  void undo(const Chain& c, const Chain& face) {
    have.erase(c);
    have.erase(face);
    missing.insert(c);
    missing.insert(face);
    state_hash ^= chain_hash(c) ^ chain_hash(face);
  }

  bool run() {
    if (missing.empty()) return true;
    if (missing.size() % 2 != 0) return false;  // steps add chains in pairs
    if (++states > budget) return false;
    if (!visited.insert(state_hash).second) return false;
    // copies, since apply/undo edits `missing` mid-loop; sorted by dimension
    // first to honor the ascending-dimension search policy
    std::vector<Chain> order;
    for (const Chain& c : missing)
      if (c.size() >= 3) order.push_back(c);
    std::stable_sort(order.begin(), order.end(),
                     [](const Chain& a, const Chain& b) {
                       return a.size() < b.size();
                     });
    for (const Chain& c : order)
      for (int k = 1; k + 1 < static_cast<int>(c.size()); ++k) {
        if (!face_ok(c, k)) continue;
        Chain face = c;
        face.erase(face.begin() + k);
        apply(c, face);
        steps.push_back({c, k});
        if (run()) return true;
        steps.pop_back();
        undo(c, face);
        if (states > budget) return false;
      }
    return false;
  }
};

}  // namespace

CertifyResult certify_inner_anodyne(const ChainComplex& sub,
                                    std::size_t budget) {
  sub.check();
  ChainComplex full = nerve(sub.ambient);
  CertSearch search(sub, full, budget);
  CertifyResult res;
  if (search.run()) {
    res.status = CertifyStatus::Certified;
    res.cert = std::move(search.steps);
  }
  res.states = search.states;
  return res;
}

bool verify_certificate(const ChainComplex& sub, const Certificate& cert,
                        int* bad_step) {
  sub.check();
  auto fail = [&](int at) {
    if (bad_step) *bad_step = at;
    return false;
  };
  std::set<Chain> have = sub.chains;
  ChainComplex full = nerve(sub.ambient);
  for (size_t s = 0; s < cert.size(); ++s) {
    const Chain& c = cert[s].chain;
    int k = cert[s].k;
    int n = static_cast<int>(c.size()) - 1;
    if (n < 2 || k <= 0 || k >= n) return fail(static_cast<int>(s));
    if (!full.contains(c) || have.count(c)) return fail(static_cast<int>(s));
    Chain kface = c;
    kface.erase(kface.begin() + k);
    if (have.count(kface)) return fail(static_cast<int>(s));
    for (int i = 0; i <= n; ++i) {
      if (i == k) continue;
      Chain face = c;
      face.erase(face.begin() + i);
      if (!have.count(face)) return fail(static_cast<int>(s));
    }
    have.insert(c);
    have.insert(kface);
  }
  if (have != full.chains) return fail(static_cast<int>(cert.size()));
  return true;
}

NervePushout pushout_of_nerves(const PosetMap& f, const FinPoset& c,
                               const PosetInclusion& a_in_b) {
  const FinPoset& a = a_in_b.sub;
  f.check(a, c);
  std::set<int> image(f.to.begin(), f.to.end());
  if (image.size() != f.to.size())
    throw Error("PreconditionFailed", "second leg is not injective");
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (a.le(i, j) != c.le(f.to[i], f.to[j]))
        throw Error("PreconditionFailed", "second leg is not full");

  NervePushout out;
  out.pushout = pushout_along_dwyer(f, c, a_in_b);
  const FinPoset& d = out.pushout.result;
  ChainComplex nc = complex_image(nerve(c), PosetMap{out.pushout.from_c}, d);
  ChainComplex nb =
      complex_image(nerve(a_in_b.ambient), PosetMap{out.pushout.from_b}, d);
  out.sub = complex_union(nc, nb);
  out.sub.check();
  std::size_t na = nerve(a).size();
  out.mono = out.sub.size() == nc.size() + nb.size() - na;
  return out;
}

}  // namespace pastelab
