#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pastelab/error.hpp"

namespace pastelab {

struct FinPoset {
  std::vector<std::string> elements;
  std::vector<std::vector<bool>> leq;  // leq[i][j] iff i <= j

  int size() const { return static_cast<int>(elements.size()); }
  bool le(int i, int j) const { return leq[i][j]; }
  int index_of(const std::string& name) const;
  void check() const;  // partial order axioms, throws StructureError
  std::vector<std::pair<int, int>> covers() const;
  int top() const;     // -1 when absent
  int bottom() const;
};

// closes the given relations reflexively and transitively
FinPoset make_poset(std::vector<std::string> elements,
                    const std::vector<std::pair<int, int>>& relations);
FinPoset chain_poset(int n);  // 0 < 1 < ... < n-1
FinPoset antichain_poset(int n);
FinPoset poset_product_raw(const FinPoset& a, const FinPoset& b);

struct PosetMap {
  std::vector<int> to;  // source index -> target index
  void check(const FinPoset& src, const FinPoset& dst) const;  // NotMonotone
};

struct PosetInclusion {
  FinPoset sub, ambient;
  std::vector<int> inj;  // sub index -> ambient index
  void check() const;    // injective and full, throws NotFull
};

// full subposet of `ambient` on the given element indices
PosetInclusion make_inclusion(const FinPoset& ambient,
                              const std::vector<int>& elems);

struct DwyerWitness {
  std::vector<char> sieve_chi;  // per ambient element, 0 exactly on the image
  std::vector<char> cosieve;    // minimal cosieve W containing the image
  std::vector<int> retract;     // ambient -> sub index, -1 outside W
};

// nullopt unless the image is a sieve and every element of W has a greatest
// lower approximation in the image
std::optional<DwyerWitness> dwyer_witness(const PosetInclusion& incl);

std::pair<FinPoset, PosetInclusion> adjoin_terminal(const FinPoset& a);

// C x A into C x B, Dwyer witness carried through the product (NotDwyer)
PosetInclusion poset_product(const FinPoset& c, const PosetInclusion& a_in_b);

struct PosetPushout {
  FinPoset result;
  std::vector<int> from_c;
  std::vector<int> from_b;
};

// pushout of C <- A -> B along a Dwyer inclusion, computed directly as a
// poset: elements ob C plus ob B off the image, with c <= b iff c <= f(R(b))
PosetPushout pushout_along_dwyer(const PosetMap& f, const FinPoset& c,
                                 const PosetInclusion& a_in_b);

bool poset_isomorphic(const FinPoset& a, const FinPoset& b);

}  // namespace pastelab
