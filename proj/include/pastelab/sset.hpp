#pragma once

#include <cstddef>
#include <set>

#include "pastelab/poset.hpp"

namespace pastelab {

// strictly increasing sequence of ambient element indices
using Chain = std::vector<int>;

// Simplicial subset of the nerve of a poset, stored by its nondegenerate
// simplices: a subchain-closed set of chains. A chain of length n+1 is an
// n-simplex.
struct ChainComplex {
  FinPoset ambient;
  std::set<Chain> chains;

  std::size_t size() const { return chains.size(); }
  bool contains(const Chain& c) const { return chains.count(c) > 0; }
  std::vector<Chain> simplices(int dim) const;
  int dimension() const;
  void check() const;  // throws NotSubcomplex
};

ChainComplex nerve(const FinPoset& p);
ChainComplex generated_by(const FinPoset& ambient,
                          const std::vector<Chain>& gens);
ChainComplex complex_union(const ChainComplex& a, const ChainComplex& b);
ChainComplex complex_intersection(const ChainComplex& a,
                                  const ChainComplex& b);
bool subcomplex_of(const ChainComplex& sub, const ChainComplex& sup);

// direct image along a monotone map; chains that collapse stay as their
// shorter nondegenerate core
ChainComplex complex_image(const ChainComplex& src, const PosetMap& f,
                           const FinPoset& target);

struct CertStep {
  Chain chain;
  int k = -1;
};
using Certificate = std::vector<CertStep>;

enum class CertifyStatus { Certified, Unknown };

struct CertifyResult {
  CertifyStatus status = CertifyStatus::Unknown;
  Certificate cert;
  std::size_t states = 0;  // search effort spent
};

// Searches for an ordered list of inner-horn fillings that grow `sub` into
// the full nerve of its ambient poset. Each step names an absent chain c
// (dimension n >= 2) and an inner index 0 < k < n such that every face of c
// except the k-th is present and the k-th face is absent; the step adds c
// and that face. Success is a sound proof that the inclusion is inner
// anodyne; Unknown carries no information.
CertifyResult certify_inner_anodyne(const ChainComplex& sub,
                                    std::size_t budget = 1000000);

bool verify_certificate(const ChainComplex& sub, const Certificate& cert,
                        int* bad_step = nullptr);

struct NervePushout {
  PosetPushout pushout;
  ChainComplex sub;  // union of the two nerve images inside nerve(D)
  bool mono = false;
};

// Realizes NC +_{NA} NB inside the nerve of the poset pushout. The second
// leg must be an injective full monotone map for the comparison to be a
// monomorphism; mono is re-checked by counting.
NervePushout pushout_of_nerves(const PosetMap& f, const FinPoset& c,
                               const PosetInclusion& a_in_b);

}  // namespace pastelab
