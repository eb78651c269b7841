#pragma once

#include "pastelab/hom.hpp"
#include "pastelab/sset.hpp"

namespace pastelab {

// hom-poset rendered as a FinPoset; element i is the i-th path, labeled by
// its edge string
FinPoset hom_as_finposet(const PastingScheme& ps, const HomPoset& h);

// hom data of a truncated simplicial category at one ordered vertex pair
struct HomNerve {
  int a = -1, z = -1;
  HomPoset poset;
  FinPoset as_poset;
  ChainComplex chains;  // chains of length <= level + 1
};

struct TruncSCat {
  int level = 0;
  std::vector<std::string> objects;
  std::vector<std::vector<HomNerve>> homs;  // [a][z]
  const HomNerve& hom(int a, int z) const { return homs[a][z]; }
};

// hom complexes = truncated full nerves of the hom-posets
TruncSCat nerve_f2cat(const PastingScheme& ps, int level);

// the free simplicial category on the scheme's cells, carved inside
// nerve_f2cat as the chains whose atomic factors are single edges or
// degenerate images of a single face
TruncSCat graph_scat(const PastingScheme& ps, int level);

// pointwise concatenation of hom chains with the degenerate core collapsed
std::vector<Path> compose_chains(const PastingScheme& ps,
                                 const std::vector<Path>& first,
                                 const std::vector<Path>& second);

// nondegenerate atomic n-arrows: strictly descending parallel path chains
// whose extremes share only their endpoints; n = 0 gives the edges
std::vector<std::vector<Path>> atomic_arrows(const PastingScheme& ps, int n);

// unique atomic factorization of a weakly descending parallel chain, split
// at every vertex the extreme paths share (NotAnArrow on invalid input)
std::vector<std::vector<Path>> factor_atomic(const PastingScheme& ps,
                                             const std::vector<Path>& chain);

// membership predicate for graph_scat homs
bool chain_in_graph(const PastingScheme& ps, const std::vector<Path>& chain);

bool is_subcomputad(const PastingScheme& ps, int level);

// Both hom-poset pushout squares of a bottom-attached cell: the square at
// the attachment pair itself and the composition square at (a,z). alpha
// names a bottom cell of ps; the scheme without it is the base.
bool verify_hom_pushouts(const PastingScheme& ps, const std::string& alpha,
                         int a, int z);

// The glued subcomplex inside nerve of hom(a,z) of ps: image of
// N(hom(y,z) x 2 x hom(a,x)) united with the image of N(hom of the base),
// overlapping exactly in the 0-slice of the cylinder.
ChainComplex build_glued_inclusion(const PastingScheme& ps,
                                    const std::string& alpha, int a, int z);

// verifies the edge-subdivision hom isomorphisms and that the substitution
// bijection matches the graph and nerve homs levelwise up to `level`;
// pieces = 1 is the no-op comparison
bool verify_edge_subdivision(const PastingScheme& ps, int e, int pieces,
                             int level = 4);

struct PairReport {
  int a = -1, z = -1;
  std::size_t g_chains = 0, nf_chains = 0;
  bool certified = false;
  std::size_t certificate_length = 0;
  bool verified = false;  // certificate replay
  std::size_t states = 0;
};

struct HomwiseReport {
  bool all_certified = false;
  bool subcomputad = false;
  std::vector<PairReport> pairs;
};

// Certifies, per ordered vertex pair, that the graph hom sits inner
// anodyne inside the nerve hom. threads <= 1 runs serially.
HomwiseReport verify_uniqueness_homwise(const PastingScheme& ps,
                                          int level = 4,
                                          std::size_t budget = 1000000,
                                          int threads = 1);

}  // namespace pastelab
