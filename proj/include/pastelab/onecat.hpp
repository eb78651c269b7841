#pragma once

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "pastelab/poset.hpp"

namespace pastelab {

// Finite one-way category: no endomorphisms except identities (which stay
// implicit) and hom(a,b), hom(b,a) never both inhabited.
struct OneWayCat {
  std::vector<std::string> objects;
  std::vector<std::vector<std::vector<std::string>>> hom;  // hom[a][b]
  // comp[{a,b,c}][fi][gi] = index in hom[a][c] of the composite of
  // f: a -> b and g: b -> c
  std::map<std::array<int, 3>, std::vector<std::vector<int>>> comp;

  int n_objects() const { return static_cast<int>(objects.size()); }
  int compose(int a, int b, int c, int fi, int gi) const;
  int arrow_index(int a, int b, const std::string& name) const;
};

void check_one_way(const OneWayCat& c);  // throws NotOneWay

// thin one-way category of a poset: one arrow per strict pair
OneWayCat thin_one_way(const FinPoset& p);

// free category on an acyclic multigraph; arrows = nonempty edge paths
OneWayCat free_one_way(
    const std::vector<std::string>& objects,
    const std::vector<std::tuple<int, int, std::string>>& edges);

struct OneWayPushout {
  OneWayCat result;
  // arrow_image[a][b][fi]: where hom[a][b][fi] of the input lands
  std::vector<std::vector<std::vector<int>>> arrow_image;
  // t_image[t]: the class of t as an arrow c0 -> c1
  std::vector<int> t_image;
};

// Glues a set map S -> T onto arrows g: S -> hom(c0,c1). Every hom-set of
// the result is the pushout of C(c1,b) x S x C(a,c0) -> C(a,b) against
// C(c1,b) x T x C(a,c0). Requires c0 strictly below c1 (NotStrictlyBelow).
OneWayPushout one_way_pushout(const OneWayCat& c, int c0, int c1,
                              const std::vector<int>& f_of_s,
                              const std::vector<int>& g_of_s,
                              const std::vector<std::string>& t_names);

}  // namespace pastelab
