#pragma once

#include <cstdint>
#include <utility>

#include "pastelab/path.hpp"

namespace pastelab {

// Hom-poset of the free 2-category on a scheme: all paths x -> y, ordered by
// the lies-above relation. leq[i][j] means element i lies above element j,
// i.e. there is a 2-cell from path i down to path j.
struct HomPoset {
  int x = -1, y = -1;
  std::vector<Path> elements;
  std::vector<std::vector<bool>> leq;

  int size() const { return static_cast<int>(elements.size()); }
  bool le(int i, int j) const { return leq[i][j]; }
  int index_of(const Path& p) const;
  int top() const;     // the topmost path, least in leq; -1 when empty
  int bottom() const;  // the bottommost path, greatest in leq; -1 when empty
};

// All directed paths x -> y, topmost first (depth-first, preferring the
// upper out-edge at every vertex). Contains the empty path iff x == y.
std::vector<Path> enumerate_paths(const PastingScheme& ps, int x, int y);

HomPoset hom_poset(const PastingScheme& ps, int x, int y);

// One 0/1 coordinate per interior face, in ps.interior order. Value 1 means
// the face sits in the region between the path and dom_P.
using CubePoint = std::vector<std::uint8_t>;

struct CubeStructure {
  std::vector<std::string> faces;                // ps.interior order
  std::vector<std::pair<int, int>> constraints;  // (i,j): f[i] >= f[j]
};

CubeStructure cube_structure(const PastingScheme& ps);

// membership in the constrained cube (every directly-above pair respected)
bool in_pge(const PastingScheme& ps, const CubePoint& f);

// all cube points satisfying the constraints, ascending as binary numbers
// with coordinate 0 as the least significant bit
std::vector<CubePoint> enumerate_cube_points(const PastingScheme& ps);

// p must run s_P -> t_P (NotFullPath). f(face) = 1 iff the face lies above p.
CubePoint coordinatize(const PastingScheme& ps, const Path& p);

// Inverse of coordinatize (NotInPge when f violates a constraint): colors an
// edge gold when the regions on its two sides get different values and
// returns the gold path.
Path pathify(const PastingScheme& ps, const CubePoint& f);
std::vector<int> gold_edges(const PastingScheme& ps, const CubePoint& f);

// lattice structure of the hom-poset, computed coordinatewise inside the
// spanned sub-scheme (NotParallel when endpoints disagree)
Path hom_meet(const PastingScheme& ps, const Path& p, const Path& q);
Path hom_join(const PastingScheme& ps, const Path& p, const Path& q);

struct ConcatWitness {
  Path p1, p0, q1, q0;
  std::string reason;
};

// concatenation hom(y,z) x hom(x,y) -> hom(x,z) is injective and fully
// faithful; on a valid scheme this always holds, the witness reports the
// offending pair otherwise
bool verify_concat_ff(const PastingScheme& ps, int x, int y, int z,
                      ConcatWitness* witness = nullptr);

// The composite chain dom_P = m_0 > m_1 > ... > m_n = cod_P obtained by
// replaying a presentation. Cross-checks up to uniqueness_cap alternative
// presentations: all of them must yield chains with the same endpoints and
// the same length.
std::vector<Path> power_composite(const PastingScheme& ps,
                                  std::size_t uniqueness_cap = 32);

}  // namespace pastelab
