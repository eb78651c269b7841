#pragma once

// Parallel-path machinery on a validated pasting scheme: the lies-above
// preorder, the shared/disjoint factorization of parallel paths, extremal
// paths, sub-schemes spanned by a parallel pair, cell deletion, and linear
// presentations by iterated top-cell removal.

#include <vector>

#include "pastelab/scheme.hpp"

namespace pastelab {

// p lies above q: at every common vertex both the incoming and the outgoing
// edge of p sit at or above those of q in the vertex orders. Endpoints, where
// one side is missing on both paths, compare equal. Throws NotParallel unless
// p and q share start and end.
bool lies_above(const PastingScheme& ps, const Path& p, const Path& q);

// Same relation decided from the incoming (resp. outgoing) halves only;
// equivalent to the full test, kept separate for cross-checking.
bool lies_above_pred_only(const PastingScheme& ps, const Path& p, const Path& q);
bool lies_above_succ_only(const PastingScheme& ps, const Path& p, const Path& q);

struct ParallelBlock {
  Path upper, lower;  // positive length, meet only at their endpoints
};

// p = r_0 b_1 r_1 ... b_n r_n and q = r_0 b_1' r_1 ... b_n' r_n with shared
// segments r_i (possibly empty) and disjoint blocks (b_i, b_i').
struct ParallelFactorization {
  std::vector<Path> shared;            // n + 1 entries
  std::vector<ParallelBlock> blocks;   // n entries
};

ParallelFactorization partition_parallel(const PastingScheme& ps,
                                         const Path& p, const Path& q);

// Topmost and bottommost paths from x to y (greedy over usable edges).
// Throws NotReachable when y is not reachable from x.
std::pair<Path, Path> extremal_paths(const PastingScheme& ps, int x, int y);

// The sub pasting scheme spanned by a parallel pair p above q: both paths
// plus everything enclosed between them. Object, edge and face names carry
// over from the parent, so inclusions are literal subset maps.
PastingScheme sub_scheme_pq(const PastingScheme& ps, const Path& p,
                            const Path& q);

// The sub-scheme on {u : x <= u <= y}: the span between the extremal paths.
PastingScheme sub_scheme_between(const PastingScheme& ps, int x, int y);

// Interior faces whose source path is a contiguous subpath of dom_P
// (resp. whose target path is contiguous in cod_P). Returned in order of
// their starting position along the boundary path.
std::vector<int> top_cells(const PastingScheme& ps);
std::vector<int> bottom_cells(const PastingScheme& ps);

// Removes a top cell: drops the interior edges and vertices of its source
// path, leaving a pasting scheme with one face fewer. Dually for bottom.
PastingScheme delete_top_cell(const PastingScheme& ps, int face);
PastingScheme delete_bottom_cell(const PastingScheme& ps, int face);

struct PresentationEntry {
  std::string face;   // face name in the original scheme
  Path prefix, suffix; // paths of the original scheme around the cell
};
using Presentation = std::vector<PresentationEntry>;

// Canonical linear presentation: repeatedly delete the top cell whose source
// path starts earliest along the current dom_P.
Presentation presentation(const PastingScheme& ps);

// All presentations reachable by any order of top-cell deletions, stopping
// once `cap` have been produced.
std::vector<Presentation> enumerate_presentations(const PastingScheme& ps,
                                                  size_t cap);

// The "lies directly above" relation on interior faces: alpha -> beta when
// cod_alpha and dom_beta share an edge. Its transitive closure is a partial
// order; throws CycleFound otherwise.
struct FaceDag {
  std::vector<std::string> faces;            // interior face names
  std::vector<std::pair<int, int>> edges;    // (above, below) index pairs
};
FaceDag directly_above_order(const PastingScheme& ps);

// Attaches a new cell below the scheme from x to y: its source path is the
// bottommost x -> y path (which must be contiguous in cod_P) and its target
// path is a fresh chain of cod_len edges drawn underneath. Names of the new
// vertices and edges start with `tag`.
PastingScheme attach_bottom(const PastingScheme& ps, int x, int y, int cod_len,
                            const std::string& tag);

// Replaces edge e by a chain of `pieces` edges through fresh vertices.
// pieces == 1 returns an identical scheme.
PastingScheme subdivide_edge(const PastingScheme& ps, int e, int pieces);

}  // namespace pastelab
