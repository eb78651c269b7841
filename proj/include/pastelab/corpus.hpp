#pragma once

#include <cstdint>
#include <random>

#include "pastelab/path.hpp"

namespace pastelab {

// One deterministic random scheme with at most max_faces cells: a random
// globular shape followed by random validity-preserving moves (attach a cell
// below a segment of the global codomain, subdivide an edge).
PastingScheme random_scheme(std::mt19937_64& rng, int max_faces);

std::vector<PastingScheme> generate_corpus(std::uint64_t seed, int count,
                                           int max_faces);

// Writes the corpus as scheme_###.json under dir (created if missing) and
// returns the file paths. Identical arguments give byte-identical files.
std::vector<std::string> write_corpus(const std::string& dir,
                                      std::uint64_t seed, int count,
                                      int max_faces);

}  // namespace pastelab
