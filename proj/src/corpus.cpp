#include "pastelab/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

namespace pastelab {

namespace {

// mt19937_64 output is pinned by the standard, distribution classes are not;
// bounded draws use plain modulo so corpora stay byte-identical everywhere
int pick(std::mt19937_64& rng, int n) {
  return n <= 1 ? 0 : static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

}  // namespace

PastingScheme random_scheme(std::mt19937_64& rng, int max_faces) {
  int hops = 1 + pick(rng, 3);
  std::vector<int> widths(hops, 0);
  int budget = std::max(max_faces, 0);
  for (int& w : widths) {
    w = pick(rng, std::min(budget, 2) + 1);
    budget -= w;
  }
  PastingScheme ps = build_theta2(widths);
  int moves = pick(rng, 5);
  for (int m = 0; m < moves; ++m) {
    bool attach =
        ps.n_interior_faces() < max_faces && ps.n_edges() > 0 && pick(rng, 2);
    if (attach) {
      std::vector<int> along = path_vertices(ps, ps.cod);
      int i = pick(rng, static_cast<int>(along.size()) - 1);
      int j = i + 1 + pick(rng, static_cast<int>(along.size()) - 1 - i);
      try {
        ps = attach_bottom(ps, along[i], along[j], 1 + pick(rng, 3),
                           "c" + std::to_string(m));
      } catch (const Error&) {
        // pair not attachable, skip the move
      }
    } else if (ps.n_edges() > 0) {
      ps = subdivide_edge(ps, pick(rng, ps.n_edges()), 2 + pick(rng, 2));
    }
  }
  return ps;
}

std::vector<PastingScheme> generate_corpus(std::uint64_t seed, int count,
                                           int max_faces) {
  std::mt19937_64 rng(seed);
  std::vector<PastingScheme> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(random_scheme(rng, max_faces));
  return out;
}

std::vector<std::string> write_corpus(const std::string& dir,
                                      std::uint64_t seed, int count,
                                      int max_faces) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::vector<std::string> paths;
  std::vector<PastingScheme> schemes = generate_corpus(seed, count, max_faces);
  for (int i = 0; i < count; ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "scheme_%03d.json", i);
    fs::path file = fs::path(dir) / name;
    std::ofstream os(file);
    os << serialize_scheme(schemes[i].graph);
    paths.push_back(file.string());
  }
  return paths;
}

}  // namespace pastelab
