#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "pastelab/path.hpp"

using namespace pastelab;

namespace {

Path by_ids(const PastingScheme& ps, const std::vector<std::string>& ids) {
  std::vector<int> es;
  for (const std::string& id : ids) es.push_back(ps.graph.edge_index(id));
  int start = es.empty() ? -1 : ps.graph.edges[es.front()].src;
  return make_path(ps, start, es);
}

}  // namespace

TEST_CASE("lies above at a shared interior vertex") {
  PastingScheme ps = build_theta2({1, 1});
  Path tt = by_ids(ps, {"e1_0", "e2_0"});
  Path bb = by_ids(ps, {"e1_1", "e2_1"});
  Path tb = by_ids(ps, {"e1_0", "e2_1"});
  Path bt = by_ids(ps, {"e1_1", "e2_0"});
  CHECK(lies_above(ps, tt, bb));
  CHECK_FALSE(lies_above(ps, bb, tt));
  // opposite disagreements at vertex 1: incomparable both ways
  CHECK_FALSE(lies_above(ps, tb, bt));
  CHECK_FALSE(lies_above(ps, bt, tb));
  CHECK(lies_above(ps, tt, tt));
  CHECK_THROWS_AS(lies_above(ps, tt, by_ids(ps, {"e1_0"})), Error);
}

TEST_CASE("pred only and succ only variants agree everywhere") {
  for (const PastingScheme& ps : generate_corpus(5, 20, 5))
    for (int x = 0; x < ps.n_objects(); ++x)
      for (int y = 0; y < ps.n_objects(); ++y) {
        std::vector<Path> paths = enumerate_paths(ps, x, y);
        for (const Path& p : paths)
          for (const Path& q : paths) {
            bool full = lies_above(ps, p, q);
            CHECK(lies_above_pred_only(ps, p, q) == full);
            CHECK(lies_above_succ_only(ps, p, q) == full);
          }
      }
}

TEST_CASE("parallel factorization splits at shared vertices") {
  PastingScheme ps = build_theta2({1, 1});
  Path tt = by_ids(ps, {"e1_0", "e2_0"});
  Path bb = by_ids(ps, {"e1_1", "e2_1"});
  ParallelFactorization f = partition_parallel(ps, tt, bb);
  REQUIRE(f.blocks.size() == 2);
  REQUIRE(f.shared.size() == 3);
  for (const Path& r : f.shared) CHECK(r.is_empty());
  CHECK(path_to_string(ps, f.blocks[0].upper) == "e1_0");
  CHECK(path_to_string(ps, f.blocks[0].lower) == "e1_1");
  CHECK(path_to_string(ps, f.blocks[1].upper) == "e2_0");
  CHECK(path_to_string(ps, f.blocks[1].lower) == "e2_1");
}

TEST_CASE("factorization reconstructs both paths on the corpus") {
  for (const PastingScheme& ps : generate_corpus(17, 20, 5)) {
    auto [top, bottom] = extremal_paths(ps, ps.source, ps.sink);
    ParallelFactorization f = partition_parallel(ps, top, bottom);
    Path up = f.shared[0], down = f.shared[0];
    for (size_t i = 0; i < f.blocks.size(); ++i) {
      up = concat(ps, concat(ps, up, f.blocks[i].upper), f.shared[i + 1]);
      down = concat(ps, concat(ps, down, f.blocks[i].lower), f.shared[i + 1]);
    }
    CHECK(up == top);
    CHECK(down == bottom);
  }
}

TEST_CASE("extremal paths take the outermost edges") {
  PastingScheme ps = build_theta2({2});
  auto [top, bottom] = extremal_paths(ps, 0, 1);
  CHECK(path_to_string(ps, top) == "e1_0");
  CHECK(path_to_string(ps, bottom) == "e1_2");
  CHECK(top == ps.dom);
  CHECK(bottom == ps.cod);
  CHECK_THROWS_AS(extremal_paths(ps, 1, 0), Error);
}

TEST_CASE("sub scheme spanned by a parallel pair") {
  PastingScheme ps = build_theta2({2});
  Path e0 = by_ids(ps, {"e1_0"}), e1 = by_ids(ps, {"e1_1"});
  PastingScheme bigon = sub_scheme_pq(ps, e0, e1);
  CHECK(bigon.n_objects() == 2);
  CHECK(bigon.n_edges() == 2);
  CHECK(bigon.n_interior_faces() == 1);
  CHECK(bigon.faces[bigon.interior[0]].name == "e1_0");
  CHECK_THROWS_AS(sub_scheme_pq(ps, e1, e0), Error);  // e1 not above e0

  PastingScheme col = build_theta2({2, 0, 3, 0});
  PastingScheme mid = sub_scheme_between(col, 2, 3);
  CHECK(mid.n_objects() == 2);
  CHECK(mid.n_edges() == 4);
  CHECK(mid.n_interior_faces() == 3);

  PastingScheme left = sub_scheme_between(build_theta2({1, 1}), 0, 1);
  CHECK(left.n_objects() == 2);
  CHECK(left.n_edges() == 2);
  CHECK(left.n_interior_faces() == 1);
}

TEST_CASE("top and bottom cells along the boundary") {
  PastingScheme ps = build_theta2({2});
  std::vector<int> tops = top_cells(ps), bottoms = bottom_cells(ps);
  REQUIRE(tops.size() == 1);
  REQUIRE(bottoms.size() == 1);
  CHECK(ps.faces[tops[0]].name == "e1_0");
  CHECK(ps.faces[bottoms[0]].name == "e1_1");

  PastingScheme col = build_theta2({2, 0, 3, 0});
  CHECK(top_cells(col).size() == 2);  // topmost face of each wide column

  PastingScheme row = build_theta2({1, 1});
  CHECK(top_cells(row).size() == 2);
  CHECK(bottom_cells(row).size() == 2);
}

TEST_CASE("deleting a top cell peels one face") {
  PastingScheme ps = build_theta2({2});
  int alpha = ps.face_by_name("e1_0");
  PastingScheme rest = delete_top_cell(ps, alpha);
  CHECK(rest.n_interior_faces() == 1);
  CHECK(rest.n_edges() == 2);
  CHECK(rest.graph.edge_index("e1_0") == -1);
  CHECK(rest.graph.edge_index("e1_1") >= 0);
  CHECK(rest.graph.edge_index("e1_2") >= 0);
  // the remaining face is the old bottom cell
  CHECK(rest.faces[rest.interior[0]].name == "e1_1");
  int beta = ps.face_by_name("e1_1");
  CHECK_THROWS_AS(delete_top_cell(ps, beta), Error);
  CHECK_THROWS_AS(delete_bottom_cell(ps, alpha), Error);
}

TEST_CASE("presentations rewrite dom to cod in face count steps") {
  PastingScheme ps = build_theta2({1, 1});
  Presentation pres = presentation(ps);
  REQUIRE(pres.size() == 2);
  auto all = enumerate_presentations(ps, 500);
  CHECK(all.size() == 2);  // alpha then beta, or beta then alpha
  for (const Presentation& p : all) CHECK(p.size() == 2);
  // deterministic: the canonical one starts at the earliest top cell
  CHECK(pres[0].face == "e1_0");

  for (const PastingScheme& s : generate_corpus(23, 15, 5)) {
    for (const Presentation& p : enumerate_presentations(s, 500))
      CHECK(p.size() == static_cast<size_t>(s.n_interior_faces()));
  }
}

TEST_CASE("directly above order on faces") {
  FaceDag two = directly_above_order(build_theta2({2}));
  REQUIRE(two.faces.size() == 2);
  REQUIRE(two.edges.size() == 1);  // they share e1_1
  CHECK(two.faces[two.edges[0].first] == "e1_0");
  CHECK(two.faces[two.edges[0].second] == "e1_1");

  CHECK(directly_above_order(build_theta2({1, 1})).edges.empty());

  FaceDag chain = directly_above_order(build_theta2({3}));
  CHECK(chain.edges.size() == 2);
}

TEST_CASE("attaching a cell below the codomain") {
  PastingScheme ps = build_theta2({1, 1});
  PastingScheme big = attach_bottom(ps, 0, 2, 2, "b");
  CHECK(big.n_interior_faces() == 3);
  CHECK(big.n_objects() == 4);
  CHECK(big.n_edges() == 6);
  // the new face hangs under the old codomain
  int nf = big.face_by_name("e1_1");
  REQUIRE(nf >= 0);
  CHECK(big.faces[nf].cod.size() == 2);
  CHECK(path_to_string(big, big.cod) == "be0.be1");
  // round trip: deleting it recovers the original
  PastingScheme back = delete_bottom_cell(big, nf);
  CHECK(serialize_scheme(back.graph) == serialize_scheme(ps.graph));

  CHECK_THROWS_AS(attach_bottom(ps, 2, 0, 1, "x"), Error);   // unreachable
  CHECK_THROWS_AS(attach_bottom(ps, 0, 0, 1, "x"), Error);   // identity
  CHECK_THROWS_AS(attach_bottom(ps, 0, 2, 0, "x"), Error);   // empty target
}

TEST_CASE("edge subdivision preserves validity and is reversible in spirit") {
  PastingScheme ps = build_theta2({1});
  int e = ps.graph.edge_index("e1_1");
  PastingScheme fine = subdivide_edge(ps, e, 3);
  CHECK(fine.n_objects() == 4);
  CHECK(fine.n_edges() == 4);
  CHECK(fine.n_interior_faces() == 1);
  CHECK(fine.graph.edge_index("e1_1_p1") >= 0);
  CHECK(fine.graph.edge_index("e1_1_p3") >= 0);
  // no-op subdivision is the identity
  CHECK(serialize_scheme(subdivide_edge(ps, e, 1).graph) ==
        serialize_scheme(ps.graph));
  CHECK_THROWS_AS(subdivide_edge(ps, 99, 2), Error);
}

TEST_CASE("every corpus scheme satisfies the partition invariants") {
  // re-validation recomputes faces, partitions and rotation orders
  for (const PastingScheme& ps : generate_corpus(31, 30, 6)) {
    PastingScheme again = validate_pasting_scheme(ps.graph);
    CHECK(again.n_interior_faces() == ps.n_interior_faces());
  }
}
