#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "pastelab/computad.hpp"

using namespace pastelab;

namespace {

std::vector<Path> by_strings(const PastingScheme& ps, int start,
                             const std::vector<std::vector<std::string>>& w) {
  std::vector<Path> chain;
  for (const auto& word : w) {
    std::vector<int> es;
    for (const std::string& id : word) es.push_back(ps.graph.edge_index(id));
    chain.push_back(make_path(ps, start, es));
  }
  return chain;
}

// chains of the graph hom, keyed by their path index sequences
std::set<std::vector<std::string>> chain_labels(const HomNerve& hn) {
  std::set<std::vector<std::string>> out;
  for (const Chain& c : hn.chains.chains) {
    std::vector<std::string> lab;
    for (int i : c) lab.push_back(hn.as_poset.elements[i]);
    out.insert(lab);
  }
  return out;
}

}  // namespace

TEST_CASE("nerve and graph censuses of the small shapes") {
  // one cell: graph and nerve agree at every pair
  PastingScheme one = build_theta2({1});
  TruncSCat nf1 = nerve_f2cat(one, 4);
  TruncSCat g1 = graph_scat(one, 4);
  for (int a = 0; a < one.n_objects(); ++a)
    for (int z = 0; z < one.n_objects(); ++z)
      CHECK(g1.hom(a, z).chains.chains == nf1.hom(a, z).chains.chains);
  CHECK(nf1.hom(0, 1).chains.size() == 3);  // 2 paths + 1 edge

  // two stacked cells: the long edge of the triangle is not in the graph
  PastingScheme two = build_theta2({2});
  TruncSCat nf2 = nerve_f2cat(two, 4);
  TruncSCat g2 = graph_scat(two, 4);
  CHECK(nf2.hom(0, 1).chains.size() == 7);
  CHECK(g2.hom(0, 1).chains.size() == 5);
  std::set<std::vector<std::string>> glab = chain_labels(g2.hom(0, 1));
  CHECK(glab.count({"e1_0", "e1_1"}) == 1);
  CHECK(glab.count({"e1_1", "e1_2"}) == 1);
  CHECK(glab.count({"e1_0", "e1_2"}) == 0);
  CHECK(glab.count({"e1_0", "e1_1", "e1_2"}) == 0);

  // horizontally adjacent cells: composites of whiskered cells close up
  PastingScheme row = build_theta2({1, 1});
  TruncSCat nfr = nerve_f2cat(row, 4);
  TruncSCat gr = graph_scat(row, 4);
  CHECK(nfr.hom(0, 2).chains.size() == 11);
  CHECK(gr.hom(0, 2).chains.size() == 11);
}

TEST_CASE("graph homs equal the generative closure") {
  std::vector<PastingScheme> shapes = {build_theta2({1}), build_theta2({2}),
                                       build_theta2({1, 1}),
                                       build_theta2({2, 1}),
                                       build_theta2({1, 0, 1})};
  for (const PastingScheme& ps : generate_corpus(29, 8, 3))
    shapes.push_back(ps);
  for (const PastingScheme& ps : shapes) {
    for (int n = 1; n <= 2; ++n) {
      auto tuples = oracles::oracle_g_tuples(ps, n);
      TruncSCat g = graph_scat(ps, n);
      for (int a = 0; a < ps.n_objects(); ++a)
        for (int z = 0; z < ps.n_objects(); ++z) {
          // nondegenerate cores of the closure
          std::set<std::vector<std::vector<int>>> want, got;
          for (const auto& t : tuples[a][z]) {
            std::vector<std::vector<int>> key;
            for (const Path& p : oracles::collapse_tuple(t))
              key.push_back(p.edges);
            want.insert(key);
          }
          const HomNerve& hn = g.hom(a, z);
          for (const Chain& c : hn.chains.chains) {
            std::vector<std::vector<int>> key;
            for (int i : c) key.push_back(hn.poset.elements[i].edges);
            got.insert(key);
          }
          // the closure also holds every degenerate tuple; cores of level-n
          // tuples reach down to every shorter chain, so the sets agree
          CHECK(want == got);
        }
    }
  }
}

TEST_CASE("atomic arrows of the pinned shapes") {
  // two cells side by side: each cell is atomic, their composite is not
  PastingScheme row = build_theta2({1, 1});
  auto a0 = atomic_arrows(row, 0);
  CHECK(a0.size() == 4);  // the edges
  auto a1 = atomic_arrows(row, 1);
  REQUIRE(a1.size() == 2);
  std::set<std::string> tops;
  for (auto& c : a1) tops.insert(path_to_string(row, c[0]));
  CHECK(tops == std::set<std::string>{"e1_0", "e2_0"});
  CHECK(atomic_arrows(row, 2).empty());

  // stacked cells: three 1-arrows, one genuinely 2-dimensional arrow
  PastingScheme two = build_theta2({2});
  CHECK(atomic_arrows(two, 1).size() == 3);
  auto a2 = atomic_arrows(two, 2);
  REQUIRE(a2.size() == 1);
  CHECK(path_to_string(two, a2[0][0]) == "e1_0");
  CHECK(path_to_string(two, a2[0][1]) == "e1_1");
  CHECK(path_to_string(two, a2[0][2]) == "e1_2");
  CHECK(atomic_arrows(two, 3).empty());

  // ten weakly descending triples collapse onto those atomics or shorter
  HomPoset h = hom_poset(two, 0, 1);
  int weak = 0;
  for (int i = 0; i < h.size(); ++i)
    for (int j = 0; j < h.size(); ++j)
      for (int k = 0; k < h.size(); ++k)
        if (h.le(i, j) && h.le(j, k)) ++weak;
  CHECK(weak == 10);
}

TEST_CASE("atomic scans match the interior vertex oracle") {
  std::vector<PastingScheme> shapes = {build_theta2({2}), build_theta2({1, 1}),
                                       build_theta2({3}),
                                       build_theta2({2, 1})};
  for (const PastingScheme& ps : generate_corpus(31, 10, 3))
    shapes.push_back(ps);
  for (const PastingScheme& ps : shapes)
    for (int n = 1; n <= 2; ++n) {
      auto mine = atomic_arrows(ps, n);
      auto ref = oracles::oracle_atomic_scan(ps, n);
      std::set<std::vector<std::vector<int>>> a, b;
      for (auto& c : mine) {
        std::vector<std::vector<int>> key;
        for (Path& p : c) key.push_back(p.edges);
        a.insert(key);
      }
      for (auto& c : ref) {
        std::vector<std::vector<int>> key;
        for (Path& p : c) key.push_back(p.edges);
        b.insert(key);
      }
      CHECK(a == b);
    }
}

TEST_CASE("atomic factorization splits at shared vertices") {
  PastingScheme row = build_theta2({1, 1});
  std::vector<Path> chain =
      by_strings(row, 0, {{"e1_0", "e2_0"}, {"e1_1", "e2_1"}});
  auto factors = factor_atomic(row, chain);
  REQUIRE(factors.size() == 2);
  CHECK(path_to_string(row, factors[0][0]) == "e1_0");
  CHECK(path_to_string(row, factors[0][1]) == "e1_1");
  CHECK(path_to_string(row, factors[1][0]) == "e2_0");
  CHECK(path_to_string(row, factors[1][1]) == "e2_1");

  // levelwise recomposition is the identity
  std::vector<Path> back = factors[0];
  for (size_t i = 1; i < factors.size(); ++i)
    for (size_t j = 0; j < back.size(); ++j)
      back[j] = concat(row, back[j], factors[i][j]);
  CHECK(back == chain);

  // the strict composition collapses the degenerate core instead
  std::vector<Path> wide = compose_chains(row, factors[0], factors[1]);
  CHECK(wide == chain);
  std::vector<Path> flat = compose_chains(
      row, {factors[0][0], factors[0][0]}, {factors[1][0], factors[1][0]});
  CHECK(flat.size() == 1);
  CHECK_THROWS_AS(compose_chains(row, flat, factors[1]), Error);

  // non parallel input is rejected
  std::vector<Path> skew = {row.dom, make_path(row, 0, {0})};
  CHECK_THROWS_AS(factor_atomic(row, skew), Error);

  // factor and recompose across the corpus
  for (const PastingScheme& ps : generate_corpus(37, 10, 4))
    for (int x = 0; x < ps.n_objects(); ++x)
      for (int y = 0; y < ps.n_objects(); ++y) {
        HomPoset h = hom_poset(ps, x, y);
        for (int i = 0; i < h.size(); ++i)
          for (int j = 0; j < h.size(); ++j) {
            if (!h.le(i, j)) continue;
            std::vector<Path> c = {h.elements[i], h.elements[j]};
            auto fs = factor_atomic(ps, c);
            if (fs.empty()) {
              // only the constant chain on an identity path factors to none
              CHECK(h.elements[i].edges.empty());
              CHECK(i == j);
              continue;
            }
            std::vector<Path> re = fs[0];
            for (size_t k = 1; k < fs.size(); ++k)
              for (size_t l = 0; l < re.size(); ++l)
                re[l] = concat(ps, re[l], fs[k][l]);
            CHECK(re == c);
            for (auto& f : fs) {
              auto core = f;
              core.erase(std::unique(core.begin(), core.end()), core.end());
              if (core.size() > 1)
                CHECK(oracles::oracle_is_atomic(ps, core));
            }
          }
      }
}

TEST_CASE("graph membership needs single cell factors") {
  PastingScheme tall = build_theta2({2, 1});
  std::vector<Path> jump =
      by_strings(tall, 0, {{"e1_0", "e2_0"}, {"e1_2", "e2_1"}});
  CHECK_FALSE(chain_in_graph(tall, jump));
  std::vector<Path> step =
      by_strings(tall, 0, {{"e1_0", "e2_0"}, {"e1_1", "e2_1"}});
  CHECK(chain_in_graph(tall, step));
  // descending through two stacked cells in one column leaves the graph
  std::vector<Path> vert =
      by_strings(tall, 0,
                 {{"e1_0", "e2_0"}, {"e1_1", "e2_0"}, {"e1_2", "e2_1"}});
  CHECK_FALSE(chain_in_graph(tall, vert));
  // a staircase moves one cell per level and stays inside
  std::vector<Path> stair =
      by_strings(tall, 0,
                 {{"e1_0", "e2_0"}, {"e1_1", "e2_0"}, {"e1_1", "e2_1"}});
  CHECK(chain_in_graph(tall, stair));
}

TEST_CASE("schemes present subcomputads of their nerves") {
  CHECK(is_subcomputad(build_theta2({2}), 2));
  CHECK(is_subcomputad(build_theta2({1, 1}), 2));
  CHECK(is_subcomputad(build_theta2({2, 0, 3, 0}), 2));
  for (const PastingScheme& ps : generate_corpus(43, 8, 4))
    CHECK(is_subcomputad(ps, 2));
}

TEST_CASE("hom pushout squares at an attached bottom cell") {
  // attach below the lone cell: the hom grows from a 2 chain to a 3 chain
  PastingScheme grown = attach_bottom(build_theta2({1}), 0, 1, 1, "b");
  CHECK(verify_hom_pushouts(grown, "e1_1", 0, 1));

  // attach across two cells in a row, then check the composite pair
  PastingScheme wide = attach_bottom(build_theta2({1, 1}), 0, 2, 1, "c");
  CHECK(verify_hom_pushouts(wide, "e1_1", 0, 2));

  // a top cell is not attachable from below
  CHECK_THROWS_AS(verify_hom_pushouts(grown, "e1_0", 0, 1), Error);
  // unknown face name
  CHECK_THROWS_AS(verify_hom_pushouts(grown, "nope", 0, 1), Error);

  // sweep the corpus: every bottom cell, every pair of base vertices
  for (const PastingScheme& ps : generate_corpus(47, 12, 5))
    for (int fi : bottom_cells(ps)) {
      const std::string& alpha = ps.faces[fi].name;
      PastingScheme base = delete_bottom_cell(ps, fi);
      std::set<std::string> names;
      for (int v = 0; v < base.n_objects(); ++v)
        names.insert(base.object_name(v));
      for (int a = 0; a < ps.n_objects(); ++a)
        for (int z = 0; z < ps.n_objects(); ++z) {
          if (!names.count(ps.object_name(a)) ||
              !names.count(ps.object_name(z)))
            continue;
          CHECK(verify_hom_pushouts(ps, alpha, a, z));
        }
    }
}

TEST_CASE("glued inclusion under an attached cell") {
  // one cell attached below one cell: the glued part is the spine shape
  PastingScheme grown = attach_bottom(build_theta2({1}), 0, 1, 1, "b");
  ChainComplex sub = build_glued_inclusion(grown, "e1_1", 0, 1);
  ChainComplex full = nerve(hom_as_finposet(grown, hom_poset(grown, 0, 1)));
  CHECK(sub.size() == 5);
  CHECK(full.size() == 7);
  CHECK(subcomplex_of(sub, full));
  CertifyResult res = certify_inner_anodyne(sub);
  CHECK(res.status == CertifyStatus::Certified);
  CHECK(res.cert.size() == 1);

  // a cell spanning two others misses at least one triangle
  PastingScheme wide = attach_bottom(build_theta2({1, 1}), 0, 2, 1, "c");
  ChainComplex sub2 = build_glued_inclusion(wide, "e1_1", 0, 2);
  ChainComplex full2 = nerve(hom_as_finposet(wide, hom_poset(wide, 0, 2)));
  CHECK(subcomplex_of(sub2, full2));
  CHECK(sub2.size() < full2.size());
  int missing_tri = 0;
  for (const Chain& c : full2.chains)
    if (c.size() == 3 && !sub2.contains(c)) ++missing_tri;
  CHECK(missing_tri >= 1);
  CertifyResult res2 = certify_inner_anodyne(sub2);
  CHECK(res2.status == CertifyStatus::Certified);
  CHECK(verify_certificate(sub2, res2.cert));

  // certification sweep at small size
  int seen = 0;
  for (const PastingScheme& ps : generate_corpus(59, 12, 4))
    for (int fi : bottom_cells(ps)) {
      if (ps.n_interior_faces() < 2) continue;
      ChainComplex s =
          build_glued_inclusion(ps, ps.faces[fi].name, ps.source, ps.sink);
      CertifyResult r = certify_inner_anodyne(s, 2000000);
      if (r.status == CertifyStatus::Certified) {
        CHECK(verify_certificate(s, r.cert));
        ++seen;
      }
    }
  CHECK(seen >= 3);
}

TEST_CASE("edge subdivision leaves every hom alone") {
  // a single edge divided in three: all homs stay singletons or empty
  CHECK(verify_edge_subdivision(build_theta2({0}), 0, 3));

  // divide the codomain edge under one cell
  PastingScheme one = build_theta2({1});
  int bottom = one.graph.edge_index("e1_1");
  PastingScheme fine = subdivide_edge(one, bottom, 2);
  HomPoset h = hom_poset(fine, fine.source, fine.sink);
  CHECK(h.size() == 2);
  CHECK(h.elements[0].edges.size() == 1);
  CHECK(h.elements[1].edges.size() == 2);
  CHECK(verify_edge_subdivision(one, bottom, 2));

  // the no op comparison and a middle edge of a longer shape
  CHECK(verify_edge_subdivision(one, bottom, 1));
  PastingScheme col = build_theta2({2, 0, 3, 0});
  CHECK(verify_edge_subdivision(col, col.graph.edge_index("e2_0"), 2));

  for (const PastingScheme& ps : generate_corpus(61, 8, 3))
    for (int e = 0; e < ps.n_edges(); e += 2)
      CHECK(verify_edge_subdivision(ps, e, 2, 3));
}

TEST_CASE("homwise certification of the small shapes") {
  // one cell: nothing to fill anywhere
  HomwiseReport r1 = verify_uniqueness_homwise(build_theta2({1}), 4);
  CHECK(r1.all_certified);
  CHECK(r1.subcomputad);
  for (const PairReport& p : r1.pairs) {
    CHECK(p.certified);
    CHECK(p.verified);
    CHECK(p.certificate_length == 0);
    CHECK(p.g_chains == p.nf_chains);
  }

  // stacked cells: exactly the source sink pair needs one filling
  HomwiseReport r2 = verify_uniqueness_homwise(build_theta2({2}), 4);
  CHECK(r2.all_certified);
  int nontrivial = 0;
  for (const PairReport& p : r2.pairs) {
    CHECK(p.certified);
    CHECK(p.verified);
    if (p.certificate_length > 0) {
      ++nontrivial;
      CHECK(p.a == 0);
      CHECK(p.z == 1);
      CHECK(p.certificate_length == 1);
      CHECK(p.g_chains == 5);
      CHECK(p.nf_chains == 7);
    }
  }
  CHECK(nontrivial == 1);

  // a row of cells composes without any filling
  HomwiseReport r3 = verify_uniqueness_homwise(build_theta2({1, 1}), 4);
  CHECK(r3.all_certified);
  for (const PairReport& p : r3.pairs) CHECK(p.certificate_length == 0);

  // spines: each extra stacked cell doubles the missing chains
  HomwiseReport r4 = verify_uniqueness_homwise(build_theta2({3}), 4);
  CHECK(r4.all_certified);
  for (const PairReport& p : r4.pairs)
    if (p.a == 0 && p.z == 1) {
      CHECK(p.g_chains == 7);
      CHECK(p.nf_chains == 15);
      CHECK(p.certificate_length == 4);
    }

  // identity like shapes: no interior face, empty certificates
  HomwiseReport r5 = verify_uniqueness_homwise(build_theta2({0, 0}), 4);
  CHECK(r5.all_certified);
  for (const PairReport& p : r5.pairs) CHECK(p.certificate_length == 0);

  // a starved budget reports unknown rather than claiming success
  HomwiseReport starved = verify_uniqueness_homwise(build_theta2({2}), 4, 0);
  CHECK_FALSE(starved.all_certified);

  // threads agree with the serial run
  HomwiseReport par = verify_uniqueness_homwise(build_theta2({3}), 4,
                                                  1000000, 4);
  CHECK(par.all_certified);
  REQUIRE(par.pairs.size() == r4.pairs.size());
  for (size_t i = 0; i < par.pairs.size(); ++i)
    CHECK(par.pairs[i].certificate_length == r4.pairs[i].certificate_length);
}

TEST_CASE("zero dimensional chains of graph and nerve always agree") {
  for (const PastingScheme& ps : generate_corpus(73, 10, 4)) {
    TruncSCat g = graph_scat(ps, 2);
    TruncSCat nf = nerve_f2cat(ps, 2);
    for (int a = 0; a < ps.n_objects(); ++a)
      for (int z = 0; z < ps.n_objects(); ++z) {
        CHECK(g.hom(a, z).chains.simplices(0) ==
              nf.hom(a, z).chains.simplices(0));
        // one simplices of the graph are a subset
        for (const Chain& c : g.hom(a, z).chains.chains)
          CHECK(nf.hom(a, z).chains.contains(c));
      }
  }
}
