#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <sstream>

#include "dtc/dtc.hpp"
#include "oracles.hpp"

namespace {

dtc::Digraph digraph(const std::string& text) {
  std::istringstream in(text);
  return dtc::parse_digraph(in);
}

}  // namespace

TEST_CASE("complex constructor dedups and drops dominated faces") {
  dtc::Complex c({"a", "b", "c"}, {{0, 1}, {1, 0}, {0}, {2}});
  REQUIRE(c.facets().size() == 2);
  REQUIRE(c.has_facet({0, 1}));
  REQUIRE(c.has_facet({2}));
  REQUIRE(c.contains({0}));
  REQUIRE_FALSE(c.contains({0, 2}));
  REQUIRE(c.dim() == 1);
  REQUIRE_FALSE(dtc::is_pure(c));
  REQUIRE_THROWS_AS(dtc::Complex({"a"}, {{1}}), dtc::domain_error);
}

TEST_CASE("directed forest test catches in-degree and cycle violations") {
  dtc::Digraph d = digraph("a b\nb c\nc a\nc b\n");
  REQUIRE(dtc::is_directed_forest(d, dtc::Face{d.edge_index(0, 1)}));
  // two edges into b
  dtc::Face two_in{d.edge_index(0, 1), d.edge_index(2, 1)};
  REQUIRE_FALSE(dtc::is_directed_forest(d, two_in));
  // directed triangle
  dtc::Face tri{d.edge_index(0, 1), d.edge_index(1, 2), d.edge_index(2, 0)};
  REQUIRE_FALSE(dtc::is_directed_forest(d, tri));
  REQUIRE_THROWS_AS(dtc::is_directed_forest(d, dtc::Face{99}),
                    dtc::domain_error);
}

TEST_CASE("tree complex facets match the brute-force forest scan") {
  for (const char* text : {
           "a b\nb c\nc a\n",              // directed triangle
           "a b\nb a\nb c\nc b\n",         // doubled path
           "a b\na c\nb c\nc a\n",         // mixed
       }) {
    dtc::Digraph d = digraph(text);
    dtc::Complex c = dtc::directed_tree_complex(d);
    REQUIRE(c.facets() == oracle::maximal_forests(d));
  }
  dtc::Digraph g3 = oracle::complete_digraph(3);
  REQUIRE(dtc::directed_tree_complex(g3).facets() ==
          oracle::maximal_forests(g3));
}

TEST_CASE("independency complex matches the brute-force scan") {
  dtc::SimpleGraph c5 = oracle::cycle_graph(5);
  REQUIRE(dtc::independency_complex(c5).facets() ==
          oracle::maximal_independent_sets(c5));
  dtc::SimpleGraph p4 = oracle::path_graph({"a", "b", "c", "d"});
  REQUIRE(dtc::independency_complex(p4).facets() ==
          oracle::maximal_independent_sets(p4));
}

TEST_CASE("conflict graph of the doubled 3-path is a 4-path") {
  dtc::Digraph d = dtc::double_directed(oracle::path_graph({"a", "b", "c"}));
  dtc::SimpleGraph cg = dtc::conflict_graph(d);
  REQUIRE(cg.n() == 4);
  REQUIRE(cg.m() == 3);
  auto edge = [&](const std::string& x, const std::string& y) {
    return cg.has_edge(cg.vertex(x), cg.vertex(y));
  };
  REQUIRE(edge("a>b", "b>a"));
  REQUIRE(edge("b>c", "c>b"));
  REQUIRE(edge("a>b", "c>b"));
  REQUIRE_FALSE(edge("b>a", "b>c"));
  // On a tree the complex and the independency complex agree.
  REQUIRE(dtc::directed_tree_complex(d) == dtc::independency_complex(cg));
}

TEST_CASE("f- and h-vectors of complete digraph complexes") {
  dtc::Complex g3 = dtc::directed_tree_complex(oracle::complete_digraph(3));
  REQUIRE(g3.facets().size() == 9);
  REQUIRE(dtc::f_vector(g3) == dtc::FVector{1, 6, 9});
  REQUIRE(dtc::h_vector(g3) == dtc::HVector{1, 4, 4});

  dtc::Complex g4 = dtc::directed_tree_complex(oracle::complete_digraph(4));
  REQUIRE(g4.facets().size() == 64);
  REQUIRE(dtc::h_vector(g4) == dtc::HVector{1, 9, 27, 27});

  auto faces = dtc::enumerate_faces(g3);
  auto fv = dtc::f_vector(g3);
  REQUIRE(static_cast<long long>(faces.size()) ==
          std::accumulate(fv.begin(), fv.end(), 0ll));
}

TEST_CASE("h-vector refuses nonpure complexes") {
  dtc::Complex np({"a", "b", "c"}, {{0, 1}, {2}});
  REQUIRE_THROWS_AS(dtc::h_vector(np), dtc::domain_error);
}

TEST_CASE("triangles of the doubled 4-path") {
  dtc::Digraph d =
      dtc::double_directed(oracle::path_graph({"a", "b", "c", "d"}));
  dtc::Complex c = dtc::directed_tree_complex(d);
  REQUIRE(c.facets().size() == 5);

  dtc::FTriangle ft = dtc::f_triangle(c);
  dtc::FTriangle want_f;
  want_f.add(3, 0, 1);
  want_f.add(3, 1, 6);
  want_f.add(3, 2, 9);
  want_f.add(3, 3, 4);
  want_f.add(2, 2, 1);
  REQUIRE(ft == want_f);

  dtc::HTriangle ht = dtc::h_triangle(c);
  dtc::HTriangle want_h;
  want_h.add(3, 0, 1);
  want_h.add(3, 1, 3);
  want_h.add(2, 2, 1);
  REQUIRE(ht == want_h);
  REQUIRE(dtc::h_from_f_triangle(ft) == ht);

  // Top row of the triangles reduces to f/h-vectors on pure complexes.
  dtc::Complex g3 = dtc::directed_tree_complex(oracle::complete_digraph(3));
  dtc::HTriangle g3h = dtc::h_triangle(g3);
  REQUIRE(g3h.get(2, 0) == 1);
  REQUIRE(g3h.get(2, 1) == 4);
  REQUIRE(g3h.get(2, 2) == 4);
}

TEST_CASE("triangle cells drop zeros and compare by value") {
  dtc::Triangle t;
  t.add(2, 1, 5);
  t.add(2, 1, -5);
  REQUIRE(t.cells.empty());
  t.add(3, 0, 1);
  REQUIRE(t.get(3, 0) == 1);
  REQUIRE(t.get(9, 9) == 0);
  REQUIRE(t.max_row() == 3);
}

TEST_CASE("skeleton keeps low faces and caps high ones") {
  dtc::Digraph d =
      dtc::double_directed(oracle::path_graph({"a", "b", "c", "d"}));
  dtc::Complex c = dtc::directed_tree_complex(d);
  dtc::Complex one = dtc::skeleton(c, 1);
  REQUIRE(dtc::is_pure(one));
  REQUIRE(one.facets().size() == 10);
  dtc::Complex zero = dtc::skeleton(c, 0);
  REQUIRE(zero.facets().size() == 6);
  dtc::Complex same = dtc::skeleton(c, 5);
  REQUIRE(same == c);
  dtc::Complex empty = dtc::skeleton(c, -1);
  REQUIRE(empty.dim() == -1);
  REQUIRE_THROWS_AS(dtc::skeleton(c, -2), dtc::domain_error);
}

TEST_CASE("removing facet interiors exposes the boundary") {
  dtc::Complex full({"a", "b", "c"}, {{0, 1, 2}});
  dtc::Complex rim = dtc::remove_facet_interiors(full, {{0, 1, 2}});
  REQUIRE(rim.facets().size() == 3);
  REQUIRE(rim.dim() == 1);
  REQUIRE_THROWS_AS(dtc::remove_facet_interiors(full, {{0, 1}}),
                    dtc::domain_error);
}
