#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "dtc/dtc.hpp"
#include "oracles.hpp"

namespace {

dtc::Digraph digraph(const std::string& text) {
  std::istringstream in(text);
  return dtc::parse_digraph(in);
}

}  // namespace

TEST_CASE("first-leaf analysis distinguishes the three edge patterns") {
  // Leaf with an incoming edge only.
  dtc::Digraph a = digraph("z m\nz q\n");
  dtc::LeafCase ca = dtc::analyze_first_leaf(a);
  REQUIRE(ca.kind == dtc::LeafKind::a);
  REQUIRE(a.label(ca.v) == "m");
  REQUIRE(a.label(ca.x) == "z");

  // Leaf with an outgoing edge only, one extra in-neighbor at x.
  dtc::Digraph b = digraph("a b\nc b\nd c\n");
  dtc::LeafCase cb = dtc::analyze_first_leaf(b);
  REQUIRE(cb.kind == dtc::LeafKind::b);
  REQUIRE(b.label(cb.v) == "a");
  REQUIRE(b.label(cb.x) == "b");
  REQUIRE(cb.y_list.size() == 1);
  REQUIRE(b.label(cb.y_list[0]) == "c");
  REQUIRE(cb.s == 0);

  // Doubled edge: both directions at the leaf.
  dtc::Digraph c = digraph("a b\nb a\n");
  REQUIRE(dtc::analyze_first_leaf(c).kind == dtc::LeafKind::c);

  REQUIRE_THROWS_AS(dtc::analyze_first_leaf(digraph("a b\nb c\nc a\n")),
                    dtc::domain_error);
}

TEST_CASE("recursive shelling of the doubled edge") {
  dtc::Digraph d = digraph("a b\nb a\n");
  dtc::ShellingOrder o = dtc::recursive_shelling(d);
  REQUIRE(o.facets.size() == 2);
  REQUIRE(d.edge_label(o.facets[0][0]) == "b>a");
  REQUIRE(d.edge_label(o.facets[1][0]) == "a>b");
  REQUIRE(o.types == std::vector<int>{0, 1});
  dtc::Complex cx = dtc::directed_tree_complex(d);
  REQUIRE(dtc::is_valid(dtc::verify_shelling(cx, o.facets)));
}

TEST_CASE("recursive shelling of the doubled 4-path") {
  dtc::Digraph d =
      dtc::double_directed(oracle::path_graph({"a", "b", "c", "d"}));
  dtc::Complex cx = dtc::directed_tree_complex(d);
  dtc::ShellingOrder o = dtc::recursive_shelling(d);
  REQUIRE(o.facets.size() == 5);
  REQUIRE(dtc::is_valid(dtc::verify_shelling(cx, o.facets)));
  REQUIRE(oracle::interval_partition(cx, o));
  REQUIRE(dtc::shelling_h_triangle(o) == dtc::h_triangle(cx));
  REQUIRE(dtc::h_triangle_via_recursion(d) == dtc::h_triangle(cx));

  auto gens = dtc::generating_facets_tree(d);
  REQUIRE(gens == dtc::generating_facets_from_order(o));
  REQUIRE(gens.size() == 1);
  REQUIRE(dtc::face_labels(cx, gens[0]) ==
          std::vector<std::string>{"a>b", "d>c"});
}

TEST_CASE("two edges into one head give one generating vertex") {
  // The complex is a 0-sphere; exactly one of the two facets must be
  // generating, and it is the one from the extra in-neighbor block.
  dtc::Digraph d = digraph("v x\ny x\n");
  dtc::ShellingOrder o = dtc::recursive_shelling(d);
  REQUIRE(o.facets.size() == 2);
  REQUIRE(o.types == std::vector<int>{0, 1});
  auto gens = dtc::generating_facets_tree(d);
  REQUIRE(gens.size() == 1);
  REQUIRE(d.edge_label(gens[0][0]) == "y>x");
  dtc::Complex cx = dtc::directed_tree_complex(d);
  dtc::Complex cut = dtc::remove_facet_interiors(cx, gens);
  REQUIRE(dtc::betti(cut).all_zero());
}

TEST_CASE("recursion agrees with direct computation on oriented trees") {
  for (const char* text : {
           "a b\nb c\nc d\n",          // path all one way
           "b a\nb c\nd c\n",          // mixed orientation
           "a b\nb a\nb c\nc d\nd c\n" // partially doubled
       }) {
    dtc::Digraph d = digraph(text);
    dtc::Complex cx = dtc::directed_tree_complex(d);
    dtc::ShellingOrder o = dtc::recursive_shelling(d);
    REQUIRE(dtc::is_valid(dtc::verify_shelling(cx, o.facets)));
    REQUIRE(dtc::h_triangle_via_recursion(d) == dtc::h_triangle(cx));
    REQUIRE(dtc::generating_facets_tree(d) ==
            dtc::generating_facets_from_order(o));
    REQUIRE(oracle::interval_partition(cx, o));
  }
}

TEST_CASE("recursion and triangles across all doubled trees up to six") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& t : dtc::all_trees(n)) {
      dtc::Digraph d = dtc::double_directed(t);
      dtc::Complex cx = dtc::directed_tree_complex(d);
      dtc::ShellingOrder o = dtc::recursive_shelling(d);
      REQUIRE(dtc::is_valid(dtc::verify_shelling(cx, o.facets)));
      REQUIRE(dtc::h_triangle_via_recursion(d) == dtc::h_triangle(cx));
      auto gens = dtc::generating_facets_tree(d);
      REQUIRE(gens == dtc::generating_facets_from_order(o));

      // The ordered decompositions list exactly the generating facets.
      dtc::DecompositionResult dec = dtc::enumerate_basic_decompositions(t);
      std::vector<dtc::Face> from_pieces;
      for (const auto& b : dec.decompositions)
        from_pieces.push_back(b.generating);
      std::sort(from_pieces.begin(), from_pieces.end());
      REQUIRE(from_pieces == gens);
    }
}

TEST_CASE("acyclic wedge formula") {
  // Two roots feeding one sink: a 0-sphere.
  dtc::Digraph join = digraph("a c\nb c\n");
  REQUIRE(dtc::dag_homotopy(join) == dtc::WedgeProfile{{0, 1}});

  // A vertex of in-degree 1 makes the product vanish.
  dtc::Digraph chain = digraph("a b\nb c\n");
  REQUIRE(dtc::dag_homotopy(chain).empty());

  // Double join: product of (indegree - 1) over non-roots.
  dtc::Digraph dbl = digraph("a c\nb c\na d\nb d\n");
  REQUIRE(dtc::dag_homotopy(dbl) == dtc::WedgeProfile{{1, 1}});
  dtc::BettiVector bv = dtc::betti(dtc::directed_tree_complex(dbl));
  REQUIRE(bv.at(1) == 1);
  REQUIRE(bv.at(0) == 0);

  // Edgeless input: the complex is {∅}.
  dtc::Digraph lone;
  lone.add_vertex("a");
  REQUIRE(dtc::dag_homotopy(lone) == dtc::WedgeProfile{{-1, 1}});

  REQUIRE_THROWS_AS(dtc::dag_homotopy(digraph("a b\nb c\nc a\n")),
                    dtc::domain_error);
}

TEST_CASE("basic tree recognition") {
  REQUIRE(dtc::is_basic_tree(oracle::path_graph({"a", "b"})));
  REQUIRE(dtc::is_basic_tree(oracle::path_graph({"a", "b", "c", "d"})));
  REQUIRE_FALSE(dtc::is_basic_tree(oracle::path_graph({"a", "b", "c"})));
  REQUIRE_FALSE(
      dtc::is_basic_tree(oracle::path_graph({"a", "b", "c", "d", "e", "f"})));

  std::istringstream in("c a\nc b\nc d\n");
  REQUIRE_FALSE(dtc::is_basic_tree(dtc::parse_simple_graph(in)));
  REQUIRE_THROWS_AS(dtc::is_basic_tree(oracle::cycle_graph(4)),
                    dtc::domain_error);

  // Census of basic trees by size: 1, 1, 1, 2 for n = 2, 4, 6, 8.
  std::map<int, int> counts;
  for (int n : {2, 4, 6, 8})
    for (const auto& t : dtc::all_trees(n)) counts[n] += dtc::is_basic_tree(t);
  REQUIRE(counts == (std::map<int, int>{{2, 1}, {4, 1}, {6, 1}, {8, 2}}));
}

TEST_CASE("ordered decompositions of small paths") {
  dtc::DecompositionResult p4 =
      dtc::enumerate_basic_decompositions(oracle::path_graph({"a", "b", "c", "d"}));
  REQUIRE(p4.decompositions.size() == 1);
  REQUIRE(p4.decompositions[0].pieces.size() == 1);
  REQUIRE(p4.mu == (std::map<int, long long>{{1, 1}}));

  dtc::DecompositionResult p5 = dtc::enumerate_basic_decompositions(
      oracle::path_graph({"a", "b", "c", "d", "e"}));
  REQUIRE(p5.mu == (std::map<int, long long>{{2, 1}}));

  dtc::DecompositionResult p6 = dtc::enumerate_basic_decompositions(
      oracle::path_graph({"a", "b", "c", "d", "e", "f"}));
  REQUIRE(p6.decompositions.empty());

  REQUIRE_THROWS_AS(dtc::enumerate_basic_decompositions(oracle::cycle_graph(3)),
                    dtc::domain_error);
}

TEST_CASE("wedge profiles from decompositions match homology") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& t : dtc::all_trees(n)) {
      dtc::WedgeProfile w = dtc::tree_homotopy(t);
      dtc::Complex cx = dtc::directed_tree_complex(dtc::double_directed(t));
      REQUIRE(dtc::wedge_check(cx, w));
      if (dtc::is_basic_tree(t)) {
        REQUIRE(w.size() == 1);
        REQUIRE(w.begin()->first == n / 2 - 1);
        REQUIRE(w.begin()->second == 1);
      }
    }
}

TEST_CASE("extremal dimension report") {
  dtc::ExtremalReport rep = dtc::extremal_dims_report(4, dtc::all_trees(4));
  REQUIRE(rep.rows.size() == 2);
  REQUIRE(rep.claimed_max_dim == 1);
  REQUIRE(rep.max_top_dim == 1);
  REQUIRE(rep.max_claim_holds);
  REQUIRE(rep.contractible == 1);  // the star on four vertices
  REQUIRE(rep.second_claim_dim == 1);

  REQUIRE_THROWS_AS(dtc::extremal_dims_report(4, dtc::all_trees(5)),
                    dtc::domain_error);
}

TEST_CASE("tree and graph enumeration counts") {
  const int tree_counts[] = {1, 1, 2, 3, 6, 11, 23};
  for (int n = 2; n <= 8; ++n)
    REQUIRE(dtc::all_trees(n).size() ==
            static_cast<std::size_t>(tree_counts[n - 2]));
  for (const auto& t : dtc::all_trees(7)) REQUIRE(dtc::is_tree(t));

  REQUIRE(dtc::all_connected_graphs(2).size() == 1);
  REQUIRE(dtc::all_connected_graphs(3).size() == 2);
  REQUIRE(dtc::all_connected_graphs(4).size() == 6);
  REQUIRE(dtc::all_connected_graphs(5).size() == 21);
  for (const auto& g : dtc::all_connected_graphs(5))
    REQUIRE(dtc::is_connected(g));

  REQUIRE_THROWS_AS(dtc::all_trees(10), dtc::domain_error);
  REQUIRE_THROWS_AS(dtc::all_connected_graphs(7), dtc::domain_error);
}
