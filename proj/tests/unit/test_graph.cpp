#include <algorithm>

#include "csf/enumerate.hpp"
#include "csf/errors.hpp"
#include "csf/families.hpp"
#include "csf/graph.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "paper_graphs.hpp"

using csf::Graph;
using csf::Partition;
namespace fam = csf::families;

namespace {

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("delete_edge") {
    auto c3 = fam::cycle(3);
    CHECK(oracle::isomorphic(csf::delete_edge(c3, {0, 1}), fam::path(3)));

    auto paw = paper::paw();
    auto g = csf::delete_edge(paw.graph, {paw["A1"], paw["A3"]});
    Graph expected(4, {{paw["A1"], paw["A2"]}, {paw["A2"], paw["A3"]}, {paw["A3"], paw["A4"]}});
    CHECK(g == expected);

    auto p2 = csf::delete_edge(fam::path(2), {0, 1});
    CHECK(p2.edge_count() == 0);
    CHECK(p2.vertex_count() == 2);
    CHECK_THROWS_AS(csf::delete_edge(fam::path(3), {0, 2}), csf::MissingEdgeError);
  }

  TEST_CASE("leaf_contract") {
    auto paw = paper::paw();
    auto lc = csf::leaf_contract(paw.graph, {paw["A1"], paw["A3"]});
    CHECK(oracle::isomorphic(lc.graph, fam::star(4)));
    CHECK(lc.graph.degree(std::min(paw["A1"], paw["A3"])) == 3);
    CHECK(lc.graph.degree(lc.leaf_edge.v) == 1);

    auto c3 = csf::leaf_contract(fam::cycle(3), {0, 1});
    CHECK(oracle::isomorphic(c3.graph, fam::path(3)));
    CHECK(c3.graph.degree(0) == 2);

    auto p2 = csf::leaf_contract(fam::path(2), {0, 1});
    CHECK(p2.graph == fam::path(2));
  }

  TEST_CASE("dot_contract") {
    auto paw = paper::paw();
    auto g = csf::dot_contract(paw.graph, {paw["A1"], paw["A3"]});
    CHECK(oracle::isomorphic(g, csf::disjoint_union(fam::path(3), Graph(1))));
    CHECK(csf::component_partition(g) == Partition{3, 1});
    CHECK(csf::isolated_count(g) == 1);

    auto c3 = csf::dot_contract(fam::cycle(3), {1, 2});
    CHECK(oracle::isomorphic(c3, csf::disjoint_union(fam::path(2), Graph(1))));

    auto p2 = csf::dot_contract(fam::path(2), {0, 1});
    CHECK(p2.edge_count() == 0);
    CHECK(csf::isolated_count(p2) == 2);
  }

  TEST_CASE("internal edges") {
    CHECK(csf::internal_edges(fam::star(4)).empty());
    auto p5 = csf::internal_edges(fam::path(5));
    CHECK(p5 == std::vector<csf::EdgeRef>{{1, 2}, {2, 3}});

    auto f = paper::fourteen_vertex();
    std::vector<csf::EdgeRef> expected{{f["v1"], f["v2"]}, {f["v2"], f["v3"]},   {f["v3"], f["v4"]},
                                       {f["v4"], f["v1"]}, {f["v1"], f["v5"]},   {f["v3"], f["v11"]},
                                       {f["v11"], f["v12"]}};
    std::sort(expected.begin(), expected.end());
    CHECK(csf::internal_edges(f.graph) == expected);
  }

  TEST_CASE("leaf component partition") {
    CHECK(csf::leaf_component_partition(paper::six_vertex_forest()) == Partition{3, 2, 1});
    CHECK(csf::leaf_component_partition(fam::cycle(7)) == Partition::ones(7));
    CHECK(csf::leaf_component_partition(paper::leading_example().graph) == Partition{3, 3, 3, 2, 2, 2, 2, 1, 1});
  }

  TEST_CASE("vertex classification") {
    auto f = paper::fourteen_vertex();
    auto cls = csf::classify_vertices(f.graph);
    CHECK(sorted(cls.deep) == sorted({f["v3"], f["v4"], f["v11"]}));
    CHECK(cls.sprouts == std::vector<int>{f["v3"]});

    auto st5 = csf::classify_vertices(fam::star(5));
    CHECK(st5.deep.empty());
    CHECK(st5.leaves == std::vector<int>{1, 2, 3, 4});

    auto c6 = csf::classify_vertices(fam::cycle(6));
    CHECK(c6.deep.size() == 6);
    CHECK(c6.sprouts.empty());
  }

  TEST_CASE("components") {
    auto g = csf::disjoint_union(fam::path(3), Graph(1));
    CHECK(csf::component_partition(g) == Partition{3, 1});
    CHECK(csf::isolated_count(g) == 1);
    CHECK(csf::component_partition(Graph(5)) == Partition::ones(5));
    CHECK(csf::isolated_count(Graph(5)) == 5);
    CHECK(csf::component_partition(fam::paw()) == Partition{4});
    CHECK(csf::isolated_count(fam::paw()) == 0);
  }

  TEST_CASE("unique cycle") {
    auto cyc = csf::unique_cycle(paper::fourteen_vertex().graph);
    REQUIRE(cyc);
    CHECK(cyc->size() == 4);
    CHECK_FALSE(csf::unique_cycle(fam::path(5)));
    CHECK_FALSE(csf::unique_cycle(fam::complete(4)));
  }

  TEST_CASE("DNC operations on every internal edge of connected graphs up to 7 vertices") {
    for (int n = 2; n <= 7; ++n) {
      for (const auto& g : csf::enumerate_connected(n)) {
        const int before = static_cast<int>(csf::internal_edges(g).size());
        for (const auto& e : csf::internal_edges(g)) {
          auto del = csf::delete_edge(g, e);
          auto dot = csf::dot_contract(g, e);
          auto leaf = csf::leaf_contract(g, e).graph;
          CHECK(del.vertex_count() == n);
          CHECK(dot.vertex_count() == n);
          CHECK(leaf.vertex_count() == n);
          CHECK(static_cast<int>(csf::internal_edges(del).size()) < before);
          CHECK(static_cast<int>(csf::internal_edges(dot).size()) < before);
          CHECK(static_cast<int>(csf::internal_edges(leaf).size()) < before);
        }
        auto stripped = csf::strip_internal_edges(g);
        CHECK(csf::internal_edges(stripped).empty());
        for (const auto& comp : csf::connected_components(stripped)) {
          auto sub = csf::induced_subgraph(stripped, comp);
          CHECK(sub.edge_count() == sub.vertex_count() - 1);
        }
      }
    }
  }

  TEST_CASE("relabel and disjoint union") {
    auto p = fam::path(4);
    std::vector<int> perm{3, 2, 1, 0};
    CHECK(csf::relabel(p, perm) == p);
    auto u = csf::disjoint_union(fam::cycle(3), fam::path(2));
    CHECK(u.vertex_count() == 5);
    CHECK(u.has_edge(3, 4));
    CHECK(csf::degree_sequence(fam::paw()) == std::vector<int>{3, 2, 2, 1});
  }

  TEST_CASE("construction errors") {
    CHECK_THROWS_AS(Graph(65), csf::TooLargeError);
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), csf::DomainError);
    CHECK_THROWS_AS(g.add_edge(0, 3), csf::DomainError);
  }
}
