#include "csf/errors.hpp"
#include "csf/families.hpp"
#include "csf/inference.hpp"
#include "csf/star_engine.hpp"
#include "doctest.h"
#include "paper_graphs.hpp"

using csf::KrCandidate;
using csf::Partition;
namespace fam = csf::families;

TEST_SUITE("inference") {
  TEST_CASE("pure cycle") {
    auto rep = csf::infer(csf::star_expand(fam::cycle(8)));
    CHECK(rep.cycle_size == 8);
    CHECK(rep.is_pure_cycle);
    CHECK(rep.kr_candidates == std::vector<KrCandidate>{{8, 0}});
    CHECK(rep.leaf_count_candidates == std::vector<int>{0});
    CHECK_FALSE(rep.is_cuttlefish);
  }

  TEST_CASE("the shared-hook pair is the ambiguous shape") {
    for (const auto& g : {paper::hooks_left().graph, paper::hooks_right().graph}) {
      auto rep = csf::infer(csf::star_expand(g));
      CHECK(rep.cycle_size == 4);
      CHECK(rep.kr_candidates == std::vector<KrCandidate>{{4, 4}, {5, 1}});
      CHECK(rep.longest_hook_m == 3);
    }
    auto left = csf::infer(csf::star_expand(paper::hooks_left().graph));
    CHECK(left.leaf_count_candidates.size() == 2);
  }

  TEST_CASE("recovering r") {
    auto rep = csf::infer(csf::star_expand(paper::fourteen_vertex().graph));
    CHECK(rep.cycle_size == 4);
    CHECK(rep.kr_candidates == std::vector<KrCandidate>{{7, 3}});
    CHECK(rep.longest_hook_m == 6);
    auto x = csf::star_expand(paper::fourteen_vertex().graph);
    CHECK(csf::recover_r(4, x.coefficient(Partition::hook(14, 1)), rep.longest_hook_m) == 3);
  }

  TEST_CASE("cuttlefish flag") {
    auto paw = csf::infer(csf::star_expand(fam::paw()));
    CHECK(paw.is_cuttlefish);
    CHECK(paw.cycle_size == 3);
    CHECK(paw.leading == Partition{2, 2});
    CHECK(csf::infer(csf::star_expand(fam::cuttlefish(5, 4))).is_cuttlefish);
    CHECK_FALSE(csf::infer(csf::star_expand(paper::triangle_with_tree().graph)).is_cuttlefish);
  }

  TEST_CASE("inconsistent expansions") {
    CHECK_THROWS_AS(csf::infer(csf::star_expand(fam::path(6))), csf::InconsistentReportError);
    CHECK_THROWS_AS(csf::infer(csf::star_expand(fam::complete(4))), csf::InconsistentReportError);
    CHECK_THROWS_AS(csf::infer(csf::StarExpansion::basis_element({5})), csf::InconsistentReportError);
  }
}
