#include <random>

#include "csf/errors.hpp"
#include "csf/partition.hpp"
#include "doctest.h"

using csf::Partition;

TEST_SUITE("partition") {
  TEST_CASE("lexicographic order") {
    CHECK(csf::lex_compare({2, 1, 1}, {2, 2}) == std::strong_ordering::less);
    CHECK(csf::lex_compare({3, 2, 1}, {3, 3}) == std::strong_ordering::less);
    for (const auto& p : csf::partitions_of(6)) {
      if (p != Partition::ones(6)) CHECK(Partition::ones(6) < p);
    }
    CHECK_THROWS_AS((void)csf::lex_compare({3}, {2, 2}), csf::SizeMismatchError);
  }

  TEST_CASE("partitions_of is sorted and complete") {
    const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) {
      auto ps = csf::partitions_of(n);
      CHECK(static_cast<int>(ps.size()) == counts[n]);
      for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1] < ps[i]);
    }
  }

  TEST_CASE("sort_concat") {
    std::vector<int> lam{3, 2, 1, 2};
    std::vector<int> mu{3, 2, 3, 1, 2};
    CHECK(csf::sort_concat(lam, mu) == Partition{3, 3, 3, 2, 2, 2, 2, 1, 1});
    std::vector<int> empty;
    std::vector<int> x{1, 4, 2};
    CHECK(csf::sort_concat(x, empty) == Partition{4, 2, 1});
    CHECK(csf::sort_concat(Partition{2}, Partition{2}) == Partition{2, 2});
    CHECK(csf::sort_concat(Partition{}, Partition{}) == Partition{});
    std::vector<int> bad{2, 0};
    CHECK_THROWS_AS((void)csf::sort_concat(bad, empty), csf::DomainError);
  }

  TEST_CASE("sort_concat is commutative and associative") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len(0, 6), val(1, 5);
    auto draw = [&] {
      std::vector<int> v(static_cast<std::size_t>(len(rng)));
      for (int& x : v) x = val(rng);
      return Partition::from_sequence(v);
    };
    for (int trial = 0; trial < 300; ++trial) {
      auto a = draw(), b = draw(), c = draw();
      CHECK(csf::sort_concat(a, b) == csf::sort_concat(b, a));
      CHECK(csf::sort_concat(csf::sort_concat(a, b), c) == csf::sort_concat(a, csf::sort_concat(b, c)));
    }
  }

  TEST_CASE("hooks") {
    CHECK(csf::is_hook({5, 1, 1, 1}));
    CHECK(csf::hook_m1({5, 1, 1, 1}) == 3);
    CHECK(csf::is_hook({7}));
    CHECK(csf::hook_m1({7}) == 0);
    CHECK_FALSE(csf::is_hook({3, 2, 1}));
    CHECK_THROWS_AS((void)csf::hook_m1({3, 2, 1}), csf::DomainError);
    for (int n = 1; n <= 9; ++n) {
      for (const auto& p : csf::partitions_of(n)) {
        if (csf::is_hook(p)) CHECK(p.size() - p.length() == p[0] - 1);
      }
    }
  }

  TEST_CASE("body and tail") {
    auto bt = csf::body_tail({3, 3, 1, 1});
    CHECK(bt.body == Partition{3, 3});
    CHECK(bt.tail == 2);
    bt = csf::body_tail({1, 1, 1});
    CHECK(bt.body.empty());
    CHECK(bt.tail == 3);
    bt = csf::body_tail({4});
    CHECK(bt.body == Partition{4});
    CHECK(bt.tail == 0);
  }

  TEST_CASE("multiplicities") {
    auto m = csf::multiplicities({4, 2, 2, 1, 1, 1});
    CHECK(m[1] == 3);
    CHECK(m[2] == 2);
    CHECK(m[3] == 0);
    CHECK(m[4] == 1);
  }

  TEST_CASE("text forms") {
    CHECK(csf::parse_partition("3+3+1+1") == Partition{3, 3, 1, 1});
    CHECK(csf::parse_partition("[1,3,3,1]") == Partition{3, 3, 1, 1});
    CHECK(csf::parse_partition("(2, 1)") == Partition{2, 1});
    CHECK(csf::parse_partition("0").empty());
    CHECK(csf::to_string(Partition{4, 2}) == "4+2");
    CHECK_THROWS_AS((void)csf::parse_partition("3+x"), csf::ParseError);
    CHECK_THROWS_AS((void)csf::parse_partition(""), csf::ParseError);
  }

  TEST_CASE("construction rejects malformed parts") {
    CHECK_THROWS_AS(Partition({1, 2}), csf::DomainError);
    CHECK_THROWS_AS(Partition({2, 0}), csf::DomainError);
  }
}
