#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "gapsets/gapset.hpp"

using namespace gapsets;

namespace {

// Naive reimplementations straight from the definitions, on std::set.
namespace oracle {

bool is_gapset(const std::set<int>& s) {
  for (int z : s) {
    for (int x = 1; x < z; ++x) {
      if (!s.count(x) && !s.count(z - x)) return false;
    }
  }
  return true;
}

struct Inv {
  int g, m, c, f, q, kappa;
};

Inv invariants(const std::set<int>& s) {
  int m = 1;
  while (s.count(m)) ++m;
  const int f = s.empty() ? 0 : *s.rbegin();
  const int c = f + 1;
  const int q = (c + m - 1) / m;
  int kappa = 0;
  if (s.size() == 1) kappa = 1;
  for (auto it = s.begin(); it != s.end() && std::next(it) != s.end(); ++it) kappa = std::max(kappa, *std::next(it) - *it);
  return {static_cast<int>(s.size()), m, c, f, q, kappa};
}

std::vector<int> pseudo_frobenius(const std::set<int>& s) {
  const int f = *s.rbegin();
  std::vector<int> pf;
  for (int x : s) {
    bool ok = true;
    for (int t = 1; t <= f && ok; ++t) {
      if (!s.count(t) && s.count(x + t)) ok = false;
    }
    if (ok) pf.push_back(x);
  }
  return pf;
}

}  // namespace oracle

std::set<int> subset_of_mask(std::uint32_t mask) {
  std::set<int> s;
  for (int b = 0; b < 32; ++b) {
    if ((mask >> b) & 1U) s.insert(b + 1);
  }
  return s;
}

std::vector<int> vec(const std::set<int>& s) { return {s.begin(), s.end()}; }

std::vector<int> vec(std::span<const int> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("is_gapset on reference sets") {
  CHECK(is_gapset(std::vector<int>{}));
  CHECK(is_gapset(std::vector<int>{1, 2, 4, 5}));
  CHECK_FALSE(is_gapset(std::vector<int>{2, 3}));
  CHECK(is_gapset(std::vector<int>{1, 3, 5, 7}));
  CHECK(is_gapset(std::vector<int>{1, 2, 3, 4, 6, 7, 8, 13}));
  CHECK_FALSE(is_gapset(std::vector<int>{1, 2, 3, 4, 6, 7, 8, 12, 14}));
}

TEST_CASE("is_gapset agrees with the oracle on every subset of [1,13]") {
  for (std::uint32_t mask = 0; mask < (1U << 13); ++mask) {
    const auto s = subset_of_mask(mask);
    const bool expected = oracle::is_gapset(s);
    REQUIRE(is_gapset(vec(s)) == expected);
    if (!expected) CHECK_THROWS_AS(GapSet(std::span<const int>(vec(s))), InvalidGapSet);
  }
}

TEST_CASE("invariants, PF and symmetry agree with the oracle on every gapset inside [1,13]") {
  for (std::uint32_t mask = 1; mask < (1U << 13); ++mask) {
    const auto s = subset_of_mask(mask);
    if (!oracle::is_gapset(s)) continue;
    const GapSet g{std::span<const int>(vec(s))};
    const auto o = oracle::invariants(s);
    const Invariants inv = invariants(g);
    CAPTURE(join_gaps(g.elements()));
    CHECK(inv.genus == o.g);
    CHECK(inv.multiplicity == o.m);
    CHECK(inv.conductor == o.c);
    CHECK(inv.frobenius == o.f);
    CHECK(inv.depth == o.q);
    CHECK(inv.sparsity == o.kappa);
    CHECK(pseudo_frobenius(g).members == oracle::pseudo_frobenius(s));

    const Symmetry expected = o.f == 2 * o.g - 1   ? Symmetry::symmetric
                              : o.f == 2 * o.g - 2 ? Symmetry::pseudo_symmetric
                                                   : Symmetry::neither;
    CHECK(symmetry_class(g) == expected);

    const auto p = canonical_partition(g);
    CHECK(p.multiplicity == o.m);
    CHECK(p.depth() == o.q);
    std::vector<int> concat;
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
      for (int x : p.blocks[i]) {
        CHECK(x > static_cast<int>(i) * o.m);
        CHECK(x < static_cast<int>(i + 1) * o.m);
        CHECK(p.block_of(x) == static_cast<int>(i));
      }
      concat.insert(concat.end(), p.blocks[i].begin(), p.blocks[i].end());
    }
    CHECK(concat == vec(s));
  }
}

TEST_CASE("invariants of reference gapsets") {
  CHECK(invariants(GapSet{1, 3, 5, 7}) == Invariants{4, 2, 8, 7, 4, 2});
  CHECK(invariants(GapSet{1, 2, 3, 4, 7}) == Invariants{5, 5, 8, 7, 2, 3});
  CHECK(invariants(GapSet{}) == Invariants{0, 1, 1, 0, 1, 0});
  CHECK(sparsity(GapSet{1}) == 1);
  CHECK(multiplicity(GapSet{1, 2, 4, 5}) == 3);
  CHECK(frobenius(GapSet{1, 2, 4, 5}) == 5);
}

TEST_CASE("canonical partition of reference gapsets") {
  using Blocks = std::vector<std::vector<int>>;
  CHECK(canonical_partition(GapSet{1, 3, 5, 7}).blocks == Blocks{{1}, {3}, {5}, {7}});
  CHECK(canonical_partition(GapSet{1, 2, 3, 5}).blocks == Blocks{{1, 2, 3}, {5}});
  const GapSet g{1, 2, 3, 4, 5, 6, 7, 9, 10, 11, 12, 17, 25};
  CHECK(canonical_partition(g).blocks == Blocks{{1, 2, 3, 4, 5, 6, 7}, {9, 10, 11, 12}, {17}, {25}});
  CHECK(canonical_partition(g).block_of(8) == -1);
  CHECK_THROWS_AS((void)canonical_partition(GapSet{}), std::domain_error);
}

TEST_CASE("pseudo-Frobenius sets and symmetry classes") {
  CHECK(pseudo_frobenius(GapSet{1, 3, 5, 7}).members == std::vector<int>{7});
  CHECK(pseudo_frobenius(GapSet{1, 2, 4, 5, 8}).members == std::vector<int>{4, 8});
  const auto pf = pseudo_frobenius(GapSet{1, 2, 3, 4, 7});
  CHECK(pf.members == std::vector<int>{3, 4, 7});
  CHECK(pf.type() == 3);
  CHECK(symmetry_class(GapSet{1, 3, 5, 7}) == Symmetry::symmetric);
  CHECK(symmetry_class(GapSet{1, 2, 4, 5, 8}) == Symmetry::pseudo_symmetric);
  CHECK(symmetry_class(GapSet{1, 2, 3, 5}) == Symmetry::neither);
}

TEST_CASE("jump profiles") {
  const auto a = jump_profile(GapSet{1, 3, 5, 7}, 2);
  CHECK(a.jump_indices == std::vector<int>{1, 2, 3});
  CHECK(a.alpha() == 3);
  const auto b = jump_profile(GapSet{1, 2, 4, 5}, 2);
  CHECK(b.jump_indices == std::vector<int>{2});
  CHECK(b.alpha() == 2);
  const GapSet g{1, 2, 3, 4, 5, 6, 7, 9, 10, 11, 12, 17, 25};
  CHECK(jump_profile(g, 8).jump_indices == std::vector<int>{12});
  CHECK(jump_profile(g, 8).alpha() == g.genus() - 1);
  CHECK(jump_profile(GapSet{1, 2, 3, 5}, 7).alpha() == 0);
  CHECK_THROWS_AS((void)jump_profile(GapSet{1}, 1), std::domain_error);
  CHECK(is_pure_sparse(g, 8));
  CHECK_FALSE(is_pure_sparse(g, 9));
}

TEST_CASE("m-sets") {
  CHECK(is_m_set(std::vector<int>{1, 2, 3, 5}, 4));
  CHECK_FALSE(is_m_set(std::vector<int>{1, 2, 3, 4}, 3));
  CHECK(is_m_set(std::vector<int>{1, 2, 3, 4, 5}, 6));
  CHECK_FALSE(is_m_set(std::vector<int>{1, 3}, 3));
  CHECK(m_set_depth(std::vector<int>{1, 2, 3, 5}, 4) == 2);
  CHECK(m_set_depth(std::vector<int>{1, 3, 5, 7}, 2) == 4);
  CHECK_THROWS_AS((void)is_m_set(std::vector<int>{1}, 0), std::invalid_argument);
}

TEST_CASE("construction and validation") {
  CHECK_THROWS_AS(GapSet({2, 3}), InvalidGapSet);
  CHECK_THROWS_AS(GapSet({1, 1}), InvalidGapSet);
  CHECK_THROWS_AS(GapSet({0, 1}), InvalidGapSet);
  CHECK_THROWS_AS(GapSet({1, 128}), InvalidGapSet);
  CHECK(GapSet{5, 1, 3, 7} == GapSet{1, 3, 5, 7});
  CHECK(GapSet{1, 2} < GapSet{1, 3});
  CHECK(GapSet{1, 3, 5, 7}.gap(4) == 7);
  CHECK(GapSet{1, 3, 5, 7}.contains(5));
  CHECK_FALSE(GapSet{1, 3, 5, 7}.contains(0));
  CHECK_THROWS_AS((void)GapSet{}.max(), std::domain_error);

  const IntSet s{5, 1, 3, 3};
  CHECK(vec(s.elements()) == std::vector<int>{1, 3, 5});
  CHECK_THROWS_AS(IntSet({0, 1}), std::invalid_argument);
}

TEST_CASE("parse and format gap lists") {
  CHECK(parse_gaps("1,2,4,5") == std::vector<int>{1, 2, 4, 5});
  CHECK(parse_gaps("{1, 3, 5, 7}") == std::vector<int>{1, 3, 5, 7});
  CHECK(parse_gaps("[1,2]") == std::vector<int>{1, 2});
  CHECK(parse_gaps("").empty());
  CHECK_THROWS_AS((void)parse_gaps("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_gaps("1,x"), std::invalid_argument);
  std::ostringstream os;
  os << GapSet{1, 2, 4, 5};
  CHECK(os.str() == "{1,2,4,5}");
  CHECK(to_string(Symmetry::pseudo_symmetric) == "pseudo_symmetric");
  CHECK(parse_symmetry("pseudo") == Symmetry::pseudo_symmetric);
  CHECK_THROWS_AS((void)parse_symmetry("odd"), std::invalid_argument);
}

TEST_CASE("property: random sets in [1,40]") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 4000; ++trial) {
    std::set<int> s;
    // Dense prefixes make gapsets likely.
    const int prefix = std::uniform_int_distribution<int>(0, 12)(rng);
    for (int x = 1; x <= prefix; ++x) s.insert(x);
    const int extra = std::uniform_int_distribution<int>(0, 8)(rng);
    for (int i = 0; i < extra; ++i) s.insert(std::uniform_int_distribution<int>(1, 40)(rng));
    const auto v = vec(s);
    CAPTURE(join_gaps(v));
    const bool expected = oracle::is_gapset(s);
    REQUIRE(is_gapset(v) == expected);
    CHECK(parse_gaps(join_gaps(v)) == v);
    if (!expected || s.empty()) continue;
    const GapSet g{std::span<const int>(v)};
    const auto o = oracle::invariants(s);
    CHECK(invariants(g).sparsity == o.kappa);
    CHECK(invariants(g).depth == o.q);
    CHECK(pseudo_frobenius(g).members == oracle::pseudo_frobenius(s));
    // m-set view of a gapset has the same depth.
    CHECK(is_m_set(v, o.m));
    CHECK(m_set_depth(v, o.m) == o.q);
    // A gapset lies in [1, 2g-1].
    CHECK(g.max() <= 2 * g.genus() - 1);
  }
}
