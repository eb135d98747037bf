#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <map>

#include "gapsets/enumerate.hpp"
#include "reference_counts.hpp"

using namespace gapsets;

namespace {

std::vector<GapSet> gapsets_of(std::initializer_list<std::initializer_list<int>> lists) {
  std::vector<GapSet> out;
  for (auto l : lists) out.emplace_back(l);
  return out;
}

}  // namespace

TEST_CASE("enumerate_genus on small genera") {
  CHECK(enumerate_genus(0) == std::vector<GapSet>{GapSet{}});
  CHECK(enumerate_genus(1) == std::vector<GapSet>{GapSet{1}});
  CHECK(enumerate_genus(3).size() == 4);
  CHECK(enumerate_genus(4).size() == 7);
  CHECK(enumerate_genus(10).size() == 204);
  CHECK(enumerate_genus(2) == gapsets_of({{1, 2}, {1, 3}}));
  CHECK_THROWS_AS((void)enumerate_genus(-1), std::invalid_argument);
  CHECK_THROWS_AS((void)enumerate_genus(kMaxGenus + 1), std::invalid_argument);
}

TEST_CASE("enumeration equals the brute-force oracle for g <= 11") {
  const auto lists = enumerate_up_to(11);
  for (int g = 0; g <= 11; ++g) {
    CAPTURE(g);
    CHECK(lists[static_cast<std::size_t>(g)] == brute_force_genus(g));
  }
}

TEST_CASE("brute-force oracle guard") {
  CHECK(brute_force_genus(1) == std::vector<GapSet>{GapSet{1}});
  CHECK(brute_force_genus(3).size() == 4);
  CHECK_THROWS_AS((void)brute_force_genus(kOracleGenusLimit + 1), std::out_of_range);
}

TEST_CASE("enumerate_selected keeps the requested order") {
  const int genera[] = {5, 2, 5};
  const auto lists = enumerate_selected(genera);
  REQUIRE(lists.size() == 3);
  CHECK(lists[0] == enumerate_genus(5));
  CHECK(lists[1] == enumerate_genus(2));
  CHECK(lists[2] == lists[0]);
}

TEST_CASE("results do not depend on thread count or split depth") {
  const auto reference = enumerate_genus(14, {1, 1});
  const auto ref_table = count_table(16, {1, 1});
  for (unsigned threads : {1U, 2U, 3U, 8U}) {
    for (int split : {1, 3, 6, 10, 40}) {
      CAPTURE(threads);
      CAPTURE(split);
      const EnumerationOptions opts{threads, split};
      CHECK(enumerate_genus(14, opts) == reference);
      const auto t = count_table(16, opts);
      CHECK(t.cells == ref_table.cells);
      CHECK(t.totals == ref_table.totals);
    }
  }
}

TEST_CASE("GAPSETS_THREADS selects the default thread count") {
  ::setenv("GAPSETS_THREADS", "3", 1);
  CHECK(default_thread_count() == 3);
  ::setenv("GAPSETS_THREADS", "junk", 1);
  CHECK(default_thread_count() >= 1);
  ::unsetenv("GAPSETS_THREADS");
  CHECK(default_thread_count() >= 1);
}

TEST_CASE("filters reproduce the listed families") {
  FamilyFilter f;
  f.genus = 4;
  f.kappa = 2;
  CHECK(enumerate_filtered(f) == gapsets_of({{1, 2, 3, 5}, {1, 2, 4, 5}, {1, 3, 5, 7}}));
  f.genus = 5;
  f.kappa = 3;
  CHECK(enumerate_filtered(f) == gapsets_of({{1, 2, 3, 4, 7}, {1, 2, 3, 6, 7}, {1, 2, 4, 5, 8}}));
  f.genus = 7;
  f.kappa = 4;
  CHECK(enumerate_filtered(f).size() == 8);

  // Non-pure: at most kappa.
  FamilyFilter at_most;
  at_most.genus = 7;
  at_most.kappa = 4;
  at_most.pure = false;
  CHECK(enumerate_filtered(at_most).size() == 1 + 10 + 12 + 8);

  FamilyFilter sym;
  sym.genus = 4;
  sym.kappa = 2;
  sym.symmetry = Symmetry::symmetric;
  CHECK(enumerate_filtered(sym) == gapsets_of({{1, 3, 5, 7}}));

  FamilyFilter shallow;
  shallow.genus = 4;
  shallow.kappa = 2;
  shallow.depth = DepthConstraint{DepthConstraint::Kind::at_most, 3};
  CHECK(enumerate_filtered(shallow) == gapsets_of({{1, 2, 3, 5}, {1, 2, 4, 5}}));
  shallow.depth = DepthConstraint{DepthConstraint::Kind::exact, 4};
  CHECK(enumerate_filtered(shallow) == gapsets_of({{1, 3, 5, 7}}));

  FamilyFilter bad;
  bad.genus = -2;
  CHECK_THROWS_AS((void)enumerate_filtered(bad), std::invalid_argument);
  bad.genus = 3;
  bad.depth = DepthConstraint{DepthConstraint::Kind::at_most, 0};
  CHECK_THROWS_AS((void)enumerate_filtered(bad), std::invalid_argument);
}

TEST_CASE("count table matches the reference grid") {
  const CountTable t = count_table(reference_counts::kMaxGenus);
  for (int g = 0; g <= reference_counts::kMaxGenus; ++g) {
    CAPTURE(g);
    CHECK(t.total(g) == reference_counts::kTotals[static_cast<std::size_t>(g)]);
    for (int k = 0; k <= reference_counts::kMaxGenus; ++k) {
      CAPTURE(k);
      CHECK(t.cell(g, k) == reference_counts::kCells[static_cast<std::size_t>(g)][static_cast<std::size_t>(k)]);
    }
  }
  CHECK(t.cell(13, 8) == 54);
  CHECK(t.cell(3, 40) == 0);
}

TEST_CASE("count table cells agree with brute force for g <= 11") {
  const CountTable t = count_table(11);
  for (int g = 0; g <= 11; ++g) {
    std::map<int, std::uint64_t> cells;
    for (const auto& s : brute_force_genus(g)) ++cells[sparsity(s)];
    std::uint64_t total = 0;
    for (int k = 0; k <= g; ++k) {
      CHECK(t.cell(g, k) == cells[k]);
      total += cells[k];
    }
    CHECK(t.total(g) == total);
  }
}

TEST_CASE("sequence s_n") {
  const auto terms = sequence_s(7);
  const std::uint64_t expected[] = {3, 8, 22, 54, 135, 331, 808};
  REQUIRE(terms.size() == 7);
  std::uint64_t cum = 0;
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(terms[i].n == static_cast<int>(i + 1));
    CHECK(terms[i].s == expected[i]);
    cum += expected[i];
    CHECK(terms[i].cumsum == cum);
  }
  CHECK_FALSE(terms[0].ratio_prev.has_value());
  CHECK(terms[1].prev == 3);
  CHECK(*terms[1].ratio_prev == doctest::Approx(8.0 / 3.0));
  CHECK(terms[6].ratio_cumsum == doctest::Approx(1361.0 / 808.0));
  CHECK(sequence_s(1).front().s == 3);
  CHECK_THROWS_AS((void)sequence_s(0), std::invalid_argument);
}

TEST_CASE("format_ratio rounds half to even") {
  CHECK(format_ratio(8, 3) == "2.6667");
  CHECK(format_ratio(11, 4) == "2.7500");
  CHECK(format_ratio(808, 331) == "2.4411");
  CHECK(format_ratio(553, 331) == "1.6707");
  CHECK(format_ratio(1361, 808) == "1.6844");
  CHECK(format_ratio(3, 3) == "1.0000");
  CHECK(format_ratio(0, 7) == "0.0000");
  // Exact ties: 1/32 = 0.03125 and 3/32 = 0.09375.
  CHECK(format_ratio(1, 32) == "0.0312");
  CHECK(format_ratio(3, 32) == "0.0938");
  CHECK(format_ratio(99999, 100000 * 2) == "0.5000");
  CHECK(format_ratio(199999, 20000000) == "0.0100");
  CHECK_THROWS_AS((void)format_ratio(1, 0), std::domain_error);
}
