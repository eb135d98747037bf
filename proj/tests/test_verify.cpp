#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "gapsets/families.hpp"
#include "gapsets/verify.hpp"

using namespace gapsets;

namespace {

bool lists(const VerificationReport& r, const IntSet& s) {
  return std::any_of(r.counterexamples.begin(), r.counterexamples.end(),
                     [&](const Counterexample& c) { return c.set == s; });
}

void check_same(const VerificationReport& a, const VerificationReport& b) {
  CHECK(a.check_id == b.check_id);
  CHECK(a.range == b.range);
  CHECK(a.instances_checked == b.instances_checked);
  CHECK(a.failures == b.failures);
  REQUIRE(a.counterexamples.size() == b.counterexamples.size());
  for (std::size_t i = 0; i < a.counterexamples.size(); ++i) {
    CHECK(a.counterexamples[i].set == b.counterexamples[i].set);
    CHECK(a.counterexamples[i].detail == b.counterexamples[i].detail);
  }
}

}  // namespace

TEST_CASE("registry lists every claim once") {
  const std::vector<std::string> expected = {
      "P2.1", "P2.2", "P2.4", "P2.5", "P2.6", "T2.7", "T2.8", "P2.9", "T2.10", "L3.1", "P3.2",
      "P3.3", "C3.4", "T3.5", "P3.6", "P3.7", "T3.8", "P3.9", "C3.10", "T3.12", "P4.1", "P4.2",
      "P4.4", "P4.5", "C4.6", "P4.7", "T4.8", "T5.1", "P5.2", "P5.3", "P5.4", "T5.5", "C5.6"};
  std::vector<std::string> ids;
  std::set<std::string> unique;
  for (const auto& c : check_registry()) {
    CHECK_FALSE(c.statement.empty());
    unique.insert(c.id);
    if (!c.probe_only) ids.push_back(c.id);
  }
  CHECK(ids == expected);
  CHECK(unique.size() == check_registry().size());
  CHECK(find_check("P2.5").evidence == Evidence::empirical);
  CHECK(find_check("C4.6-converse").probe_only);
  CHECK(find_check("P3.2").hypothesis_min == 3);
  CHECK_THROWS_AS((void)find_check("X9.9"), std::invalid_argument);
}

TEST_CASE("fixture for the failed converse") {
  const GapSet f = depth_three_non_pseudo_fixture();
  CHECK(f == GapSet{1, 2, 3, 4, 6, 7, 8, 13});
  CHECK(f.genus() == 8);
  CHECK(sparsity(f) == 5);
  CHECK(invariants(f).depth == 3);
  CHECK(f.max() == 2 * f.genus() - 3);
  CHECK(symmetry_class(f) == Symmetry::neither);
}

TEST_CASE("run_all(16, 5) passes and probes fail as documented") {
  const SuiteResult r = run_all(16, 5);
  CHECK(r.checks.size() == 33);
  for (const auto& c : r.checks) {
    CAPTURE(c.check_id);
    CHECK(c.passed());
    CHECK(c.failures == 0);
    CHECK(c.instances_checked > 0);
  }
  CHECK(r.all_checks_pass());
  REQUIRE(r.probes.size() == 2);
  CHECK(r.probes[0].check_id == "P3.2");
  CHECK(lists(r.probes[0], IntSet{1, 3, 5, 7}));
  CHECK(r.probes[1].check_id == "C4.6-converse");
  CHECK(lists(r.probes[1], depth_three_non_pseudo_fixture().to_int_set()));
  CHECK(r.probes_as_documented());
}

TEST_CASE("run_all(4, 1) smoke") {
  const SuiteResult r = run_all(4, 1);
  CHECK(r.all_checks_pass());
  CHECK(r.probes_as_documented());
}

TEST_CASE("corrupted sigma is caught") {
  CheckContext ctx;
  ctx.sigma = [](const GapSet& g) {
    const GapSet image = sigma(g);
    std::vector<int> shifted;
    for (int x : image.elements()) shifted.push_back(x + 1);
    return IntSet(shifted);
  };
  const VerificationReport r = run_check("T5.5", {1, 5}, ctx);
  CHECK_FALSE(r.passed());
  CHECK(r.failures > 0);
  CHECK_FALSE(r.counterexamples.empty());
  CHECK(r.counterexamples.size() <= kMaxCounterexamples);

  const SuiteResult all = run_all(16, 5, ctx);
  CHECK_FALSE(all.all_checks_pass());
  for (const auto& c : all.checks) {
    if (c.check_id == "T5.5") CHECK_FALSE(c.passed());
    if (c.check_id == "P2.2") CHECK(c.passed());
  }
}

TEST_CASE("throwing sigma is reported, not propagated") {
  CheckContext ctx;
  ctx.sigma = [](const GapSet&) -> IntSet { throw std::runtime_error("boom"); };
  const VerificationReport r = run_check("T5.1", {1, 2}, ctx);
  CHECK_FALSE(r.passed());
  CHECK(r.counterexamples.front().detail.find("boom") != std::string::npos);
}

TEST_CASE("run_check honours the exact range") {
  const VerificationReport p = run_check("P3.2", {1, 1});
  CHECK_FALSE(p.passed());
  CHECK(lists(p, IntSet{1, 3, 5, 7}));
  CHECK(run_check("P3.2", {3, 5}).passed());
  CHECK(run_check("T3.12", {1, 6}).passed());
  CHECK(run_check("P2.1", {2, 10}).passed());
  CHECK(run_check("T2.7", {0, 12}).range == ParamRange{0, 12});
  CHECK(run_check("C5.6", {3, 2}).instances_checked == 0);

  CHECK_THROWS_AS((void)run_check("T2.7", {0, kVerifyGenusCeiling + 1}), std::out_of_range);
  CHECK_THROWS_AS((void)run_check("T5.5", {1, 9}), std::out_of_range);
  CHECK_THROWS_AS((void)run_check("P2.1", {2, kVerifyMultiplicityCeiling + 1}), std::out_of_range);
  CHECK_THROWS_AS((void)run_check("T2.7", {-1, 3}), std::invalid_argument);
  CHECK_THROWS_AS((void)run_check("T5.5", {0, 3}), std::invalid_argument);
  CHECK_THROWS_AS((void)run_check("P2.1", {1, 3}), std::invalid_argument);
  CHECK_THROWS_AS((void)run_check("nope", {1, 3}), std::invalid_argument);
}

TEST_CASE("reports are reproducible across thread counts") {
  CheckContext one;
  one.enumeration.threads = 1;
  one.check_threads = 1;
  CheckContext many;
  many.enumeration = {4, 3};
  many.check_threads = 5;
  const SuiteResult a = run_all(12, 4, one);
  const SuiteResult b = run_all(12, 4, many);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) check_same(a.checks[i], b.checks[i]);
  REQUIRE(a.probes.size() == b.probes.size());
  for (std::size_t i = 0; i < a.probes.size(); ++i) check_same(a.probes[i], b.probes[i]);
}

TEST_CASE("probe status semantics") {
  VerificationReport r;
  r.expected_fail = true;
  CHECK_FALSE(r.behaves_as_documented());
  r.documented_counterexample = IntSet{1, 3, 5, 7};
  r.counterexamples.push_back({IntSet{1, 2}, "other"});
  CHECK_FALSE(r.behaves_as_documented());
  r.counterexamples.push_back({IntSet{1, 3, 5, 7}, "documented"});
  CHECK(r.behaves_as_documented());
}
