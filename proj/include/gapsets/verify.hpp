#pragma once

// Registry of machine-checkable claims about gapsets, each swept
// exhaustively over a genus, multiplicity or n range.
//
// Identifiers are stable short names; the letter marks the kind of claim
// (P, T, C, L). Besides the registered claims there
// are hypothesis-sharpness probes: a claim evaluated outside its hypothesis,
// or the converse of a claim, where a failure with a specific counterexample
// is the documented outcome.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gapsets/enumerate.hpp"
#include "gapsets/gapset.hpp"

namespace gapsets {

enum class RangeKind { genus, multiplicity, n };
enum class Evidence { proved, empirical };

struct ParamRange {
  int lo = 0;
  int hi = 0;
  [[nodiscard]] bool empty() const noexcept { return hi < lo; }
  friend bool operator==(const ParamRange&, const ParamRange&) = default;
};

/// Genus ceiling for any enumeration a check may trigger. n-indexed checks
/// need genus 3n+2, so n is capped at (ceiling - 2) / 3.
inline constexpr int kVerifyGenusCeiling = 26;
inline constexpr int kVerifyMultiplicityCeiling = 20;
/// Counterexamples retained per report; the total is kept in `failures`.
inline constexpr std::size_t kMaxCounterexamples = 25;

struct CheckInfo {
  std::string id;
  std::string statement;
  RangeKind kind = RangeKind::genus;
  /// Smallest parameter satisfying the claim's hypothesis.
  int hypothesis_min = 0;
  Evidence evidence = Evidence::proved;
  /// Registered only as a probe (a converse that is known to fail).
  bool probe_only = false;
};

struct Counterexample {
  IntSet set;
  std::string detail;
};

struct VerificationReport {
  std::string check_id;
  std::string statement;
  RangeKind kind = RangeKind::genus;
  ParamRange range;
  Evidence evidence = Evidence::proved;
  bool expected_fail = false;
  std::uint64_t instances_checked = 0;
  std::uint64_t failures = 0;
  std::vector<Counterexample> counterexamples;
  /// For probes: the counterexample the failure must exhibit.
  std::optional<IntSet> documented_counterexample;

  [[nodiscard]] bool passed() const noexcept { return counterexamples.empty(); }
  /// Probes must fail and list their documented counterexample.
  [[nodiscard]] bool behaves_as_documented() const;
};

/// The map under test in the sigma checks. Defaults to the validated sigma;
/// tests substitute corrupted maps to confirm the checks catch them.
using SigmaMap = std::function<IntSet(const GapSet&)>;

struct CheckContext {
  SigmaMap sigma;  // empty means sigma()
  EnumerationOptions enumeration;
  /// Threads used by run_all to evaluate checks concurrently; 0 = default.
  unsigned check_threads = 0;
};

struct SuiteResult {
  std::vector<VerificationReport> checks;
  std::vector<VerificationReport> probes;

  [[nodiscard]] bool all_checks_pass() const;
  [[nodiscard]] bool probes_as_documented() const;
};

[[nodiscard]] const std::vector<CheckInfo>& check_registry();
/// Throws std::invalid_argument("unknown check id ...").
[[nodiscard]] const CheckInfo& find_check(const std::string& id);

/// Evaluates one check over exactly the given range (no hypothesis
/// clipping), so out-of-hypothesis runs are possible. Throws
/// std::out_of_range when the range needs enumeration past the ceilings.
[[nodiscard]] VerificationReport run_check(const std::string& id, ParamRange range,
                                           const CheckContext& ctx = {});

/// Every registered check at its natural range: genus checks over
/// [0, g_ceiling], multiplicity checks over [2, min(g_ceiling, 16)], n checks
/// over [max(1, hypothesis_min), n_ceiling]. Probes go in a separate list.
[[nodiscard]] SuiteResult run_all(int g_ceiling, int n_ceiling, const CheckContext& ctx = {});

[[nodiscard]] std::string to_string(RangeKind k);

/// Gapset fixture with q = 3 that is not pseudo-symmetric, showing that
/// depth 3 does not force pseudo-symmetry in the odd diagonal family.
[[nodiscard]] GapSet depth_three_non_pseudo_fixture();

}  // namespace gapsets
