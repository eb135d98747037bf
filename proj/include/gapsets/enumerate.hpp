#pragma once

// Exhaustive enumeration of gapsets by genus.
//
// Gapsets are generated as nodes of the semigroup tree: the root is the empty
// gapset, and the children of G are G ∪ {x} for every minimal generator x of
// the complementary semigroup with x > F(G). Every gapset of genus g appears
// exactly once at depth g.
//
// The traversal can be split at a fixed tree depth into independent subtrees
// processed on worker threads. Counts are merged associatively and lists are
// sorted before being returned, so results never depend on the schedule.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gapsets/gapset.hpp"

namespace gapsets {

struct EnumerationOptions {
  /// Worker threads; 0 means default_thread_count().
  unsigned threads = 0;
  /// Tree depth at which the traversal is cut into parallel subtrees.
  int split_depth = 10;
};

/// Thread count from the GAPSETS_THREADS environment variable, else the
/// hardware concurrency (at least 1).
[[nodiscard]] unsigned default_thread_count();

struct DepthConstraint {
  enum class Kind { exact, at_most };
  Kind kind = Kind::exact;
  int value = 1;

  [[nodiscard]] bool admits(int depth) const noexcept {
    return kind == Kind::exact ? depth == value : depth <= value;
  }
};

/// Selects a subfamily of the gapsets of one genus.
struct FamilyFilter {
  int genus = 0;
  std::optional<int> kappa;
  /// Pure: largest consecutive difference exactly kappa. Otherwise at most kappa.
  bool pure = true;
  std::optional<DepthConstraint> depth;
  std::optional<Symmetry> symmetry;

  /// Throws std::invalid_argument on negative genus/kappa or depth bound < 1.
  void validate() const;
  [[nodiscard]] bool matches(const GapSet& g) const;
};

/// Pure kappa-sparse counts. cells[g][kappa] for 0 <= kappa <= g.
struct CountTable {
  int max_genus = 0;
  std::vector<std::vector<std::uint64_t>> cells;
  std::vector<std::uint64_t> totals;  // n_g

  [[nodiscard]] std::uint64_t cell(int genus, int kappa) const;
  [[nodiscard]] std::uint64_t total(int genus) const { return totals.at(static_cast<std::size_t>(genus)); }
};

struct SequenceTerm {
  int n = 0;
  std::uint64_t s = 0;
  /// s_n / s_{n-1}; absent for n = 1.
  std::optional<double> ratio_prev;
  /// (s_1 + ... + s_n) / s_n.
  double ratio_cumsum = 0.0;
  /// Exact numerators/denominators behind the two ratios.
  std::uint64_t cumsum = 0;
  std::uint64_t prev = 0;
};

/// Γ(g) in lexicographic order of gap sequences.
[[nodiscard]] std::vector<GapSet> enumerate_genus(int g, const EnumerationOptions& opts = {});

/// Γ(0), ..., Γ(g_max) from a single traversal; each list lexicographic.
[[nodiscard]] std::vector<std::vector<GapSet>> enumerate_up_to(int g_max,
                                                               const EnumerationOptions& opts = {});

/// Γ(g) for each requested genus, from a single traversal; results follow the
/// order of `genera`.
[[nodiscard]] std::vector<std::vector<GapSet>> enumerate_selected(std::span<const int> genera,
                                                                  const EnumerationOptions& opts = {});

[[nodiscard]] std::vector<GapSet> enumerate_filtered(const FamilyFilter& f,
                                                     const EnumerationOptions& opts = {});

/// Oracle: all size-g subsets of [1, 2g-1] that pass is_gapset, in
/// lexicographic order. Throws std::out_of_range("oracle limit") for g > 12.
inline constexpr int kOracleGenusLimit = 12;
[[nodiscard]] std::vector<GapSet> brute_force_genus(int g);

[[nodiscard]] CountTable count_table(int g_max, const EnumerationOptions& opts = {});

/// s_n = #G_{2n}(3n+1) for n in [1, n_max], with the two ratio columns.
[[nodiscard]] std::vector<SequenceTerm> sequence_s(int n_max, const EnumerationOptions& opts = {});

/// Formats num/den with four decimals, rounding half to even, using exact
/// integer arithmetic.
[[nodiscard]] std::string format_ratio(std::uint64_t num, std::uint64_t den);

}  // namespace gapsets
