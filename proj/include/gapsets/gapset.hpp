#pragma once

// Gapsets (gap sets of numerical semigroups) and their invariants.
//
// A gapset is a finite set G of positive integers such that whenever z is in
// G and z = x + y with x, y >= 1, at least one of x, y is in G. The complement
// of G in the nonnegative integers is then a numerical semigroup, and the
// elements outside G are called non-gaps.
//
// Conventions used throughout:
//   - the empty gapset has genus 0, multiplicity 1, conductor 1, Frobenius
//     number 0, depth 1 and sparsity 0;
//   - a singleton has sparsity 1.

#include <bitset>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gapsets {

// Largest integer a GapSet can hold. A gapset of genus g lies in [1, 2g-1], so
// this admits every genus up to kMaxGenus.
inline constexpr int kMaxElement = 127;
inline constexpr int kMaxGenus = (kMaxElement + 1) / 2;

using Bits = std::bitset<kMaxElement + 1>;

class InvalidGapSet : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sorted, duplicate-free set of positive integers with no further structure.
/// Holds m-sets and the raw output of maps whose image is not yet known to be
/// a gapset.
class IntSet {
 public:
  IntSet() = default;
  /// Sorts and deduplicates. Throws std::invalid_argument on nonpositive input.
  explicit IntSet(std::vector<int> values);
  IntSet(std::initializer_list<int> values) : IntSet(std::vector<int>(values)) {}

  [[nodiscard]] std::span<const int> elements() const noexcept { return elems_; }
  [[nodiscard]] std::size_t size() const noexcept { return elems_.size(); }
  [[nodiscard]] bool empty() const noexcept { return elems_.empty(); }
  [[nodiscard]] bool contains(int x) const noexcept;
  [[nodiscard]] int max() const;

  friend bool operator==(const IntSet&, const IntSet&) = default;
  friend auto operator<=>(const IntSet& a, const IntSet& b) { return a.elems_ <=> b.elems_; }

 private:
  std::vector<int> elems_;
};

/// A validated gapset. Stores a membership bit-vector alongside the ascending
/// gap sequence l_1 < ... < l_g. Immutable once constructed.
class GapSet {
 public:
  /// The empty gapset.
  GapSet() = default;

  /// Validates and builds. Accepts any order; duplicates are rejected.
  /// Throws InvalidGapSet if the gapset condition fails or an element is out
  /// of [1, kMaxElement].
  explicit GapSet(std::span<const int> gaps);
  GapSet(std::initializer_list<int> gaps)
      : GapSet(std::span<const int>(gaps.begin(), gaps.size())) {}
  explicit GapSet(const IntSet& s) : GapSet(s.elements()) {}

  /// Builds from gaps already known to be sorted and valid. The enumerator
  /// uses this on its hot path; the gapset condition is not rechecked.
  static GapSet from_trusted_bits(const Bits& bits);

  [[nodiscard]] std::span<const int> elements() const noexcept { return elems_; }
  [[nodiscard]] int genus() const noexcept { return static_cast<int>(elems_.size()); }
  [[nodiscard]] bool empty() const noexcept { return elems_.empty(); }
  [[nodiscard]] bool contains(int x) const noexcept {
    return x >= 1 && x <= kMaxElement && bits_.test(static_cast<std::size_t>(x));
  }
  /// 1-based access to l_i.
  [[nodiscard]] int gap(int i) const { return elems_.at(static_cast<std::size_t>(i - 1)); }
  [[nodiscard]] int max() const;
  [[nodiscard]] const Bits& bits() const noexcept { return bits_; }
  [[nodiscard]] IntSet to_int_set() const { return IntSet(elems_); }

  friend bool operator==(const GapSet& a, const GapSet& b) { return a.elems_ == b.elems_; }
  /// Lexicographic on gap sequences.
  friend auto operator<=>(const GapSet& a, const GapSet& b) { return a.elems_ <=> b.elems_; }

 private:
  Bits bits_;
  std::vector<int> elems_;
};

enum class Symmetry { symmetric, pseudo_symmetric, neither };

struct Invariants {
  int genus = 0;
  int multiplicity = 1;
  int conductor = 1;
  int frobenius = 0;
  int depth = 1;
  int sparsity = 0;

  friend bool operator==(const Invariants&, const Invariants&) = default;
};

/// Blocks G_i = G ∩ (i*m, (i+1)*m) for i in [0, q-1].
struct CanonicalPartition {
  int multiplicity = 0;
  std::vector<std::vector<int>> blocks;

  [[nodiscard]] int depth() const noexcept { return static_cast<int>(blocks.size()); }
  /// Index of the block containing x, or -1 if x is not a gap.
  [[nodiscard]] int block_of(int x) const;
};

struct PseudoFrobeniusSet {
  std::vector<int> members;  // ascending
  [[nodiscard]] int type() const noexcept { return static_cast<int>(members.size()); }
};

struct JumpProfile {
  int kappa = 0;
  std::vector<int> jump_indices;  // 1-based i with l_{i+1} - l_i == kappa
  /// max(jump_indices), or 0 when kappa is not realized.
  [[nodiscard]] int alpha() const noexcept { return jump_indices.empty() ? 0 : jump_indices.back(); }
};

// ---------------------------------------------------------------------------
// Predicates on raw sets

/// Gapset condition: every z in s and every x in [1, z/2] has x or z-x in s.
/// Nonpositive entries make the answer false.
[[nodiscard]] bool is_gapset(std::span<const int> s);
[[nodiscard]] inline bool is_gapset(const IntSet& s) { return is_gapset(s.elements()); }

/// [1, m-1] ⊆ s and s has no positive multiple of m. Throws if m < 1.
[[nodiscard]] bool is_m_set(std::span<const int> s, int m);
[[nodiscard]] inline bool is_m_set(const IntSet& s, int m) { return is_m_set(s.elements(), m); }

/// Depth of an m-set: ceil(max / m). Empty set has depth 0. Throws if m < 1.
[[nodiscard]] int m_set_depth(std::span<const int> s, int m);

/// Largest difference of consecutive elements of an ascending sequence,
/// with the empty -> 0 and singleton -> 1 conventions.
[[nodiscard]] int max_consecutive_difference(std::span<const int> ascending);

/// Least positive integer absent from an ascending sequence of positive ints.
[[nodiscard]] int least_missing_positive(std::span<const int> ascending);

// ---------------------------------------------------------------------------
// Gapset invariants

[[nodiscard]] int multiplicity(const GapSet& g);
[[nodiscard]] int frobenius(const GapSet& g);
[[nodiscard]] int sparsity(const GapSet& g);
[[nodiscard]] Invariants invariants(const GapSet& g);

/// Throws std::domain_error("no partition") on the empty gapset.
[[nodiscard]] CanonicalPartition canonical_partition(const GapSet& g);

/// Gaps x with x + s a non-gap for every non-gap s >= 1. Only s in [1, F]
/// needs checking. Throws std::domain_error on the empty gapset.
[[nodiscard]] PseudoFrobeniusSet pseudo_frobenius(const GapSet& g);

/// Classification by Frobenius number: F = 2g-1 symmetric, F = 2g-2
/// pseudo-symmetric.
[[nodiscard]] Symmetry symmetry_class(const GapSet& g);

/// Throws std::domain_error("no consecutive pairs") when genus < 2.
[[nodiscard]] JumpProfile jump_profile(const GapSet& g, int kappa);

/// True when the largest consecutive difference is exactly kappa.
[[nodiscard]] bool is_pure_sparse(const GapSet& g, int kappa);

// ---------------------------------------------------------------------------
// Text helpers

[[nodiscard]] std::string to_string(Symmetry s);
/// Parses "symmetric", "pseudo_symmetric" (or "pseudo"), "neither".
[[nodiscard]] Symmetry parse_symmetry(const std::string& s);
/// "1,2,3,5"; empty string for the empty set.
[[nodiscard]] std::string join_gaps(std::span<const int> gaps);
/// Inverse of join_gaps. Accepts optional surrounding braces or brackets and
/// whitespace. Throws std::invalid_argument on malformed input.
[[nodiscard]] std::vector<int> parse_gaps(const std::string& text);

std::ostream& operator<<(std::ostream& os, const GapSet& g);
std::ostream& operator<<(std::ostream& os, const IntSet& s);

}  // namespace gapsets
