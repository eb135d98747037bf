#pragma once

// Explicit constructions on the diagonal families
//   A_n = pure (2n)-sparse gapsets of genus 3n+1,
//   B_n = pure (2n+1)-sparse gapsets of genus 3n+2:
//
//   - sigma: the genus-raising injection from the depth <= 3 part of A_n into
//     B_n, whose image is B_n minus its pseudo-symmetric members;
//   - sigma_inverse on that image;
//   - the 2^(n-1) symmetric members of A_n and the 2^(n-1) pseudo-symmetric
//     members of B_n, each parametrized by a PairChoice.

#include <cstdint>
#include <vector>

#include "gapsets/gapset.hpp"

namespace gapsets {

/// One boolean per complementary pair (x, F - x) of the middle block; true
/// takes the smaller element. Pairs are ordered by increasing smaller element.
struct PairChoice {
  int n = 1;
  std::vector<bool> take_lower;

  /// All-lower choice of length n-1.
  static PairChoice lower(int n);
  /// Bit i of mask selects the lower element of pair i.
  static PairChoice from_mask(int n, std::uint64_t mask);
  /// Throws std::invalid_argument unless n >= 1 and length == n-1.
  void validate() const;
};

/// Every PairChoice for n, in increasing mask order.
[[nodiscard]] std::vector<PairChoice> all_pair_choices(int n);

/// n with genus == 3n+1, or 0 if genus is not of that form (n >= 1).
[[nodiscard]] int diagonal_n_for_even_family(int genus);
/// n with genus == 3n+2, or 0 if genus is not of that form (n >= 1).
[[nodiscard]] int diagonal_n_for_odd_family(int genus);

/// The shift map without domain checks: prepends 1, adds 1 to l_1..l_alpha
/// and 2 to l_{alpha+1}..l_g, where alpha is the last index at which the
/// largest consecutive difference occurs. Requires genus >= 2.
[[nodiscard]] IntSet sigma_unchecked(const GapSet& g);

/// sigma on A_n ∩ {depth <= 3}. Throws std::domain_error("outside σ domain")
/// otherwise. The result is revalidated as a gapset.
[[nodiscard]] GapSet sigma(const GapSet& g);

/// Inverse of sigma on B_n minus pseudo-symmetric members. Throws
/// std::domain_error("no preimage") on pseudo-symmetric input and
/// std::domain_error("outside σ codomain") off B_n.
[[nodiscard]] GapSet sigma_inverse(const GapSet& g);

/// m = 2n: [1, m-1] ∪ {m+1} ∪ X ∪ {2m+1, 3m+1}, X one element from each pair
/// (2n+2+i, 4n-1-i), i in [0, n-2].
[[nodiscard]] GapSet construct_symmetric(int n, const PairChoice& choice);

/// m = 2n+1: [1, m-1] ∪ X ∪ {3n+1, 2m-1} ∪ {3m-1}, X one element from each
/// pair (2n+2+i, 4n-i), i in [0, n-2].
[[nodiscard]] GapSet construct_pseudo_symmetric(int n, const PairChoice& choice);

/// Witness [1,2n-1] ∪ {2n+1} ∪ [3n+1,4n-1] ∪ {4n+1, 6n+1} of depth 4 in A_n.
[[nodiscard]] GapSet depth_four_witness(int n);

}  // namespace gapsets
