#include "gapsets/families.hpp"

#include <stdexcept>
#include <string>

namespace gapsets {

namespace {

// Largest n for which the constructions stay inside kMaxElement.
constexpr int kMaxFamilyN = (kMaxElement - 2) / 6;

void check_n(int n) {
  if (n < 1) throw std::invalid_argument("n must be a positive integer");
  if (n > kMaxFamilyN) throw std::invalid_argument("n exceeds " + std::to_string(kMaxFamilyN));
}

void append_range(std::vector<int>& out, int lo, int hi) {
  for (int x = lo; x <= hi; ++x) out.push_back(x);
}

std::string describe(const GapSet& g) { return "{" + join_gaps(g.elements()) + "}"; }

}  // namespace

PairChoice PairChoice::lower(int n) {
  check_n(n);
  return PairChoice{n, std::vector<bool>(static_cast<std::size_t>(n - 1), true)};
}

PairChoice PairChoice::from_mask(int n, std::uint64_t mask) {
  check_n(n);
  if (n - 1 < 64 && (mask >> (n - 1)) != 0) {
    throw std::invalid_argument("pair mask has bits beyond n-1");
  }
  PairChoice c{n, {}};
  for (int i = 0; i < n - 1; ++i) c.take_lower.push_back(((mask >> i) & 1U) != 0);
  return c;
}

void PairChoice::validate() const {
  check_n(n);
  if (take_lower.size() != static_cast<std::size_t>(n - 1)) {
    throw std::invalid_argument("pair choice for n=" + std::to_string(n) + " needs " +
                                std::to_string(n - 1) + " entries, got " +
                                std::to_string(take_lower.size()));
  }
}

std::vector<PairChoice> all_pair_choices(int n) {
  check_n(n);
  std::vector<PairChoice> out;
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) out.push_back(PairChoice::from_mask(n, mask));
  return out;
}

int diagonal_n_for_even_family(int genus) {
  return genus >= 4 && genus % 3 == 1 ? (genus - 1) / 3 : 0;
}

int diagonal_n_for_odd_family(int genus) {
  return genus >= 5 && genus % 3 == 2 ? (genus - 2) / 3 : 0;
}

IntSet sigma_unchecked(const GapSet& g) {
  if (g.genus() < 2) throw std::domain_error("no consecutive pairs");
  const int alpha = jump_profile(g, sparsity(g)).alpha();
  std::vector<int> out{1};
  for (int i = 1; i <= g.genus(); ++i) out.push_back(g.gap(i) + (i <= alpha ? 1 : 2));
  return IntSet(std::move(out));
}

GapSet sigma(const GapSet& g) {
  const int n = diagonal_n_for_even_family(g.genus());
  if (n == 0) {
    throw std::domain_error("outside σ domain: genus " + std::to_string(g.genus()) +
                            " is not of the form 3n+1");
  }
  if (sparsity(g) != 2 * n) {
    throw std::domain_error("outside σ domain: " + describe(g) + " is not pure " +
                            std::to_string(2 * n) + "-sparse");
  }
  if (invariants(g).depth > 3) {
    throw std::domain_error("outside σ domain: " + describe(g) + " has depth 4 (symmetric)");
  }
  return GapSet(sigma_unchecked(g));
}

GapSet sigma_inverse(const GapSet& g) {
  const int n = diagonal_n_for_odd_family(g.genus());
  if (n == 0 || sparsity(g) != 2 * n + 1) {
    throw std::domain_error("outside σ codomain: " + describe(g) +
                            " is not a pure (2n+1)-sparse gapset of genus 3n+2");
  }
  if (symmetry_class(g) == Symmetry::pseudo_symmetric) {
    throw std::domain_error("no preimage: " + describe(g) + " is pseudo-symmetric");
  }
  const int alpha = jump_profile(g, 2 * n + 1).alpha();
  std::vector<int> out;
  for (int i = 2; i <= g.genus(); ++i) out.push_back(g.gap(i) - (i <= alpha ? 1 : 2));
  if (!is_gapset(out)) {
    throw std::logic_error("sigma_inverse produced a non-gapset from " + describe(g));
  }
  return GapSet(std::span<const int>(out));
}

GapSet construct_symmetric(int n, const PairChoice& choice) {
  choice.validate();
  if (choice.n != n) throw std::invalid_argument("pair choice built for a different n");
  const int m = 2 * n;
  std::vector<int> gaps;
  append_range(gaps, 1, m - 1);
  gaps.push_back(m + 1);
  for (int i = 0; i <= n - 2; ++i) {
    gaps.push_back(choice.take_lower[static_cast<std::size_t>(i)] ? 2 * n + 2 + i : 4 * n - 1 - i);
  }
  gaps.push_back(2 * m + 1);
  gaps.push_back(3 * m + 1);
  return GapSet(std::span<const int>(gaps));
}

GapSet construct_pseudo_symmetric(int n, const PairChoice& choice) {
  choice.validate();
  if (choice.n != n) throw std::invalid_argument("pair choice built for a different n");
  const int m = 2 * n + 1;
  std::vector<int> gaps;
  append_range(gaps, 1, m - 1);
  for (int i = 0; i <= n - 2; ++i) {
    gaps.push_back(choice.take_lower[static_cast<std::size_t>(i)] ? 2 * n + 2 + i : 4 * n - i);
  }
  gaps.push_back(3 * n + 1);
  gaps.push_back(2 * m - 1);
  gaps.push_back(3 * m - 1);
  return GapSet(std::span<const int>(gaps));
}

GapSet depth_four_witness(int n) {
  check_n(n);
  std::vector<int> gaps;
  append_range(gaps, 1, 2 * n - 1);
  gaps.push_back(2 * n + 1);
  append_range(gaps, 3 * n + 1, 4 * n - 1);
  gaps.push_back(4 * n + 1);
  gaps.push_back(6 * n + 1);
  return GapSet(std::span<const int>(gaps));
}

}  // namespace gapsets
