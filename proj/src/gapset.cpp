#include "gapsets/gapset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>
#include <sstream>
#include <string_view>
#include <utility>

namespace gapsets {

namespace {

bool gapset_condition(const Bits& b, std::span<const int> elems) {
  for (int z : elems) {
    for (int x = 1; x <= z / 2; ++x) {
      if (!b.test(static_cast<std::size_t>(x)) && !b.test(static_cast<std::size_t>(z - x))) {
        return false;
      }
    }
  }
  return true;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

// ---------------------------------------------------------------------------
// IntSet

IntSet::IntSet(std::vector<int> values) : elems_(std::move(values)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (!elems_.empty() && elems_.front() < 1) {
    throw std::invalid_argument("set elements must be positive integers");
  }
}

bool IntSet::contains(int x) const noexcept {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

int IntSet::max() const {
  if (elems_.empty()) throw std::domain_error("empty set has no maximum");
  return elems_.back();
}

// ---------------------------------------------------------------------------
// GapSet

GapSet::GapSet(std::span<const int> gaps) {
  for (int x : gaps) {
    if (x < 1 || x > kMaxElement) {
      throw InvalidGapSet("gap " + std::to_string(x) + " outside [1, " +
                          std::to_string(kMaxElement) + "]");
    }
    if (bits_.test(static_cast<std::size_t>(x))) {
      throw InvalidGapSet("duplicate gap " + std::to_string(x));
    }
    bits_.set(static_cast<std::size_t>(x));
  }
  elems_.assign(gaps.begin(), gaps.end());
  std::sort(elems_.begin(), elems_.end());
  if (!gapset_condition(bits_, elems_)) {
    throw InvalidGapSet("{" + join_gaps(elems_) + "} violates the gapset condition");
  }
}

GapSet GapSet::from_trusted_bits(const Bits& bits) {
  GapSet g;
  g.bits_ = bits;
  g.elems_.reserve(bits.count());
  for (int x = 1; x <= kMaxElement; ++x) {
    if (bits.test(static_cast<std::size_t>(x))) g.elems_.push_back(x);
  }
  return g;
}

int GapSet::max() const {
  if (elems_.empty()) throw std::domain_error("empty gapset has no maximum");
  return elems_.back();
}

// ---------------------------------------------------------------------------
// Raw-set predicates

bool is_gapset(std::span<const int> s) {
  if (s.empty()) return true;
  const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
  if (*lo < 1) return false;
  if (*hi <= kMaxElement) {
    Bits b;
    for (int x : s) b.set(static_cast<std::size_t>(x));
    return gapset_condition(b, s);
  }
  std::vector<int> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  auto has = [&](int x) { return std::binary_search(sorted.begin(), sorted.end(), x); };
  for (int z : sorted) {
    for (int x = 1; x <= z / 2; ++x) {
      if (!has(x) && !has(z - x)) return false;
    }
  }
  return true;
}

bool is_m_set(std::span<const int> s, int m) {
  if (m < 1) throw std::invalid_argument("m must be a positive integer");
  std::vector<int> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  for (int x = 1; x < m; ++x) {
    if (!std::binary_search(sorted.begin(), sorted.end(), x)) return false;
  }
  return std::none_of(sorted.begin(), sorted.end(), [m](int x) { return x > 0 && x % m == 0; });
}

int m_set_depth(std::span<const int> s, int m) {
  if (m < 1) throw std::invalid_argument("m must be a positive integer");
  if (s.empty()) return 0;
  return ceil_div(*std::max_element(s.begin(), s.end()), m);
}

int max_consecutive_difference(std::span<const int> ascending) {
  if (ascending.empty()) return 0;
  if (ascending.size() == 1) return 1;
  int best = 0;
  for (std::size_t i = 1; i < ascending.size(); ++i) {
    best = std::max(best, ascending[i] - ascending[i - 1]);
  }
  return best;
}

int least_missing_positive(std::span<const int> ascending) {
  int expect = 1;
  for (int x : ascending) {
    if (x < expect) continue;
    if (x != expect) break;
    ++expect;
  }
  return expect;
}

// ---------------------------------------------------------------------------
// Invariants

int multiplicity(const GapSet& g) { return least_missing_positive(g.elements()); }

int frobenius(const GapSet& g) { return g.empty() ? 0 : g.max(); }

int sparsity(const GapSet& g) { return max_consecutive_difference(g.elements()); }

Invariants invariants(const GapSet& g) {
  Invariants inv;
  inv.genus = g.genus();
  inv.multiplicity = multiplicity(g);
  inv.frobenius = frobenius(g);
  inv.conductor = inv.frobenius + 1;
  inv.depth = ceil_div(inv.conductor, inv.multiplicity);
  inv.sparsity = sparsity(g);
  if (!g.empty() && m_set_depth(g.elements(), inv.multiplicity) != inv.depth) {
    // m never divides a gap, so ceil(F/m) == ceil((F+1)/m).
    throw std::logic_error("m-set depth and gapset depth disagree on {" +
                           join_gaps(g.elements()) + "}");
  }
  return inv;
}

int CanonicalPartition::block_of(int x) const {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (std::binary_search(blocks[i].begin(), blocks[i].end(), x)) return static_cast<int>(i);
  }
  return -1;
}

CanonicalPartition canonical_partition(const GapSet& g) {
  if (g.empty()) throw std::domain_error("no partition");
  const Invariants inv = invariants(g);
  CanonicalPartition p;
  p.multiplicity = inv.multiplicity;
  p.blocks.resize(static_cast<std::size_t>(inv.depth));
  for (int x : g.elements()) {
    p.blocks[static_cast<std::size_t>(x / inv.multiplicity)].push_back(x);
  }
  return p;
}

PseudoFrobeniusSet pseudo_frobenius(const GapSet& g) {
  if (g.empty()) throw std::domain_error("pseudo-Frobenius set of the empty gapset is undefined");
  const int f = g.max();
  PseudoFrobeniusSet pf;
  for (int x : g.elements()) {
    bool member = true;
    for (int s = 1; s <= f && member; ++s) {
      if (!g.contains(s) && g.contains(x + s)) member = false;
    }
    if (member) pf.members.push_back(x);
  }
  return pf;
}

Symmetry symmetry_class(const GapSet& g) {
  const int f = frobenius(g);
  const int gen = g.genus();
  if (f == 2 * gen - 1) return Symmetry::symmetric;
  if (f == 2 * gen - 2) return Symmetry::pseudo_symmetric;
  return Symmetry::neither;
}

JumpProfile jump_profile(const GapSet& g, int kappa) {
  if (g.genus() < 2) throw std::domain_error("no consecutive pairs");
  if (kappa < 1) throw std::invalid_argument("kappa must be positive");
  JumpProfile jp;
  jp.kappa = kappa;
  const auto e = g.elements();
  for (std::size_t i = 0; i + 1 < e.size(); ++i) {
    if (e[i + 1] - e[i] == kappa) jp.jump_indices.push_back(static_cast<int>(i) + 1);
  }
  return jp;
}

bool is_pure_sparse(const GapSet& g, int kappa) { return sparsity(g) == kappa; }

// ---------------------------------------------------------------------------
// Text helpers

std::string to_string(Symmetry s) {
  switch (s) {
    case Symmetry::symmetric: return "symmetric";
    case Symmetry::pseudo_symmetric: return "pseudo_symmetric";
    case Symmetry::neither: return "neither";
  }
  return "neither";
}

Symmetry parse_symmetry(const std::string& s) {
  if (s == "symmetric") return Symmetry::symmetric;
  if (s == "pseudo_symmetric" || s == "pseudo-symmetric" || s == "pseudo") {
    return Symmetry::pseudo_symmetric;
  }
  if (s == "neither") return Symmetry::neither;
  throw std::invalid_argument("unknown symmetry class '" + s + "'");
}

std::string join_gaps(std::span<const int> gaps) {
  std::string out;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(gaps[i]);
  }
  return out;
}

std::vector<int> parse_gaps(const std::string& text) {
  std::string body;
  body.reserve(text.size());
  for (char c : text) {
    if (c == '{' || c == '}' || c == '[' || c == ']' || std::isspace(static_cast<unsigned char>(c))) {
      continue;
    }
    body += c;
  }
  std::vector<int> out;
  if (body.empty()) return out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const std::size_t next = std::min(body.find(',', pos), body.size());
    const std::string_view tok(body.data() + pos, next - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw std::invalid_argument("malformed gap list '" + text + "'");
    }
    out.push_back(value);
    pos = next + 1;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const GapSet& g) {
  return os << '{' << join_gaps(g.elements()) << '}';
}

std::ostream& operator<<(std::ostream& os, const IntSet& s) {
  return os << '{' << join_gaps(s.elements()) << '}';
}

}  // namespace gapsets
