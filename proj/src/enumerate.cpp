#include "gapsets/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>

#include "semigroup_tree.hpp"

namespace gapsets {

unsigned default_thread_count() {
  if (const char* env = std::getenv("GAPSETS_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void FamilyFilter::validate() const {
  if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
  if (genus > kMaxGenus) throw std::invalid_argument("genus exceeds " + std::to_string(kMaxGenus));
  if (kappa && *kappa < 0) throw std::invalid_argument("kappa must be nonnegative");
  if (depth && depth->value < 1) throw std::invalid_argument("depth bound must be at least 1");
}

bool FamilyFilter::matches(const GapSet& g) const {
  if (g.genus() != genus) return false;
  if (kappa) {
    const int k = sparsity(g);
    if (pure ? k != *kappa : k > *kappa) return false;
  }
  if (depth && !depth->admits(invariants(g).depth)) return false;
  if (symmetry && symmetry_class(g) != *symmetry) return false;
  return true;
}

std::uint64_t CountTable::cell(int genus, int kappa) const {
  const auto& row = cells.at(static_cast<std::size_t>(genus));
  if (kappa < 0 || static_cast<std::size_t>(kappa) >= row.size()) return 0;
  return row[static_cast<std::size_t>(kappa)];
}

std::vector<std::vector<GapSet>> enumerate_up_to(int g_max, const EnumerationOptions& opts) {
  if (g_max < 0) throw std::invalid_argument("genus must be nonnegative");
  std::vector<int> genera(static_cast<std::size_t>(g_max) + 1);
  for (int g = 0; g <= g_max; ++g) genera[static_cast<std::size_t>(g)] = g;
  return enumerate_selected(genera, opts);
}

std::vector<std::vector<GapSet>> enumerate_selected(std::span<const int> genera,
                                                    const EnumerationOptions& opts) {
  if (genera.empty()) return {};
  const int g_max = *std::max_element(genera.begin(), genera.end());
  if (*std::min_element(genera.begin(), genera.end()) < 0) {
    throw std::invalid_argument("genus must be nonnegative");
  }
  if (g_max > kMaxGenus) throw std::invalid_argument("genus exceeds " + std::to_string(kMaxGenus));
  std::vector<bool> wanted(static_cast<std::size_t>(g_max) + 1, false);
  for (int g : genera) wanted[static_cast<std::size_t>(g)] = true;

  using PerGenus = std::vector<std::vector<GapSet>>;
  const PerGenus empty(static_cast<std::size_t>(g_max) + 1);
  auto parts = detail::walk_partitioned<PerGenus>(
      g_max, opts, empty, [&wanted](const detail::TreeNode& n, PerGenus& out) {
        const auto g = static_cast<std::size_t>(n.genus);
        if (wanted[g]) out[g].push_back(GapSet::from_trusted_bits(n.gaps));
      });
  PerGenus merged(static_cast<std::size_t>(g_max) + 1);
  for (auto& part : parts) {
    for (std::size_t g = 0; g < part.size(); ++g) {
      auto& dst = merged[g];
      dst.insert(dst.end(), std::make_move_iterator(part[g].begin()),
                 std::make_move_iterator(part[g].end()));
    }
  }
  std::vector<std::vector<GapSet>> out;
  out.reserve(genera.size());
  for (int g : genera) {
    auto list = merged[static_cast<std::size_t>(g)];
    std::sort(list.begin(), list.end());
    out.push_back(std::move(list));
  }
  return out;
}

std::vector<GapSet> enumerate_genus(int g, const EnumerationOptions& opts) {
  const int one[] = {g};
  return std::move(enumerate_selected(one, opts).front());
}

std::vector<GapSet> enumerate_filtered(const FamilyFilter& f, const EnumerationOptions& opts) {
  f.validate();
  std::vector<GapSet> out;
  for (auto& g : enumerate_genus(f.genus, opts)) {
    if (f.matches(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<GapSet> brute_force_genus(int g) {
  if (g < 0) throw std::invalid_argument("genus must be nonnegative");
  if (g > kOracleGenusLimit) throw std::out_of_range("oracle limit");
  if (g == 0) return {GapSet{}};
  const int universe = 2 * g - 1;
  // Lexicographic walk over g-combinations of [1, universe].
  std::vector<int> comb(static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i) comb[static_cast<std::size_t>(i)] = i + 1;
  std::vector<GapSet> out;
  while (true) {
    if (is_gapset(comb)) out.emplace_back(std::span<const int>(comb));
    int i = g - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == universe - (g - 1 - i)) --i;
    if (i < 0) break;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < g; ++j) {
      comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

CountTable count_table(int g_max, const EnumerationOptions& opts) {
  if (g_max < 0) throw std::invalid_argument("genus must be nonnegative");
  if (g_max > kMaxGenus) throw std::invalid_argument("genus exceeds " + std::to_string(kMaxGenus));
  using Grid = std::vector<std::vector<std::uint64_t>>;
  Grid empty(static_cast<std::size_t>(g_max) + 1);
  for (int g = 0; g <= g_max; ++g) empty[static_cast<std::size_t>(g)].assign(static_cast<std::size_t>(g) + 1, 0);
  auto parts = detail::walk_partitioned<Grid>(g_max, opts, empty, [](const detail::TreeNode& n, Grid& out) {
    ++out[static_cast<std::size_t>(n.genus)][static_cast<std::size_t>(n.sparsity)];
  });
  CountTable t;
  t.max_genus = g_max;
  t.cells = empty;
  for (const auto& part : parts) {
    for (std::size_t g = 0; g < part.size(); ++g) {
      for (std::size_t k = 0; k < part[g].size(); ++k) t.cells[g][k] += part[g][k];
    }
  }
  t.totals.resize(t.cells.size());
  for (std::size_t g = 0; g < t.cells.size(); ++g) {
    for (auto c : t.cells[g]) t.totals[g] += c;
  }
  return t;
}

std::vector<SequenceTerm> sequence_s(int n_max, const EnumerationOptions& opts) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  const CountTable t = count_table(3 * n_max + 1, opts);
  std::vector<SequenceTerm> terms;
  std::uint64_t cumsum = 0;
  for (int n = 1; n <= n_max; ++n) {
    SequenceTerm term;
    term.n = n;
    term.s = t.cell(3 * n + 1, 2 * n);
    cumsum += term.s;
    term.cumsum = cumsum;
    if (n > 1) {
      term.prev = terms.back().s;
      term.ratio_prev = static_cast<double>(term.s) / static_cast<double>(term.prev);
    }
    term.ratio_cumsum = static_cast<double>(cumsum) / static_cast<double>(term.s);
    terms.push_back(term);
  }
  return terms;
}

std::string format_ratio(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::domain_error("ratio with zero denominator");
  std::uint64_t scaled = (num / den) * 10000;
  std::uint64_t rem = num % den;
  std::uint64_t frac = 0;
  for (int digit = 0; digit < 4; ++digit) {
    rem *= 10;
    frac = frac * 10 + rem / den;
    rem %= den;
  }
  scaled += frac;
  // rem/den is the discarded tail in [0, 1).
  if (2 * rem > den || (2 * rem == den && scaled % 2 == 1)) ++scaled;
  std::string tail = std::to_string(scaled % 10000);
  tail.insert(0, 4 - tail.size(), '0');
  return std::to_string(scaled / 10000) + "." + tail;
}

}  // namespace gapsets
