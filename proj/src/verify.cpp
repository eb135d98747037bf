#include "gapsets/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "gapsets/families.hpp"

namespace gapsets {

namespace {

// ---------------------------------------------------------------------------
// Shared enumeration data

std::string show(std::span<const int> s) { return "{" + join_gaps(s) + "}"; }
std::string show(const GapSet& g) { return show(g.elements()); }
std::string show(const IntSet& s) { return show(s.elements()); }

IntSet as_int_set(const GapSet& g) { return g.to_int_set(); }
IntSet as_int_set(const IntSet& s) { return s; }

bool is_pure(const GapSet& g, int kappa) { return sparsity(g) == kappa; }

int top_alpha(const GapSet& g) { return jump_profile(g, sparsity(g)).alpha(); }

/// Gapsets by genus plus the two diagonal families for a range of n:
///   even(n) = pure (2n)-sparse of genus 3n+1,
///   odd(n)  = pure (2n+1)-sparse of genus 3n+2.
class Corpus {
 public:
  Corpus(const std::set<int>& genera, ParamRange n_range, const EnumerationOptions& opts) {
    std::set<int> all = genera;
    for (int n = n_range.lo; n <= n_range.hi; ++n) {
      all.insert(3 * n + 1);
      all.insert(3 * n + 2);
    }
    const std::vector<int> list(all.begin(), all.end());
    auto lists = enumerate_selected(list, opts);
    for (std::size_t i = 0; i < list.size(); ++i) by_genus_[list[i]] = std::move(lists[i]);
    for (int n = n_range.lo; n <= n_range.hi; ++n) {
      for (const auto& g : by_genus_.at(3 * n + 1)) {
        if (is_pure(g, 2 * n)) even_[n].push_back(g);
      }
      for (const auto& g : by_genus_.at(3 * n + 2)) {
        if (is_pure(g, 2 * n + 1)) odd_[n].push_back(g);
      }
    }
  }

  [[nodiscard]] const std::vector<GapSet>& genus(int g) const { return by_genus_.at(g); }
  [[nodiscard]] const std::vector<GapSet>& even(int n) const { return lookup(even_, n); }
  [[nodiscard]] const std::vector<GapSet>& odd(int n) const { return lookup(odd_, n); }

 private:
  static const std::vector<GapSet>& lookup(const std::map<int, std::vector<GapSet>>& m, int n) {
    static const std::vector<GapSet> none;
    const auto it = m.find(n);
    return it == m.end() ? none : it->second;
  }

  std::map<int, std::vector<GapSet>> by_genus_;
  std::map<int, std::vector<GapSet>> even_;
  std::map<int, std::vector<GapSet>> odd_;
};

struct Env {
  const Corpus& corpus;
  const SigmaMap& sigma;
};

class Recorder {
 public:
  explicit Recorder(VerificationReport& r) : report_(r) {}

  template <class Set, class Detail>
  void expect(bool ok, const Set& set, Detail&& detail) {
    ++report_.instances_checked;
    if (!ok) fail(as_int_set(set), detail());
  }

  void fail(IntSet set, std::string detail) {
    ++report_.failures;
    if (report_.counterexamples.size() < kMaxCounterexamples) {
      report_.counterexamples.push_back({std::move(set), std::move(detail)});
    }
  }

 private:
  VerificationReport& report_;
};

using CheckFn = void (*)(const Env&, int, Recorder&);

struct CheckDef {
  CheckInfo info;
  CheckFn fn;
};

// Applies the map under test, turning exceptions into an empty optional.
std::optional<IntSet> apply_sigma(const Env& env, const GapSet& g, std::string& error) {
  try {
    return env.sigma(g);
  } catch (const std::exception& e) {
    error = e.what();
    return std::nullopt;
  }
}

std::vector<GapSet> depth_at_most_three(const std::vector<GapSet>& family) {
  std::vector<GapSet> out;
  for (const auto& g : family) {
    if (invariants(g).depth <= 3) out.push_back(g);
  }
  return out;
}

std::vector<IntSet> non_pseudo_symmetric(const std::vector<GapSet>& family) {
  std::vector<IntSet> out;
  for (const auto& g : family) {
    if (symmetry_class(g) != Symmetry::pseudo_symmetric) out.push_back(g.to_int_set());
  }
  return out;
}

// ---------------------------------------------------------------------------
// General gapset claims (genus-indexed)

void check_depth_two_sets(const Env&, int m, Recorder& rec) {
  // [1, m-1] plus any subset of [m+1, 2m-1].
  const int free_bits = m - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_bits); ++mask) {
    std::vector<int> s;
    for (int x = 1; x < m; ++x) s.push_back(x);
    for (int b = 0; b < free_bits; ++b) {
      if ((mask >> b) & 1U) s.push_back(m + 1 + b);
    }
    const IntSet set(s);
    bool ok = is_gapset(s);
    std::string why = "not a gapset";
    if (ok) {
      const Invariants inv = invariants(GapSet(set));
      ok = inv.multiplicity == m && inv.depth <= 2;
      why = "multiplicity " + std::to_string(inv.multiplicity) + ", depth " + std::to_string(inv.depth);
    }
    rec.expect(ok, set, [&] { return why; });
  }
}

void check_multiplicity_bounds(const Env& env, int genus, Recorder& rec) {
  if (genus == 0) return;
  for (const auto& g : env.corpus.genus(genus)) {
    const int m = multiplicity(g);
    rec.expect(2 <= m && m <= genus + 1, g, [&] { return "m=" + std::to_string(m); });
  }
}

void check_kappa_at_most_m(const Env& env, int genus, Recorder& rec) {
  if (genus == 0) return;
  for (const auto& g : env.corpus.genus(genus)) {
    const int k = sparsity(g);
    const int m = multiplicity(g);
    rec.expect(k <= m, g, [&] { return "kappa=" + std::to_string(k) + " > m=" + std::to_string(m); });
  }
}

void check_interval_avoidance(const Env& env, int genus, Recorder& rec) {
  if (genus < 2) return;
  for (const auto& g : env.corpus.genus(genus)) {
    const int m = multiplicity(g);
    std::string why;
    for (int a = 0; a <= 3 && why.empty(); ++a) {
      for (int j = 1; j < genus && why.empty(); ++j) {
        for (int x = a * m + g.gap(j) + 1; x <= a * m + g.gap(j + 1) - 1; ++x) {
          if (g.contains(x)) {
            why = "a=" + std::to_string(a) + ", j=" + std::to_string(j) + " hits gap " + std::to_string(x);
            break;
          }
        }
      }
    }
    rec.expect(why.empty(), g, [&] { return why; });
  }
}

void check_frobenius_below_jump(const Env& env, int genus, Recorder& rec) {
  if (genus < 2) return;
  for (const auto& g : env.corpus.genus(genus)) {
    const int alpha = top_alpha(g);
    const int m = multiplicity(g);
    rec.expect(g.max() <= g.gap(alpha) + m, g, [&] {
      return "l_g=" + std::to_string(g.max()) + " > l_alpha + m=" + std::to_string(g.gap(alpha) + m);
    });
  }
}

void check_symmetric_pf(const Env& env, int genus, Recorder& rec) {
  if (genus == 0) return;
  for (const auto& g : env.corpus.genus(genus)) {
    const bool sym = symmetry_class(g) == Symmetry::symmetric;
    const auto pf = pseudo_frobenius(g);
    const bool single = pf.members == std::vector<int>{g.max()};
    rec.expect(sym == single, g, [&] { return "PF=" + show(pf.members) + (sym ? ", symmetric" : ""); });
  }
}

void check_pseudo_symmetric_pf(const Env& env, int genus, Recorder& rec) {
  if (genus == 0) return;
  for (const auto& g : env.corpus.genus(genus)) {
    const int f = g.max();
    const bool pseudo = symmetry_class(g) == Symmetry::pseudo_symmetric;
    if (pseudo) {
      rec.expect(f % 2 == 0, g, [&] { return "pseudo-symmetric with odd F=" + std::to_string(f); });
    }
    const auto pf = pseudo_frobenius(g);
    const bool pair = f % 2 == 0 && pf.members == std::vector<int>{f / 2, f};
    rec.expect(pseudo == pair, g, [&] { return "PF=" + show(pf.members) + (pseudo ? ", pseudo-symmetric" : ""); });
  }
}

void check_jump_blocks(const Env& env, int genus, Recorder& rec) {
  if (genus < 2) return;
  for (const auto& g : env.corpus.genus(genus)) {
    const auto p = canonical_partition(g);
    const int q = p.depth();
    const int alpha = top_alpha(g);
    const int a = p.block_of(g.gap(alpha));
    const int b = p.block_of(g.gap(alpha + 1));
    const bool ok = (a == q - 2 && b == q - 2) || (a == q - 1 && b == q - 1) || (a == q - 2 && b == q - 1);
    rec.expect(ok, g, [&] {
      return "l_alpha in G_" + std::to_string(a) + ", l_alpha+1 in G_" + std::to_string(b) + ", q=" + std::to_string(q);
    });
  }
}

void check_last_block_pf(const Env& env, int genus, Recorder& rec) {
  if (genus == 0) return;
  for (const auto& g : env.corpus.genus(genus)) {
    const auto p = canonical_partition(g);
    const int m = p.multiplicity;
    const int q = p.depth();
    const auto& last = p.blocks.back();
    const auto pf = pseudo_frobenius(g);
    std::string why;
    std::vector<int> head(static_cast<std::size_t>(m - 1));
    for (int x = 1; x < m; ++x) head[static_cast<std::size_t>(x - 1)] = x;
    std::vector<int> concat;
    for (const auto& b : p.blocks) concat.insert(concat.end(), b.begin(), b.end());
    if (p.blocks.front() != head) why = "G_0 != [1, m-1]";
    else if (last.empty()) why = "G_{q-1} empty";
    else if (last.front() < (q - 1) * m + 1 || last.back() > q * m - 1) why = "G_{q-1} outside [(q-1)m+1, qm-1]";
    else if (!std::equal(concat.begin(), concat.end(), g.elements().begin(), g.elements().end())) why = "blocks do not reassemble G";
    else if (!std::includes(pf.members.begin(), pf.members.end(), last.begin(), last.end())) why = "G_{q-1}=" + show(last) + " not inside PF=" + show(pf.members);
    else if (static_cast<int>(last.size()) > pf.type()) why = "#G_{q-1} > type";
    rec.expect(why.empty(), g, [&] { return why; });
  }
}

// ---------------------------------------------------------------------------
// Even diagonal family: pure (2n)-sparse, genus 3n+1

void check_hyperelliptic(const Env& env, int n, Recorder& rec) {
  bool has_hyperelliptic = false;
  for (const auto& g : env.corpus.even(n)) {
    const bool hyper = multiplicity(g) == 2;
    has_hyperelliptic = has_hyperelliptic || hyper;
    rec.expect(!hyper || n == 1, g, [&] { return "hyperelliptic member at n=" + std::to_string(n); });
  }
  if (n == 1) {
    const GapSet witness{1, 3, 5, 7};
    const auto& fam = env.corpus.even(1);
    rec.expect(std::find(fam.begin(), fam.end(), witness) != fam.end() && has_hyperelliptic, witness,
               [] { return "{1,3,5,7} missing from the n=1 family"; });
  }
}

void check_unique_even_jump(const Env& env, int n, Recorder& rec) {
  for (const auto& g : env.corpus.even(n)) {
    const auto jp = jump_profile(g, 2 * n);
    rec.expect(jp.jump_indices.size() == 1, g, [&] {
      return std::to_string(jp.jump_indices.size()) + " jumps of size " + std::to_string(2 * n);
    });
  }
}

void check_symmetric_multiplicity(const Env& env, int n, Recorder& rec) {
  for (const auto& g : env.corpus.even(n)) {
    if (symmetry_class(g) != Symmetry::symmetric) continue;
    rec.expect(multiplicity(g) == 2 * n, g, [&] { return "m=" + std::to_string(multiplicity(g)); });
  }
}

void check_even_depth_bound(const Env& env, int n, Recorder& rec) {
  for (const auto& g : env.corpus.even(n)) {
    const int q = invariants(g).depth;
    rec.expect(q <= 4, g, [&] { return "q=" + std::to_string(q); });
  }
}

void check_symmetric_iff_depth_four(const Env& env, int n, Recorder& rec) {
  for (const auto& g : env.corpus.even(n)) {
    const bool sym = symmetry_class(g) == Symmetry::symmetric;
    const int q = invariants(g).depth;
    rec.expect(sym == (q == 4), g, [&] { return "q=" + std::to_string(q) + ", class=" + to_string(symmetry_class(g)); });
  }
}

void check_depth_four_witness(const Env& env, int n, Recorder& rec) {
  const GapSet w = depth_four_witness(n);
  const auto& fam = env.corpus.even(n);
  const bool member = std::binary_search(fam.begin(), fam.end(), w);
  const int q = invariants(w).depth;
  rec.expect(member && q == 4, w, [&] {
    return std::string(member ? "" : "not in the family; ") + "q=" + std::to_string(q);
  });
}

void check_even_alpha_bound(const Env& env, int n, Recorder& rec) {
  for (const auto& g : env.corpus.even(n)) {
    const Invariants inv = invariants(g);
    if (inv.depth > 3) continue;
    const int la = g.gap(jump_profile(g, 2 * n).alpha());
    rec.expect(la <= 2 * inv.multiplicity - 1, g, [&] { return "l_alpha=" + std::to_string(la); });
  }
}

void check_even_no_pseudo(const Env& env, int n, Recorder& rec) {
  for (const auto& g : env.corpus.even(n)) {
    rec.expect(symmetry_class(g) != Symmetry::pseudo_symmetric, g, [] { return "pseudo-symmetric"; });
  }
}

std::string symmetric_shape_violation(const GapSet& g, int n) {
  const auto p = canonical_partition(g);
  const int m = p.multiplicity;
  const int gen = g.genus();
  if (p.depth() != 4) return "depth " + std::to_string(p.depth());
  if (p.blocks[3] != std::vector<int>{g.max()}) return "G_3=" + show(p.blocks[3]);
  if (p.blocks[2] != std::vector<int>{g.gap(gen - 1)}) return "G_2=" + show(p.blocks[2]);
  if (jump_profile(g, 2 * n).alpha() != gen - 1) return "alpha != g-1";
  if (g.gap(gen - 1) != 2 * m + 1) return "l_{g-1} != 2m+1";
  if (g.max() != 3 * m + 1) return "l_g != 3m+1";
  if (static_cast<int>(p.blocks[1].size()) != n) return "#G_1=" + std::to_string(p.blocks[1].size());
  return {};
}

void check_symmetric_shape(const Env& env, int n, Recorder& rec) {
  for (const auto& g : env.corpus.even(n)) {
    if (symmetry_class(g) != Symmetry::symmetric) continue;
    const std::string why = symmetric_shape_violation(g, n);
    rec.expect(why.empty(), g, [&] { return why; });
  }
}

void check_symmetric_contains_m_plus_one(const Env& env, int n, Recorder& rec) {
  for (const auto& g : env.corpus.even(n)) {
    if (symmetry_class(g) != Symmetry::symmetric) continue;
    rec.expect(g.contains(multiplicity(g) + 1), g, [] { return "m+1 is a non-gap"; });
  }
}

template <class Construct, class Shape>
void compare_family(const std::vector<GapSet>& family, Symmetry cls, int n, Construct construct,
                    Shape shape_violation, Recorder& rec) {
  std::vector<GapSet> found;
  for (const auto& g : family) {
    if (symmetry_class(g) == cls) found.push_back(g);
  }
  std::vector<GapSet> built;
  for (const auto& choice : all_pair_choices(n)) {
    const GapSet g = construct(n, choice);
    const std::string why = shape_violation(g);
    rec.expect(why.empty(), g, [&] { return "constructed member: " + why; });
    built.push_back(g);
  }
  std::sort(built.begin(), built.end());
  built.erase(std::unique(built.begin(), built.end()), built.end());
  const std::size_t expected = std::size_t{1} << (n - 1);
  rec.expect(built.size() == expected && found.size() == expected, IntSet{}, [&] {
    return "n=" + std::to_string(n) + ": constructed " + std::to_string(built.size()) + ", enumerated " +
           std::to_string(found.size()) + ", expected " + std::to_string(expected);
  });
  std::vector<GapSet> only_built;
  std::vector<GapSet> only_found;
  std::set_difference(built.begin(), built.end(), found.begin(), found.end(), std::back_inserter(only_built));
  std::set_difference(found.begin(), found.end(), built.begin(), built.end(), std::back_inserter(only_found));
  for (const auto& g : only_built) rec.fail(g.to_int_set(), "constructed but not enumerated");
  for (const auto& g : only_found) rec.fail(g.to_int_set(), "enumerated but not constructed");
  rec.expect(only_built.empty() && only_found.empty(), IntSet{}, [] { return "set mismatch"; });
}

void check_symmetric_count(const Env& env, int n, Recorder& rec) {
  compare_family(env.corpus.even(n), Symmetry::symmetric, n, construct_symmetric,
                 [n](const GapSet& g) -> std::string {
                   if (g.genus() != 3 * n + 1) return "genus";
                   if (!is_pure(g, 2 * n)) return "not pure " + std::to_string(2 * n) + "-sparse";
                   if (symmetry_class(g) != Symmetry::symmetric) return "not symmetric";
                   if (!g.contains(multiplicity(g) + 1)) return "m+1 not a gap";
                   return symmetric_shape_violation(g, n);
                 },
                 rec);
}

// ---------------------------------------------------------------------------
// Odd diagonal family: pure (2n+1)-sparse, genus 3n+2

void check_unique_odd_jump(const Env& env, int n, Recorder& rec) {
  for (const auto& g : env.corpus.odd(n)) {
    const auto jp = jump_profile(g, 2 * n + 1);
    rec.expect(jp.jump_indices.size() == 1, g, [&] {
      return std::to_string(jp.jump_indices.size()) + " jumps of size " + std::to_string(2 * n + 1);
    });
  }
}

void check_odd_alpha_bound(const Env& env, int n, Recorder& rec) {
  for (const auto& g : env.corpus.odd(n)) {
    const Invariants inv = invariants(g);
    if (inv.depth > 3) continue;
    const int la = g.gap(jump_profile(g, 2 * n + 1).alpha());
    rec.expect(la <= 2 * inv.multiplicity - 1, g, [&] { return "l_alpha=" + std::to_string(la); });
  }
}

void check_pseudo_multiplicity(const Env& env, int n, Recorder& rec) {
  for (const auto& g : env.corpus.odd(n)) {
    if (symmetry_class(g) != Symmetry::pseudo_symmetric) continue;
    rec.expect(multiplicity(g) == 2 * n + 1, g, [&] { return "m=" + std::to_string(multiplicity(g)); });
  }
}

void check_odd_no_symmetric(const Env& env, int n, Recorder& rec) {
  for (const auto& g : env.corpus.odd(n)) {
    rec.expect(symmetry_class(g) != Symmetry::symmetric, g, [] { return "symmetric"; });
  }
}

void check_odd_depth(const Env& env, int n, Recorder& rec) {
  for (const auto& g : env.corpus.odd(n)) {
    const int q = invariants(g).depth;
    const bool pseudo = symmetry_class(g) == Symmetry::pseudo_symmetric;
    rec.expect(q <= 3 && (!pseudo || q == 3), g, [&] {
      return "q=" + std::to_string(q) + (pseudo ? ", pseudo-symmetric" : "");
    });
  }
}

// Probe: the converse "q = 3 implies pseudo-symmetric" fails.
void probe_depth_three_converse(const Env& env, int n, Recorder& rec) {
  const GapSet fixture = depth_three_non_pseudo_fixture();
  auto claim = [](const GapSet& g) {
    return invariants(g).depth != 3 || symmetry_class(g) == Symmetry::pseudo_symmetric;
  };
  auto detail = [](const GapSet& g) {
    return "q=3 but F=" + std::to_string(g.max()) + " = 2g-" + std::to_string(2 * g.genus() - g.max());
  };
  // The fixture lives in the n = 2 family.
  if (n == 2) {
    const auto& fam = env.corpus.odd(2);
    const bool member = std::binary_search(fam.begin(), fam.end(), fixture);
    rec.expect(member && claim(fixture), fixture, [&] {
      return (member ? "" : "fixture missing from family; ") + detail(fixture);
    });
  }
  for (const auto& g : env.corpus.odd(n)) {
    if (g == fixture) continue;
    rec.expect(claim(g), g, [&] { return detail(g); });
  }
}

std::string pseudo_shape_violation(const GapSet& g, int n) {
  const auto p = canonical_partition(g);
  const int m = p.multiplicity;
  const int gen = g.genus();
  if (p.depth() != 3) return "depth " + std::to_string(p.depth());
  if (p.blocks[2] != std::vector<int>{g.max()}) return "G_2=" + show(p.blocks[2]);
  if (static_cast<int>(p.blocks[1].size()) != n + 1) return "#G_1=" + std::to_string(p.blocks[1].size());
  if (jump_profile(g, 2 * n + 1).alpha() != gen - 1) return "alpha != g-1";
  if (g.gap(gen - 1) != 2 * m - 1) return "l_{g-1} != 2m-1";
  if (g.max() != 3 * m - 1) return "l_g != 3m-1";
  return {};
}

void check_pseudo_shape(const Env& env, int n, Recorder& rec) {
  for (const auto& g : env.corpus.odd(n)) {
    if (symmetry_class(g) != Symmetry::pseudo_symmetric) continue;
    const std::string why = pseudo_shape_violation(g, n);
    rec.expect(why.empty(), g, [&] { return why; });
  }
}

void check_pseudo_count(const Env& env, int n, Recorder& rec) {
  compare_family(env.corpus.odd(n), Symmetry::pseudo_symmetric, n, construct_pseudo_symmetric,
                 [n](const GapSet& g) -> std::string {
                   if (g.genus() != 3 * n + 2) return "genus";
                   if (!is_pure(g, 2 * n + 1)) return "not pure " + std::to_string(2 * n + 1) + "-sparse";
                   if (symmetry_class(g) != Symmetry::pseudo_symmetric) return "not pseudo-symmetric";
                   if (multiplicity(g) != 2 * n + 1) return "m != 2n+1";
                   return pseudo_shape_violation(g, n);
                 },
                 rec);
}

// ---------------------------------------------------------------------------
// The sigma map

bool in_odd_family(const std::vector<GapSet>& odd, const IntSet& s) {
  if (!is_gapset(s)) return false;
  return std::binary_search(odd.begin(), odd.end(), GapSet(s));
}

void check_sigma_shape(const Env& env, int n, Recorder& rec) {
  std::map<IntSet, GapSet> seen;
  for (const auto& g : depth_at_most_three(env.corpus.even(n))) {
    std::string error;
    const auto img = apply_sigma(env, g, error);
    if (!img) {
      rec.expect(false, g, [&] { return "sigma threw: " + error; });
      continue;
    }
    const Invariants inv = invariants(g);
    const int m1 = inv.multiplicity + 1;
    std::string why;
    if (static_cast<int>(img->size()) != g.genus() + 1) why = "image has " + std::to_string(img->size()) + " elements";
    else if (max_consecutive_difference(img->elements()) != 2 * n + 1) why = "image max difference != 2n+1";
    else if (!is_m_set(*img, m1)) why = "image is not an (m+1)-set";
    else if (m_set_depth(img->elements(), m1) != inv.depth) why = "image depth differs";
    rec.expect(why.empty(), g, [&] { return why + ": " + show(*img); });
    const auto [it, inserted] = seen.emplace(*img, g);
    rec.expect(inserted, g, [&] { return "collides with " + show(it->second) + " at " + show(*img); });
  }
}

void check_sigma_depth_image(const Env& env, int n, Recorder& rec, int depth) {
  const auto& odd = env.corpus.odd(n);
  for (const auto& g : env.corpus.even(n)) {
    if (invariants(g).depth != depth) continue;
    std::string error;
    const auto img = apply_sigma(env, g, error);
    std::string why;
    if (!img) why = "sigma threw: " + error;
    else if (!in_odd_family(odd, *img)) why = show(*img) + " not in the odd family";
    else if (invariants(GapSet(*img)).depth != depth) why = show(*img) + " has different depth";
    rec.expect(why.empty(), g, [&] { return why; });
  }
}

void check_sigma_depth_two(const Env& env, int n, Recorder& rec) { check_sigma_depth_image(env, n, rec, 2); }
void check_sigma_depth_three(const Env& env, int n, Recorder& rec) { check_sigma_depth_image(env, n, rec, 3); }

void check_sigma_frobenius(const Env& env, int n, Recorder& rec) {
  const int g1 = 3 * n + 2;
  for (const auto& g : depth_at_most_three(env.corpus.even(n))) {
    std::string error;
    const auto img = apply_sigma(env, g, error);
    std::string why;
    if (!img) why = "sigma threw: " + error;
    else if (img->empty() || img->max() > 2 * g1 - 3) why = show(*img) + " exceeds 2g'-3";
    else if (is_gapset(*img) && symmetry_class(GapSet(*img)) == Symmetry::pseudo_symmetric) why = "image is pseudo-symmetric";
    rec.expect(why.empty(), g, [&] { return why; });
  }
}

void check_sigma_image(const Env& env, int n, Recorder& rec) {
  const auto domain = depth_at_most_three(env.corpus.even(n));
  const auto target = non_pseudo_symmetric(env.corpus.odd(n));  // sorted
  std::vector<IntSet> images;
  for (const auto& g : domain) {
    std::string error;
    const auto img = apply_sigma(env, g, error);
    if (!img) {
      rec.expect(false, g, [&] { return "sigma threw: " + error; });
      continue;
    }
    const bool hit = std::binary_search(target.begin(), target.end(), *img);
    rec.expect(hit, g, [&] { return "sigma image " + show(*img) + " outside the odd family minus pseudo-symmetric"; });
    if (hit) {
      // sigma_inverse(sigma(G)) == G
      bool round = false;
      try {
        round = sigma_inverse(GapSet(*img)) == g;
      } catch (const std::exception&) {
      }
      rec.expect(round, g, [] { return "sigma_inverse(sigma(G)) != G"; });
    }
    images.push_back(*img);
  }
  std::sort(images.begin(), images.end());
  for (const auto& h : target) {
    const bool covered = std::binary_search(images.begin(), images.end(), h);
    rec.expect(covered, h, [] { return "not in the image of sigma"; });
    // sigma(sigma_inverse(H)) == H
    std::string why;
    try {
      const GapSet pre = sigma_inverse(GapSet(h));
      std::string error;
      const auto back = apply_sigma(env, pre, error);
      if (!back) why = "sigma threw: " + error;
      else if (!(*back == h)) why = "sigma(sigma_inverse(H)) = " + show(*back);
    } catch (const std::exception& e) {
      why = std::string("sigma_inverse threw: ") + e.what();
    }
    rec.expect(why.empty(), h, [&] { return why; });
  }
}

void check_equal_cardinality(const Env& env, int n, Recorder& rec) {
  const auto& even = env.corpus.even(n);
  const auto& odd = env.corpus.odd(n);
  std::size_t even_deep = 0;
  std::size_t odd_pseudo = 0;
  for (const auto& g : even) even_deep += invariants(g).depth == 4 ? 1 : 0;
  for (const auto& g : odd) odd_pseudo += symmetry_class(g) == Symmetry::pseudo_symmetric ? 1 : 0;
  const std::size_t pow = std::size_t{1} << (n - 1);
  auto counts = [&] {
    return "n=" + std::to_string(n) + ": #even=" + std::to_string(even.size()) + " (depth 4: " +
           std::to_string(even_deep) + "), #odd=" + std::to_string(odd.size()) + " (pseudo-symmetric: " +
           std::to_string(odd_pseudo) + ")";
  };
  rec.expect(even.size() == odd.size(), IntSet{}, counts);
  rec.expect(even.size() - even_deep == odd.size() - odd_pseudo, IntSet{}, counts);
  rec.expect(even_deep == pow && odd_pseudo == pow, IntSet{}, counts);
}

// ---------------------------------------------------------------------------
// Registry

CheckInfo genus_check(std::string id, std::string statement, Evidence ev = Evidence::proved) {
  return CheckInfo{std::move(id), std::move(statement), RangeKind::genus, 0, ev, false};
}

CheckInfo n_check(std::string id, std::string statement, int min_n = 1) {
  return CheckInfo{std::move(id), std::move(statement), RangeKind::n, min_n, Evidence::proved, false};
}

const std::vector<CheckDef>& definitions() {
  static const std::vector<CheckDef> defs = {
      {CheckInfo{"P2.1", "[1,m-1] ⊆ G ⊆ [1,2m-1], m ∉ G implies G is a gapset of multiplicity m and depth <= 2",
                 RangeKind::multiplicity, 2, Evidence::proved, false},
       check_depth_two_sets},
      {genus_check("P2.2", "2 <= m <= g+1 for nonempty gapsets"), check_multiplicity_bounds},
      {genus_check("P2.4", "pure kappa-sparse implies kappa <= m"), check_kappa_at_most_m},
      {genus_check("P2.5", "[am+l_j+1, am+l_{j+1}-1] ∩ G = ∅ for a in [0,3]", Evidence::empirical),
       check_interval_avoidance},
      {genus_check("P2.6", "l_g <= l_alpha + m"), check_frobenius_below_jump},
      {genus_check("T2.7", "symmetric iff PF(G) = {F}"), check_symmetric_pf},
      {genus_check("T2.8", "pseudo-symmetric iff PF(G) = {F, F/2}, with F even"), check_pseudo_symmetric_pf},
      {genus_check("P2.9", "l_alpha, l_alpha+1 lie in G_{q-2}/G_{q-1} in one of three patterns"), check_jump_blocks},
      {genus_check("T2.10", "G_{q-1} ⊆ PF(G) and #G_{q-1} <= type; canonical partition shape"), check_last_block_pf},
      {n_check("L3.1", "the even family contains a hyperelliptic gapset iff n = 1"), check_hyperelliptic},
      {n_check("P3.2", "unique jump of size 2n in the even family (n > 2)", 3), check_unique_even_jump},
      {n_check("P3.3", "symmetric members of the even family have m = 2n"), check_symmetric_multiplicity},
      {n_check("C3.4", "even family has depth <= 4"), check_even_depth_bound},
      {n_check("T3.5", "even family: symmetric iff q = 4"), check_symmetric_iff_depth_four},
      {n_check("P3.6", "depth-4 witness lies in the even family (n > 1)", 2), check_depth_four_witness},
      {n_check("P3.7", "even family, q <= 3: l_alpha <= 2m-1"), check_even_alpha_bound},
      {n_check("T3.8", "even family has no pseudo-symmetric member"), check_even_no_pseudo},
      {n_check("P3.9", "symmetric even members: G_3={l_g}, G_2={l_{g-1}}, l_{g-1}=2m+1, l_g=3m+1, #G_1=n"),
       check_symmetric_shape},
      {n_check("C3.10", "symmetric even members contain m+1"), check_symmetric_contains_m_plus_one},
      {n_check("T3.12", "2^(n-1) symmetric even members, equal to the pair construction"), check_symmetric_count},
      {n_check("P4.1", "unique jump of size 2n+1 in the odd family (n >= 2)", 2), check_unique_odd_jump},
      {n_check("P4.2", "odd family, q <= 3: l_alpha <= 2m-1"), check_odd_alpha_bound},
      {n_check("P4.4", "pseudo-symmetric odd members have m = 2n+1"), check_pseudo_multiplicity},
      {n_check("P4.5", "odd family has no symmetric member"), check_odd_no_symmetric},
      {n_check("C4.6", "odd family has q <= 3; pseudo-symmetric implies q = 3"), check_odd_depth},
      {n_check("P4.7", "pseudo-symmetric odd members: G_2={l_g}, #G_1=n+1, l_{g-1}=2m-1, l_g=3m-1"),
       check_pseudo_shape},
      {n_check("T4.8", "2^(n-1) pseudo-symmetric odd members, equal to the pair construction"), check_pseudo_count},
      {n_check("T5.1", "sigma is injective on depth <= 3 and yields (m+1)-sets of the same depth"), check_sigma_shape},
      {n_check("P5.2", "sigma maps depth 2 into the odd family at depth 2"), check_sigma_depth_two},
      {n_check("P5.3", "sigma maps depth 3 into the odd family at depth 3"), check_sigma_depth_three},
      {n_check("P5.4", "sigma images have l_g' <= 2g'-3, hence are not pseudo-symmetric"), check_sigma_frobenius},
      {n_check("T5.5", "sigma(depth <= 3) = odd family minus pseudo-symmetric; round trips are identities"),
       check_sigma_image},
      {n_check("C5.6", "#even family = #odd family"), check_equal_cardinality},
      {CheckInfo{"C4.6-converse", "odd family: q = 3 implies pseudo-symmetric (false converse)", RangeKind::n, 1,
                 Evidence::proved, true},
       probe_depth_three_converse},
  };
  return defs;
}

const CheckDef& find_def(const std::string& id) {
  for (const auto& d : definitions()) {
    if (d.info.id == id) return d;
  }
  throw std::invalid_argument("unknown check id '" + id + "'");
}

void validate_range(const CheckInfo& info, ParamRange r) {
  if (r.empty()) return;
  switch (info.kind) {
    case RangeKind::genus:
      if (r.lo < 0) throw std::invalid_argument("genus range must start at 0 or above");
      if (r.hi > kVerifyGenusCeiling) throw std::out_of_range("genus range exceeds the enumeration ceiling");
      break;
    case RangeKind::multiplicity:
      if (r.lo < 2) throw std::invalid_argument("multiplicity range must start at 2 or above");
      if (r.hi > kVerifyMultiplicityCeiling) throw std::out_of_range("multiplicity range exceeds the ceiling");
      break;
    case RangeKind::n:
      if (r.lo < 1) throw std::invalid_argument("n range must start at 1 or above");
      if (3 * r.hi + 2 > kVerifyGenusCeiling) throw std::out_of_range("n range exceeds the enumeration ceiling");
      break;
  }
}

VerificationReport evaluate(const CheckDef& def, ParamRange range, const Env& env) {
  VerificationReport rep;
  rep.check_id = def.info.id;
  rep.statement = def.info.statement;
  rep.kind = def.info.kind;
  rep.range = range;
  rep.evidence = def.info.evidence;
  rep.expected_fail = def.info.probe_only;
  Recorder rec(rep);
  for (int p = range.lo; p <= range.hi; ++p) def.fn(env, p, rec);
  return rep;
}

SigmaMap effective_sigma(const CheckContext& ctx) {
  if (ctx.sigma) return ctx.sigma;
  return [](const GapSet& g) { return sigma(g).to_int_set(); };
}

void add_needs(const CheckInfo& info, ParamRange r, std::set<int>& genera, ParamRange& n_range) {
  if (r.empty()) return;
  if (info.kind == RangeKind::genus) {
    for (int g = r.lo; g <= r.hi; ++g) genera.insert(g);
  } else if (info.kind == RangeKind::n) {
    if (n_range.empty()) {
      n_range = r;
    } else {
      n_range.lo = std::min(n_range.lo, r.lo);
      n_range.hi = std::max(n_range.hi, r.hi);
    }
  }
}

struct Task {
  const CheckDef* def;
  ParamRange range;
  std::optional<IntSet> documented;
};

}  // namespace

// ---------------------------------------------------------------------------
// Public API

bool VerificationReport::behaves_as_documented() const {
  if (passed()) return false;
  if (!documented_counterexample) return true;
  return std::any_of(counterexamples.begin(), counterexamples.end(),
                     [&](const Counterexample& c) { return c.set == *documented_counterexample; });
}

bool SuiteResult::all_checks_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& r) { return r.passed(); });
}

bool SuiteResult::probes_as_documented() const {
  return std::all_of(probes.begin(), probes.end(), [](const auto& r) { return r.behaves_as_documented(); });
}

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& d : definitions()) out.push_back(d.info);
    return out;
  }();
  return infos;
}

const CheckInfo& find_check(const std::string& id) { return find_def(id).info; }

GapSet depth_three_non_pseudo_fixture() { return GapSet{1, 2, 3, 4, 6, 7, 8, 13}; }

std::string to_string(RangeKind k) {
  switch (k) {
    case RangeKind::genus: return "genus";
    case RangeKind::multiplicity: return "m";
    case RangeKind::n: return "n";
  }
  return "genus";
}

VerificationReport run_check(const std::string& id, ParamRange range, const CheckContext& ctx) {
  const CheckDef& def = find_def(id);
  validate_range(def.info, range);
  std::set<int> genera;
  ParamRange n_range{1, 0};
  add_needs(def.info, range, genera, n_range);
  const Corpus corpus(genera, n_range, ctx.enumeration);
  const SigmaMap map = effective_sigma(ctx);
  return evaluate(def, range, Env{corpus, map});
}

SuiteResult run_all(int g_ceiling, int n_ceiling, const CheckContext& ctx) {
  std::vector<Task> checks;
  std::vector<Task> probes;
  for (const auto& def : definitions()) {
    if (def.info.probe_only) continue;
    ParamRange r;
    switch (def.info.kind) {
      case RangeKind::genus: r = {0, g_ceiling}; break;
      case RangeKind::multiplicity: r = {2, std::min(g_ceiling, 16)}; break;
      case RangeKind::n: r = {std::max(1, def.info.hypothesis_min), n_ceiling}; break;
    }
    validate_range(def.info, r);
    checks.push_back({&def, r, std::nullopt});
  }
  // Hypothesis-sharpness probes.
  probes.push_back({&find_def("P3.2"), {1, std::min(2, n_ceiling)}, IntSet{1, 3, 5, 7}});
  probes.push_back({&find_def("C4.6-converse"), {1, std::max(2, n_ceiling)},
                    depth_three_non_pseudo_fixture().to_int_set()});
  for (const auto& p : probes) validate_range(p.def->info, p.range);

  std::set<int> genera;
  ParamRange n_range{1, 0};
  for (const auto& t : checks) add_needs(t.def->info, t.range, genera, n_range);
  for (const auto& t : probes) add_needs(t.def->info, t.range, genera, n_range);
  const Corpus corpus(genera, n_range, ctx.enumeration);
  const SigmaMap map = effective_sigma(ctx);
  const Env env{corpus, map};

  std::vector<Task> tasks = checks;
  tasks.insert(tasks.end(), probes.begin(), probes.end());
  std::vector<VerificationReport> reports(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      reports[i] = evaluate(*tasks[i].def, tasks[i].range, env);
      if (tasks[i].documented) {
        reports[i].expected_fail = true;
        reports[i].documented_counterexample = tasks[i].documented;
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(ctx.check_threads ? ctx.check_threads : default_thread_count(),
                                                           static_cast<unsigned>(tasks.size())));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  SuiteResult out;
  out.checks.assign(reports.begin(), reports.begin() + static_cast<std::ptrdiff_t>(checks.size()));
  out.probes.assign(reports.begin() + static_cast<std::ptrdiff_t>(checks.size()), reports.end());
  return out;
}

}  // namespace gapsets
