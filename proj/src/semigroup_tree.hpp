#pragma once

// Semigroup tree traversal shared by the enumerator and the counting code.

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

#include "gapsets/enumerate.hpp"
#include "gapsets/gapset.hpp"

namespace gapsets::detail {

struct TreeNode {
  Bits gaps;
  int genus = 0;
  int multiplicity = 1;
  int frobenius = 0;
  int sparsity = 0;
};

inline TreeNode tree_root() { return TreeNode{}; }

/// x > F is a minimal generator of the complement iff it is not a sum of two
/// non-gaps >= m. Generators never exceed F + m.
inline bool is_minimal_generator(const TreeNode& n, int x) {
  for (int a = n.multiplicity; a <= x / 2; ++a) {
    if (!n.gaps.test(static_cast<std::size_t>(a)) &&
        !n.gaps.test(static_cast<std::size_t>(x - a))) {
      return false;
    }
  }
  return true;
}

/// Calls f(child) for each child in increasing order of the removed generator.
template <class F>
void for_each_child(const TreeNode& n, F&& f) {
  const int hi = std::min(n.frobenius + n.multiplicity, kMaxElement);
  for (int x = n.frobenius + 1; x <= hi; ++x) {
    if (!is_minimal_generator(n, x)) continue;
    TreeNode c = n;
    c.gaps.set(static_cast<std::size_t>(x));
    c.genus = n.genus + 1;
    c.frobenius = x;
    c.multiplicity = x == n.multiplicity ? n.multiplicity + 1 : n.multiplicity;
    c.sparsity = std::max(n.sparsity, x - n.frobenius);
    f(c);
  }
}

template <class Visit>
void walk(const TreeNode& n, int max_genus, Visit& visit) {
  visit(n);
  if (n.genus >= max_genus) return;
  for_each_child(n, [&](const TreeNode& c) { walk(c, max_genus, visit); });
}

/// Visits every node of genus <= max_genus. Nodes above the split depth are
/// handled on the calling thread into results[0]; each subtree rooted at the
/// split depth gets its own result slot, in DFS order. visit(node, Result&)
/// must only touch the Result it is handed.
template <class Result, class Visit>
std::vector<Result> walk_partitioned(int max_genus, const EnumerationOptions& opts,
                                     const Result& empty, Visit visit) {
  const int split = std::max(1, opts.split_depth);
  std::vector<TreeNode> frontier;
  std::vector<Result> results(1, empty);

  auto top = [&](auto& self, const TreeNode& n) -> void {
    if (n.genus == split && n.genus <= max_genus) {
      frontier.push_back(n);
      return;
    }
    visit(n, results[0]);
    if (n.genus >= max_genus) return;
    for_each_child(n, [&](const TreeNode& c) { self(self, c); });
  };
  top(top, tree_root());

  results.resize(frontier.size() + 1, empty);
  const unsigned threads = std::max(
      1u, std::min<unsigned>(opts.threads ? opts.threads : default_thread_count(),
                             static_cast<unsigned>(frontier.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < frontier.size(); i = next++) {
      Result& r = results[i + 1];
      auto v = [&](const TreeNode& n) { visit(n, r); };
      walk(frontier[i], max_genus, v);
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return results;
}

}  // namespace gapsets::detail
