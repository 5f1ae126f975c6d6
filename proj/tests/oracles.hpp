// Independent reference implementations used only by the tests.
#ifndef KHOLO_TESTS_ORACLES_HPP
#define KHOLO_TESTS_ORACLES_HPP

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "kholo/kholo.hpp"

namespace oracle {

using namespace kholo;

// Cofactor expansion along the first remaining row, memoized on the set of
// columns still available.
inline SparsePoly laplace_determinant(const PolyMatrix& m, const VarSpace& space) {
  const std::size_t n = m.size();
  std::map<unsigned, SparsePoly> memo;
  auto rec = [&](auto&& self, std::size_t row, unsigned cols) -> SparsePoly {
    if (row == n) return SparsePoly::constant(space, GaussianRational(1));
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    SparsePoly sum(space);
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(cols & (1u << c))) continue;
      if (!m(row, c).is_zero()) {
        SparsePoly term = m(row, c) * self(self, row + 1, cols & ~(1u << c));
        if (sign > 0) sum += term;
        else sum -= term;
      }
      sign = -sign;
    }
    memo.emplace(cols, sum);
    return sum;
  };
  return rec(rec, 0, n == 0 ? 0u : (1u << n) - 1);
}

// Number of unordered pairs of top simplices sharing exactly n vertices.
inline std::size_t facet_pairs(const SimplicialComplex& c) {
  std::size_t count = 0;
  const auto& top = c.top();
  for (std::size_t a = 0; a < top.size(); ++a)
    for (std::size_t b = a + 1; b < top.size(); ++b) {
      std::vector<std::size_t> common;
      std::set_intersection(top[a].begin(), top[a].end(), top[b].begin(), top[b].end(), std::back_inserter(common));
      if (common.size() == c.dimension()) ++count;
    }
  return count;
}

// Exact test that planar point q lies on the closed segment [p, r].
inline bool on_segment_2d(const RationalVector& p, const RationalVector& r, const RationalVector& q) {
  const Rational cross = (r(0) - p(0)) * (q(1) - p(1)) - (r(1) - p(1)) * (q(0) - p(0));
  if (!cross.is_zero()) return false;
  const Rational dot = (q(0) - p(0)) * (r(0) - p(0)) + (q(1) - p(1)) * (r(1) - p(1));
  const Rational len = (r(0) - p(0)) * (r(0) - p(0)) + (r(1) - p(1)) * (r(1) - p(1));
  return dot.sign() >= 0 && dot <= len;
}

// Breadth-first reachability between the top simplices holding two vertices,
// using brute-force facet sharing.
inline bool facet_connected(const SimplicialComplex& c, std::size_t from, std::size_t to) {
  const auto& top = c.top();
  auto holds = [&](std::size_t k, std::size_t v) { return std::find(top[k].begin(), top[k].end(), v) != top[k].end(); };
  std::vector<bool> seen(top.size(), false);
  std::vector<std::size_t> stack;
  for (std::size_t k = 0; k < top.size(); ++k)
    if (holds(k, from)) {
      seen[k] = true;
      stack.push_back(k);
    }
  while (!stack.empty()) {
    const std::size_t k = stack.back();
    stack.pop_back();
    if (holds(k, to)) return true;
    for (std::size_t j = 0; j < top.size(); ++j) {
      if (seen[j]) continue;
      std::vector<std::size_t> common;
      std::set_intersection(top[k].begin(), top[k].end(), top[j].begin(), top[j].end(), std::back_inserter(common));
      if (common.size() == c.dimension()) {
        seen[j] = true;
        stack.push_back(j);
      }
    }
  }
  return false;
}

// All points of [-b, b]^m in (max-norm, lexicographic) order.
inline std::vector<std::vector<long>> graded_grid(std::size_t m, long b) {
  std::vector<std::vector<long>> all(1);
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<std::vector<long>> next;
    for (const auto& prefix : all)
      for (long v = -b; v <= b; ++v) {
        auto p = prefix;
        p.push_back(v);
        next.push_back(std::move(p));
      }
    all = std::move(next);
  }
  auto norm = [](const std::vector<long>& p) {
    long n = 0;
    for (long v : p) n = std::max(n, std::labs(v));
    return n;
  };
  std::stable_sort(all.begin(), all.end(), [&](const auto& a, const auto& b2) {
    if (norm(a) != norm(b2)) return norm(a) < norm(b2);
    return a < b2;
  });
  return all;
}

}  // namespace oracle

#endif  // KHOLO_TESTS_ORACLES_HPP
