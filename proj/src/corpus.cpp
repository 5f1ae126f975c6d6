#include "kholo/corpus.hpp"

#include <algorithm>
#include <set>

namespace kholo::corpus {

Rational random_rational(Rng& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  return Rational(num(rng), den(rng));
}

GaussianRational random_gaussian(Rng& rng, long bound) {
  Rational re = random_rational(rng, bound);
  Rational im = random_rational(rng, bound);
  return GaussianRational(re, im);
}

SparsePoly random_poly(Rng& rng, const VarSpace& space, const PolyShape& shape) {
  SparsePoly p(space);
  std::uniform_int_distribution<std::size_t> count(1, std::max<std::size_t>(shape.max_terms, 1));
  std::uniform_int_distribution<std::uint32_t> degree(shape.zero_constant ? 1 : 0, shape.max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, space.size() - 1);
  const std::size_t terms = count(rng);
  for (std::size_t k = 0; k < terms; ++k) {
    Exponents e(space.size(), 0);
    const std::uint32_t d = space.size() == 0 ? 0 : degree(rng);
    for (std::uint32_t step = 0; step < d; ++step) ++e[pick(rng)];
    GaussianRational c = shape.real_coefficients ? GaussianRational(random_rational(rng, shape.bound))
                                                 : random_gaussian(rng, shape.bound);
    p.add_term(e, c);
  }
  return p;
}

GridCase random_grid(Rng& rng, std::size_t max_side) {
  std::uniform_int_distribution<std::size_t> side(1, max_side);
  const std::size_t rows = side(rng), cols = side(rng);
  std::uniform_int_distribution<long> jitter(-1, 1);
  std::bernoulli_distribution coin(0.5), drop(0.15), mark(0.2);

  // vertex (r, c) at index r * (cols + 1) + c; interior points move by up to 1/5
  std::vector<RationalVector> vertices;
  for (std::size_t r = 0; r <= rows; ++r)
    for (std::size_t c = 0; c <= cols; ++c) {
      RationalVector v(2);
      v(0) = Rational(static_cast<long>(c));
      v(1) = Rational(static_cast<long>(r));
      if (r > 0 && r < rows && c > 0 && c < cols) {
        v(0) += Rational(jitter(rng), 5);
        v(1) += Rational(jitter(rng), 5);
      }
      vertices.push_back(v);
    }
  auto at = [&](std::size_t r, std::size_t c) { return r * (cols + 1) + c; };

  std::vector<Simplex> top;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows * cols > 1 && drop(rng)) continue;
      const std::size_t a = at(r, c), b = at(r, c + 1), d = at(r + 1, c), e = at(r + 1, c + 1);
      if (coin(rng)) {
        top.push_back({a, b, e});
        top.push_back({a, d, e});
      } else {
        top.push_back({a, b, d});
        top.push_back({b, d, e});
      }
    }
  if (top.empty()) top.push_back({at(0, 0), at(0, 1), at(1, 0)});
  for (auto& s : top) std::sort(s.begin(), s.end());

  std::set<std::size_t> used;
  for (const auto& s : top) used.insert(s.begin(), s.end());
  const std::vector<std::size_t> pool(used.begin(), used.end());
  std::uniform_int_distribution<std::size_t> choose(0, pool.size() - 1);
  const std::size_t from = pool[choose(rng)];
  std::size_t to = from;
  while (to == from) to = pool[choose(rng)];

  std::vector<Simplex> marked;
  for (auto v : pool)
    if (mark(rng)) marked.push_back({v});
  return GridCase{SimplicialComplex(2, std::move(vertices), std::move(top)), std::move(marked), from, to};
}

}  // namespace kholo::corpus
