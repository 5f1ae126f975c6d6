#include "kholo/branches.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "kholo/error.hpp"
#include "kholo/resultant.hpp"

namespace kholo {

namespace {

std::string describe(const Assignment& point) {
  std::string out = "{";
  for (const auto& [name, value] : point) {
    if (out.size() > 1) out += ", ";
    out += name + "=" + to_string(value);
  }
  return out + "}";
}

void trim(UnivariatePoly& p) {
  while (!p.coeffs.empty() && p.coeffs.back().is_zero()) p.coeffs.pop_back();
}

UnivariatePoly remainder(UnivariatePoly a, const UnivariatePoly& b) {
  const long db = b.degree();
  const GaussianRational inv = b.leading().inverse();
  while (a.degree() >= db) {
    const long shift = a.degree() - db;
    const GaussianRational q = a.leading() * inv;
    for (long k = 0; k <= db; ++k) a.coeffs[static_cast<std::size_t>(k + shift)] -= q * b.coeffs[static_cast<std::size_t>(k)];
    trim(a);
  }
  return a;
}

}  // namespace

SparsePoly discriminant(const SparsePoly& p, std::string_view t) {
  const std::size_t tv = p.space().index_of(t);
  const auto d = p.degree(tv);
  if (d == 0) throw Error(ErrorKind::ZeroDegree, "discriminant needs positive degree in " + std::string(t));
  const SparsePoly res = sylvester_resultant(p, partial(p, tv), tv);
  const SparsePoly lc = coefficients_in(p, tv).back();
  SparsePoly disc = divide_exact(res, lc);
  if ((std::uint64_t{d} * (d - 1) / 2) % 2 == 1) disc = -disc;
  return change_space(disc, p.space().without(t));
}

bool locus_membership(const SparsePoly& d, const Assignment& z0) { return evaluate(d, z0).is_zero(); }

long UnivariatePoly::degree() const {
  for (std::size_t k = coeffs.size(); k > 0; --k)
    if (!coeffs[k - 1].is_zero()) return static_cast<long>(k - 1);
  return -1;
}

UnivariatePoly specialize_univariate(const SparsePoly& p, const Assignment& z0, std::string_view t) {
  const std::size_t tv = p.space().index_of(t);
  const auto coeffs = coefficients_in(p, tv);
  UnivariatePoly out;
  out.coeffs.reserve(coeffs.size());
  for (const auto& c : coeffs) out.coeffs.push_back(evaluate(c, z0));
  trim(out);
  return out;
}

UnivariatePoly derivative(const UnivariatePoly& p) {
  UnivariatePoly out;
  for (std::size_t k = 1; k < p.coeffs.size(); ++k)
    out.coeffs.push_back(p.coeffs[k] * GaussianRational(static_cast<long>(k)));
  trim(out);
  return out;
}

UnivariatePoly gcd(UnivariatePoly a, UnivariatePoly b) {
  trim(a);
  trim(b);
  while (b.degree() >= 0) {
    UnivariatePoly r = remainder(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.degree() >= 0) {
    const GaussianRational inv = a.leading().inverse();
    for (auto& c : a.coeffs) c *= inv;
  }
  return a;
}

std::size_t exact_distinct_roots(const UnivariatePoly& p) {
  const long d = p.degree();
  if (d <= 0) return 0;
  return static_cast<std::size_t>(d - gcd(p, derivative(p)).degree());
}

namespace numeric {

namespace {

struct HornerValue {
  std::complex<double> value;
  std::complex<double> slope;
  double magnitude_bound;  // sum |a_k| |z|^k
};

HornerValue horner(const Eigen::VectorXcd& a, std::complex<double> z) {
  HornerValue h{a(a.size() - 1), 0.0, std::abs(a(a.size() - 1))};
  const double az = std::abs(z);
  for (Eigen::Index k = a.size() - 2; k >= 0; --k) {
    h.slope = h.slope * z + h.value;
    h.value = h.value * z + a(k);
    h.magnitude_bound = h.magnitude_bound * az + std::abs(a(k));
  }
  return h;
}

}  // namespace

Eigen::VectorXcd aberth_roots(const Eigen::VectorXcd& coeffs, int max_iterations) {
  const Eigen::Index d = coeffs.size() - 1;
  if (d < 0 || coeffs(d) == 0.0)
    throw Error(ErrorKind::LeadingCoefficientVanishes, "root finder needs a nonzero leading coefficient");
  if (d == 0) return Eigen::VectorXcd(0);
  const Eigen::VectorXcd a = coeffs / coeffs(d);

  double radius = 0.0;
  for (Eigen::Index k = 0; k < d; ++k) radius = std::max(radius, std::abs(a(k)));
  radius += 1.0;

  constexpr double kOffset = 0.4;  // keeps the start off real-symmetric configurations
  const double eps = std::numeric_limits<double>::epsilon();
  Eigen::VectorXcd z(d);
  for (Eigen::Index k = 0; k < d; ++k)
    z(k) = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d) + kOffset);

  std::vector<bool> frozen(static_cast<std::size_t>(d), false);
  for (int iter = 0; iter < max_iterations; ++iter) {
    bool all_frozen = true;
    for (Eigen::Index k = 0; k < d; ++k) {
      if (frozen[static_cast<std::size_t>(k)]) continue;
      const HornerValue h = horner(a, z(k));
      if (std::abs(h.value) <= 4.0 * static_cast<double>(d + 1) * eps * h.magnitude_bound) {
        frozen[static_cast<std::size_t>(k)] = true;
        continue;
      }
      std::complex<double> repulsion = 0.0;
      for (Eigen::Index j = 0; j < d; ++j)
        if (j != k) repulsion += 1.0 / (z(k) - z(j));
      std::complex<double> step;
      if (h.slope == 0.0) {
        step = std::polar(eps * radius, kOffset);
      } else {
        const std::complex<double> newton = h.value / h.slope;
        step = newton / (1.0 - newton * repulsion);
      }
      z(k) -= step;
      if (std::abs(step) <= eps * (std::abs(z(k)) + eps * radius))
        frozen[static_cast<std::size_t>(k)] = true;
      else
        all_frozen = false;
    }
    if (all_frozen) return z;
  }
  if (std::all_of(frozen.begin(), frozen.end(), [](bool f) { return f; })) return z;
  throw Error(ErrorKind::NonConvergence, "Aberth iteration did not settle in " + std::to_string(max_iterations) + " sweeps");
}

std::size_t count_clusters(const Eigen::VectorXcd& roots, double tol) {
  const auto n = static_cast<std::size_t>(roots.size());
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(roots(static_cast<Eigen::Index>(i)) - roots(static_cast<Eigen::Index>(j))) < tol)
        parent[find(i)] = find(j);
  std::size_t clusters = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (find(i) == i) ++clusters;
  return clusters;
}

std::size_t fiber_count(const SparsePoly& p, const Assignment& z0, double tol, std::string_view t) {
  if (!(tol > 0.0)) throw Error(ErrorKind::IndexOutOfRange, "tolerance must be positive");
  const std::size_t tv = p.space().index_of(t);
  const UnivariatePoly fiber = specialize_univariate(p, z0, t);
  if (fiber.degree() != static_cast<long>(p.degree(tv)))
    throw Error(ErrorKind::LeadingCoefficientVanishes, "leading coefficient in " + std::string(t) + " vanishes at " + describe(z0));
  Eigen::VectorXcd coeffs(static_cast<Eigen::Index>(fiber.coeffs.size()));
  for (std::size_t k = 0; k < fiber.coeffs.size(); ++k) coeffs(static_cast<Eigen::Index>(k)) = fiber.coeffs[k].to_complex();
  return count_clusters(aberth_roots(coeffs), tol);
}

BranchReport covering_check(const SparsePoly& p, const std::vector<Assignment>& path, double tol, std::string_view t) {
  BranchReport report;
  report.p = p;
  report.t = std::string(t);
  report.d = discriminant(p, t);
  const std::size_t degree = p.degree(t);
  for (std::size_t k = 0; k < path.size(); ++k)
    if (locus_membership(report.d, path[k]))
      throw Error(ErrorKind::PointOnLocus, "sample " + std::to_string(k) + " " + describe(path[k]) + " lies on the discriminant locus");
  for (std::size_t k = 0; k < path.size(); ++k) {
    FiberSample s;
    s.point = path[k];
    s.fiber_count = fiber_count(p, path[k], tol, t);
    s.exact_distinct = exact_distinct_roots(specialize_univariate(p, path[k], t));
    if (s.fiber_count != degree) report.violations.push_back(k);
    report.samples.push_back(std::move(s));
  }
  if (!report.samples.empty() &&
      std::all_of(report.samples.begin(), report.samples.end(),
                  [&](const FiberSample& s) { return s.fiber_count == report.samples.front().fiber_count; }))
    report.covering_degree = report.samples.front().fiber_count;
  return report;
}

std::complex<double> evaluate(const SparsePoly& p, const ComplexPoint& point) {
  const auto& space = p.space();
  std::vector<std::complex<double>> values(space.size());
  for (std::size_t v = 0; v < space.size(); ++v) {
    if (p.degree(v) == 0) continue;
    auto it = point.find(space[v].name);
    if (it == point.end()) throw Error(ErrorKind::IncompleteAssignment, "no value for variable '" + space[v].name + "'");
    values[v] = it->second;
  }
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : p.terms()) {
    std::complex<double> term = c.to_complex();
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] != 0) term *= std::pow(values[v], static_cast<int>(e[v]));
    sum += term;
  }
  return sum;
}

bool verify_annihilator_numeric(const SparsePoly& r, const std::function<std::complex<double>(const ComplexPoint&)>& f,
                                const std::vector<ComplexPoint>& samples, double tol, std::string_view t) {
  for (const auto& sample : samples) {
    ComplexPoint point = sample;
    point[std::string(t)] = f(sample);
    if (!(std::abs(evaluate(r, point)) < tol)) return false;
  }
  return true;
}

}  // namespace numeric

}  // namespace kholo
