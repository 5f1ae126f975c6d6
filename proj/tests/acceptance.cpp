// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "kholo/kholo.hpp"
#include "oracles.hpp"

using namespace kholo;

namespace {

using Failure = std::optional<std::string>;

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Failure()> run;
};

std::vector<SparsePoly> cartan_corpus() {
  corpus::Rng rng(1001);
  std::vector<SparsePoly> out;
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 1 + static_cast<std::size_t>(k % 3);
    out.push_back(corpus::random_poly(rng, VarSpace::complex(n), {6, 6, 100, false, true}));
  }
  return out;
}

Failure round_trip() {
  for (const auto& f : cartan_corpus()) {
    const auto report = reconstruct_from_real_part(split_real_imag(f).re);
    if (!(report.f == f)) return "mismatch for f = " + print_poly(f);
  }
  return std::nullopt;
}

Failure g_identities() {
  for (const auto& f : cartan_corpus()) {
    if (!verify_g_holomorphic(f).holomorphic) return "g not holomorphic for f = " + print_poly(f);
    const auto ids = restrict_g_identity(f);
    if (!ids.halving.equal) return "halving identity fails for f = " + print_poly(f);
    if (!ids.real_slice.equal) return "real slice identity fails for f = " + print_poly(f);
  }
  return std::nullopt;
}

AnnihilatorPair pair_for(const SparsePoly& f) {
  const auto parts = split_real_imag(f);
  const VarSpace space = VarSpace::real_t(f.space().size());
  const SparsePoly t = SparsePoly::variable(space, "t");
  return AnnihilatorPair(t - change_space(parts.re, space), t - change_space(parts.im, space));
}

Failure annihilation() {
  corpus::Rng rng(1003);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + static_cast<std::size_t>(k % 2);
    const SparsePoly f = corpus::random_poly(rng, VarSpace::complex(n), {4, 4, 20, false, false});
    const auto report = eliminate_annihilator(pair_for(f));
    if (report.degenerate) return "degenerate resultant for f = " + print_poly(f);
    if (!verify_annihilator(report.r, f)) return "R does not annihilate f = " + print_poly(f);
  }
  const VarSpace rt = VarSpace::real_t(1);
  const auto golden = eliminate_annihilator(AnnihilatorPair(parse_poly("4*(t+1)^4 - 4*(1+x)*(t+1)^2 - y^2", rt),
                                                            parse_poly("4*t^4 + 4*(1+x)*t^2 - y^2", rt)));
  const auto [quotient, remainder] = divide(golden.r, parse_poly("t^2 + 2*t - z", VarSpace::complex_t(1)));
  if (!remainder.is_zero()) return "square-root golden R leaves remainder " + print_poly(remainder);
  return std::nullopt;
}

const VarSpace kPairSpace = VarSpace::from_names({"z1", "z2", "t", "w0"});

SparsePoly random_in_w(corpus::Rng& rng, std::uint32_t max_w) {
  std::uniform_int_distribution<std::uint32_t> deg(1, max_w);
  const std::uint32_t d = deg(rng);
  const VarSpace coeff_space = VarSpace::from_names({"z1", "z2", "t"});
  const SparsePoly w = SparsePoly::variable(kPairSpace, "w0");
  SparsePoly p(kPairSpace);
  for (std::uint32_t k = 0; k <= d; ++k) {
    SparsePoly c = change_space(corpus::random_poly(rng, coeff_space, {2, 3, 9, false, false}), kPairSpace);
    if (k == d && c.is_zero()) c = SparsePoly::constant(kPairSpace, GaussianRational(1));
    p += c * pow(w, k);
  }
  return p;
}

Failure resultant_oracle() {
  corpus::Rng rng(1004);
  for (int k = 0; k < 100; ++k) {
    const SparsePoly a = random_in_w(rng, 4), b = random_in_w(rng, 4);
    const PolyMatrix m = sylvester_matrix(a, b, 3);
    if (m.size() > 8) return "Sylvester dimension " + std::to_string(m.size());
    if (!(bareiss_determinant(m) == oracle::laplace_determinant(m, kPairSpace)))
      return "determinants differ for pair " + std::to_string(k);
  }
  return std::nullopt;
}

Failure discriminant_goldens() {
  const VarSpace zt = VarSpace::complex_t(1);
  const VarSpace z = VarSpace::complex(1);
  const std::vector<std::pair<const char*, const char*>> goldens{
      {"t^2 - z", "4*z"}, {"t^2 + 2*t - z", "4 + 4*z"}, {"t^3 - z", "-27*z^2"}};
  for (const auto& [p, d] : goldens) {
    const SparsePoly got = discriminant(parse_poly(p, zt));
    if (!(got == change_space(parse_poly(d, z), got.space())))
      return std::string("disc(") + p + ") = " + print_poly(got);
  }
  return std::nullopt;
}

Failure covering_constancy() {
  corpus::Rng rng(1006);
  const std::vector<std::pair<SparsePoly, std::size_t>> family{
      {parse_poly("t^2 - z", VarSpace::complex_t(1)), 1},
      {parse_poly("t^3 - z", VarSpace::complex_t(1)), 1},
      {parse_poly("t^2 + 2*t - z", VarSpace::complex_t(1)), 1},
      {parse_poly("t^2 - z1*z2", VarSpace::complex_t(2)), 2}};
  for (const auto& [p, n] : family) {
    const SparsePoly d = discriminant(p);
    const std::size_t deg = p.degree("t");
    std::size_t samples = 0;
    while (samples < 20) {
      Assignment z0;
      for (std::size_t j = 1; j <= n; ++j) z0["z" + std::to_string(j)] = corpus::random_gaussian(rng, 10);
      if (locus_membership(d, z0)) continue;
      ++samples;
      const UnivariatePoly fiber = specialize_univariate(p, z0);
      if (gcd(fiber, derivative(fiber)).degree() != 0) return "fiber not square-free for " + print_poly(p);
      const std::size_t count = numeric::fiber_count(p, z0, 1e-8);
      if (count != deg) return "fiber_count " + std::to_string(count) + " for " + print_poly(p);
    }
  }
  return std::nullopt;
}

Failure router() {
  corpus::Rng rng(1007);
  std::size_t routed = 0;
  for (int k = 0; k < 100; ++k) {
    const auto g = corpus::random_grid(rng);
    if (g.complex.top().size() > 32) return "grid with " + std::to_string(g.complex.top().size()) + " triangles";
    const Subcomplex marked(g.complex, g.marked, g.from, g.to);
    const bool connected = oracle::facet_connected(g.complex, g.from, g.to);
    std::optional<PLPath> path;
    try {
      path = route_path(g.complex, marked);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Disconnected) throw;
    }
    if (path.has_value() != connected) return "route outcome disagrees with connectivity on grid " + std::to_string(k);
    if (!path) continue;
    ++routed;
    if (!verify_avoidance(*path, g.complex, marked).avoids) return "path meets the marked set on grid " + std::to_string(k);
  }
  if (routed == 0) return std::string("no grid was routable");
  return std::nullopt;
}

Failure parser() {
  corpus::Rng rng(1008);
  for (int k = 0; k < 500; ++k) {
    const VarSpace space = (k % 2) ? VarSpace::complex_t(1 + static_cast<std::size_t>(k % 3)) : VarSpace::real(2);
    const SparsePoly p = corpus::random_poly(rng, space, {6, 8, 1000, k % 5 == 0, false});
    if (!(parse_poly(print_poly(p), space) == p)) return "round trip fails for " + print_poly(p);
  }
  std::mt19937_64 fuzz(1009);
  const std::string alphabet = "xyzwti0123456789+-*/^() \n\t.,#zz1";
  const VarSpace space = VarSpace::complex_t(2);
  std::uniform_int_distribution<std::size_t> len(0, 40), pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> byte(0, 255), mode(0, 3);
  for (int k = 0; k < 10000; ++k) {
    std::string s;
    const std::size_t n = len(fuzz);
    const bool raw = mode(fuzz) == 0;
    for (std::size_t c = 0; c < n; ++c) s += raw ? static_cast<char>(byte(fuzz)) : alphabet[pick(fuzz)];
    try {
      parse_poly(s, space);
    } catch (const Error&) {
    } catch (const std::exception& e) {
      return "fuzz input " + std::to_string(k) + " escaped with " + e.what();
    }
  }
  return std::nullopt;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "cartan round trip", 10, round_trip},
      {2, "g holomorphy and restriction identities", 30, g_identities},
      {3, "annihilator end to end", 60, annihilation},
      {4, "bareiss vs cofactor oracle", 30, resultant_oracle},
      {5, "discriminant goldens", 1, discriminant_goldens},
      {6, "covering constancy", 10, covering_constancy},
      {7, "simplicial router", 20, router},
      {8, "parser round trip and fuzz", 20, parser},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Failure failure;
    try {
      failure = c.run();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!failure && seconds > c.budget_seconds) {
      std::ostringstream os;
      os << "exceeded " << c.budget_seconds << " s budget";
      failure = os.str();
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << (failure ? "FAIL" : "PASS") << " criterion " << c.id << ": " << c.name << " (" << timing << ")";
    if (failure) std::cout << " - " << *failure;
    std::cout << std::endl;
    if (failure) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
