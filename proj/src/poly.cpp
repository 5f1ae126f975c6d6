#include "kholo/poly.hpp"

#include <algorithm>
#include <numeric>

#include "kholo/error.hpp"

namespace kholo {

namespace {

std::uint64_t degree_sum(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    const std::uint64_t e = std::uint64_t{a[k]} + b[k];
    if (e > kMaxDegree) throw Error(ErrorKind::DegreeOverflow, "exponent exceeds " + std::to_string(kMaxDegree));
    out[k] = static_cast<std::uint32_t>(e);
  }
  return out;
}

void accumulate_term(SparsePoly::TermMap& terms, const Exponents& exps, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

std::string describe(const VarSpace& s) {
  std::string out = "[";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ",";
    out += s[k].name;
  }
  return out + "]";
}

}  // namespace

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = degree_sum(a);
  const auto db = degree_sum(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

SparsePoly SparsePoly::constant(VarSpace space, const GaussianRational& c) {
  SparsePoly p(std::move(space));
  p.add_term(Exponents(p.space_.size(), 0), c);
  return p;
}

SparsePoly SparsePoly::variable(VarSpace space, std::string_view name) {
  const auto idx = space.index_of(name);
  return variable(std::move(space), idx);
}

SparsePoly SparsePoly::variable(VarSpace space, std::size_t index) {
  if (index >= space.size()) throw Error(ErrorKind::IndexOutOfRange, "variable index out of range");
  Exponents e(space.size(), 0);
  e[index] = 1;
  return monomial(std::move(space), std::move(e), GaussianRational(1));
}

SparsePoly SparsePoly::monomial(VarSpace space, Exponents exps, const GaussianRational& c) {
  SparsePoly p(std::move(space));
  if (exps.size() != p.space_.size()) throw Error(ErrorKind::SpaceMismatch, "exponent vector length mismatch");
  for (auto e : exps)
    if (e > kMaxDegree) throw Error(ErrorKind::DegreeOverflow, "exponent exceeds bound");
  p.add_term(exps, c);
  return p;
}

bool SparsePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_sum(terms_.begin()->first) == 0);
}

void SparsePoly::add_term(const Exponents& exps, const GaussianRational& c) {
  if (exps.size() != space_.size()) throw Error(ErrorKind::SpaceMismatch, "exponent vector length mismatch");
  accumulate_term(terms_, exps, c);
}

GaussianRational SparsePoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? GaussianRational() : it->second;
}

GaussianRational SparsePoly::constant_term() const { return coefficient(Exponents(space_.size(), 0)); }

std::uint32_t SparsePoly::degree(std::size_t var) const {
  if (var >= space_.size()) throw Error(ErrorKind::IndexOutOfRange, "variable index out of range");
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

std::uint32_t SparsePoly::total_degree() const {
  return terms_.empty() ? 0 : static_cast<std::uint32_t>(degree_sum(terms_.rbegin()->first));
}

bool SparsePoly::has_real_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

void SparsePoly::require_same_space(const SparsePoly& o) const {
  if (!(space_ == o.space_))
    throw Error(ErrorKind::SpaceMismatch, describe(space_) + " vs " + describe(o.space_));
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  require_same_space(o);
  for (const auto& [e, c] : o.terms_) accumulate_term(terms_, e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  require_same_space(o);
  for (const auto& [e, c] : o.terms_) accumulate_term(terms_, e, -c);
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.require_same_space(b);
  SparsePoly out(a.space_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) accumulate_term(out.terms_, add_exponents(ea, eb), ca * cb);
  return out;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) { return *this = *this * o; }

SparsePoly& SparsePoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

SparsePoly operator-(const SparsePoly& a) {
  SparsePoly out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
  a.require_same_space(b);
  return a.terms_ == b.terms_;
}

SparsePoly poly_arith(const SparsePoly& p, const SparsePoly& q, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return p + q;
    case PolyOp::Sub: return p - q;
    case PolyOp::Mul: return p * q;
  }
  return {};
}

bool poly_equal(const SparsePoly& p, const SparsePoly& q) { return (p - q).is_zero(); }

SparsePoly pow(const SparsePoly& p, std::uint32_t exponent) {
  if (std::uint64_t{p.total_degree()} * exponent > kMaxDegree)
    throw Error(ErrorKind::DegreeOverflow, "power exceeds degree bound");
  SparsePoly result = SparsePoly::constant(p.space(), GaussianRational(1));
  SparsePoly square = p;
  while (exponent != 0) {
    if (exponent & 1u) result *= square;
    exponent >>= 1;
    if (exponent != 0) square *= square;
  }
  return result;
}

SparsePoly partial(const SparsePoly& p, std::size_t var) {
  if (var >= p.space().size()) throw Error(ErrorKind::UnknownVariable, "variable index out of range");
  SparsePoly out(p.space());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    out.add_term(d, c * GaussianRational(static_cast<long>(e[var])));
  }
  return out;
}

SparsePoly partial(const SparsePoly& p, std::string_view name) { return partial(p, p.space().index_of(name)); }

SparsePoly conjugate_coefficients(const SparsePoly& p) {
  SparsePoly out(p.space());
  for (const auto& [e, c] : p.terms()) out.add_term(e, conj(c));
  return out;
}

SparsePoly real_coefficients_part(const SparsePoly& p) {
  SparsePoly out(p.space());
  for (const auto& [e, c] : p.terms()) out.add_term(e, GaussianRational(c.re()));
  return out;
}

SparsePoly imag_coefficients_part(const SparsePoly& p) {
  SparsePoly out(p.space());
  for (const auto& [e, c] : p.terms()) out.add_term(e, GaussianRational(c.im()));
  return out;
}

SparsePoly change_space(const SparsePoly& p, const VarSpace& target) {
  const auto& src = p.space();
  std::vector<std::optional<std::size_t>> map(src.size());
  for (std::size_t k = 0; k < src.size(); ++k) map[k] = target.find(src[k].name);
  SparsePoly out(target);
  for (const auto& [e, c] : p.terms()) {
    Exponents d(target.size(), 0);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!map[k]) throw Error(ErrorKind::UnknownVariable, "variable '" + src[k].name + "' absent from target space");
      d[*map[k]] = e[k];
    }
    out.add_term(d, c);
  }
  return out;
}

LinearSubst::LinearSubst(VarSpace source, VarSpace target)
    : source_(std::move(source)), target_(std::move(target)), images_(source_.size()) {}

LinearSubst& LinearSubst::set(std::size_t source_var, AffineForm image) {
  if (source_var >= source_.size()) throw Error(ErrorKind::UnknownVariable, "source variable out of range");
  for (const auto& [v, c] : image.linear)
    if (v >= target_.size()) throw Error(ErrorKind::UnknownVariable, "target variable out of range");
  images_[source_var] = std::move(image);
  return *this;
}

LinearSubst& LinearSubst::set(std::string_view source_name, AffineForm image) {
  return set(source_.index_of(source_name), std::move(image));
}

SparsePoly substitute(const SparsePoly& p, const LinearSubst& s) {
  if (!(p.space() == s.source())) throw Error(ErrorKind::SpaceMismatch, "substitution source space differs");
  const std::size_t nv = p.space().size();
  // powers[v][k] = image(v)^k, built lazily
  std::vector<std::vector<SparsePoly>> powers(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    const auto d = p.degree(v);
    if (d == 0) continue;
    if (!s.covers(v))
      throw Error(ErrorKind::IncompleteSubstitution, "no image for variable '" + p.space()[v].name + "'");
    const auto& form = s.image(v);
    SparsePoly base = SparsePoly::constant(s.target(), form.constant);
    for (const auto& [tv, c] : form.linear) base += SparsePoly::variable(s.target(), tv) * c;
    powers[v].reserve(d + 1);
    powers[v].push_back(SparsePoly::constant(s.target(), GaussianRational(1)));
    for (std::uint32_t k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * base);
  }
  SparsePoly out(s.target());
  for (const auto& [e, c] : p.terms()) {
    SparsePoly term = SparsePoly::constant(s.target(), c);
    for (std::size_t v = 0; v < nv; ++v)
      if (e[v] != 0) term *= powers[v][e[v]];
    out += term;
  }
  return out;
}

std::vector<SparsePoly> coefficients_in(const SparsePoly& p, std::size_t var) {
  std::vector<SparsePoly> coeffs(p.degree(var) + 1, SparsePoly(p.space()));
  for (const auto& [e, c] : p.terms()) {
    Exponents d = e;
    d[var] = 0;
    coeffs[e[var]].add_term(d, c);
  }
  return coeffs;
}

SparsePoly substitute_polynomial(const SparsePoly& p, std::size_t var, const SparsePoly& q) {
  if (!(p.space() == q.space())) throw Error(ErrorKind::SpaceMismatch, "substituted polynomial in another space");
  const auto coeffs = coefficients_in(p, var);
  SparsePoly acc(p.space());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * q + *it;
  return acc;
}

GaussianRational evaluate(const SparsePoly& p, const Assignment& point) {
  const auto& space = p.space();
  std::vector<std::vector<GaussianRational>> powers(space.size());
  for (std::size_t v = 0; v < space.size(); ++v) {
    const auto d = p.degree(v);
    if (d == 0) continue;
    auto it = point.find(space[v].name);
    if (it == point.end())
      throw Error(ErrorKind::IncompleteAssignment, "no value for variable '" + space[v].name + "'");
    powers[v].push_back(GaussianRational(1));
    for (std::uint32_t k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * it->second);
  }
  GaussianRational sum;
  for (const auto& [e, c] : p.terms()) {
    GaussianRational term = c;
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] != 0) term *= powers[v][e[v]];
    sum += term;
  }
  return sum;
}

SparsePoly specialize(const SparsePoly& p, const Assignment& point) {
  const auto& space = p.space();
  LinearSubst s(space, space);
  for (std::size_t v = 0; v < space.size(); ++v) {
    auto it = point.find(space[v].name);
    s.set(v, it == point.end() ? AffineForm::of_variable(v) : AffineForm::of_constant(it->second));
  }
  return substitute(p, s);
}

SparsePoly to_real_coordinates(const SparsePoly& p) {
  const auto& space = p.space();
  if (!space.only_kinds({VarKind::Z, VarKind::W}))
    throw Error(ErrorKind::NonZSpace, "expected only complex variables in " + describe(space));
  const std::size_t m = space.size();
  const VarSpace target = VarSpace::real(m);
  LinearSubst s(space, target);
  for (std::size_t k = 0; k < m; ++k) s.set(k, AffineForm::of_variable(k).plus(m + k, GaussianRational::i()));
  return substitute(p, s);
}

RealImagParts split_real_imag(const SparsePoly& p) {
  const SparsePoly expanded = to_real_coordinates(p);
  return {real_coefficients_part(expanded), imag_coefficients_part(expanded)};
}

SparsePoly wirtinger(const SparsePoly& p, std::size_t j, bool barred) {
  const auto xi = p.space().find(variable_name(VarKind::X, static_cast<std::uint32_t>(j)));
  const auto yi = p.space().find(variable_name(VarKind::Y, static_cast<std::uint32_t>(j)));
  if (j == 0 || !xi || !yi) throw Error(ErrorKind::IndexOutOfRange, "no real pair x/y for index " + std::to_string(j));
  const GaussianRational half(Rational(1, 2));
  const GaussianRational iy = barred ? GaussianRational::i() : -GaussianRational::i();
  return (partial(p, *xi) + partial(p, *yi) * iy) * half;
}

DivisionResult divide(const SparsePoly& a, const SparsePoly& b) {
  if (!(a.space() == b.space())) throw Error(ErrorKind::SpaceMismatch, "division across spaces");
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  const auto& [lb_exp, lb_coeff] = b.leading_term();
  DivisionResult out{SparsePoly(a.space()), SparsePoly(a.space())};
  SparsePoly rest = a;
  while (!rest.is_zero()) {
    const auto [le, lc] = rest.leading_term();
    bool divisible = true;
    for (std::size_t k = 0; k < le.size(); ++k)
      if (le[k] < lb_exp[k]) {
        divisible = false;
        break;
      }
    if (!divisible) {
      out.remainder.add_term(le, lc);
      rest.add_term(le, -lc);
      continue;
    }
    Exponents qe(le.size());
    for (std::size_t k = 0; k < le.size(); ++k) qe[k] = le[k] - lb_exp[k];
    const GaussianRational qc = lc / lb_coeff;
    out.quotient.add_term(qe, qc);
    rest -= SparsePoly::monomial(a.space(), qe, qc) * b;
  }
  return out;
}

SparsePoly divide_exact(const SparsePoly& a, const SparsePoly& b) {
  auto [q, r] = divide(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::InexactDivision, "divisor does not divide dividend");
  return q;
}

}  // namespace kholo
