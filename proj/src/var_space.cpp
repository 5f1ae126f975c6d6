#include "kholo/var_space.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "kholo/error.hpp"

namespace kholo {

std::string variable_name(VarKind kind, std::uint32_t index) {
  switch (kind) {
    case VarKind::Z: return "z" + std::to_string(index);
    case VarKind::W: return "w" + std::to_string(index);
    case VarKind::X: return "x" + std::to_string(index);
    case VarKind::Y: return "y" + std::to_string(index);
    case VarKind::T: return "t";
    case VarKind::Aux: return "w0";
  }
  return {};
}

std::optional<Variable> parse_variable_name(std::string_view name) {
  if (name == "t") return Variable{VarKind::T, 0, "t"};
  if (name == "w0") return Variable{VarKind::Aux, 0, "w0"};
  if (name.size() < 2) return std::nullopt;
  VarKind kind;
  switch (name.front()) {
    case 'z': kind = VarKind::Z; break;
    case 'w': kind = VarKind::W; break;
    case 'x': kind = VarKind::X; break;
    case 'y': kind = VarKind::Y; break;
    default: return std::nullopt;
  }
  const auto digits = name.substr(1);
  if (digits.front() == '0' || digits.size() > 6) return std::nullopt;
  std::uint32_t index = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    index = index * 10 + static_cast<std::uint32_t>(c - '0');
  }
  return Variable{kind, index, std::string(name)};
}

VarSpace::VarSpace() : vars_(std::make_shared<const std::vector<Variable>>()) {}

VarSpace::VarSpace(std::vector<Variable> vars) {
  std::set<std::string> seen;
  for (const auto& v : vars)
    if (!seen.insert(v.name).second) throw Error(ErrorKind::SpaceMismatch, "duplicate variable " + v.name);
  vars_ = std::make_shared<const std::vector<Variable>>(std::move(vars));
}

VarSpace VarSpace::from_names(const std::vector<std::string>& names) {
  std::vector<Variable> vars;
  vars.reserve(names.size());
  for (const auto& name : names) {
    auto v = parse_variable_name(name);
    if (!v) throw Error(ErrorKind::UnknownVariable, "unsupported variable name '" + name + "'");
    vars.push_back(*v);
  }
  return VarSpace(std::move(vars));
}

namespace {

void append(std::vector<Variable>& vars, VarKind kind, std::size_t n) {
  for (std::uint32_t j = 1; j <= n; ++j) vars.push_back({kind, j, variable_name(kind, j)});
}

}  // namespace

VarSpace VarSpace::complex(std::size_t n) {
  std::vector<Variable> v;
  append(v, VarKind::Z, n);
  return VarSpace(std::move(v));
}

VarSpace VarSpace::doubled(std::size_t n) {
  std::vector<Variable> v;
  append(v, VarKind::Z, n);
  append(v, VarKind::W, n);
  return VarSpace(std::move(v));
}

VarSpace VarSpace::real(std::size_t n) {
  std::vector<Variable> v;
  append(v, VarKind::X, n);
  append(v, VarKind::Y, n);
  return VarSpace(std::move(v));
}

VarSpace VarSpace::real_t(std::size_t n) {
  std::vector<Variable> v;
  append(v, VarKind::X, n);
  append(v, VarKind::Y, n);
  v.push_back({VarKind::T, 0, "t"});
  return VarSpace(std::move(v));
}

VarSpace VarSpace::complex_t(std::size_t n) {
  std::vector<Variable> v;
  append(v, VarKind::Z, n);
  v.push_back({VarKind::T, 0, "t"});
  return VarSpace(std::move(v));
}

VarSpace VarSpace::complex_t_aux(std::size_t n) {
  std::vector<Variable> v;
  append(v, VarKind::Z, n);
  v.push_back({VarKind::T, 0, "t"});
  v.push_back({VarKind::Aux, 0, "w0"});
  return VarSpace(std::move(v));
}

std::vector<std::string> VarSpace::names() const {
  std::vector<std::string> out;
  out.reserve(size());
  for (const auto& v : *vars_) out.push_back(v.name);
  return out;
}

std::optional<std::size_t> VarSpace::find(std::string_view name) const {
  for (std::size_t i = 0; i < vars_->size(); ++i)
    if ((*vars_)[i].name == name) return i;
  return std::nullopt;
}

std::size_t VarSpace::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorKind::UnknownVariable, "variable '" + std::string(name) + "' not in space");
}

std::size_t VarSpace::count(VarKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(vars_->begin(), vars_->end(), [kind](const Variable& v) { return v.kind == kind; }));
}

bool VarSpace::only_kinds(std::initializer_list<VarKind> kinds) const {
  return std::all_of(vars_->begin(), vars_->end(), [&](const Variable& v) {
    return std::find(kinds.begin(), kinds.end(), v.kind) != kinds.end();
  });
}

VarSpace VarSpace::without(std::string_view name) const {
  const auto idx = index_of(name);
  std::vector<Variable> v = *vars_;
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(idx));
  return VarSpace(std::move(v));
}

}  // namespace kholo
