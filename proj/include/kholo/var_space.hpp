#ifndef KHOLO_VAR_SPACE_HPP
#define KHOLO_VAR_SPACE_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kholo {

/// Role of a variable. Z/W are complex coordinates, X/Y the real and
/// imaginary coordinates of a complex point, T the fiber variable and Aux
/// the auxiliary variable eliminated by resultants.
enum class VarKind { Z, W, X, Y, T, Aux };

struct Variable {
  VarKind kind;
  std::uint32_t index;  // 1-based for Z/W/X/Y, 0 for T and Aux
  std::string name;

  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Canonical name for a variable of the given kind: z1, w2, x3, y3, t, w0.
std::string variable_name(VarKind kind, std::uint32_t index);

/// Inverse of variable_name. Returns nullopt for names outside the convention.
std::optional<Variable> parse_variable_name(std::string_view name);

/// Ordered, immutable list of variables. The order fixes the monomial order
/// (earlier variables rank higher in the lexicographic tie-break). Copies
/// share storage.
class VarSpace {
 public:
  VarSpace();
  explicit VarSpace(std::vector<Variable> vars);

  static VarSpace from_names(const std::vector<std::string>& names);

  /// z1..zn
  static VarSpace complex(std::size_t n);
  /// z1..zn, w1..wn
  static VarSpace doubled(std::size_t n);
  /// x1..xn, y1..yn
  static VarSpace real(std::size_t n);
  /// x1..xn, y1..yn, t
  static VarSpace real_t(std::size_t n);
  /// z1..zn, t
  static VarSpace complex_t(std::size_t n);
  /// z1..zn, t, w0
  static VarSpace complex_t_aux(std::size_t n);

  std::size_t size() const { return vars_->size(); }
  bool empty() const { return vars_->empty(); }
  const Variable& operator[](std::size_t i) const { return (*vars_)[i]; }
  const std::vector<Variable>& variables() const { return *vars_; }
  std::vector<std::string> names() const;

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws UnknownVariable.
  std::size_t index_of(std::string_view name) const;
  std::size_t count(VarKind kind) const;
  bool only_kinds(std::initializer_list<VarKind> kinds) const;

  /// Space with `name` removed. Throws UnknownVariable.
  VarSpace without(std::string_view name) const;

  friend bool operator==(const VarSpace& a, const VarSpace& b) {
    return a.vars_ == b.vars_ || *a.vars_ == *b.vars_;
  }

 private:
  std::shared_ptr<const std::vector<Variable>> vars_;
};

}  // namespace kholo

#endif  // KHOLO_VAR_SPACE_HPP
