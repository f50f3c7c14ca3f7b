#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "logchern/rational.hpp"

namespace logchern {

enum class ModelKind { projective_space, hypersurface, hirzebruch };

std::string_view to_string(ModelKind kind);

// Identifies an ambient model and, with it, the truncated intersection ring
// the model's classes live in. Two classes may be combined only when their
// ModelRefs compare equal.
//
//   projective_space(n): Q[H]/(H^{n+1}),        deg H^n = 1
//   hypersurface(n, q):  Q[h]/(h^{n+1}),        deg h^n = q
//   hirzebruch(m):       basis 1 | C0, f | pt,  C0^2 = -m, C0.f = 1, f^2 = 0
struct ModelRef {
  ModelKind kind = ModelKind::projective_space;
  int dim = 2;
  std::int64_t q = 1;  // hypersurface degree, 1 otherwise
  std::int64_t m = 0;  // Hirzebruch index, 0 otherwise

  friend auto operator<=>(const ModelRef&, const ModelRef&) = default;

  std::size_t basis_size(int grade) const;
  // Names of the basis elements of the codimension-`grade` piece.
  std::vector<std::string> basis_names(int grade) const;
  // e.g. "P^7", "X_2 in P^8", "F_3"
  std::string display_name() const;
};

// An element of the graded ring of one ambient model, homogeneous of a single
// codimension. Immutable.
class CycleClass {
 public:
  CycleClass(ModelRef model, int grade, std::vector<Rational> coeffs);

  static CycleClass zero(const ModelRef& model, int grade);
  // The unit class 1 in codimension 0.
  static CycleClass one(const ModelRef& model);

  const ModelRef& model() const { return model_; }
  int grade() const { return grade_; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  const Rational& coeff(std::size_t i) const { return coeffs_.at(i); }

  bool is_zero() const;
  // Human-readable form such as "2C0+5f", "-8H", "28H^2", "(3/2)h^2", "4pt".
  std::string to_string() const;

  friend bool operator==(const CycleClass&, const CycleClass&) = default;

 private:
  ModelRef model_;
  int grade_;
  std::vector<Rational> coeffs_;
};

CycleClass add(const CycleClass& a, const CycleClass& b);
CycleClass sub(const CycleClass& a, const CycleClass& b);
CycleClass neg(const CycleClass& a);
CycleClass scale(const Rational& s, const CycleClass& a);
CycleClass mul(const CycleClass& a, const CycleClass& b);
// a^k, with a^0 the unit class.
CycleClass power(const CycleClass& a, int k);

// Degree of a top-codimension class.
Rational degree(const CycleClass& a);
// degree(a * H^k); requires grade(a) + k == dim and grade(H) == 1.
Rational pair_with_polarization(const CycleClass& a, const CycleClass& polarization, int k);

inline CycleClass operator+(const CycleClass& a, const CycleClass& b) { return add(a, b); }
inline CycleClass operator-(const CycleClass& a, const CycleClass& b) { return sub(a, b); }
inline CycleClass operator-(const CycleClass& a) { return neg(a); }
inline CycleClass operator*(const CycleClass& a, const CycleClass& b) { return mul(a, b); }
inline CycleClass operator*(const Rational& s, const CycleClass& a) { return scale(s, a); }

}  // namespace logchern
