#include "logchern/chow.hpp"

#include "logchern/error.hpp"

namespace logchern {

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::projective_space: return "projective_space";
    case ModelKind::hypersurface: return "hypersurface";
    case ModelKind::hirzebruch: return "hirzebruch";
  }
  return "unknown";
}

std::size_t ModelRef::basis_size(int grade) const {
  if (grade < 0 || grade > dim) return 0;
  if (kind == ModelKind::hirzebruch && grade == 1) return 2;
  return 1;
}

std::vector<std::string> ModelRef::basis_names(int grade) const {
  if (grade < 0 || grade > dim) return {};
  if (grade == 0) return {"1"};
  switch (kind) {
    case ModelKind::projective_space:
      return {grade == 1 ? std::string("H") : "H^" + std::to_string(grade)};
    case ModelKind::hypersurface:
      return {grade == 1 ? std::string("h") : "h^" + std::to_string(grade)};
    case ModelKind::hirzebruch:
      if (grade == 1) return {"C0", "f"};
      return {"pt"};
  }
  return {};
}

std::string ModelRef::display_name() const {
  switch (kind) {
    case ModelKind::projective_space: return "P^" + std::to_string(dim);
    case ModelKind::hypersurface:
      return "X_" + std::to_string(q) + " in P^" + std::to_string(dim + 1);
    case ModelKind::hirzebruch: return "F_" + std::to_string(m);
  }
  return "?";
}

CycleClass::CycleClass(ModelRef model, int grade, std::vector<Rational> coeffs)
    : model_(model), grade_(grade), coeffs_(std::move(coeffs)) {
  if (grade < 0 || grade > model_.dim)
    throw Error(Errc::grade_mismatch, "codimension " + std::to_string(grade) + " outside [0, " +
                                          std::to_string(model_.dim) + "] on " + model_.display_name());
  if (coeffs_.size() != model_.basis_size(grade))
    throw Error(Errc::invalid_argument, "class on " + model_.display_name() + " in codimension " +
                                            std::to_string(grade) + " needs " +
                                            std::to_string(model_.basis_size(grade)) + " coefficients");
}

CycleClass CycleClass::zero(const ModelRef& model, int grade) {
  return CycleClass(model, grade, std::vector<Rational>(model.basis_size(grade)));
}

CycleClass CycleClass::one(const ModelRef& model) { return CycleClass(model, 0, {Rational(1)}); }

bool CycleClass::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

std::string CycleClass::to_string() const {
  auto names = model_.basis_names(grade_);
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto& c = coeffs_[i];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (c.sign() < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    bool unit_name = names[i] == "1";
    if (unit_name) {
      out += mag.to_string();
    } else {
      if (mag != Rational(1)) out += mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")";
      out += names[i];
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

void require_same_model(const CycleClass& a, const CycleClass& b, const char* op) {
  if (a.model() != b.model())
    throw Error(Errc::model_mismatch, std::string(op) + ": classes live on different models (" +
                                          a.model().display_name() + " vs " + b.model().display_name() + ")");
}

void require_same_grade(const CycleClass& a, const CycleClass& b, const char* op) {
  if (a.grade() != b.grade())
    throw Error(Errc::grade_mismatch, std::string(op) + ": codimension " + std::to_string(a.grade()) +
                                          " vs " + std::to_string(b.grade()));
}

}  // namespace

CycleClass add(const CycleClass& a, const CycleClass& b) {
  require_same_model(a, b, "add");
  require_same_grade(a, b, "add");
  std::vector<Rational> c(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeff(i);
  return CycleClass(a.model(), a.grade(), std::move(c));
}

CycleClass neg(const CycleClass& a) { return scale(Rational(-1), a); }

CycleClass sub(const CycleClass& a, const CycleClass& b) {
  require_same_model(a, b, "sub");
  require_same_grade(a, b, "sub");
  std::vector<Rational> c(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeff(i);
  return CycleClass(a.model(), a.grade(), std::move(c));
}

CycleClass scale(const Rational& s, const CycleClass& a) {
  std::vector<Rational> c;
  c.reserve(a.coeffs().size());
  for (const auto& x : a.coeffs()) c.push_back(s * x);
  return CycleClass(a.model(), a.grade(), std::move(c));
}

CycleClass mul(const CycleClass& a, const CycleClass& b) {
  require_same_model(a, b, "mul");
  const auto& model = a.model();
  int grade = a.grade() + b.grade();
  if (grade > model.dim)
    throw Error(Errc::grade_mismatch, "mul: codimension " + std::to_string(grade) + " exceeds dimension " +
                                          std::to_string(model.dim) + " of " + model.display_name());

  // Codimension 0 is the scalar line everywhere.
  if (a.grade() == 0) return scale(a.coeff(0), b);
  if (b.grade() == 0) return scale(b.coeff(0), a);

  if (model.kind != ModelKind::hirzebruch) return CycleClass(model, grade, {a.coeff(0) * b.coeff(0)});

  // Surface: only divisor x divisor remains. (a0 C0 + a1 f)(b0 C0 + b1 f).
  const auto& a0 = a.coeff(0);
  const auto& a1 = a.coeff(1);
  const auto& b0 = b.coeff(0);
  const auto& b1 = b.coeff(1);
  Rational pt = a0 * b0 * Rational(-model.m) + a0 * b1 + a1 * b0;
  return CycleClass(model, 2, {pt});
}

CycleClass power(const CycleClass& a, int k) {
  if (k < 0) throw Error(Errc::invalid_argument, "power: negative exponent");
  auto r = CycleClass::one(a.model());
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

Rational degree(const CycleClass& a) {
  const auto& model = a.model();
  if (a.grade() != model.dim)
    throw Error(Errc::grade_mismatch, "degree: class has codimension " + std::to_string(a.grade()) +
                                          ", expected " + std::to_string(model.dim));
  if (model.kind == ModelKind::hypersurface) return Rational(model.q) * a.coeff(0);
  return a.coeff(0);
}

Rational pair_with_polarization(const CycleClass& a, const CycleClass& polarization, int k) {
  require_same_model(a, polarization, "pair_with_polarization");
  if (polarization.grade() != 1)
    throw Error(Errc::grade_mismatch, "pair_with_polarization: polarization must be a divisor class");
  if (k < 0 || a.grade() + k != a.model().dim)
    throw Error(Errc::grade_mismatch, "pair_with_polarization: codimension " + std::to_string(a.grade()) +
                                          " plus " + std::to_string(k) + " != dimension " +
                                          std::to_string(a.model().dim));
  return degree(mul(a, power(polarization, k)));
}

}  // namespace logchern
