#pragma once

// Univariate polynomials over GF(p^k): arithmetic, factorization, and the
// characteristic/minimal polynomials of square matrices.

#include <cstdint>
#include <utility>
#include <vector>

#include "hopfcert/field.hpp"
#include "hopfcert/matrix.hpp"

namespace hopfcert {

class Poly {
 public:
  explicit Poly(Field field) : field_(std::move(field)) {}
  /// Coefficients constant term first; trailing zeros are dropped.
  Poly(Field field, Vec coeffs);

  static Poly constant(const Field& f, Elem c) { return Poly(f, Vec{c}); }
  static Poly x(const Field& f) { return Poly(f, Vec{0, 1}); }
  static Poly monomial(const Field& f, std::size_t deg, Elem c);

  const Field& field() const { return field_; }
  const Vec& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  Elem lead() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  Elem operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

  Poly monic() const;
  Elem eval(Elem a) const;
  Poly derivative() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  /// (degree, coefficients from the top down): a total order for canonical sorting.
  friend bool operator<(const Poly& a, const Poly& b);

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(Elem c) const;

 private:
  void normalize();
  Field field_;
  Vec coeffs_;
};

/// Quotient and remainder; throws InvalidInput on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd (zero if both inputs are zero).
Poly gcd(Poly a, Poly b);
Poly lcm(const Poly& a, const Poly& b);
Poly powmod(Poly base, std::uint64_t e, const Poly& mod);
Poly pow(const Poly& base, unsigned e);

/// Rabin's test. Constants and the zero polynomial are not irreducible.
bool is_irreducible(const Poly& f);

struct PolyFactor {
  Poly factor;  // monic irreducible
  unsigned multiplicity;
};

/// Factorization into monic irreducibles, sorted by (degree, coefficients).
/// Square-free split, then distinct-degree, then seeded equal-degree splitting.
/// The result does not depend on the seed. Throws InvalidInput on the zero polynomial.
std::vector<PolyFactor> factor_poly(const Poly& f, std::uint64_t seed = 0);

/// Distinct roots in the coefficient field, ascending by code.
std::vector<Elem> roots(const Poly& f, std::uint64_t seed = 0);

/// f(m) for a square matrix m.
Matrix eval_matrix(const Poly& f, const Matrix& m);

struct CharMinPoly {
  Poly characteristic;
  Poly minimal;
};

/// Characteristic polynomial via Hessenberg reduction, minimal polynomial via Krylov sequences.
CharMinPoly char_min_poly(const Matrix& m);
Poly char_poly(const Matrix& m);
Poly min_poly(const Matrix& m);

/// Companion matrix of a monic polynomial of degree >= 1.
Matrix companion_matrix(const Poly& f);

}  // namespace hopfcert
