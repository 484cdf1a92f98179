#pragma once

// Hopf algebras given by explicit structure maps, and the machinery built on them:
// Hopf subalgebras, normality, the Hopf ideal H K^+, quotients, characters, and
// the winding automorphisms theta_chi(h) = sum chi(h_1) h_2 with the twisted modules they induce.
//
// Tensor-square basis: b_p (x) b_q has index p * n + q.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hopfcert/algebra.hpp"

namespace hopfcert {

struct HopfData {
  AlgebraData algebra;
  /// coproduct[j] is Delta(b_j) in the tensor-square basis (length n^2).
  std::vector<Vec> coproduct;
  /// counit[j] = epsilon(b_j).
  Vec counit;
  /// antipode[j] = S(b_j).
  std::vector<Vec> antipode;
  /// Free-form provenance (constructor used, chosen conventions, ...); serialized verbatim.
  std::map<std::string, std::string> metadata;
};

/// coeff * b_left (x) b_right
struct TensorTerm {
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  Elem coeff = 0;
};

/// Algebra axioms, then coassociativity, counit law, Delta and epsilon multiplicative and
/// unital, the antipode law on both sides, and bijectivity of S.
AxiomReport check_hopf_axioms(const HopfData& data);

class Hopf;
using HopfPtr = std::shared_ptr<const Hopf>;

class Hopf {
 public:
  /// Throws InvalidInput on malformed data and AxiomFailure when an axiom fails.
  static HopfPtr validate(HopfData data);
  Hopf(detail::Trusted, HopfData data);

  const Algebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const Field& field() const { return algebra_->field(); }
  std::size_t dim() const { return algebra_->dim(); }
  const std::vector<std::string>& labels() const { return algebra_->labels(); }

  std::span<const TensorTerm> coproduct(std::size_t j) const { return coproduct_[j]; }
  std::vector<TensorTerm> coproduct_of(const Vec& x) const;
  Elem counit(std::size_t j) const { return data_.counit[j]; }
  Elem counit_of(const Vec& x) const;
  /// Column j is S(b_j).
  const Matrix& antipode_matrix() const { return antipode_; }
  Vec antipode(const Vec& x) const { return mat_vec(antipode_, x); }

  /// Canonical data (algebra part canonicalized); metadata preserved.
  const HopfData& data() const { return data_; }
  const std::map<std::string, std::string>& metadata() const { return data_.metadata; }

 private:
  HopfData data_;
  AlgebraPtr algebra_;
  std::vector<std::vector<TensorTerm>> coproduct_;
  Matrix antipode_;
};

/// Dense tensor vector (length n^2) from sparse terms.
Vec tensor_dense(std::span<const TensorTerm> terms, std::size_t n, const Field& f);

// ---- characters and winding automorphisms ----

/// An algebra homomorphism chi: H -> field, stored as the row (chi(b_0), ..., chi(b_{n-1})).
class Character {
 public:
  /// Throws InvalidInput unless the row is multiplicative and sends 1 to 1.
  static Character validate(HopfPtr hopf, Vec row);
  Character(detail::Trusted, HopfPtr hopf, Vec row) : hopf_(std::move(hopf)), row_(std::move(row)) {}

  const Hopf& hopf() const { return *hopf_; }
  const HopfPtr& hopf_ptr() const { return hopf_; }
  const Vec& row() const { return row_; }
  Elem operator()(const Vec& x) const;

  friend bool operator==(const Character& a, const Character& b) { return a.row_ == b.row_; }
  friend bool operator<(const Character& a, const Character& b) { return a.row_ < b.row_; }

 private:
  HopfPtr hopf_;
  Vec row_;
};

bool is_multiplicative_row(const Algebra& a, const Vec& row);

Character counit_character(HopfPtr hopf);
/// (a * b)(h) = sum a(h_1) b(h_2)
Character convolution(const Character& a, const Character& b);
/// chi o S, checked to be a two-sided convolution inverse; throws AxiomFailure otherwise.
Character convolution_inverse(const Character& chi);

/// Every algebra homomorphism H -> field: the one-dimensional composition factors of the
/// regular module, sorted by coefficient row.
std::vector<Character> characters(HopfPtr hopf, std::uint64_t seed);

/// A linear map between algebras; column j is the image of b_j.
struct AlgebraMorphism {
  AlgebraPtr source;
  AlgebraPtr target;
  Matrix matrix;
  bool automorphism = false;

  Vec operator()(const Vec& x) const { return mat_vec(matrix, x); }
};

/// Multiplicative and unital (and invertible when source == target is requested as automorphism).
AxiomReport check_algebra_morphism(const Algebra& source, const Algebra& target, const Matrix& matrix);

/// theta_chi(h) = sum chi(h_1) h_2, verified to be an automorphism whose inverse is theta_{chi o S}.
AlgebraMorphism theta_automorphism(const Character& chi);

/// The module ^alpha V: action h -> rho_V(alpha(h)).
Module twist_by_automorphism(const AlgebraMorphism& alpha, const Module& v);
/// k_chi (x) V: action h -> sum chi(h_1) rho_V(h_2).
Module twist_module(const Character& chi, const Module& v);

// ---- Hopf subalgebras, normality, quotients ----

struct HopfSubalgebra {
  HopfPtr ambient;
  Subspace span;
  HopfPtr hopf;

  Vec to_ambient(const Vec& local) const { return span.combine(local); }
  Vec to_local(const Vec& ambient_vec) const { return span.coordinates(ambient_vec); }
  Subalgebra as_subalgebra() const { return {ambient->algebra_ptr(), span, hopf->algebra_ptr()}; }
  std::size_t dim() const { return span.dim(); }
};

struct HopfSubalgebraCheck {
  bool ok = false;
  std::string reason;
  std::optional<HopfSubalgebra> sub;
};

/// Unit, product closure, Delta(K) in K (x) K, S(K) in K; on success K's own Hopf structure.
HopfSubalgebraCheck is_hopf_subalgebra(HopfPtr hopf, const Subspace& span);
/// Throws InvalidInput with the reason when span is not a Hopf subalgebra.
HopfSubalgebra hopf_subalgebra(HopfPtr hopf, const Subspace& span);

/// K^+ = ker(epsilon) restricted to K, in ambient coordinates.
Subspace augmentation_subspace(const HopfSubalgebra& k);

/// Stability of K under both adjoint actions sum h_1 k S(h_2) and sum S(h_1) k h_2.
bool is_normal(const HopfSubalgebra& k);

/// Raised when H K^+ and K^+ H differ (K is not normal).
class NotNormal : public Error {
 public:
  using Error::Error;
};

/// The Hopf ideal H K^+ (= K^+ H); throws NotNormal if the two spans differ.
Ideal hopf_ideal_HKplus(const HopfSubalgebra& k);

/// Ideal, coideal (Delta(I) in I (x) H + H (x) I), epsilon(I) = 0, S(I) in I.
AxiomReport check_hopf_ideal(const Hopf& h, const Ideal& ideal);

struct QuotientHopf {
  HopfPtr hopf;
  QuotientMap map;
};
/// H/I on the greedy complement basis; throws AxiomFailure if I is not a Hopf ideal.
QuotientHopf quotient_hopf(HopfPtr h, const Ideal& ideal);

/// b_i b_j - b_j b_i in I for all basis pairs.
bool commutative_mod_ideal(const Algebra& a, const Subspace& ideal);

}  // namespace hopfcert
