#pragma once

// Structure-constant algebras, their left modules, and two-sided ideals.
//
// Raw data (AlgebraData, action matrices, spanning sets) becomes a validated value
// (Algebra, Module, Ideal) only by passing the corresponding axiom check; every other
// operation takes the validated types, so preconditions are carried by the type.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hopfcert/field.hpp"
#include "hopfcert/matrix.hpp"
#include "hopfcert/subspace.hpp"

namespace hopfcert {

namespace detail {
/// Passkey for library code that constructs values which are valid by construction.
struct Trusted {
  explicit Trusted() = default;
};
inline constexpr Trusted trusted{};
}  // namespace detail

/// b_i b_j contains coeff * b_k.
struct StructConst {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Elem coeff = 0;
  friend bool operator==(const StructConst&, const StructConst&) = default;
};

struct AlgebraData {
  Field field;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<StructConst> structconst;
  Vec unit;
};

/// Outcome of an axiom check. On failure names the axiom family and the first violating indices.
struct AxiomReport {
  bool ok = true;
  std::string axiom;
  std::vector<std::size_t> indices;
  std::string detail;

  static AxiomReport pass() { return {}; }
  static AxiomReport fail(std::string axiom, std::vector<std::size_t> indices, std::string detail) {
    return {false, std::move(axiom), std::move(indices), std::move(detail)};
  }
  std::string describe() const;
};

/// Sparse coefficient: coeff * b_index.
struct Term {
  std::uint32_t index = 0;
  Elem coeff = 0;
};

/// Associativity on all basis triples and the two-sided unit law; also rejects
/// malformed data (axiom "well-formed").
AxiomReport check_algebra_axioms(const AlgebraData& data);

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra {
 public:
  /// Throws InvalidInput on malformed data and AxiomFailure when an axiom fails.
  static AlgebraPtr validate(AlgebraData data);

  const Field& field() const { return data_.field; }
  std::size_t dim() const { return data_.dim; }
  const std::vector<std::string>& labels() const { return data_.labels; }
  const Vec& unit() const { return data_.unit; }
  /// Canonical data: structure constants sorted by (i, j, k), merged, zeros dropped.
  const AlgebraData& data() const { return data_; }

  std::span<const Term> product_terms(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  Vec basis_product(std::size_t i, std::size_t j) const;
  Vec multiply(const Vec& x, const Vec& y) const;
  /// Matrix of y -> x y.
  Matrix left_mult(const Vec& x) const;
  /// Matrix of y -> y x.
  Matrix right_mult(const Vec& x) const;
  bool is_commutative() const;

  Algebra(detail::Trusted, AlgebraData data);

 private:
  AlgebraData data_;
  std::vector<std::vector<Term>> products_;
};

/// The standard basis vector b_i of an algebra of dimension n.
inline Vec basis_vector(std::size_t n, std::size_t i) { return unit_vector(n, i); }

/// rho(b_i) rho(b_j) = rho(b_i b_j) for all i, j and rho(1) = identity.
AxiomReport check_module_axioms(const Algebra& algebra, const std::vector<Matrix>& action);

/// A left module: one d x d matrix per algebra basis element.
class Module {
 public:
  static Module validate(AlgebraPtr algebra, std::vector<Matrix> action);
  Module(detail::Trusted, AlgebraPtr algebra, std::vector<Matrix> action);

  const Algebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const Field& field() const { return algebra_->field(); }
  std::size_t dim() const { return dim_; }
  const Matrix& action(std::size_t i) const { return action_[i]; }
  const std::vector<Matrix>& actions() const { return action_; }

  /// rho(x) for an algebra element x.
  Matrix act(const Vec& x) const;

  friend bool operator==(const Module& a, const Module& b) {
    return a.algebra_ == b.algebra_ && a.action_ == b.action_;
  }

 private:
  AlgebraPtr algebra_;
  std::size_t dim_ = 0;
  std::vector<Matrix> action_;
};

class Ideal {
 public:
  /// Throws InvalidInput unless the subspace is a two-sided ideal.
  static Ideal validate(AlgebraPtr algebra, Subspace space);
  Ideal(detail::Trusted, AlgebraPtr algebra, Subspace space)
      : algebra_(std::move(algebra)), space_(std::move(space)) {}

  const Algebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const Subspace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.space_ == b.space_; }

 private:
  AlgebraPtr algebra_;
  Subspace space_;
};

bool is_left_ideal(const Algebra& a, const Subspace& s);
bool is_right_ideal(const Algebra& a, const Subspace& s);
bool is_two_sided_ideal(const Algebra& a, const Subspace& s);
/// span(A s) and span(s A).
Subspace left_span(const Algebra& a, const Subspace& s);
Subspace right_span(const Algebra& a, const Subspace& s);
/// The smallest two-sided ideal containing s.
Subspace ideal_closure(const Algebra& a, const Subspace& s);

/// A subalgebra with its own structure constants in the coordinates of the RREF basis of `span`.
struct Subalgebra {
  AlgebraPtr ambient;
  Subspace span;
  AlgebraPtr algebra;

  Vec to_ambient(const Vec& local) const { return span.combine(local); }
  Vec to_local(const Vec& ambient_vec) const { return span.coordinates(ambient_vec); }
};

/// Throws InvalidInput unless span contains the unit and is closed under products.
Subalgebra make_subalgebra(AlgebraPtr ambient, const Subspace& span);
/// Labels for basis vectors of a subspace: the ambient label for standard vectors.
std::vector<std::string> subspace_labels(const std::vector<std::string>& ambient, const Subspace& span,
                                         const std::string& fallback_prefix);

Module regular_module(AlgebraPtr a);
/// {x : rho(x) = 0}, the kernel of the representation (a two-sided ideal).
Ideal annihilator(const Module& m);
/// I intersected with a subalgebra, expressed in the subalgebra's coordinates.
Ideal intersect_subspace(const Ideal& ideal, const Subalgebra& sub);
Ideal intersect_subspace(const Ideal& ideal, const Subspace& k_span);
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);

struct QuotientAlgebra {
  AlgebraPtr algebra;
  QuotientMap map;
};
QuotientAlgebra quotient_algebra(const Ideal& ideal);

}  // namespace hopfcert
