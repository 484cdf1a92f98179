#pragma once

// Composition factors, irreducibility certificates, intertwiners, splitting fields and radicals.
//
// Random algebra elements are drawn as coefficient vectors x in A and act as
// rho(x) = sum x_i rho(b_i); words are products of such elements computed in A, so every
// element a certificate refers to is replayable from its coordinates alone.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopfcert/algebra.hpp"
#include "hopfcert/extension.hpp"
#include "hopfcert/hopf.hpp"
#include "hopfcert/poly.hpp"

namespace hopfcert {

/// Smallest submodule containing the seeds.
Subspace spin(const Module& v, const std::vector<Vec>& seeds);
Subspace spin(const Module& v, const Vec& seed);
/// Spin of a row vector under the transposed action (a submodule of the dual).
Subspace spin_dual(const Module& v, const Vec& seed);

bool is_submodule(const Module& v, const Subspace& s);
/// Action on s in the coordinates of its RREF basis.
Module submodule(const Module& v, const Subspace& s);
/// Action on V/s in the coordinates of the greedy complement.
Module quotient_module(const Module& v, const Subspace& s);
Module direct_sum(const Module& a, const Module& b);

struct IrreducibilityWitness {
  enum class Kind {
    OneDimensional,
    /// A singular rho(x) with an irreducible factor f of its characteristic polynomial such that
    /// nullity f(rho(x)) = deg f, a null vector spinning to V and a dual null vector spinning to V*.
    Norton,
    /// Every projective point of V spins to V.
    Exhaustive,
    /// A proper nonzero submodule (the module is reducible).
    Submodule,
  };
  Kind kind = Kind::OneDimensional;
  Vec element;
  Vec factor;  // coefficients of f, constant term first
  Vec null_vector;
  Vec dual_vector;
  std::optional<Subspace> submodule;
  /// Number of random elements tried before the verdict.
  std::size_t attempts = 0;

  bool irreducible() const { return kind != Kind::Submodule; }
};

std::string to_string(IrreducibilityWitness::Kind kind);

struct MeataxeBudget {
  std::size_t random_elements = 200;
  /// Random elements before switching from linear combinations to words.
  std::size_t linear_elements = 100;
  std::size_t max_word_length = 4;
  /// Exhaustive fallback only when q^d stays below this bound and d <= max_exhaustive_dim.
  std::uint64_t exhaustive_limit = 1ull << 22;
  std::size_t max_exhaustive_dim = 12;
};

/// A replayable verdict; throws BudgetExhausted only when every fallback is out of reach.
IrreducibilityWitness irreducibility_witness(const Module& v, std::uint64_t seed, const MeataxeBudget& budget = {});
bool is_irreducible(const Module& v, std::uint64_t seed);
/// Re-runs the certificate steps.
bool verify_witness(const Module& v, const IrreducibilityWitness& w);

struct CompositionFactor {
  Module module;
  std::size_t multiplicity = 0;
  std::string label;
  IrreducibilityWitness witness;
  std::size_t dim() const { return module.dim(); }
};

struct CompositionSeries {
  std::size_t module_dim = 0;
  /// Pairwise non-isomorphic, sorted by (dimension, action tuple); labels "1a", "1b", "2a", ...
  std::vector<CompositionFactor> factors;

  std::size_t total_dim() const;
  std::vector<std::size_t> dims_with_multiplicity() const;
};

CompositionSeries meataxe_chop(const Module& v, std::uint64_t seed, const MeataxeBudget& budget = {});

/// Canonical re-basing of a simple module: minimum action tuple over spin bases from every
/// projective point when there are at most `point_limit` of them, else the spin basis from e_0.
Module canonical_form(const Module& simple, std::uint64_t point_limit = 2048);

/// Basis of Hom_A(V, W) as dim W x dim V matrices.
std::vector<Matrix> hom_space(const Module& v, const Module& w);
std::size_t endomorphism_dim(const Module& v);
/// An invertible T with T rho_V(b) = rho_W(b) T for every basis element, or nothing.
std::optional<Matrix> module_iso(const Module& v, const Module& w);

/// Every submodule, by spinning all projective points and closing under sums.
/// Throws BudgetExhausted when q^d exceeds `limit`.
std::vector<Subspace> submodule_lattice(const Module& v, std::uint64_t limit = 1u << 16);
/// Composition factor dimensions (ascending) by repeatedly splitting off a smallest cyclic submodule.
std::vector<std::size_t> brute_force_factor_dims(const Module& v, std::uint64_t limit = 1u << 16);

// ---- scalar extension ----

AlgebraPtr extend_algebra(const Algebra& a, const FieldEmbedding& e);
HopfPtr extend_hopf(const Hopf& h, const FieldEmbedding& e);
/// `target` must be extend_algebra(v.algebra(), e) (or structurally equal to it).
Module extend_module(const Module& v, AlgebraPtr target, const FieldEmbedding& e);
Subspace extend_subspace(const Subspace& s, const FieldEmbedding& e);

struct Splitting {
  /// Degree m of the splitting extension over the input field.
  std::uint32_t degree = 1;
  Field field;
  AlgebraPtr algebra;
  /// Chop of the regular module over the extension; every factor has endomorphism dimension 1.
  CompositionSeries regular;
};

/// Extends by the lcm of the endomorphism dimensions of the simple factors until every one is 1.
/// Throws BudgetExhausted if the total degree would exceed dim A.
Splitting splitting_extend(AlgebraPtr a, std::uint64_t seed);

struct SimpleDimensions {
  std::uint32_t extension_degree = 1;
  Field field;
  /// One entry per isomorphism class of simple modules, ascending.
  std::vector<std::size_t> dims;
  /// Multiplicity of each simple in the regular module, aligned with dims.
  std::vector<std::size_t> regular_multiplicities;
};
SimpleDimensions simple_dimensions(AlgebraPtr a, std::uint64_t seed);

struct Radical {
  Ideal ideal;
  /// Smallest k with J^k = 0.
  std::size_t nilpotency_index = 0;
};
/// Intersection of the annihilators of the regular module's composition factors, checked nilpotent.
Radical radical(AlgebraPtr a, std::uint64_t seed);

/// The one-dimensional module k_chi.
Module character_module(const Character& chi);
/// Restriction to a subalgebra, in the subalgebra's coordinates.
Module restrict_module(const Module& v, const Subalgebra& k);

}  // namespace hopfcert
