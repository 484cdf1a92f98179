#pragma once

// Instance factories: group algebras and their duals, bicrossproducts of matched pairs,
// smash-product algebras, and induction, restriction and conjugation of modules.
// Every Hopf algebra returned here has passed check_hopf_axioms.

#include <optional>
#include <string>
#include <vector>

#include "hopfcert/groups.hpp"
#include "hopfcert/hopf.hpp"

namespace hopfcert {

/// kG: basis the group elements, Delta g = g (x) g, epsilon(g) = 1, S(g) = g^-1.
HopfPtr group_algebra(const GroupTable& g, const Field& field);
/// k^G: delta functions e_g, pointwise product, Delta e_g = sum_{uv=g} e_u (x) e_v.
HopfPtr dual_group_algebra(const GroupTable& g, const Field& field);
/// The dual on the dual basis; labels gain a trailing '*' (or lose one, so the double dual
/// reproduces the original labels).
HopfPtr dual_hopf(const Hopf& h);

/// Orientation variants of the bicrossproduct formulas, tried in this order.
enum class BicrossConvention { Standard, InverseRightAction, InverseLeftAction, InverseBoth };
std::string to_string(BicrossConvention c);

/// k^Q # kF on the basis e_q (x) f (index q |F| + f):
///   (e_q f)(e_q' f') = [q <| f = q'] e_q f f',
///   Delta(e_q f) = sum_{ab = q} (e_a (b |> f)) (x) (e_b f),
///   epsilon(e_q f) = [q = 1],  S(e_q f) = e_{(q <| f)^-1} (q |> f)^-1.
/// The first convention that passes the Hopf axioms is used and recorded in the metadata
/// under "convention"; throws AxiomFailure listing each convention's first failure otherwise.
HopfPtr bicrossproduct(const MatchedPair& m, const Field& field);
/// A single convention, without fallback; the report says why it fails, if it does.
std::optional<HopfPtr> try_bicrossproduct(const MatchedPair& m, const Field& field, BicrossConvention c,
                                          AxiomReport* report = nullptr);

/// A left B-module-algebra structure on A: action[j] is the matrix of a -> b_j |> a.
struct ActionData {
  HopfPtr acting;  // B
  HopfPtr acted;   // A
  std::vector<Matrix> action;
};

/// Module axioms for B on A, b |> (a a') = sum (b_1 |> a)(b_2 |> a'), and b |> 1 = epsilon(b) 1.
AxiomReport check_measuring(const ActionData& act);

/// A # B on a_i # b_j (index i dim B + j) with (a # b)(a' # b') = sum a (b_1 |> a') # b_2 b'.
/// Throws AxiomFailure on a measuring or associativity failure.
AlgebraPtr smash_algebra(const ActionData& act);
/// A # B with user-supplied coalgebra data (rows in the smash basis), validated as a Hopf algebra.
HopfPtr smash_hopf(const ActionData& act, std::vector<Vec> coproduct, Vec counit, std::vector<Vec> antipode);

/// (kY)^* acting on kX for X <= Y: e_y |> x = [y = x] x. Throws InvalidInput unless X is a subgroup.
ActionData translation_action(const GroupTable& y, const Subgroup& x, const Field& field);

/// H (x)_K U: (H (x) U) modulo hk (x) u - h (x) ku. The dimension law
/// dim(H (x)_K U) dim K = dim H dim U is asserted (AxiomFailure otherwise).
Module induced_module(const Subalgebra& k, const Module& u);

/// For N normal in G, the module n -> rho_U(g^-1 n g) over kN; `u` must be a kN-module on
/// group_algebra(N) basis order. Throws InvalidInput if conjugation by g leaves N.
Module conjugate_module(const GroupTable& g, const Subgroup& n, std::size_t element, const Module& u);

/// The span of the elements of a subgroup inside kG.
Subspace group_subalgebra_span(const GroupTable& g, const Subgroup& sub, const Field& field);

}  // namespace hopfcert
