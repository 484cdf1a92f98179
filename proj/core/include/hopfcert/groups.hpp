#pragma once

// Finite groups as Cayley tables, subgroups by element index lists, and matched pairs
// read off exact factorizations G = F Q.

#include <cstddef>
#include <string>
#include <vector>

#include "hopfcert/algebra.hpp"

namespace hopfcert {

class GroupTable {
 public:
  /// Validates the Latin-square property, associativity, the identity and inverses.
  /// Throws InvalidInput naming the violating pair or triple.
  static GroupTable from_table(std::vector<std::vector<std::size_t>> mult, std::vector<std::string> labels,
                               std::string name = "");

  std::size_t order() const { return order_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mult_[a * order_ + b]; }
  std::size_t identity() const { return identity_; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }
  /// Index of a label; throws InvalidInput if absent.
  std::size_t index_of(const std::string& label) const;
  std::vector<std::vector<std::size_t>> table() const;
  bool is_abelian() const;
  /// g^-1 h g
  std::size_t conjugate(std::size_t g, std::size_t h) const { return mul(inverse(g), mul(h, g)); }

 private:
  std::size_t order_ = 0;
  std::vector<std::size_t> mult_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
  std::vector<std::string> labels_;
  std::string name_;
};

/// Group associativity and Latin-square checks; indices name the first violation.
AxiomReport check_group_table(const std::vector<std::vector<std::size_t>>& mult);

/// Cn (n <= 12), Dn (dihedral of order 2n, n <= 6), S3, S4, A4, Q8.
GroupTable builtin_group(const std::string& name);

struct Subgroup {
  /// Ascending element indices in the ambient group.
  std::vector<std::size_t> elements;
  /// The subgroup's own table; local index i is ambient element elements[i].
  GroupTable table;

  /// Local index of an ambient element, or npos.
  std::size_t local_index(std::size_t ambient) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

bool is_subgroup(const GroupTable& g, const std::vector<std::size_t>& elements);
/// Throws InvalidInput unless the elements form a subgroup.
Subgroup make_subgroup(const GroupTable& g, std::vector<std::size_t> elements);
Subgroup generated_subgroup(const GroupTable& g, const std::vector<std::size_t>& generators);
bool is_normal_subgroup(const GroupTable& g, const Subgroup& n);
/// Closure of all commutators g^-1 h^-1 g h.
Subgroup commutator_subgroup(const GroupTable& g);

/// Q acts on F from the left (q |> f) and F acts on Q from the right (q <| f).
struct MatchedPair {
  GroupTable f;
  GroupTable q;
  /// |Q| x |F| tables, indexed q * |F| + f.
  std::vector<std::size_t> tri;
  std::vector<std::size_t> tle;

  std::size_t act(std::size_t q_, std::size_t f_) const { return tri[q_ * f.order() + f_]; }
  std::size_t back(std::size_t q_, std::size_t f_) const { return tle[q_ * f.order() + f_]; }
};

/// Matched-pair identities on all pairs and triples:
///   q |> (f f') = (q |> f)((q <| f) |> f'),  (q <| f) <| f' = q <| (f f'),
///   (q q') |> f = q |> (q' |> f),            (q q') <| f = (q <| (q' |> f))(q' <| f),
/// and trivial actions of the identities.
AxiomReport check_matched_pair(const MatchedPair& m);

/// From an exact factorization G = F Q (F and Q intersect trivially, |F||Q| = |G|):
/// q f = (q |> f)(q <| f). Throws InvalidInput if the factorization is not exact.
MatchedPair matched_pair_from_factorization(const GroupTable& g, const Subgroup& f, const Subgroup& q);

}  // namespace hopfcert
