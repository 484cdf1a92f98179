#pragma once

// Normal series k = H_0 < H_1 < ... < H_t = H with commutative factors H_i / H_i H_{i-1}^+.

#include <optional>
#include <string>
#include <vector>

#include "hopfcert/hopf.hpp"

namespace hopfcert {

/// The step H_{i-1} < H_i. Conditions are checked in field order; `failure` names the first
/// one that does not hold and later ones are left false.
struct SeriesStep {
  std::size_t index = 0;
  std::size_t dim_lower = 0;
  std::size_t dim_upper = 0;
  bool hopf_subalgebra = false;  // H_i is a Hopf subalgebra of H
  bool contains_lower = false;
  bool normal = false;           // H_{i-1} is normal in H_i
  bool commutative_quotient = false;
  bool integral = false;         // dim H_{i-1} divides dim H_i
  std::size_t rank = 0;          // m_i = dim H_i / dim H_{i-1}
  std::size_t quotient_dim = 0;
  std::string failure;

  bool ok() const { return failure.empty(); }
};

struct SeriesCertificate {
  std::vector<Subspace> chain;
  bool starts_at_unit = false;
  bool ends_at_whole = false;
  std::vector<SeriesStep> steps;
  /// members[i] is H_i inside H, when it is a Hopf subalgebra.
  std::vector<std::optional<HopfSubalgebra>> members;
  /// inner[i] is H_{i-1} inside members[i]->hopf (inner[0] is empty).
  std::vector<std::optional<HopfSubalgebra>> inner;
  std::string failure;

  bool valid() const { return failure.empty(); }
};

/// Never throws on a bad chain; the certificate records the first failing condition.
/// Throws InvalidInput when a member lives in the wrong ambient space.
SeriesCertificate series_check(HopfPtr h, const std::vector<Subspace>& chain);

/// H_{i-1} in the local coordinates of H_i.
Subspace local_span(const HopfSubalgebra& upper, const Subspace& lower);

}  // namespace hopfcert
