#pragma once

// Shared test instances: group algebras and their duals over small fields, their Hopf
// subalgebras, and small modules built from them.

#include <string>
#include <vector>

#include "hopfcert/constructors.hpp"
#include "hopfcert/rep.hpp"

namespace corpus {

struct Instance {
  std::string name;
  hopfcert::HopfPtr hopf;
};

struct NamedModule {
  std::string name;
  hopfcert::Module module;
};

hopfcert::Field gf(std::uint64_t p, std::uint64_t k = 1);

/// kG and k^G for each group over each field; names like "kS3/GF(7)" and "k^S3/GF(2)".
std::vector<Instance> hopf_family(const std::vector<std::string>& groups, const std::vector<hopfcert::Field>& fields);
/// The default Hopf corpus: {C2, C3, C4, S3, D4} over GF(2), GF(3) plus kS3, k^S3 over GF(7)
/// and the S3 = C3 C2 bicrossproduct over GF(7).
std::vector<Instance> hopf_corpus();

/// Every subgroup, by closing each pair of elements.
std::vector<hopfcert::Subgroup> all_subgroups(const hopfcert::GroupTable& g);

/// Hopf subalgebras of k^G: indicator sums of the cosets of a normal subgroup.
hopfcert::Subspace coset_indicator_span(const hopfcert::GroupTable& g, const hopfcert::Subgroup& n,
                                        const hopfcert::Field& field);

/// Regular modules, modules induced from simple modules of Hopf subalgebras, and twists of
/// these by every character; only those of dimension <= max_dim are kept.
std::vector<NamedModule> small_modules(const std::vector<std::string>& groups, const std::vector<hopfcert::Field>& fields,
                                       std::size_t max_dim, std::uint64_t seed);

}  // namespace corpus
