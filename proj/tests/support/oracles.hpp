#pragma once

// Brute-force oracles for prime fields. They share no code with the library: plain
// integer arithmetic mod p, their own elimination, exhaustive enumeration.

#include <cstdint>
#include <vector>

#include "hopfcert/groups.hpp"
#include "hopfcert/matrix.hpp"

namespace oracle {

using Row = std::vector<std::int64_t>;
using Mat = std::vector<Row>;

/// Library matrix over a prime field as integers.
Mat to_mat(const hopfcert::Matrix& m);
std::vector<Mat> to_mats(const std::vector<hopfcert::Matrix>& ms);

/// Reduced row echelon form, zero rows dropped.
Mat rref(Mat m, std::int64_t p);
std::size_t rank(const Mat& m, std::int64_t p);
/// Kernel basis of an r x c matrix.
Mat kernel(const Mat& m, std::int64_t p, std::size_t cols);
/// Intersection of row spaces by the Zassenhaus algorithm, as an RREF basis.
Mat zassenhaus_intersection(const Mat& u, const Mat& w, std::int64_t p, std::size_t n);
/// Row space of the sum, as an RREF basis.
Mat sum_space(const Mat& u, const Mat& w, std::int64_t p);

/// Roots in GF(p) of sum c_i x^i, by evaluation at every element.
std::vector<std::int64_t> roots(const Row& coeffs, std::int64_t p);
/// True when the monic polynomial has no factor of degree <= deg/2 (trial division).
bool irreducible(const Row& monic, std::int64_t p);

/// Matrix products of action matrices with vectors (column convention).
Row act(const Mat& m, const Row& v, std::int64_t p);
/// Smallest subspace containing the rows of `seed` and stable under every matrix.
Mat spin(const std::vector<Mat>& actions, const Mat& seed, std::int64_t p);

/// Every submodule, as RREF bases, grown from 0 by adjoining one projective point at a time.
std::vector<Mat> submodule_lattice(const std::vector<Mat>& actions, std::int64_t p, std::size_t d);
/// Composition factor dimensions (ascending) read off a maximal chain of the lattice.
std::vector<std::size_t> lattice_factor_dims(const std::vector<Mat>& actions, std::int64_t p, std::size_t d);
/// Composition factor dimensions (ascending) from a chain of minimal covers, each found by
/// spinning every projective point on top of the current submodule.
std::vector<std::size_t> cover_factor_dims(const std::vector<Mat>& actions, std::int64_t p, std::size_t d);

/// Homomorphisms G -> GF(p)^x, each as the list of images of the group elements.
std::vector<Row> group_homs(const hopfcert::GroupTable& g, std::int64_t p);

}  // namespace oracle
