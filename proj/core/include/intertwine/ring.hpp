#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "intertwine/algebra.hpp"
#include "intertwine/linalg.hpp"

namespace intertwine {

/// A^{(x)m} together with the factor tuple of every basis element.
struct TensorPower {
  GradedAlgebra algebra;
  std::size_t m = 1;
  /// factors[g] lists global indices in the base algebra for global index g of the power.
  std::vector<std::vector<std::size_t>> factors;
};

/// tensor_power(A, 1) is A itself (with trivial factor tuples).
TensorPower tensor_power(const GradedAlgebra& a, std::size_t m);

/// Per-degree basis of a homogeneous ideal.
struct IdealBasis {
  std::vector<std::vector<Vector>> degrees;

  std::size_t dimension(std::size_t d) const { return d < degrees.size() ? degrees[d].size() : 0; }
  std::size_t total_dimension() const;
};

/// Ker of the m-fold multiplication A^{(x)m} -> A, i.e. the m-th zero-divisors.
struct DiagonalKernel {
  TensorPower power;
  /// multiplication[d] maps degree d of the power to degree d of A.
  std::vector<Matrix> multiplication;
  IdealBasis kernel;
};

DiagonalKernel diagonal_kernel(const GradedAlgebra& a, std::size_t m);

/// Image of a power basis element under a1 (x) ... (x) am -> a1 ... am.
Element multiply_factors(const GradedAlgebra& a, const std::vector<std::size_t>& factors);

/// Whether ideal * basis stays in the ideal, for every basis element and ideal generator.
bool is_ideal(const GradedAlgebra& algebra, const IdealBasis& ideal);

/// proj_i^*(x) - proj_m^*(x) for every positive-degree basis element x and 1 <= i < m.
std::vector<Element> standard_zero_divisors(const GradedAlgebra& a, const TensorPower& power);

struct ProductSearchOptions {
  std::size_t max_length = 8;
  std::size_t node_budget = 1'000'000;
};

struct ProductSearchResult {
  std::size_t length = 0;
  /// Indices into the candidate list of the first longest nonzero product found
  /// (lexicographically least nondecreasing sequence).
  std::vector<std::size_t> witness;
  bool truncated = false;
  std::size_t nodes = 0;
};

/// Longest nonzero product of homogeneous positive-degree candidates.
///
/// Graded commutativity makes vanishing depend only on the multiset of
/// factors, so only nondecreasing index sequences are explored.
ProductSearchResult longest_nonzero_product(const GradedAlgebra& algebra, const std::vector<Element>& candidates,
                                            const ProductSearchOptions& options = {});

struct CupLengthResult {
  std::size_t length = 0;
  std::vector<std::string> witness;  // labels or descriptions of the factors
  bool truncated = false;
};

CupLengthResult cup_length_search(const GradedAlgebra& a, const ProductSearchOptions& options = {});
std::size_t cup_length(const GradedAlgebra& a);

CupLengthResult zero_divisor_search(const GradedAlgebra& a, std::size_t m, const ProductSearchOptions& options = {});
std::size_t zero_divisor_cup_length(const GradedAlgebra& a, std::size_t m);

/// Least d >= 1 with a nonzero degree-d component, if any.
std::optional<std::size_t> has_nonzero_positive_degree(const GradedAlgebra& a);

/// Human-readable linear combination of basis labels, e.g. "x⊗1 - 1⊗x".
std::string describe(const GradedAlgebra& algebra, const Element& element);

}  // namespace intertwine
