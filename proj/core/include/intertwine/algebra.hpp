#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "intertwine/field.hpp"
#include "intertwine/linalg.hpp"

namespace intertwine {

struct BasisRef {
  std::size_t degree = 0;
  std::size_t index = 0;
  friend auto operator<=>(const BasisRef&, const BasisRef&) = default;
};

/// Homogeneous element: a coefficient vector over the basis of one degree.
/// Products above the top degree are represented with empty coefficients.
struct Element {
  std::size_t degree = 0;
  Vector coefficients;

  bool is_zero() const { return intertwine::is_zero(coefficients); }
  friend bool operator==(const Element&, const Element&) = default;
};

using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Finite-dimensional graded-commutative algebra with a distinguished basis.
///
/// Degree 0 must be one-dimensional and spanned by the unit. Structure
/// constants are stored per ordered pair of basis elements; products whose
/// degree exceeds the top degree vanish.
class GradedAlgebra {
 public:
  struct Product {
    BasisRef left;
    BasisRef right;
    Vector result;  // coefficients in degree left.degree + right.degree
  };

  /// `products` lists nonzero products of positive-degree basis elements.
  /// A missing mirror entry (right, left) is filled in by graded
  /// commutativity; unit products are implicit. Throws DomainError on
  /// malformed input. Axioms are not checked here, see check_axioms().
  GradedAlgebra(std::string name, FieldSpec field, std::vector<std::size_t> dims,
                std::vector<std::vector<std::string>> labels, const std::vector<Product>& products);

  /// The ground field in degree 0.
  static GradedAlgebra point(const FieldSpec& field);
  /// H*(S^k): one generator in degree k squaring to zero.
  static GradedAlgebra sphere(std::size_t k, const FieldSpec& field);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const FieldSpec& field() const { return field_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dimension(std::size_t degree) const { return degree < dims_.size() ? dims_[degree] : 0; }
  /// Largest degree with a nonzero component.
  std::size_t top_degree() const { return dims_.size() - 1; }
  std::size_t total_dimension() const { return offsets_.back(); }
  const std::string& label(BasisRef ref) const { return labels_[ref.degree][ref.index]; }

  Element basis(BasisRef ref) const;
  Element unit() const { return basis({0, 0}); }
  Element zero(std::size_t degree) const;

  Element multiply(const Element& a, const Element& b) const;
  /// Structure constants of a * b as sparse coefficients in degree a.degree + b.degree.
  const SparseVector& basis_product(BasisRef a, BasisRef b) const;

  /// All nonzero products of positive-degree basis pairs, in basis order.
  std::vector<Product> nonzero_products() const;

  /// First violated axiom (unit, graded commutativity, associativity) or nullopt.
  std::optional<std::string> check_axioms() const;

  std::size_t global_index(BasisRef ref) const { return offsets_[ref.degree] + ref.index; }
  BasisRef ref_of(std::size_t global) const;

 private:
  std::string name_;
  FieldSpec field_;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::size_t> offsets_;  // size dims_.size() + 1
  std::vector<SparseVector> table_;   // total_dimension^2 entries

  SparseVector& entry(BasisRef a, BasisRef b) { return table_[global_index(a) * total_dimension() + global_index(b)]; }
};

/// Koszul-signed tensor product A (x) B: (a(x)b)(a'(x)b') = (-1)^{|b||a'|} aa' (x) bb'.
/// Basis of each degree is ordered by (global index in A, global index in B).
GradedAlgebra tensor_product(const GradedAlgebra& a, const GradedAlgebra& b);

/// Ring file (JSON): {"name", "field", "dims", "labels", "products": [[i,a,j,b,["p/q",...]], ...]}.
GradedAlgebra parse_ring(const std::string& json_text);
GradedAlgebra load_ring(const std::filesystem::path& path);
std::string ring_to_json(const GradedAlgebra& algebra);

}  // namespace intertwine
