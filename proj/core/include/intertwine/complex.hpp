#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "intertwine/algebra.hpp"
#include "intertwine/field.hpp"
#include "intertwine/linalg.hpp"

namespace intertwine {

/// Sorted vertex indices; oriented by increasing index.
using Simplex = std::vector<std::size_t>;

/// Finite abstract simplicial complex given by its maximal simplices.
///
/// Construction enforces: nonempty, indices in range, every vertex used,
/// maximal simplices pairwise non-nested, and path-connectedness of the
/// 1-skeleton. Violations throw DomainError naming the invariant.
class SimplicialComplex {
 public:
  SimplicialComplex(std::string name, std::size_t vertex_count, std::vector<Simplex> maximal_simplices);

  const std::string& name() const { return name_; }
  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Simplex>& maximal_simplices() const { return maximal_; }
  std::size_t dimension() const { return dimension_; }

  /// All d-dimensional faces, lexicographic by sorted vertex tuple.
  const std::vector<Simplex>& faces(std::size_t d) const;
  std::vector<std::size_t> face_counts() const;
  long euler_characteristic() const;

 private:
  std::string name_;
  std::size_t vertex_count_;
  std::vector<Simplex> maximal_;
  std::size_t dimension_ = 0;
  std::vector<std::vector<Simplex>> faces_;
};

/// Complex file (JSON): {"name": ..., "vertex_count": n, "maximal_simplices": [[0,1,2], ...]}.
SimplicialComplex parse_complex(const std::string& json_text);
SimplicialComplex load_complex(const std::filesystem::path& path);
std::string complex_to_json(const SimplicialComplex& complex);

struct CochainComplex {
  FieldSpec field = FieldSpec::rationals();
  std::vector<std::vector<Simplex>> simplices;  // per dimension, lexicographic
  /// coboundary[d] : C^d -> C^{d+1}; rows index (d+1)-simplices, columns d-simplices.
  /// The last entry maps into the zero space (zero rows).
  std::vector<Matrix> coboundary;

  std::size_t top_dimension() const { return simplices.size() - 1; }
};

CochainComplex cochain_complex(const SimplicialComplex& complex, const FieldSpec& field);

std::vector<std::size_t> betti_numbers(const SimplicialComplex& complex, const FieldSpec& field);

/// Cohomology ring with explicit cocycle representatives for its basis.
struct CohomologyRing {
  GradedAlgebra algebra;
  /// representatives[d][i] is a cocycle (coefficients over faces(d)) for basis element (d, i).
  std::vector<std::vector<Vector>> representatives;
};

/// H*(K; F) with Alexander-Whitney cup products projected onto the chosen
/// basis. The basis of H^d is picked by pivot columns of [coboundaries | cocycles],
/// so it is deterministic; H^0 is spanned by the constant cocycle (the unit).
CohomologyRing cohomology(const SimplicialComplex& complex, const FieldSpec& field);

inline GradedAlgebra cohomology_ring(const SimplicialComplex& complex, const FieldSpec& field) {
  return cohomology(complex, field).algebra;
}

/// Alexander-Whitney cup product of cochains (front p-face times back q-face).
Vector cup_cochains(const SimplicialComplex& complex, const FieldSpec& field, std::size_t p, const Vector& a,
                    std::size_t q, const Vector& b);

}  // namespace intertwine
