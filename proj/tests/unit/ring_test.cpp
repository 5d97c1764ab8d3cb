#include <gtest/gtest.h>

#include "intertwine/algebra.hpp"
#include "intertwine/complex.hpp"
#include "intertwine/error.hpp"
#include "intertwine/ring.hpp"
#include "oracles.hpp"
#include "test_data.hpp"

using namespace intertwine;

namespace {

GradedAlgebra ring_of(const std::string& name, const FieldSpec& f = FieldSpec::rationals()) {
  return cohomology_ring(load_complex(data_path("complexes/" + name + ".cx")), f);
}

}  // namespace

TEST(Algebra, TensorProductFollowsKoszulSigns) {
  const FieldSpec q = FieldSpec::rationals();
  for (std::size_t k1 : {1, 2, 3}) {
    for (std::size_t k2 : {1, 2, 3}) {
      const GradedAlgebra a = GradedAlgebra::sphere(k1, q), b = GradedAlgebra::sphere(k2, q);
      const GradedAlgebra t = tensor_product(a, b);
      ASSERT_FALSE(t.check_axioms().has_value());
      // x = s (x) 1, y = 1 (x) s'; y * x = sign * (x * y).
      const Element x = t.basis({k1, 0});
      const Element y = t.basis({k2, k1 == k2 ? 1u : 0u});
      const Element xy = t.multiply(x, y), yx = t.multiply(y, x);
      ASSERT_FALSE(xy.is_zero());
      const int sign = oracle::koszul_sign(k2, k1);
      for (std::size_t i = 0; i < xy.coefficients.size(); ++i) EXPECT_EQ(yx.coefficients[i], sign * xy.coefficients[i]);
    }
  }
}

TEST(Algebra, CohomologyRingsSatisfyAxioms) {
  for (const char* name : {"circle", "sphere2", "torus", "genus2", "klein", "wedge2circles"}) {
    EXPECT_FALSE(ring_of(name).check_axioms().has_value()) << name;
    EXPECT_FALSE(ring_of(name, FieldSpec::prime(2)).check_axioms().has_value()) << name;
  }
}

TEST(Algebra, RingFilesRoundTrip) {
  for (const char* name : {"s2xs4", "s3xs3", "cp2"}) {
    const GradedAlgebra a = load_ring(data_path(std::string("rings/") + name + ".ring"));
    EXPECT_FALSE(a.check_axioms().has_value());
    const GradedAlgebra back = parse_ring(ring_to_json(a));
    EXPECT_EQ(back.dims(), a.dims());
    EXPECT_EQ(ring_to_json(back), ring_to_json(a));
  }
}

TEST(CupLength, SurfacesAndSpheres) {
  EXPECT_EQ(cup_length(ring_of("circle")), 1u);
  EXPECT_EQ(cup_length(ring_of("sphere2")), 1u);
  EXPECT_EQ(cup_length(ring_of("torus")), 2u);
  EXPECT_EQ(cup_length(ring_of("genus2")), 2u);
  EXPECT_EQ(cup_length(ring_of("wedge2circles")), 1u);
  EXPECT_EQ(cup_length(ring_of("disk")), 0u);
}

TEST(CupLength, DependsOnTheField) {
  EXPECT_EQ(cup_length(ring_of("rp2")), 0u);
  EXPECT_EQ(cup_length(ring_of("rp2", FieldSpec::prime(2))), 2u);
  EXPECT_EQ(cup_length(ring_of("klein")), 1u);
  EXPECT_EQ(cup_length(ring_of("klein", FieldSpec::prime(2))), 2u);
}

TEST(CupLength, RingInputs) {
  for (const char* name : {"s2xs4", "s3xs3", "cp2"}) {
    EXPECT_EQ(cup_length(load_ring(data_path(std::string("rings/") + name + ".ring"))), 2u) << name;
  }
}

TEST(CupLength, WitnessMultipliesToNonzero) {
  const CupLengthResult r = cup_length_search(ring_of("genus2"));
  EXPECT_EQ(r.length, 2u);
  EXPECT_EQ(r.witness.size(), 2u);
  EXPECT_FALSE(r.truncated);
}

TEST(ZeroDivisors, SpheresMatchClosedForm) {
  const FieldSpec q = FieldSpec::rationals();
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::size_t m = 2; m <= 4; ++m) {
      EXPECT_EQ(zero_divisor_cup_length(GradedAlgebra::sphere(k, q), m), oracle::sphere_zcl(k, m)) << k << " " << m;
    }
  }
}

TEST(ZeroDivisors, ComplexesOverQ) {
  EXPECT_EQ(zero_divisor_cup_length(ring_of("circle"), 2), 1u);
  EXPECT_EQ(zero_divisor_cup_length(ring_of("sphere2"), 2), 2u);
  EXPECT_EQ(zero_divisor_cup_length(ring_of("wedge2circles"), 2), 2u);
  EXPECT_EQ(zero_divisor_cup_length(ring_of("torus"), 2), 2u);
  EXPECT_EQ(zero_divisor_cup_length(ring_of("circle"), 3), 2u);
  EXPECT_EQ(zero_divisor_cup_length(ring_of("torus"), 3), 4u);
  EXPECT_EQ(zero_divisor_cup_length(ring_of("genus2"), 2), 4u);
}

TEST(ZeroDivisors, ProductOfSpheresIsAdditiveOnTheseExamples) {
  const FieldSpec q = FieldSpec::rationals();
  const GradedAlgebra s2 = GradedAlgebra::sphere(2, q), s1 = GradedAlgebra::sphere(1, q);
  EXPECT_EQ(zero_divisor_cup_length(tensor_product(s2, s2), 2), 4u);
  EXPECT_EQ(zero_divisor_cup_length(tensor_product(s1, s2), 2), 3u);
}

TEST(ZeroDivisors, KernelIsAnIdealOfTheTensorPower) {
  for (const char* name : {"circle", "torus", "wedge2circles"}) {
    const GradedAlgebra a = ring_of(name);
    for (std::size_t m = 2; m <= 3; ++m) {
      const DiagonalKernel k = diagonal_kernel(a, m);
      EXPECT_TRUE(is_ideal(k.power.algebra, k.kernel)) << name << " m=" << m;
      // dim ker = dim A^m - dim A since multiplication is onto
      EXPECT_EQ(k.kernel.total_dimension(), k.power.algebra.total_dimension() - a.total_dimension());
    }
  }
}

TEST(ZeroDivisors, StandardZeroDivisorsLieInTheKernel) {
  const GradedAlgebra a = ring_of("torus");
  const TensorPower p = tensor_power(a, 2);
  const DiagonalKernel k = diagonal_kernel(a, 2);
  for (const Element& z : standard_zero_divisors(a, p)) {
    EXPECT_TRUE(is_zero(apply(a.field(), k.multiplication[z.degree], z.coefficients)));
  }
}

TEST(ProductSearch, TinyBudgetReportsTruncation) {
  ProductSearchOptions options;
  options.node_budget = 1;
  EXPECT_TRUE(cup_length_search(ring_of("genus2"), options).truncated);
  EXPECT_TRUE(zero_divisor_search(ring_of("torus"), 2, options).truncated);
}

TEST(ProductSearch, PositiveDegreeDetection) {
  EXPECT_TRUE(has_nonzero_positive_degree(ring_of("circle")).has_value());
  EXPECT_FALSE(has_nonzero_positive_degree(ring_of("disk")).has_value());
  EXPECT_FALSE(has_nonzero_positive_degree(ring_of("rp2")).has_value());
}
