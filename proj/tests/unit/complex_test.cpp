#include <gtest/gtest.h>

#include "intertwine/complex.hpp"
#include "intertwine/error.hpp"
#include "oracles.hpp"
#include "test_data.hpp"

using namespace intertwine;

namespace {

const std::vector<std::string> kComplexes = {"circle", "sphere2", "torus", "genus2", "rp2", "klein", "wedge2circles", "disk"};

}  // namespace

TEST(Complex, RejectsMalformedInput) {
  EXPECT_THROW(SimplicialComplex("e", 0, {}), DomainError);
  EXPECT_THROW(SimplicialComplex("rep", 3, {{0, 0, 1}, {1, 2}}), DomainError);
  EXPECT_THROW(SimplicialComplex("range", 2, {{0, 2}}), DomainError);
  EXPECT_THROW(SimplicialComplex("unused", 3, {{0, 1}}), DomainError);
  EXPECT_THROW(SimplicialComplex("nested", 3, {{0, 1, 2}, {0, 1}}), DomainError);
  EXPECT_THROW(SimplicialComplex("dup", 2, {{0, 1}, {1, 0}}), DomainError);
  EXPECT_THROW(SimplicialComplex("split", 4, {{0, 1}, {2, 3}}), DomainError);
  EXPECT_THROW(parse_complex("{not json"), DomainError);
}

TEST(Complex, FaceCountsOfBoundaryTetrahedron) {
  const SimplicialComplex s2("s2", 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  EXPECT_EQ(s2.face_counts(), (std::vector<std::size_t>{4, 6, 4}));
  EXPECT_EQ(s2.euler_characteristic(), 2);
}

TEST(Complex, BettiNumbersMatchFloatingPointBoundaryRanks) {
  for (const std::string& name : kComplexes) {
    const SimplicialComplex k = load_complex(data_path("complexes/" + name + ".cx"));
    EXPECT_EQ(betti_numbers(k, FieldSpec::rationals()), oracle::betti_by_boundaries(k)) << name;
  }
}

TEST(Complex, EulerCharacteristicIsAlternatingBettiSum) {
  for (const std::string& name : kComplexes) {
    const SimplicialComplex k = load_complex(data_path("complexes/" + name + ".cx"));
    for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)}) {
      const auto betti = betti_numbers(k, f);
      long chi = 0;
      for (std::size_t d = 0; d < betti.size(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(betti[d]);
      EXPECT_EQ(chi, k.euler_characteristic()) << name << " over " << f.name();
    }
  }
}

TEST(Complex, KnownBettiNumbers) {
  auto betti = [](const std::string& name, const FieldSpec& f) {
    return betti_numbers(load_complex(data_path("complexes/" + name + ".cx")), f);
  };
  using V = std::vector<std::size_t>;
  EXPECT_EQ(betti("torus", FieldSpec::rationals()), (V{1, 2, 1}));
  EXPECT_EQ(betti("genus2", FieldSpec::rationals()), (V{1, 4, 1}));
  EXPECT_EQ(betti("rp2", FieldSpec::rationals()), (V{1, 0, 0}));
  EXPECT_EQ(betti("rp2", FieldSpec::prime(2)), (V{1, 1, 1}));
  EXPECT_EQ(betti("klein", FieldSpec::prime(2)), (V{1, 2, 1}));
  EXPECT_EQ(betti("wedge2circles", FieldSpec::rationals()), (V{1, 2}));
  EXPECT_EQ(betti("disk", FieldSpec::rationals()), (V{1, 0, 0}));
}

TEST(Complex, JsonRoundTrip) {
  for (const std::string& name : kComplexes) {
    const SimplicialComplex k = load_complex(data_path("complexes/" + name + ".cx"));
    const SimplicialComplex back = parse_complex(complex_to_json(k));
    EXPECT_EQ(back.name(), k.name());
    EXPECT_EQ(back.maximal_simplices(), k.maximal_simplices());
  }
}

TEST(Complex, CoboundarySquaresToZero) {
  const SimplicialComplex k = load_complex(data_path("complexes/torus.cx"));
  const FieldSpec q = FieldSpec::rationals();
  const CochainComplex c = cochain_complex(k, q);
  for (std::size_t d = 0; d + 1 < c.coboundary.size(); ++d) {
    EXPECT_TRUE(multiply(q, c.coboundary[d + 1], c.coboundary[d]).is_zero()) << d;
  }
}

TEST(Complex, CupProductOfRepresentativesIsCocycle) {
  const SimplicialComplex k = load_complex(data_path("complexes/torus.cx"));
  const FieldSpec q = FieldSpec::rationals();
  const CohomologyRing ring = cohomology(k, q);
  const CochainComplex c = cochain_complex(k, q);
  const Vector product = cup_cochains(k, q, 1, ring.representatives[1][0], 1, ring.representatives[1][1]);
  EXPECT_TRUE(is_zero(apply(q, c.coboundary[2], product)));
  EXPECT_FALSE(is_zero(product));
}
