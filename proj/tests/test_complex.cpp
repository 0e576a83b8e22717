// Simplicial complex construction, boundaries, orientations and the
// canonical fixtures.

#include <doctest.h>

#include "derham/complex.hpp"
#include "derham/errors.hpp"
#include "derham/linalg.hpp"

using namespace derham;

TEST_CASE("simplex invariants and faces") {
  CHECK_THROWS_AS(Simplex({1, 0}), StructuralError);
  CHECK_THROWS_AS(Simplex({0, 0}), StructuralError);

  Simplex s({2, 5, 9});
  CHECK(s.dim() == 2);
  CHECK(s.facet(0) == Simplex({5, 9}));
  CHECK(s.facet(1) == Simplex({2, 9}));
  CHECK(s.facet(2) == Simplex({2, 5}));
  CHECK(s.front_face(1) == Simplex({2, 5}));
  CHECK(s.back_face(1) == Simplex({5, 9}));
  CHECK(s.contains(Simplex({2, 9})));
  CHECK(!s.contains(Simplex({2, 7})));
}

TEST_CASE("chains merge and drop zero coefficients") {
  Chain c(1);
  c.add(Simplex({0, 1}), Rational(2));
  c.add(Simplex({0, 1}), Rational(-2));
  CHECK(c.is_zero());
  c.add(Simplex({1, 2}), Rational(1, 3));
  CHECK(c.coefficient(Simplex({1, 2})) == Rational(1, 3));
  CHECK_THROWS_AS(c.add(Simplex({0}), Rational(1)), DimensionError);
}

TEST_CASE("face closure builds every fixture with the documented counts") {
  auto check_counts = [](const SimplicialComplex& k,
                         std::vector<Index> expected) {
    REQUIRE(k.dim() + 1 == static_cast<int>(expected.size()));
    for (int p = 0; p <= k.dim(); ++p) CHECK(k.count(p) == expected[p]);
  };
  check_counts(canonical_complex(CanonicalName::circle, 3), {3, 3});
  check_counts(canonical_complex(CanonicalName::circle, 7), {7, 7});
  check_counts(canonical_complex(CanonicalName::sphere2), {4, 6, 4});
  check_counts(canonical_complex(CanonicalName::torus), {9, 27, 18});
  check_counts(canonical_complex(CanonicalName::torus7), {7, 21, 14});
  check_counts(canonical_complex(CanonicalName::projective_plane),
               {6, 15, 10});
  check_counts(canonical_complex(CanonicalName::klein_bottle), {9, 27, 18});
  check_counts(canonical_complex(CanonicalName::interval, 2), {3, 2});
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(
      SimplicialComplex::from_maximal(3, {{0, 1}, {1, 0}}), StructuralError);
  CHECK_THROWS_AS(SimplicialComplex::from_maximal(2, {{0, 5}}),
                  StructuralError);
  CHECK_THROWS_AS(canonical_complex(CanonicalName::circle, 2),
                  StructuralError);

  try {
    SimplicialComplex::from_maximal(4, {{0, 1, 2}, {2, 1, 0}});
    FAIL("duplicate simplex accepted");
  } catch (const StructuralError& e) {
    CHECK(std::string(e.what()).find("[0, 1, 2]") != std::string::npos);
  }
}

TEST_CASE("manifold and orientability flags") {
  CHECK(canonical_complex(CanonicalName::sphere2).is_oriented());
  CHECK(canonical_complex(CanonicalName::torus).is_oriented());
  CHECK(canonical_complex(CanonicalName::torus7).is_oriented());
  CHECK(canonical_complex(CanonicalName::circle, 5).is_oriented());

  SimplicialComplex rp2 = canonical_complex(CanonicalName::projective_plane);
  CHECK(rp2.is_closed_manifold());
  CHECK(!rp2.is_oriented());
  SimplicialComplex klein = canonical_complex(CanonicalName::klein_bottle);
  CHECK(klein.is_closed_manifold());
  CHECK(!klein.is_oriented());

  CHECK(!canonical_complex(CanonicalName::interval, 3).is_closed_manifold());
  SimplicialComplex triangle = SimplicialComplex::from_maximal(3, {{0, 1, 2}});
  CHECK(!triangle.is_closed_manifold());
}

TEST_CASE("euler characteristics of the corpus") {
  CHECK(canonical_complex(CanonicalName::circle, 3).euler_characteristic() == 0);
  CHECK(canonical_complex(CanonicalName::sphere2).euler_characteristic() == 2);
  CHECK(canonical_complex(CanonicalName::torus).euler_characteristic() == 0);
  CHECK(canonical_complex(CanonicalName::torus7).euler_characteristic() == 0);
  CHECK(canonical_complex(CanonicalName::projective_plane)
            .euler_characteristic() == 1);
  CHECK(canonical_complex(CanonicalName::klein_bottle)
            .euler_characteristic() == 0);
}

TEST_CASE("boundary follows the alternating-face rule") {
  SimplicialComplex k = canonical_complex(CanonicalName::sphere2);
  Chain b = boundary(k, Simplex({0, 1, 2}));
  CHECK(b.coefficient(Simplex({1, 2})) == 1);
  CHECK(b.coefficient(Simplex({0, 2})) == -1);
  CHECK(b.coefficient(Simplex({0, 1})) == 1);
  CHECK(boundary(k, b).is_zero());

  CHECK_THROWS_AS(boundary(k, Simplex({0, 4})), StructuralError);

  Chain vertex(0);
  vertex.add(Simplex({0}), Rational(1));
  Chain empty = boundary(k, vertex);
  CHECK(empty.dim() == -1);
  CHECK(empty.is_zero());
}

TEST_CASE("the circle loop is a cycle") {
  SimplicialComplex k = canonical_complex(CanonicalName::circle, 3);
  Chain loop(1);
  loop.add(Simplex({0, 1}), Rational(1));
  loop.add(Simplex({1, 2}), Rational(1));
  loop.add(Simplex({0, 2}), Rational(-1));
  CHECK(boundary(k, loop).is_zero());
}

TEST_CASE("boundary matrices: shapes, entries and dd = 0") {
  SimplicialComplex k = canonical_complex(CanonicalName::sphere2);
  CHECK(boundary_matrix(k, 0).rows() == 0);
  CHECK(boundary_matrix(k, 0).cols() == 4);

  RationalMatrix d2 = boundary_matrix(k, 2);
  CHECK(d2.rows() == 6);
  CHECK(d2.cols() == 4);
  for (Index j = 0; j < 4; ++j) {
    int nonzeros = 0;
    for (Index i = 0; i < 6; ++i) {
      if (d2.at(i, j) != 0) ++nonzeros;
    }
    CHECK(nonzeros == 3);
  }

  CHECK_THROWS_AS(boundary_matrix(k, 3), DimensionError);
  CHECK_THROWS_AS(boundary_matrix(k, -1), DimensionError);

  for (CanonicalName name :
       {CanonicalName::sphere2, CanonicalName::torus, CanonicalName::torus7,
        CanonicalName::projective_plane, CanonicalName::klein_bottle}) {
    SimplicialComplex c = canonical_complex(name);
    for (int p = 1; p < c.dim(); ++p) {
      RationalMatrix a = boundary_matrix(c, p);
      RationalMatrix b = boundary_matrix(c, p + 1);
      for (Index j = 0; j < b.cols(); ++j) {
        RationalVector column(b.rows(), Rational(0));
        for (Index i = 0; i < b.rows(); ++i) column[i] = b.at(i, j);
        for (const auto& value : a.apply(column)) CHECK(value == 0);
      }
    }
  }
}

TEST_CASE("fundamental cycles are boundaryless sign vectors") {
  for (CanonicalName name :
       {CanonicalName::sphere2, CanonicalName::torus, CanonicalName::torus7}) {
    SimplicialComplex k = canonical_complex(name);
    Chain fundamental = fundamental_cycle(k);
    CHECK(fundamental.coefficients().size() == k.count(k.dim()));
    for (const auto& [s, coeff] : fundamental.coefficients()) {
      CHECK((coeff == 1 || coeff == -1));
    }
    CHECK(boundary(k, fundamental).is_zero());
    // The top kernel is one-dimensional, so the cycle is unique up to sign.
    CHECK(k.count(k.dim()) - rank(boundary_matrix(k, k.dim())) == 1);
  }

  CHECK_THROWS_AS(
      fundamental_cycle(canonical_complex(CanonicalName::projective_plane)),
      OrientationError);
  CHECK_THROWS_AS(
      fundamental_cycle(canonical_complex(CanonicalName::interval, 2)),
      OrientationError);
}

TEST_CASE("covering tops and simplex lookup") {
  SimplicialComplex k = canonical_complex(CanonicalName::torus);
  for (const auto& edge : k.simplices(1)) {
    CHECK(k.covering_tops(edge).size() == 2);
  }
  for (const auto& vertex : k.simplices(0)) {
    CHECK(k.covering_tops(vertex).size() == 6);
  }
  const auto& tops = k.simplices(2);
  for (Index t = 0; t < tops.size(); ++t) {
    const auto& covering = k.covering_tops(tops[t]);
    REQUIRE(covering.size() == 1);
    CHECK(covering[0] == t);
  }
  CHECK(k.contains(Simplex({0, 8})));
  CHECK(!k.contains(Simplex({0, 5})));
  CHECK(k.covering_tops(Simplex({0, 5})).empty());
}

TEST_CASE("chain coordinate round trip") {
  SimplicialComplex k = canonical_complex(CanonicalName::circle, 4);
  Chain c(1);
  c.add(Simplex({0, 1}), Rational(2, 7));
  c.add(Simplex({0, 3}), Rational(-1));
  RationalVector coords = chain_coordinates(k, c);
  CHECK(chain_from_coordinates(k, 1, coords) == c);
}
