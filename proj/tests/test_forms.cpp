// Normal forms, exterior calculus, Whitney lifts and exact integration,
// pinned by hand-expanded values on a single triangle and property-tested
// on the whole fixture corpus.

#include <doctest.h>

#include <array>
#include <utility>
#include <vector>

#include "derham/cohomology.hpp"
#include "derham/complex.hpp"
#include "derham/errors.hpp"
#include "derham/forms.hpp"
#include "derham/sampling.hpp"

using namespace derham;

namespace {

BarycentricTerm term(Rational c, Monomial m, std::vector<VertexId> f) {
  return BarycentricTerm{std::move(c), std::move(m), std::move(f)};
}

// A form living entirely on the top simplex with index 0.
PolyForm on_first_top(const SimplicialComplex& k, int degree,
                      std::vector<BarycentricTerm> terms) {
  return make_form(k, degree, {{0, std::move(terms)}});
}

const std::vector<CanonicalName> kCorpus = {
    CanonicalName::circle,          CanonicalName::sphere2,
    CanonicalName::torus,           CanonicalName::torus7,
    CanonicalName::projective_plane, CanonicalName::klein_bottle};

SimplicialComplex corpus_complex(CanonicalName name) {
  return canonical_complex(name, name == CanonicalName::circle ? 3 : 0);
}

}  // namespace

TEST_CASE("normal form eliminates the minimal differential") {
  SimplicialComplex t = SimplicialComplex::from_maximal(3, {{0, 1, 2}});
  const std::vector<VertexId> carrier = {0, 1, 2};

  // dlambda_0 = -dlambda_1 - dlambda_2.
  auto out = normalize_terms({term(1, {}, {0})}, carrier);
  REQUIRE(out.size() == 2);
  CHECK(out[0] == term(-1, {}, {1}));
  CHECK(out[1] == term(-1, {}, {2}));

  // dlambda_0 ^ dlambda_1 = dlambda_1 ^ dlambda_2.
  out = normalize_terms({term(1, {}, {0, 1})}, carrier);
  REQUIRE(out.size() == 1);
  CHECK(out[0] == term(1, {}, {1, 2}));

  // Reordering puts its sign into the coefficient.
  out = normalize_terms({term(1, {}, {2, 1})}, carrier);
  REQUIRE(out.size() == 1);
  CHECK(out[0] == term(-1, {}, {1, 2}));

  // Repeated differentials vanish.
  CHECK(normalize_terms({term(1, {}, {1, 1})}, carrier).empty());

  // The minimal coordinate itself is eliminated: lambda_0 = 1 - l_1 - l_2.
  out = normalize_terms({term(1, {{0, 1}}, {})}, carrier);
  REQUIRE(out.size() == 3);
  CHECK(out[0] == term(1, {}, {}));
  CHECK(out[1] == term(-1, {{1, 1}}, {}));
  CHECK(out[2] == term(-1, {{2, 1}}, {}));

  // lambda_0 * lambda_1 = lambda_1 - lambda_1^2 - lambda_1 lambda_2.
  out = normalize_terms({term(1, {{0, 1}, {1, 1}}, {})}, carrier);
  REQUIRE(out.size() == 3);
  CHECK(out[0] == term(1, {{1, 1}}, {}));
  CHECK(out[1] == term(-1, {{1, 1}, {2, 1}}, {}));
  CHECK(out[2] == term(-1, {{1, 2}}, {}));

  // The barycentric partition of unity collapses to the constant 1.
  out = normalize_terms(
      {term(1, {{0, 1}}, {}), term(1, {{1, 1}}, {}), term(1, {{2, 1}}, {})},
      carrier);
  REQUIRE(out.size() == 1);
  CHECK(out[0] == term(1, {}, {}));

  // Zero exponents and zero coefficients are dropped.
  out = normalize_terms({term(5, {{1, 0}}, {})}, carrier);
  REQUIRE(out.size() == 1);
  CHECK(out[0] == term(5, {}, {}));
  CHECK(normalize_terms({term(0, {}, {1})}, carrier).empty());

  // Like terms merge; exact cancellation annihilates.
  out = normalize_terms({term(1, {}, {1}), term(2, {}, {1})}, carrier);
  REQUIRE(out.size() == 1);
  CHECK(out[0] == term(3, {}, {1}));
  CHECK(normalize_terms({term(1, {}, {1}), term(-1, {}, {1})}, carrier)
            .empty());

  CHECK_THROWS_AS(normalize_terms({term(1, {{5, 1}}, {})}, carrier),
                  StructuralError);
  CHECK_THROWS_AS(normalize_terms({term(1, {}, {7})}, carrier),
                  StructuralError);
  CHECK_THROWS_AS(normalize_terms({term(1, {{1, -2}}, {})}, carrier),
                  StructuralError);
}

TEST_CASE("make_form validates shape and aborts on discontinuity") {
  SimplicialComplex t = SimplicialComplex::from_maximal(3, {{0, 1, 2}});
  CHECK_THROWS_AS(make_form(t, 0, {{5, {term(1, {}, {})}}}), StructuralError);
  CHECK_THROWS_AS(make_form(t, 1, {{0, {term(1, {}, {})}}}), StructuralError);
  CHECK_THROWS_AS(make_form(t, -1, {{0, {term(1, {}, {})}}}), StructuralError);
  CHECK_THROWS_AS(make_form(t, 5, {}), DimensionError);
  CHECK(make_form(t, 3, {}).is_zero());
  CHECK(make_form(t, -1, {}).is_zero());

  // The constant 1 on a single torus triangle jumps across its edges.
  SimplicialComplex torus = canonical_complex(CanonicalName::torus);
  CHECK_THROWS_AS(on_first_top(torus, 0, {term(1, {}, {})}), StructuralError);
}

TEST_CASE("exterior derivative of hand-expanded forms") {
  SimplicialComplex t = SimplicialComplex::from_maximal(3, {{0, 1, 2}});

  // d(lambda_0 dlambda_1) = dlambda_0 ^ dlambda_1 = dlambda_1 ^ dlambda_2.
  PolyForm w = on_first_top(t, 1, {term(1, {{0, 1}}, {1})});
  PolyForm dw = exterior_derivative(w);
  CHECK(dw.degree() == 2);
  REQUIRE(dw.terms(0).size() == 1);
  CHECK(dw.terms(0)[0] == term(1, {}, {1, 2}));

  // d of a constant is zero; d(lambda_2) = dlambda_2.
  CHECK(exterior_derivative(PolyForm::constant(t, Rational(7))).is_zero());
  PolyForm l2 = on_first_top(t, 0, {term(1, {{2, 1}}, {})});
  PolyForm dl2 = exterior_derivative(l2);
  REQUIRE(dl2.terms(0).size() == 1);
  CHECK(dl2.terms(0)[0] == term(1, {}, {2}));

  // Top-degree forms die, as do the always-zero fringe degrees.
  PolyForm top = on_first_top(t, 2, {term(1, {}, {1, 2})});
  CHECK(exterior_derivative(top).is_zero());
  CHECK(exterior_derivative(top).degree() == 3);
  CHECK(exterior_derivative(PolyForm(t, -1)).degree() == 0);
}

TEST_CASE("whitney forms on a single triangle") {
  SimplicialComplex t = SimplicialComplex::from_maximal(3, {{0, 1, 2}});

  // The hat function of vertex 1 is lambda_1.
  Cochain hat = Cochain::zero(t, 0);
  hat[*t.index_of(Simplex({1}))] = 1;
  PolyForm w0 = whitney(t, hat);
  REQUIRE(w0.terms(0).size() == 1);
  CHECK(w0.terms(0)[0] == term(1, {{1, 1}}, {}));

  // W_{[0,1]} = lambda_0 dlambda_1 - lambda_1 dlambda_0, which reduces to
  // (1 - lambda_2) dlambda_1 + lambda_1 dlambda_2 in the free coordinates.
  Cochain edge = Cochain::zero(t, 1);
  edge[*t.index_of(Simplex({0, 1}))] = 1;
  PolyForm w1 = whitney(t, edge);
  REQUIRE(w1.terms(0).size() == 3);
  CHECK(w1.terms(0)[0] == term(1, {}, {1}));
  CHECK(w1.terms(0)[1] == term(-1, {{2, 1}}, {1}));
  CHECK(w1.terms(0)[2] == term(1, {{1, 1}}, {2}));

  // dW_{[0,1]} = 2 dlambda_1 ^ dlambda_2.
  PolyForm dw1 = exterior_derivative(w1);
  REQUIRE(dw1.terms(0).size() == 1);
  CHECK(dw1.terms(0)[0] == term(2, {}, {1, 2}));

  // W of the top simplex: 2(lambda_0 + lambda_1 + lambda_2) dl_1 ^ dl_2,
  // and the partition of unity collapses the prefactor to 1.
  Cochain top = Cochain::zero(t, 2);
  top[0] = 1;
  PolyForm w2 = whitney(t, top);
  REQUIRE(w2.terms(0).size() == 1);
  CHECK(w2.terms(0)[0] == term(2, {}, {1, 2}));

  // The chain-map identity holds on the nose: W(delta f) = d(W(f)).
  CHECK(whitney(t, coboundary(t, edge)) == dw1);

  // Degree edge cases lift to zero forms.
  CHECK(whitney(t, Cochain(-1, {})).is_zero());
  CHECK(whitney(t, Cochain(-1, {})).degree() == -1);
  CHECK(whitney(t, Cochain(3, {})).degree() == 3);
}

TEST_CASE("restriction to a face in its own coordinates") {
  SimplicialComplex t = SimplicialComplex::from_maximal(3, {{0, 1, 2}});
  Cochain edge = Cochain::zero(t, 1);
  edge[*t.index_of(Simplex({0, 1}))] = 1;
  PolyForm w1 = whitney(t, edge);

  // On its own edge the Whitney 1-form pulls back to dlambda_1 exactly.
  auto on_edge = restrict_to_face(w1.terms(0), {0, 1});
  REQUIRE(on_edge.size() == 1);
  CHECK(on_edge[0] == term(1, {}, {1}));

  // The term carrying dlambda_2 dies on [0,1]; everything dies on [0,2].
  CHECK(restrict_to_face(w1.terms(0), {0, 2}).empty());

  // Locality: W_{[0,1]} pulls back to zero on the opposite edge, where the
  // surviving terms cancel after renormalization in that edge's coordinates.
  CHECK(restrict_to_face(w1.terms(0), {1, 2}).empty());
}

TEST_CASE("wedge identities on hand-built forms") {
  SimplicialComplex t = SimplicialComplex::from_maximal(3, {{0, 1, 2}});
  PolyForm dl1 = on_first_top(t, 1, {term(1, {}, {1})});
  PolyForm dl2 = on_first_top(t, 1, {term(1, {}, {2})});

  CHECK(wedge(dl1, dl1).is_zero());
  PolyForm area = wedge(dl1, dl2);
  REQUIRE(area.terms(0).size() == 1);
  CHECK(area.terms(0)[0] == term(1, {}, {1, 2}));
  CHECK(wedge(dl2, dl1) == Rational(-1) * area);

  PolyForm one = PolyForm::constant(t, Rational(1));
  CHECK(wedge(dl1, one) == dl1);
  CHECK(wedge(one, dl1) == dl1);

  // Wedging beyond the top dimension collapses to the zero form.
  CHECK(wedge(area, dl1).is_zero());
  CHECK(wedge(area, dl1).degree() == 3);
  CHECK(wedge(area, area).degree() == 3);
}

TEST_CASE("wedge is graded-commutative exactly") {
  Rng rng(41);
  SimplicialComplex k = canonical_complex(CanonicalName::torus);
  for (auto [p, q] : std::vector<std::pair<int, int>>{
           {0, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}}) {
    for (int trial = 0; trial < 5; ++trial) {
      PolyForm a = random_polyform(k, p, rng);
      PolyForm b = random_polyform(k, q, rng);
      Rational sign((p * q) % 2 == 0 ? 1 : -1);
      CHECK(wedge(a, b) == sign * wedge(b, a));
    }
  }
}

TEST_CASE("wedge is associative") {
  Rng rng(42);
  SimplicialComplex k = canonical_complex(CanonicalName::torus);
  for (auto [p, q, r] : std::vector<std::array<int, 3>>{
           {0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {0, 0, 2}}) {
    for (int trial = 0; trial < 5; ++trial) {
      PolyForm a = random_polyform(k, p, rng);
      PolyForm b = random_polyform(k, q, rng);
      PolyForm c = random_polyform(k, r, rng);
      CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    }
  }
}

TEST_CASE("exterior derivative obeys the Leibniz rule") {
  Rng rng(43);
  SimplicialComplex k = canonical_complex(CanonicalName::torus);
  for (auto [p, q] : std::vector<std::pair<int, int>>{
           {0, 0}, {0, 1}, {1, 0}, {1, 1}}) {
    for (int trial = 0; trial < 5; ++trial) {
      PolyForm a = random_polyform(k, p, rng);
      PolyForm b = random_polyform(k, q, rng);
      PolyForm lhs = exterior_derivative(wedge(a, b));
      PolyForm rhs = wedge(exterior_derivative(a), b);
      PolyForm second = wedge(a, exterior_derivative(b));
      if (p % 2 == 1) second *= Rational(-1);
      rhs += second;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("d d vanishes on random forms") {
  Rng rng(44);
  for (CanonicalName name : kCorpus) {
    SimplicialComplex k = corpus_complex(name);
    for (int p = 0; p <= k.dim(); ++p) {
      for (int trial = 0; trial < 5; ++trial) {
        PolyForm w = random_polyform(k, p, rng);
        CHECK(exterior_derivative(exterior_derivative(w)).is_zero());
      }
    }
  }
}

TEST_CASE("random forms and whitney lifts are tangentially continuous") {
  Rng rng(45);
  for (CanonicalName name : kCorpus) {
    SimplicialComplex k = corpus_complex(name);
    for (int p = 0; p <= k.dim(); ++p) {
      CHECK(tangentially_continuous(random_polyform(k, p, rng)));
      CHECK(tangentially_continuous(whitney(k, random_cochain(k, p, rng))));
    }
  }
}

TEST_CASE("frozen simplex integrals") {
  SimplicialComplex t = SimplicialComplex::from_maximal(3, {{0, 1, 2}});
  Simplex triangle({0, 1, 2});

  CHECK(integrate(on_first_top(t, 2, {term(1, {}, {1, 2})}), triangle) ==
        Rational(1, 2));
  CHECK(integrate(on_first_top(t, 2, {term(1, {{1, 1}}, {1, 2})}), triangle) ==
        Rational(1, 6));
  CHECK(integrate(on_first_top(t, 2,
                               {term(1, {{0, 1}, {1, 1}, {2, 1}}, {1, 2})}),
                  triangle) == Rational(1, 120));

  PolyForm dl1 = on_first_top(t, 1, {term(1, {}, {1})});
  CHECK(integrate(dl1, Simplex({0, 1})) == 1);
  CHECK(integrate(dl1, Simplex({0, 2})) == 0);
  CHECK(integrate(dl1, Simplex({1, 2})) == -1);

  CHECK(integrate(PolyForm::constant(t, Rational(5)), Simplex({2})) == 5);
}

TEST_CASE("whitney forms integrate to one over their own simplex") {
  std::vector<SimplicialComplex> fixtures;
  for (CanonicalName name : kCorpus) fixtures.push_back(corpus_complex(name));
  fixtures.push_back(SimplicialComplex::from_maximal(4, {{0, 1, 2, 3}}));
  for (const auto& k : fixtures) {
    for (int p = 0; p <= k.dim(); ++p) {
      const auto& sources = k.simplices(p);
      for (Index i = 0; i < sources.size(); ++i) {
        Cochain indicator = Cochain::zero(k, p);
        indicator[i] = 1;
        PolyForm w = whitney(k, indicator);
        for (Index j = 0; j < sources.size(); ++j) {
          CHECK(integrate(w, sources[j]) == Rational(i == j ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("integration is linear and respects chain coefficients") {
  Rng rng(46);
  SimplicialComplex k = canonical_complex(CanonicalName::torus);
  for (int p = 0; p <= k.dim(); ++p) {
    PolyForm a = random_polyform(k, p, rng);
    PolyForm b = random_polyform(k, p, rng);
    Chain c = random_chain(k, p, rng);
    CHECK(integrate(a + b, c) == integrate(a, c) + integrate(b, c));
    Chain reversed = c;
    reversed *= Rational(-1);
    CHECK(integrate(a, reversed) == -integrate(a, c));
    Rational s(3, 7);
    CHECK(integrate(s * a, c) == s * integrate(a, c));
  }
}

TEST_CASE("integration rejects mismatched input") {
  SimplicialComplex t = SimplicialComplex::from_maximal(3, {{0, 1, 2}});
  PolyForm dl1 = on_first_top(t, 1, {term(1, {}, {1})});
  CHECK_THROWS_AS(integrate(dl1, Simplex({0, 1, 2})), DimensionError);
  CHECK_THROWS_AS(integrate(dl1, Simplex({1, 5})), StructuralError);
  Chain c(2);
  CHECK_THROWS_AS(integrate(dl1, c), DimensionError);
}

TEST_CASE("stokes: the integral of d over a chain meets the boundary") {
  Rng rng(47);
  for (CanonicalName name : kCorpus) {
    SimplicialComplex k = corpus_complex(name);
    for (int p = 0; p + 1 <= k.dim(); ++p) {
      for (int trial = 0; trial < 5; ++trial) {
        PolyForm w = random_polyform(k, p, rng);
        Chain c = random_chain(k, p + 1, rng);
        CHECK(integrate(exterior_derivative(w), c) ==
              integrate(w, boundary(k, c)));
      }
    }
  }
}

TEST_CASE("de rham map intertwines d with delta") {
  Rng rng(48);
  for (CanonicalName name : kCorpus) {
    SimplicialComplex k = corpus_complex(name);
    for (int p = 0; p <= k.dim(); ++p) {
      for (int trial = 0; trial < 5; ++trial) {
        PolyForm w = random_polyform(k, p, rng);
        CHECK(derham_map(k, exterior_derivative(w)) ==
              coboundary(k, derham_map(k, w)));
      }
    }
  }
}

TEST_CASE("de rham map reproduces cochains from whitney lifts") {
  Rng rng(49);
  for (CanonicalName name : kCorpus) {
    SimplicialComplex k = corpus_complex(name);
    for (int p = 0; p <= k.dim(); ++p) {
      for (int trial = 0; trial < 5; ++trial) {
        Cochain f = random_cochain(k, p, rng);
        CHECK(derham_map(k, whitney(k, f)) == f);
      }
    }
    CHECK(derham_map(k, PolyForm(k, 1)).is_zero());
  }
}

TEST_CASE("whitney lift is a chain map for delta") {
  Rng rng(50);
  for (CanonicalName name : kCorpus) {
    SimplicialComplex k = corpus_complex(name);
    for (int p = 0; p <= k.dim(); ++p) {
      for (int trial = 0; trial < 5; ++trial) {
        Cochain f = random_cochain(k, p, rng);
        CHECK(whitney(k, coboundary(k, f)) ==
              exterior_derivative(whitney(k, f)));
      }
    }
  }
}

TEST_CASE("polyform arithmetic enforces shape and home complex") {
  SimplicialComplex t = SimplicialComplex::from_maximal(3, {{0, 1, 2}});
  SimplicialComplex t2 = SimplicialComplex::from_maximal(3, {{0, 1, 2}});
  PolyForm a = on_first_top(t, 1, {term(1, {}, {1})});
  PolyForm b = on_first_top(t, 0, {term(1, {}, {})});
  CHECK_THROWS_AS(a += on_first_top(t, 0, {term(1, {}, {})}), DimensionError);
  CHECK_THROWS_AS(a += on_first_top(t2, 1, {term(1, {}, {1})}),
                  StructuralError);
  CHECK_THROWS_AS(wedge(a, on_first_top(t2, 0, {term(1, {}, {})})),
                  StructuralError);

  PolyForm sum = a + a;
  REQUIRE(sum.terms(0).size() == 1);
  CHECK(sum.terms(0)[0] == term(2, {}, {1}));
  CHECK((sum - a) == a);
  CHECK((Rational(0) * a).is_zero());
  CHECK(b + b == PolyForm::constant(t, Rational(2)));
}
