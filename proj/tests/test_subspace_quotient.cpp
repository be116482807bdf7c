#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "seminorm_lab/quotient.hpp"
#include "seminorm_lab/sampling.hpp"

using namespace seminorm_lab;

TEST_CASE("subspace construction validates the basis") {
  CHECK_THROWS_AS(Subspace({}), std::invalid_argument);
  CHECK_THROWS_AS(Subspace({SparseSeq()}), std::invalid_argument);
  // e1, e1+e2, e2 are dependent.
  CHECK_THROWS_AS(Subspace({basis_vector(1), add(basis_vector(1), basis_vector(2)),
                            basis_vector(2)}),
                  std::invalid_argument);

  const Subspace v({basis_vector(1), add(basis_vector(2), basis_vector(5))});
  CHECK(v.dim() == 2);
  CHECK(v.ambient_support() == std::vector<Index>{1, 2, 5});
}

TEST_CASE("membership with explicit coefficients") {
  const Subspace v({add(basis_vector(1), basis_vector(2)), basis_vector(2)});

  // e1 = 1*(e1+e2) + (-1)*e2.
  const auto combo = v.membership(basis_vector(1));
  REQUIRE(combo.has_value());
  CHECK(*combo == std::vector<Rational>{Rational(1), Rational(-1)});

  CHECK(v.contains(SparseSeq()));
  CHECK(v.contains(add(basis_vector(1), basis_vector(2))));
  CHECK_FALSE(v.contains(basis_vector(3)));
  CHECK_FALSE(v.contains(add(basis_vector(1), basis_vector(3))));

  // The reported coefficients always reconstruct the member.
  SampleRng rng(13);
  for (int k = 0; k < 50; ++k) {
    SparseSeq x;
    const Rational a = random_coeff(rng), b = random_coeff(rng);
    x = scale(a, v.basis()[0]) + scale(b, v.basis()[1]);
    const auto c = v.membership(x);
    REQUIRE(c.has_value());
    CHECK(scale((*c)[0], v.basis()[0]) + scale((*c)[1], v.basis()[1]) == x);
  }
}

TEST_CASE("membership rejects points outside the joint support quickly") {
  const Subspace v({add(basis_vector(1), basis_vector(2))});
  CHECK_FALSE(v.contains(basis_vector(9)));
  CHECK_FALSE(v.contains(add(basis_vector(1), add(basis_vector(2), basis_vector(9)))));
}

TEST_CASE("distance values checked by hand") {
  const Subspace v({add(basis_vector(1), basis_vector(2))});
  const SparseSeq e1 = basis_vector(1);

  // min_t |1-t| + |t| = 1.
  CHECK(distance(Functional::l1(), v, e1).value == 1);
  // min_t max(|1-t|, |t|) = 1/2.
  CHECK(distance(Functional::linf(), v, e1).value == Rational(1, 2));
  // min_t (1/2)|1-t| + (1/4)|t| = 1/4 at t = 1.
  CHECK(distance(Functional::weighted_l1(IndexRule::pow_half()), v, e1).value == Rational(1, 4));

  // Two-dimensional subspace: span{e1+e2, e3}. For u = e1 + e3 the best
  // approximation zeroes the e3 part and splits e1 against e1+e2, so the l1
  // distance is 1.
  const Subspace w({add(basis_vector(1), basis_vector(2)), basis_vector(3)});
  const SparseSeq u = add(basis_vector(1), basis_vector(3));
  CHECK(distance(Functional::l1(), w, u).value == 1);

  // Disjoint support gives the plain norm.
  CHECK(distance(Functional::l1(), v, scale(Rational(5), basis_vector(3))).value == 5);
  CHECK(distance(Functional::linf(), v, scale(Rational(5), basis_vector(3))).value == 5);
}

TEST_CASE("distance results carry verified certificates and minimizers") {
  SampleRng rng(31);
  for (int k = 0; k < 25; ++k) {
    const Subspace v = random_subspace(rng);
    const SparseSeq u = random_seq(rng, 8, 0, 4);
    for (const Functional& norm :
         {Functional::l1(), Functional::linf(),
          Functional::weighted_l1(IndexRule::pow_half())}) {
      const DistanceResult res = distance(norm, v, u);
      CHECK(evaluate(norm, u - res.minimizer) == res.value);
      CHECK(v.contains(res.minimizer));
      CHECK(verify_certificate(res.problem, res.certificate));
      CHECK(res.value >= 0);
      CHECK(res.value <= evaluate(norm, u));  // v = 0 is always available
    }
  }
}

TEST_CASE("one-dimensional distances match the grid oracle") {
  SampleRng rng(47);
  for (int k = 0; k < 12; ++k) {
    const Subspace v = random_subspace(rng, 1, 8);
    const SparseSeq u = random_seq(rng, 8, 1, 4);
    for (const Functional& norm : {Functional::l1(), Functional::linf()}) {
      const Rational lp_value = distance(norm, v, u).value;
      const Rational oracle = oracles::min_distance_1d(norm, u, v.basis().front());
      CHECK(lp_value == oracle);
    }
  }
}

TEST_CASE("quotient_eval vanishes exactly on members") {
  const Subspace v({add(basis_vector(1), basis_vector(2)), basis_vector(4)});
  SampleRng rng(53);
  for (const Functional& norm : {Functional::l1(), Functional::linf()}) {
    for (int k = 0; k < 30; ++k) {
      const Rational a = random_coeff(rng), b = random_coeff(rng);
      const SparseSeq member = scale(a, v.basis()[0]) + scale(b, v.basis()[1]);
      CHECK(quotient_eval(norm, v, member) == 0);
    }
    for (int k = 0; k < 30; ++k) {
      const SparseSeq x = random_seq(rng);
      const Rational q = quotient_eval(norm, v, x);
      CHECK((q == 0) == v.contains(x));
    }
  }
}

TEST_CASE("distance requires a polyhedral ambient norm") {
  const Subspace v({basis_vector(1)});
  CHECK_THROWS_AS(distance(Functional::coordinate_abs(1), v, basis_vector(2)), UnsupportedNorm);
  CHECK_THROWS_AS(distance(Functional::sum(Functional::l1(), Functional::linf()), v,
                           basis_vector(2)),
                  UnsupportedNorm);
}
