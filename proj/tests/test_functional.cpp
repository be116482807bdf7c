#include <catch2/catch_amalgamated.hpp>

#include "seminorm_lab/functional.hpp"
#include "seminorm_lab/sampling.hpp"

using namespace seminorm_lab;

namespace {

const SparseSeq kX = make_seq({{1, Rational(3)}, {2, Rational(-1, 2)}, {5, Rational(1, 4)}});

}  // namespace

TEST_CASE("l1 and linf evaluation") {
  CHECK(evaluate(Functional::l1(), kX) == Rational(15, 4));  // 3 + 1/2 + 1/4
  CHECK(evaluate(Functional::linf(), kX) == 3);
  CHECK(evaluate(Functional::l1(), SparseSeq()) == 0);
  CHECK(evaluate(Functional::linf(), SparseSeq()) == 0);
}

TEST_CASE("weighted l1 evaluation") {
  const Functional w = Functional::weighted_l1(IndexRule::pow_half());
  // 3/2 + (1/2)/4 + (1/4)/32
  CHECK(evaluate(w, kX) == Rational(3, 2) + Rational(1, 8) + Rational(1, 128));
  CHECK(evaluate(w, basis_vector(10)) == Rational(1, 1024));
  CHECK_THROWS_AS(Functional::weighted_l1(IndexRule::constant(Rational(0))),
                  std::invalid_argument);
  CHECK_THROWS_AS(Functional::weighted_l1(IndexRule::constant(Rational(-1))),
                  std::invalid_argument);
}

TEST_CASE("rescaled l1 evaluation divides by the scale") {
  // The value is the plain l1 size of the coordinate vector with respect to
  // the rescaled basis g_i = d_i e_i, i.e. sum of |x_i| / d_i.
  const Functional r = Functional::rescaled_l1(IndexRule::reciprocal(), {});
  CHECK(evaluate(r, basis_vector(7)) == 7);
  CHECK(evaluate(r, scale(Rational(1, 7), basis_vector(7))) == 1);
  CHECK(evaluate(r, kX) == Rational(3) + Rational(1) + Rational(5, 4));

  const Functional s = Functional::rescaled_l1(IndexRule::reciprocal(), {1});
  CHECK(evaluate(s, kX) == Rational(1) + Rational(5, 4));  // index 1 ignored
  CHECK(evaluate(s, basis_vector(1)) == 0);
  CHECK(in_kernel(s, basis_vector(1)));
  CHECK_FALSE(in_kernel(s, basis_vector(2)));

  // Manual two-path consistency on random input: expanding x over the
  // rescaled basis and taking plain l1 of the coefficients matches evaluate.
  SampleRng rng(3);
  for (int k = 0; k < 200; ++k) {
    const SparseSeq x = random_seq(rng);
    Rational by_hand(0);
    for (const auto& [i, v] : x.entries())
      if (i != 1) by_hand += abs_val(v / Rational(1, i));
    CHECK(evaluate(s, x) == by_hand);
  }

  CHECK_THROWS_AS(Functional::rescaled_l1(IndexRule::constant(Rational(0)), {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Functional::rescaled_l1(IndexRule::reciprocal(), {0}), std::invalid_argument);
}

TEST_CASE("coordinate_abs evaluation") {
  const Functional c = Functional::coordinate_abs(2);
  CHECK(evaluate(c, kX) == Rational(1, 2));
  CHECK(evaluate(c, basis_vector(3)) == 0);
  CHECK_THROWS_AS(Functional::coordinate_abs(0), std::invalid_argument);
}

TEST_CASE("sum evaluates additively") {
  const Functional f = Functional::sum(Functional::l1(), Functional::linf());
  SampleRng rng(5);
  for (int k = 0; k < 200; ++k) {
    const SparseSeq x = random_seq(rng);
    CHECK(evaluate(f, x) ==
          evaluate(Functional::l1(), x) + evaluate(Functional::linf(), x));
  }
}

TEST_CASE("pullback composes with the map") {
  const LinearMap m = LinearMap::compose(LinearMap::diagonal(IndexRule::pow_half()),
                                         LinearMap::shift_left());
  const Functional f = Functional::pullback(Functional::l1(), m);
  SampleRng rng(9);
  for (int k = 0; k < 200; ++k) {
    const SparseSeq x = random_seq(rng);
    CHECK(evaluate(f, x) == evaluate(Functional::l1(), m.apply(x)));
  }
}

TEST_CASE("quotient evaluation equals the subspace distance") {
  const Subspace v({add(basis_vector(1), basis_vector(2))});

  // min over t of |1-t| + |t| is 1 (attained on the whole segment [0,1]).
  CHECK(evaluate(Functional::quotient(Functional::l1(), v), basis_vector(1)) == 1);
  // min over t of max(|1-t|, |t|) is 1/2 at t = 1/2.
  CHECK(evaluate(Functional::quotient(Functional::linf(), v), basis_vector(1)) == Rational(1, 2));
  // min over t of (1/2)|1-t| + (1/4)|t| is 1/4 at t = 1.
  CHECK(evaluate(Functional::quotient(Functional::weighted_l1(IndexRule::pow_half()), v),
                 basis_vector(1)) == Rational(1, 4));
  // Scaling the argument scales the distance.
  CHECK(evaluate(Functional::quotient(Functional::l1(), v),
                 scale(Rational(3), basis_vector(1))) == 3);
  // Disjoint support: nothing in the subspace helps, distance is the norm.
  CHECK(evaluate(Functional::quotient(Functional::l1(), v),
                 scale(Rational(5), basis_vector(3))) == 5);
  // Members are at distance zero.
  CHECK(evaluate(Functional::quotient(Functional::l1(), v),
                 scale(Rational(-2, 3), add(basis_vector(1), basis_vector(2)))) == 0);
  CHECK(in_kernel(Functional::quotient(Functional::l1(), v),
                  add(basis_vector(1), basis_vector(2))));

  // Only norms with a polyhedral epigraph support the distance construction.
  CHECK_THROWS_AS(
      Functional::quotient(Functional::sum(Functional::l1(), Functional::linf()), v),
      UnsupportedNorm);
  CHECK_THROWS_AS(Functional::quotient(Functional::coordinate_abs(1), v), UnsupportedNorm);
}

TEST_CASE("is_norm_candidate") {
  CHECK(is_norm_candidate(Functional::l1()));
  CHECK(is_norm_candidate(Functional::linf()));
  CHECK(is_norm_candidate(Functional::weighted_l1(IndexRule::pow_half())));
  CHECK(is_norm_candidate(Functional::rescaled_l1(IndexRule::reciprocal(), {})));
  CHECK_FALSE(is_norm_candidate(Functional::rescaled_l1(IndexRule::reciprocal(), {1})));
  CHECK_FALSE(is_norm_candidate(Functional::coordinate_abs(1)));

  CHECK(is_norm_candidate(Functional::sum(Functional::coordinate_abs(1), Functional::linf())));
  CHECK_FALSE(is_norm_candidate(
      Functional::sum(Functional::coordinate_abs(1), Functional::coordinate_abs(2))));

  CHECK(is_norm_candidate(Functional::pullback(Functional::linf(), LinearMap::identity())));
  CHECK_FALSE(is_norm_candidate(Functional::pullback(Functional::linf(),
                                                     LinearMap::shift_left())));

  const Subspace v({add(basis_vector(1), basis_vector(2))});
  CHECK_FALSE(is_norm_candidate(Functional::quotient(Functional::l1(), v)));
}

TEST_CASE("structural equality of functionals") {
  CHECK(Functional::l1() == Functional::l1());
  CHECK_FALSE(Functional::l1() == Functional::linf());
  CHECK(Functional::rescaled_l1(IndexRule::reciprocal(), {1}) ==
        Functional::rescaled_l1(IndexRule::reciprocal(), {1}));
  CHECK_FALSE(Functional::rescaled_l1(IndexRule::reciprocal(), {1}) ==
              Functional::rescaled_l1(IndexRule::reciprocal(), {}));
  CHECK(Functional::sum(Functional::l1(), Functional::linf()) ==
        Functional::sum(Functional::l1(), Functional::linf()));
  CHECK_FALSE(Functional::sum(Functional::l1(), Functional::linf()) ==
              Functional::sum(Functional::linf(), Functional::l1()));
}

TEST_CASE("polyhedral_kind") {
  CHECK(Functional::l1().polyhedral_kind() == PolyhedralKind::l1);
  CHECK(Functional::linf().polyhedral_kind() == PolyhedralKind::linf);
  CHECK(Functional::weighted_l1(IndexRule::pow_half()).polyhedral_kind() ==
        PolyhedralKind::weighted_l1);
  CHECK_FALSE(Functional::coordinate_abs(1).polyhedral_kind().has_value());
  CHECK_FALSE(Functional::sum(Functional::l1(), Functional::l1()).polyhedral_kind().has_value());
}
