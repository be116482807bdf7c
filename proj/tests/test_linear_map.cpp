#include <catch2/catch_amalgamated.hpp>

#include "seminorm_lab/linear_map.hpp"
#include "seminorm_lab/sampling.hpp"

using namespace seminorm_lab;

namespace {

const SparseSeq kSample = make_seq({{1, Rational(2)}, {2, Rational(-1, 3)}, {7, Rational(5)}});

}  // namespace

TEST_CASE("primitive maps") {
  CHECK(LinearMap::identity().apply(kSample) == kSample);
  CHECK(LinearMap::shift_left().apply(kSample) ==
        make_seq({{1, Rational(-1, 3)}, {6, Rational(5)}}));
  CHECK(LinearMap::shift_right().apply(kSample) ==
        make_seq({{2, Rational(2)}, {3, Rational(-1, 3)}, {8, Rational(5)}}));
  CHECK(LinearMap::truncate_first().apply(kSample) == make_seq({{1, Rational(2)}}));
}

TEST_CASE("diagonal map") {
  const LinearMap d = LinearMap::diagonal(IndexRule::reciprocal());
  CHECK(d.apply(kSample) ==
        make_seq({{1, Rational(2)}, {2, Rational(-1, 6)}, {7, Rational(5, 7)}}));
  CHECK(d.apply(SparseSeq()).is_zero());
}

TEST_CASE("finite table map") {
  const LinearMap swap12 = LinearMap::finite_table({{1, basis_vector(2)}, {2, basis_vector(1)}});
  CHECK(swap12.apply(basis_vector(1)) == basis_vector(2));
  CHECK(swap12.apply(basis_vector(2)) == basis_vector(1));
  CHECK(swap12.apply(basis_vector(3)) == basis_vector(3));  // untouched off the table
  CHECK(swap12.apply(kSample) ==
        make_seq({{2, Rational(2)}, {1, Rational(-1, 3)}, {7, Rational(5)}}));

  // A collapsing table: everything the table covers lands on e1.
  const LinearMap collapse = LinearMap::finite_table({{1, basis_vector(1)}, {2, basis_vector(1)}});
  CHECK(collapse.apply(make_seq({{1, Rational(1)}, {2, Rational(-1)}})).is_zero());
  CHECK_THROWS_AS(LinearMap::finite_table({{0, basis_vector(1)}}), std::invalid_argument);
}

TEST_CASE("compose and sum") {
  const LinearMap lr = LinearMap::compose(LinearMap::shift_left(), LinearMap::shift_right());
  CHECK(lr.apply(kSample) == kSample);  // L(R(x)) = x

  const LinearMap tr = LinearMap::compose(LinearMap::truncate_first(), LinearMap::shift_right());
  CHECK(tr.apply(kSample).is_zero());  // T(R(x)) = 0

  const LinearMap twice = LinearMap::sum(LinearMap::identity(), LinearMap::identity());
  CHECK(twice.apply(kSample) == scale(Rational(2), kSample));
}

TEST_CASE("first_entry_preserving decomposition") {
  // R(f(L(x))) + T(x): the tail goes through f, the head survives untouched.
  SampleRng rng(7);
  const LinearMap maps[] = {
      LinearMap::identity(),
      LinearMap::diagonal(IndexRule::pow_half()),
      LinearMap::finite_table({{1, basis_vector(3)}}),
      LinearMap::compose(LinearMap::shift_right(), LinearMap::shift_left()),
  };
  for (const LinearMap& f : maps) {
    const LinearMap big = LinearMap::first_entry_preserving(f);
    for (int k = 0; k < 100; ++k) {
      const SparseSeq x = random_seq(rng);
      CHECK(coord(big.apply(x), 1) == coord(x, 1));
    }
  }

  // With f = identity the whole construction is the identity operator.
  const LinearMap id_case = LinearMap::first_entry_preserving(LinearMap::identity());
  for (int k = 0; k < 100; ++k) {
    const SparseSeq x = random_seq(rng);
    CHECK(id_case.apply(x) == x);
  }
}

TEST_CASE("matches_first_entry_preserving recognizes both nestings") {
  const LinearMap f = LinearMap::diagonal(IndexRule::reciprocal());
  const LinearMap* found = nullptr;

  const LinearMap canonical = LinearMap::first_entry_preserving(f);
  REQUIRE(LinearMap::matches_first_entry_preserving(canonical, &found));
  CHECK(*found == f);

  // Same operator, the composition associated the other way.
  const LinearMap rebracketed = LinearMap::sum(
      LinearMap::compose(LinearMap::compose(LinearMap::shift_right(), f),
                         LinearMap::shift_left()),
      LinearMap::truncate_first());
  found = nullptr;
  REQUIRE(LinearMap::matches_first_entry_preserving(rebracketed, &found));
  CHECK(*found == f);

  // Summands swapped.
  const LinearMap swapped = LinearMap::sum(
      LinearMap::truncate_first(),
      LinearMap::compose(LinearMap::shift_right(),
                         LinearMap::compose(f, LinearMap::shift_left())));
  found = nullptr;
  CHECK(LinearMap::matches_first_entry_preserving(swapped, &found));

  CHECK_FALSE(LinearMap::matches_first_entry_preserving(LinearMap::identity(), nullptr));
  CHECK_FALSE(LinearMap::matches_first_entry_preserving(
      LinearMap::sum(LinearMap::identity(), LinearMap::identity()), nullptr));
}

TEST_CASE("linearity holds for composites") {
  const LinearMap m = LinearMap::sum(
      LinearMap::compose(LinearMap::diagonal(IndexRule::pow_half()), LinearMap::shift_left()),
      LinearMap::finite_table({{2, make_seq({{1, Rational(1)}, {4, Rational(-2)}})}}));
  SampleRng rng(11);
  for (int k = 0; k < 200; ++k) {
    const SparseSeq x = random_seq(rng);
    const SparseSeq y = random_seq(rng);
    const Rational a = random_coeff(rng);
    CHECK(m.apply(x + y) == m.apply(x) + m.apply(y));
    CHECK(m.apply(scale(a, x)) == scale(a, m.apply(x)));
  }
}

TEST_CASE("structural injectivity") {
  CHECK(LinearMap::identity().structurally_injective());
  CHECK(LinearMap::shift_right().structurally_injective());
  CHECK_FALSE(LinearMap::shift_left().structurally_injective());
  CHECK_FALSE(LinearMap::truncate_first().structurally_injective());
  CHECK_FALSE(LinearMap::finite_table({{1, basis_vector(2)}}).structurally_injective());

  CHECK(LinearMap::diagonal(IndexRule::reciprocal()).structurally_injective());
  CHECK_FALSE(
      LinearMap::diagonal(IndexRule::table({{3, Rational(0)}}, Rational(1)))
          .structurally_injective());

  CHECK(LinearMap::compose(LinearMap::shift_right(),
                           LinearMap::diagonal(IndexRule::pow_half()))
            .structurally_injective());
  CHECK_FALSE(LinearMap::compose(LinearMap::shift_right(), LinearMap::shift_left())
                  .structurally_injective());

  // The head-preserving sum is injective exactly when its tail map is.
  CHECK(LinearMap::first_entry_preserving(LinearMap::identity()).structurally_injective());
  CHECK(LinearMap::first_entry_preserving(LinearMap::diagonal(IndexRule::reciprocal()))
            .structurally_injective());
  CHECK_FALSE(
      LinearMap::first_entry_preserving(LinearMap::truncate_first()).structurally_injective());
  CHECK_FALSE(LinearMap::sum(LinearMap::identity(), LinearMap::identity())
                  .structurally_injective());
}

TEST_CASE("structural equality") {
  CHECK(LinearMap::identity() == LinearMap::identity());
  CHECK_FALSE(LinearMap::identity() == LinearMap::shift_left());
  CHECK(LinearMap::diagonal(IndexRule::pow_half()) == LinearMap::diagonal(IndexRule::pow_half()));
  CHECK_FALSE(LinearMap::diagonal(IndexRule::pow_half()) ==
              LinearMap::diagonal(IndexRule::reciprocal()));
  CHECK(LinearMap::compose(LinearMap::shift_left(), LinearMap::shift_right()) ==
        LinearMap::compose(LinearMap::shift_left(), LinearMap::shift_right()));
  CHECK_FALSE(LinearMap::compose(LinearMap::shift_left(), LinearMap::shift_right()) ==
              LinearMap::compose(LinearMap::shift_right(), LinearMap::shift_left()));
}
