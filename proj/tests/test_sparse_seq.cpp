#include <catch2/catch_amalgamated.hpp>

#include "seminorm_lab/sparse_seq.hpp"

using namespace seminorm_lab;

TEST_CASE("construction keeps only nonzero entries") {
  const SparseSeq x = make_seq({{1, Rational(1)}, {3, Rational(0)}, {5, Rational(-2, 3)}});
  CHECK(x.support() == std::vector<Index>{1, 5});
  CHECK(x.support_size() == 2);
  CHECK(x.coord(1) == 1);
  CHECK(x.coord(3) == 0);
  CHECK(x.coord(5) == Rational(-2, 3));
  CHECK(x.coord(99) == 0);
  CHECK(x.max_support_index() == 5);
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(make_seq({{0, Rational(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(make_seq({{-2, Rational(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(make_seq({{2, Rational(1)}, {2, Rational(3)}}), std::invalid_argument);
}

TEST_CASE("zero sequence") {
  const SparseSeq z;
  CHECK(z.is_zero());
  CHECK(z.support_size() == 0);
  CHECK(z.max_support_index() == 0);
  CHECK(z == make_seq({{4, Rational(0)}}));
}

TEST_CASE("addition cancels exactly") {
  const SparseSeq x = make_seq({{1, Rational(1, 2)}, {2, Rational(3)}});
  const SparseSeq y = make_seq({{1, Rational(-1, 2)}, {3, Rational(1)}});
  const SparseSeq s = x + y;
  CHECK(s == make_seq({{2, Rational(3)}, {3, Rational(1)}}));
  CHECK(s.coord(1) == 0);
  CHECK((x - x).is_zero());
  CHECK(x + SparseSeq() == x);
}

TEST_CASE("scaling") {
  const SparseSeq x = make_seq({{1, Rational(1, 2)}, {4, Rational(-3)}});
  CHECK(scale(Rational(2), x) == make_seq({{1, Rational(1)}, {4, Rational(-6)}}));
  CHECK(scale(Rational(0), x).is_zero());
  CHECK(scale(Rational(-1), x) == -x);
  CHECK(scale(Rational(1, 3), basis_vector(7)) == make_seq({{7, Rational(1, 3)}}));
}

TEST_CASE("basis_vector") {
  CHECK(basis_vector(3) == make_seq({{3, Rational(1)}}));
  CHECK_THROWS_AS(basis_vector(0), std::invalid_argument);
}

TEST_CASE("shifts and truncation") {
  const SparseSeq x = make_seq({{1, Rational(5)}, {2, Rational(7)}, {9, Rational(-1)}});

  CHECK(shift_left(x) == make_seq({{1, Rational(7)}, {8, Rational(-1)}}));
  CHECK(shift_right(x) == make_seq({{2, Rational(5)}, {3, Rational(7)}, {10, Rational(-1)}}));
  CHECK(truncate_first(x) == make_seq({{1, Rational(5)}}));
  CHECK(truncate_first(shift_right(x)).is_zero());

  // Left shift after right shift restores the original; the reverse loses x_1.
  CHECK(shift_left(shift_right(x)) == x);
  CHECK(shift_right(shift_left(x)) + truncate_first(x) == x);
}

TEST_CASE("to_term_string") {
  CHECK(to_term_string(SparseSeq()) == "0");
  CHECK(to_term_string(basis_vector(1)) == "e1");
  CHECK(to_term_string(-basis_vector(2)) == "-e2");
  const SparseSeq x =
      make_seq({{1, Rational(1)}, {3, Rational(2)}, {5, Rational(-1, 2)}});
  CHECK(to_term_string(x) == "e1 + 2*e3 - 1/2*e5");
}
