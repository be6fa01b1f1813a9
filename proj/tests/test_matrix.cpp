#include "doctest.h"

#include "cybra/matrix.hpp"

using namespace cybra;

TEST_CASE("rank and determinant, fraction-free") {
  Mat m(3, 3);
  // [[1, 2, 3], [4, 5, 6], [7, 8, 9]] has rank 2, det 0.
  int v = 1;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = v++;
  CHECK(rank_bareiss(m) == 2);
  CHECK(det_bareiss(m) == 0);

  Mat id = Mat::identity(4);
  CHECK(rank_bareiss(id) == 4);
  CHECK(det_bareiss(id) == 1);

  // Rational entries: det [[1/2, 1/3], [1/4, 1/5]] = 1/10 - 1/12 = 1/60.
  Mat q(2, 2);
  q(0, 0) = rat(1, 2);
  q(0, 1) = rat(1, 3);
  q(1, 0) = rat(1, 4);
  q(1, 1) = rat(1, 5);
  CHECK(det_bareiss(q) == rat(1, 60));
  CHECK(rank_bareiss(q) == 2);
}

TEST_CASE("solve and nullspace") {
  Mat A(2, 3);
  A(0, 0) = 1; A(0, 1) = 1; A(0, 2) = 0;
  A(1, 0) = 0; A(1, 1) = 1; A(1, 2) = 1;
  auto x = solve(A, {Rat(3), Rat(5)});
  REQUIRE(x.has_value());
  CHECK(A.a[0][0] * (*x)[0] + A.a[0][1] * (*x)[1] + A.a[0][2] * (*x)[2] == 3);

  auto ns = nullspace(A);
  REQUIRE(ns.size() == 1);
  const auto& n = ns[0];
  CHECK(n[0] + n[1] == 0);
  CHECK(n[1] + n[2] == 0);

  Mat B = Mat::identity(2);
  auto none = solve(Mat(2, 1), {Rat(1), Rat(1)});
  // [[0],[0]] x = (1,1) is inconsistent.
  CHECK_FALSE(none.has_value());
  (void)B;
}

TEST_CASE("RowSpace incremental span") {
  RowSpace s(3);
  CHECK(s.insert({Rat(1), Rat(2), Rat(3)}));
  CHECK(s.insert({Rat(0), Rat(1), Rat(1)}));
  CHECK_FALSE(s.insert({Rat(1), Rat(3), Rat(4)}));  // sum of the first two
  CHECK(s.dim() == 2);
  CHECK(s.contains({Rat(2), Rat(5), Rat(7)}));
  CHECK_FALSE(s.contains({Rat(0), Rat(0), Rat(1)}));
}
