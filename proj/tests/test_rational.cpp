#include <catch2/catch_amalgamated.hpp>

#include "aho/rational.hpp"

using namespace aho;

TEST_CASE("factorial and binomial exact values") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == Int("2432902008176640000"));
  CHECK(binomial(9, 2) == 36);
  CHECK(binomial(9, 4) == 126);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(100, 50) == Int("100891344545564193334812497256"));
}

TEST_CASE("binomial extends to negative upper argument as a polynomial") {
  // C(-1, k) = (-1)^k
  for (long k = 0; k <= 6; ++k) CHECK(binomial(-1, k) == ((k % 2 == 0) ? 1 : -1));
  // C(-2, k) = (-1)^k (k+1)
  CHECK(binomial(-2, 3) == -4);
}

TEST_CASE("falling factorial") {
  CHECK(falling_factorial(5, 3) == 60);
  CHECK(falling_factorial(5, 0) == 1);
  CHECK(falling_factorial(2, 4) == 0);
}

TEST_CASE("polynomial arithmetic, shift, derivative") {
  Polynomial p({Rat(1), Rat(2), Rat(3)}); // 1 + 2x + 3x^2
  Polynomial q({Rat(0), Rat(1)});         // x
  CHECK(p.eval(Rat(2)) == Rat(17));
  CHECK((p * q).eval(Rat(2)) == Rat(34));
  CHECK((p + q).eval(Rat(3)) == Rat(34) + Rat(3));

  // shift: p(x+s)
  Polynomial sh = p.shift(Rat(1));
  for (long x = -3; x <= 3; ++x) CHECK(sh.eval(Rat(x)) == p.eval(Rat(x + 1)));

  Polynomial d = p.derivative();
  CHECK(d == Polynomial({Rat(2), Rat(6)}));

  CHECK(Polynomial({Rat(1)}).degree() == 0);
  CHECK(Polynomial().degree() == -1);
}

TEST_CASE("series reciprocal") {
  // 1/(1 - x) = 1 + x + x^2 + ...
  auto inv = invert_series({Rat(1), Rat(-1)}, 6);
  for (auto& c : inv) CHECK(c == 1);

  // Reciprocal of (1 + e^x)/2 starts 1 - x/2 + x^3/24 - x^5/240 (even terms vanish past 0).
  std::vector<Rat> half_sum{Rat(1)};
  Rat fact = 1;
  for (long k = 1; k <= 7; ++k) {
    fact *= k;
    half_sum.push_back(Rat(1) / (2 * fact));
  }
  auto c = invert_series(half_sum, 8);
  CHECK(c[0] == 1);
  CHECK(c[1] == Rat(-1, 2));
  CHECK(c[2] == 0);
  CHECK(c[3] == Rat(1, 24));
  CHECK(c[4] == 0);
  CHECK(c[5] == Rat(-1, 240));
  CHECK(c[6] == 0);
}

TEST_CASE("to_double") {
  CHECK(to_double(Rat(3, 4)) == 0.75);
  CHECK(to_double(Int(1) << 70) == Catch::Approx(std::pow(2.0, 70)));
}
