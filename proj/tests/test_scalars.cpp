#include "qhcis/scalars.hpp"

#include <doctest.h>

using namespace qhcis;

namespace {

// Deterministic generator for property checks.
struct Rng {
  uint64_t s = 0x243f6a8885a308d3ull;
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  Rational rational() {
    long long n = static_cast<long long>(next() % 41) - 20;
    long long d = 1 + static_cast<long long>(next() % 12);
    return Rational(n, d);
  }
  QuadExt quadext() { return QuadExt(rational(), rational()); }
};

}  // namespace

TEST_CASE("rational invariants") {
  Rational r(6, -4);
  CHECK(r.num() == BigInt(-3));
  CHECK(r.den() == BigInt(2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0).den() == BigInt(1));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3).str() == "2/3");
}

TEST_CASE("quadext arithmetic on generators") {
  QuadExt one(1), r2 = QuadExt::sqrt2();
  CHECK(one * r2 == r2);
  CHECK(r2 * r2 == QuadExt(2));
  QuadExt x(Rational(1), Rational(1));
  CHECK(x / x == one);
  CHECK_THROWS_AS(one / QuadExt(0), std::domain_error);
}

TEST_CASE("quadext field axioms on random triples") {
  Rng rng;
  for (int i = 0; i < 300; ++i) {
    QuadExt a = rng.quadext(), b = rng.quadext(), c = rng.quadext();
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * (QuadExt(1) / a) == QuadExt(1));
    CHECK(a + (-a) == QuadExt(0));
  }
}

TEST_CASE("quadext sign and rendering") {
  CHECK(QuadExt(Rational(1), Rational(-1)).sign() < 0);   // 1 - sqrt2 < 0
  CHECK(QuadExt(Rational(3, 2), Rational(-1)).sign() > 0);  // 3/2 - sqrt2 > 0
  CHECK(QuadExt(Rational(-1), Rational(1)).sign() > 0);
  CHECK(QuadExt(0).sign() == 0);
  CHECK(QuadExt(Rational(1, 2), Rational(3)).str() == "1/2+3√2");
  CHECK(QuadExt(Rational(0), Rational(-1)).str() == "-√2");
}

TEST_CASE("spoly roots of affine polynomials") {
  CHECK(spoly_root(SPoly::affine(QuadExt(-3), QuadExt(1))) == QuadExt(3));  // s - 3
  CHECK(spoly_root(SPoly::affine(QuadExt(2), QuadExt(2))) == QuadExt(-1));  // 2s + 2
  CHECK_THROWS_AS(spoly_root(SPoly(QuadExt(5))), std::domain_error);
  CHECK_THROWS_AS(spoly_root(SPoly()), std::domain_error);
}

TEST_CASE("spoly root of a scaled shifted factor, checked by substitution") {
  // p(s) = -(||alpha_q||^2/2) C (s - 5/2) with a nonzero irrational C.
  QuadExt scale = -(QuadExt(Rational(1)) * QuadExt(Rational(1), Rational(2)));
  SPoly p = SPoly(scale) * SPoly::affine(QuadExt(Rational(-5, 2)), QuadExt(1));
  QuadExt root = spoly_root(p);
  CHECK(root == QuadExt(Rational(5, 2)));
  CHECK(p.eval(root).is_zero());
  CHECK_FALSE(p.eval(root + QuadExt(1)).is_zero());
}

TEST_CASE("spoly algebra") {
  SPoly s = SPoly::s();
  SPoly p = s * s + SPoly(QuadExt(2)) * s + SPoly(QuadExt(1));
  CHECK(p.degree() == 2);
  CHECK(p.eval(QuadExt(-1)).is_zero());
  CHECK((p - p).is_zero());
  CHECK(SPoly::affine(QuadExt(1), QuadExt(2)).str() == "1 + 2·s");
}
