#include "doctest.h"

#include "modrep/error.hpp"
#include "modrep/field.hpp"

using namespace modrep;

TEST_CASE("prime field construction") {
  auto f = FiniteField::create(2);
  CHECK(f->order() == 2);
  CHECK(f->name() == "F_2");
  CHECK_THROWS_AS(FiniteField::create(4), InputError);
  CHECK_THROWS_AS(FiniteField::create(1), InputError);
}

TEST_CASE("default modulus is the smallest irreducible") {
  // Oracle: brute-force scan of monic quadratics x^2 + b x + c for a root.
  auto smallest_quadratic = [](unsigned p) {
    for (unsigned b = 0; b < p; ++b) {
      for (unsigned c = 0; c < p; ++c) {
        bool root = false;
        for (unsigned x = 0; x < p; ++x) root = root || (x * x + b * x + c) % p == 0;
        if (!root) return Poly{c, b, 1};
      }
    }
    return Poly{};
  };
  CHECK(FiniteField::create(2, 2)->modulus() == Poly{1, 1, 1});
  CHECK(FiniteField::create(2, 2)->modulus() == smallest_quadratic(2));
  CHECK(FiniteField::create(3, 2)->modulus() == smallest_quadratic(3));
  CHECK(FiniteField::create(5, 2)->modulus() == smallest_quadratic(5));
  CHECK(FiniteField::create(2, 3)->modulus() == Poly{1, 1, 0, 1});
}

TEST_CASE("reducible modulus rejected") {
  CHECK_THROWS_AS(FiniteField::create(2, 2, Poly{1, 0, 1}), InputError);
  CHECK_THROWS_AS(FiniteField::create(3, 2, Poly{2, 0, 1}), InputError);
  CHECK_NOTHROW(FiniteField::create(3, 2, Poly{1, 0, 1}));
  CHECK_THROWS_AS(FiniteField::create(2, 2, Poly{1, 1}), InputError);
}

TEST_CASE("field axioms exhaustively for small orders") {
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}, {3u, 2u}, {2u, 3u}, {2u, 4u}}) {
    auto f = FiniteField::create(p, k);
    CAPTURE(f->name());
    const auto q = f->order();
    for (std::uint32_t a = 0; a < q; ++a) {
      Scalar x = f->element(a);
      CHECK(f->add(x, f->neg(x)) == f->zero());
      CHECK(f->mul(x, f->one()) == x);
      if (a != 0) CHECK(f->mul(x, f->inv(x)) == f->one());
      for (std::uint32_t b = 0; b < q; ++b) {
        Scalar y = f->element(b);
        CHECK(f->add(x, y) == f->add(y, x));
        CHECK(f->mul(x, y) == f->mul(y, x));
        for (std::uint32_t c = 0; c < q; ++c) {
          Scalar z = f->element(c);
          if (f->add(f->add(x, y), z) != f->add(x, f->add(y, z))) FAIL("add assoc");
          if (f->mul(f->mul(x, y), z) != f->mul(x, f->mul(y, z))) FAIL("mul assoc");
          if (f->mul(x, f->add(y, z)) != f->add(f->mul(x, y), f->mul(x, z))) FAIL("distributivity");
        }
      }
    }
    CHECK_THROWS_AS(f->inv(f->zero()), PreconditionError);
  }
}

TEST_CASE("multiplicative group is cyclic of order q - 1") {
  for (auto [p, k] : {std::pair{2u, 2u}, {3u, 2u}, {7u, 1u}}) {
    auto f = FiniteField::create(p, k);
    std::uint32_t best = 0;
    for (std::uint32_t a = 1; a < f->order(); ++a) best = std::max(best, f->mult_order(f->element(a)));
    CHECK(best == f->order() - 1);
  }
}

TEST_CASE("coefficient round trip and Frobenius") {
  auto f = FiniteField::create(3, 2);
  for (std::uint32_t a = 0; a < f->order(); ++a) {
    Scalar x = f->element(a);
    CHECK(f->from_coeffs(f->coeffs(x)) == x);
    // x -> x^p is additive.
    for (std::uint32_t b = 0; b < f->order(); ++b) {
      Scalar y = f->element(b);
      CHECK(f->pow(f->add(x, y), 3) == f->add(f->pow(x, 3), f->pow(y, 3)));
    }
  }
  CHECK(f->from_int(-1) == f->neg(f->one()));
  CHECK(f->from_int(7) == f->one());
}
