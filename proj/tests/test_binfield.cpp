// Tests for GF(2^m) arithmetic: frozen small-field tables, algebraic laws,
// inversion agreement between the two algorithms, quadratic solving, and
// the deterministic RNG.
#include <doctest.h>

#include <binform/binfield.hpp>
#include <binform/errors.hpp>

#include <cstdint>
#include <string>
#include <vector>

using namespace binform;

namespace {

// Multiplication table of GF(2^3) mod x^3 + x + 1, indexed [a][b].
const uint8_t kGf8Mul[8][8] = {
    {0, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 2, 3, 4, 5, 6, 7},
    {0, 2, 4, 6, 3, 1, 7, 5}, {0, 3, 6, 5, 7, 4, 1, 2},
    {0, 4, 3, 7, 6, 2, 5, 1}, {0, 5, 1, 4, 2, 7, 3, 6},
    {0, 6, 7, 1, 5, 3, 2, 4}, {0, 7, 5, 2, 1, 6, 4, 3}};

const uint8_t kGf8Inv[7] = {1, 5, 6, 7, 2, 3, 4};  // inverses of 1..7

const uint8_t kGf8Trace[8] = {0, 1, 0, 1, 0, 1, 0, 1};

const uint8_t kGf32Trace[32] = {0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0,
                                0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0};

}  // namespace

TEST_CASE("gf8 multiplication table matches the frozen oracle") {
  FieldContext F(3, {0xb});
  for (uint64_t a = 0; a < 8; ++a)
    for (uint64_t b = 0; b < 8; ++b) {
      auto p = fe_mul(F.from_uint(a), F.from_uint(b));
      CHECK(F.to_uint(p) == kGf8Mul[a][b]);
    }
}

TEST_CASE("gf8 inverses and trace match the frozen oracle") {
  FieldContext F(3, {0xb});
  for (uint64_t a = 1; a < 8; ++a) {
    CHECK(F.to_uint(fe_inv(F.from_uint(a))) == kGf8Inv[a - 1]);
  }
  for (uint64_t a = 0; a < 8; ++a) {
    CHECK(F.trace(F.from_uint(a)) == kGf8Trace[a]);
  }
}

TEST_CASE("gf8 worked examples") {
  FieldContext F(3, {0xb});
  CHECK(F.to_uint(fe_mul(F.from_uint(2), F.from_uint(4))) == 0x3);
  CHECK(F.to_uint(fe_sqr(F.from_uint(6))) == 0x2);
  CHECK(F.to_uint(fe_inv(F.from_uint(2))) == 0x5);
  CHECK(F.to_uint(fe_root(F.from_uint(2), 2)) == 0x6);
}

TEST_CASE("gf32 trace vector, square root, fourth root") {
  FieldContext F(5, {0x25});
  for (uint64_t a = 0; a < 32; ++a) {
    CHECK(F.trace(F.from_uint(a)) == kGf32Trace[a]);
  }
  CHECK(F.to_uint(fe_root(F.from_uint(0x3), 2)) == 0x1a);
  CHECK(F.to_uint(fe_root(F.from_uint(0x1f), 4)) == 0xb);
  // Root round-trips, exhaustively.
  for (uint64_t a = 0; a < 32; ++a) {
    auto x = F.from_uint(a);
    CHECK(F.to_uint(fe_sqr(fe_root(x, 2))) == a);
    CHECK(F.to_uint(fe_sqr(fe_sqr(fe_root(x, 4)))) == a);
  }
}

TEST_CASE("all standard moduli construct and round-trip through parse") {
  for (unsigned m : FieldContext::standard_degrees()) {
    FieldContext F = FieldContext::standard(m);
    CHECK(F.degree() == m);
    FieldContext G = FieldContext::parse(F.spec_string());
    CHECK(G.same_as(F));
    CHECK(G.modulus_hex() == F.modulus_hex());
  }
}

TEST_CASE("reducible moduli are rejected") {
  // x^4 + x^2 + 1 = (x^2 + x + 1)^2
  CHECK_THROWS_AS(FieldContext(4, {0x15}), ValidationError);
  // x^5 + x + 1 = (x^2 + x + 1)(x^3 + x^2 + 1)
  CHECK_THROWS_AS(FieldContext(5, {0x23}), ValidationError);
  // Degree mismatch between m and the modulus polynomial.
  CHECK_THROWS_AS(FieldContext(4, {0xb}), ValidationError);
  // No standard modulus on record for m = 9.
  CHECK_THROWS_AS(FieldContext::standard(9), ValidationError);
}

TEST_CASE("ring axioms hold on random samples in every standard field") {
  for (unsigned m : FieldContext::standard_degrees()) {
    FieldContext F = FieldContext::standard(m);
    SplitMix64 rng(0x5eed0000 + m);
    int iters = m <= 32 ? 200 : 50;
    for (int i = 0; i < iters; ++i) {
      auto a = F.random_element(rng);
      auto b = F.random_element(rng);
      auto c = F.random_element(rng);
      CHECK(fe_mul(a, b) == fe_mul(b, a));
      CHECK(fe_mul(fe_mul(a, b), c) == fe_mul(a, fe_mul(b, c)));
      CHECK(fe_mul(a, fe_add(b, c)) == fe_add(fe_mul(a, b), fe_mul(a, c)));
      // Frobenius is additive.
      CHECK(fe_sqr(fe_add(a, b)) == fe_add(fe_sqr(a), fe_sqr(b)));
      CHECK(fe_sqr(a) == fe_mul(a, a));
      CHECK(fe_mul(a, F.one()) == a);
      CHECK(fe_is_zero(fe_add(a, a)));
    }
  }
}

TEST_CASE("euclidean and fermat inversion agree and invert") {
  for (unsigned m : {3u, 5u, 11u, 17u, 163u}) {
    FieldContext F = FieldContext::standard(m);
    SplitMix64 rng(0xabc + m);
    int iters = m <= 32 ? 1000 : 200;
    for (int i = 0; i < iters; ++i) {
      auto a = F.random_element(rng);
      if (fe_is_zero(a)) continue;
      OpMeter meter;
      auto e = F.inv(a, &meter);
      auto f = F.inv_fermat(a, &meter);
      CHECK(e == f);
      CHECK(F.is_one(fe_mul(a, e)));
    }
    CHECK_THROWS_AS(fe_inv(F.zero()), DomainError);
  }
}

TEST_CASE("trace is linear, Frobenius-invariant, and surjective") {
  for (unsigned m : {3u, 5u, 7u, 11u, 17u, 127u}) {
    FieldContext F = FieldContext::standard(m);
    SplitMix64 rng(0x7aceu + m);
    bool seen[2] = {false, false};
    for (int i = 0; i < 200; ++i) {
      auto a = F.random_element(rng);
      auto b = F.random_element(rng);
      CHECK(F.trace(fe_add(a, b)) == (F.trace(a) ^ F.trace(b)));
      CHECK(F.trace(fe_sqr(a)) == F.trace(a));
      seen[F.trace(a)] = true;
    }
    CHECK(seen[0]);
    CHECK(seen[1]);
    // Trace of 1 is m mod 2.
    CHECK(F.trace(F.one()) == (m & 1));
  }
}

TEST_CASE("quadratic solver works for odd extension degrees") {
  for (unsigned m : {3u, 5u, 11u, 17u, 163u}) {
    FieldContext F = FieldContext::standard(m);
    SplitMix64 rng(0x9u + m);
    for (int i = 0; i < 100; ++i) {
      auto a = F.random_element(rng);
      if (F.trace(a) != 0) continue;
      auto z = F.solve_quadratic(a);
      CHECK(fe_add(fe_sqr(z), z) == a);
    }
    auto bad = F.one();
    while (F.trace(bad) == 0) bad = F.random_element(rng);
    CHECK_THROWS_AS(F.solve_quadratic(bad), DomainError);
  }
}

TEST_CASE("quadratic solver works for even extension degrees") {
  // x^4 + x + 1 and x^6 + x + 1 are irreducible; exhaustive check.
  for (auto [m, mod] : {std::pair<unsigned, uint64_t>{4, 0x13},
                        std::pair<unsigned, uint64_t>{6, 0x43}}) {
    FieldContext F(m, {mod});
    for (uint64_t v = 0; v < (1ull << m); ++v) {
      auto a = F.from_uint(v);
      if (F.trace(a) != 0) {
        CHECK_THROWS_AS(F.solve_quadratic(a), DomainError);
      } else {
        auto z = F.solve_quadratic(a);
        CHECK(fe_add(fe_sqr(z), z) == a);
      }
    }
  }
}

TEST_CASE("hex encoding round-trips, including multiword fields") {
  FieldContext F = FieldContext::standard(163);
  SplitMix64 rng(77);
  for (int i = 0; i < 50; ++i) {
    auto a = F.random_element(rng);
    std::string h = F.to_hex(a);
    CHECK(h.substr(0, 2) == "0x");
    for (char ch : h.substr(2)) {
      bool ok = (ch >= '0' && ch <= '9') || (ch >= 'a' && ch <= 'f');
      CHECK(ok);
    }
    CHECK(F.from_hex(h) == a);
  }
  CHECK(F.to_hex(F.zero()) == "0x0");
  CHECK(F.to_hex(F.one()) == "0x1");
  CHECK_THROWS_AS(F.from_hex("0xZZ"), ValidationError);
  // A value with bits at or above degree m is out of range.
  FieldContext G(3, {0xb});
  CHECK_THROWS_AS(G.from_uint(8), ValidationError);
  CHECK_THROWS_AS(G.from_hex("0x8"), ValidationError);
  CHECK(G.to_uint(G.from_hex("0x7")) == 7);
}

TEST_CASE("operation meter counts exactly what each primitive does") {
  FieldContext F = FieldContext::standard(17);
  SplitMix64 rng(3);
  auto a = F.random_element(rng);
  auto b = F.random_element(rng);
  while (fe_is_zero(a)) a = F.random_element(rng);

  OpMeter meter;
  F.mul(a, b, &meter);
  CHECK(meter == OpMeter{1, 0, 0, 0, 0, 0});

  meter.reset();
  F.mul(a, b, &meter, MulClass::curve_const);
  CHECK(meter == OpMeter{0, 0, 1, 0, 0, 0});

  meter.reset();
  F.mul(a, b, &meter, MulClass::point_const);
  CHECK(meter == OpMeter{0, 0, 0, 1, 0, 0});

  meter.reset();
  F.sqr(a, &meter);
  CHECK(meter == OpMeter{0, 1, 0, 0, 0, 0});

  meter.reset();
  F.add(a, b, &meter);
  CHECK(meter == OpMeter{0, 0, 0, 0, 0, 1});

  meter.reset();
  F.inv(a, &meter);
  CHECK(meter.I == 1);
  CHECK(meter.M == 0);
  CHECK(meter.S == 0);

  meter.reset();
  F.inv_fermat(a, &meter);
  CHECK(meter.I == 1);
  CHECK(meter.M == 0);

  // Square roots are metered as repeated squarings: m-1 for a square root,
  // 2(m-1) for a fourth root.
  meter.reset();
  F.root(a, 2, &meter);
  CHECK(meter == OpMeter{0, 16, 0, 0, 0, 0});
  meter.reset();
  F.root(a, 4, &meter);
  CHECK(meter == OpMeter{0, 32, 0, 0, 0, 0});
}

TEST_CASE("splitmix64 produces the published sequence") {
  SplitMix64 r0(0);
  CHECK(r0.next() == 0xe220a8397b1dcdafull);
  CHECK(r0.next() == 0x6e789e6aa1b965f4ull);
  CHECK(r0.next() == 0x06c45d188009454full);
  SplitMix64 r42(42);
  CHECK(r42.next() == 0xbdd732262feb6e95ull);
  CHECK(r42.next() == 0x28efe333b266f103ull);
  // Determinism: same seed, same stream.
  SplitMix64 x(1234), y(1234);
  for (int i = 0; i < 16; ++i) CHECK(x.next() == y.next());
}

TEST_CASE("random elements are in range and seed-deterministic") {
  for (unsigned m : {11u, 233u}) {
    FieldContext F = FieldContext::standard(m);
    SplitMix64 r1(99), r2(99);
    for (int i = 0; i < 20; ++i) {
      auto a = F.random_element(r1);
      auto b = F.random_element(r2);
      CHECK(a == b);
      // Round-tripping through hex proves the value is reduced.
      CHECK(F.from_hex(F.to_hex(a)) == a);
    }
  }
}
