// Tests for the affine chord-tangent reference model: exhaustive group-law
// validation on tiny fields, invariants, and point sampling.
#include <doctest.h>

#include <binform/binfield.hpp>
#include <binform/errors.hpp>
#include <binform/wsref.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

using namespace binform;

namespace {

WsCurve ordinary_curve(const FieldContext& F, uint64_t a4v) {
  // y^2 + xy = x^3 + a4*x, the shape shared by both quartic models.
  return ws_curve(F, F.one(), F.zero(), F.zero(), F.from_uint(a4v), F.zero());
}

}  // namespace

TEST_CASE("discriminant and j-invariant of the shared curve shape") {
  FieldContext F(5, {0x25});
  // For y^2 + xy = x^3 + a4*x: disc = a4^2 and j = a4^-2.
  auto a4 = F.from_uint(0x7);
  WsCurve c = ordinary_curve(F, 0x7);
  CHECK(ws_discriminant(c) == fe_sqr(a4));
  CHECK(ws_j_invariant(c) == fe_inv(fe_sqr(a4)));
  // A vanishing discriminant is rejected: y^2 + xy = x^3 is singular.
  CHECK_THROWS_AS(
      ws_curve(F, F.one(), F.zero(), F.zero(), F.zero(), F.zero()),
      ValidationError);
}

TEST_CASE("exhaustive group axioms over gf8 and gf32") {
  for (auto [m, mod, a4v] : {std::tuple<unsigned, uint64_t, uint64_t>{3, 0xb, 1},
                             std::tuple<unsigned, uint64_t, uint64_t>{5, 0x25, 0x1d}}) {
    FieldContext F(m, {mod});
    WsCurve c = ordinary_curve(F, a4v);
    auto pts = ws_all_points(c);
    const uint64_t q = 1ull << m;

    // Hasse bound |#E - (q+1)| <= 2*sqrt(q).
    double dev = std::abs(static_cast<double>(pts.size()) -
                          static_cast<double>(q + 1));
    CHECK(dev <= 2.0 * std::sqrt(static_cast<double>(q)));

    // Every enumerated point satisfies the curve equation; first is infinity.
    CHECK(pts.front().infinity);
    for (const auto& p : pts) CHECK(ws_is_on(c, p));

    // Identity, inverses, commutativity.
    for (const auto& p : pts) {
      CHECK(ws_eq(ws_add(c, p, ws_infinity(c)), p));
      CHECK(ws_add(c, p, ws_neg(c, p)).infinity);
      for (const auto& r : pts) {
        CHECK(ws_eq(ws_add(c, p, r), ws_add(c, r, p)));
      }
    }

    // Full associativity sweep.
    for (const auto& p : pts)
      for (const auto& r : pts)
        for (const auto& s : pts) {
          CHECK(ws_eq(ws_add(c, ws_add(c, p, r), s),
                      ws_add(c, p, ws_add(c, r, s))));
        }

    // Doubling agrees with self-addition; Lagrange: #E annihilates all.
    for (const auto& p : pts) {
      CHECK(ws_eq(ws_dbl(c, p), ws_add(c, p, p)));
      CHECK(ws_smul(c, pts.size(), p).infinity);
      uint64_t ord = ws_order(c, p);
      CHECK(pts.size() % ord == 0);
      CHECK(ws_smul(c, ord, p).infinity);
    }
  }
}

TEST_CASE("the e=2 quartic companion curve over gf32 has 40 points") {
  FieldContext F(5, {0x25});
  // a4 = e^-2 with e = 2.
  auto a4 = fe_inv(fe_sqr(F.from_uint(2)));
  WsCurve c = ws_curve(F, F.one(), F.zero(), F.zero(), a4, F.zero());
  CHECK(ws_all_points(c).size() == 40);
}

TEST_CASE("scalar multiplication matches repeated addition") {
  FieldContext F(5, {0x25});
  WsCurve c = ordinary_curve(F, 0x1d);
  SplitMix64 rng(11);
  WsPoint p = ws_random_point(c, rng);
  WsPoint acc = ws_infinity(c);
  for (uint64_t n = 0; n <= 90; ++n) {
    CHECK(ws_eq(ws_smul(c, n, p), acc));
    acc = ws_add(c, acc, p);
  }
}

TEST_CASE("affine construction validates and sampling is deterministic") {
  FieldContext F(5, {0x25});
  WsCurve c = ordinary_curve(F, 0x1d);
  CHECK_THROWS_AS(ws_affine(c, F.from_uint(1), F.from_uint(1)),
                  ValidationError);
  SplitMix64 r1(5), r2(5);
  for (int i = 0; i < 10; ++i) {
    WsPoint a = ws_random_point(c, r1);
    WsPoint b = ws_random_point(c, r2);
    CHECK(ws_is_on(c, a));
    CHECK(ws_eq(a, b));
  }
}

TEST_CASE("point formatting") {
  FieldContext F(5, {0x25});
  WsCurve c = ordinary_curve(F, 0x1d);
  CHECK(ws_point_str(c, ws_infinity(c)) == "ws:inf");
  SplitMix64 rng(8);
  WsPoint p = ws_random_point(c, rng);
  std::string s = ws_point_str(c, p);
  CHECK(s.substr(0, 4) == "ws:(");
  CHECK(s.back() == ')');
  CHECK(s.find(':', 4) != std::string::npos);
}
