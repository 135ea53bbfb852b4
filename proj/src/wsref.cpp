// SPDX-License-Identifier: MIT
#include "binform/wsref.hpp"

#include <bit>

namespace binform {

namespace {

// Right-hand side x^3 + a2*x^2 + a4*x + a6.
FieldElement rhs(const WsCurve& c, const FieldElement& x) {
  const FieldContext& F = *c.F;
  FieldElement x2 = F.sqr(x);
  FieldElement v = F.mul(x2, x);
  v = F.add(v, F.mul(c.a2, x2));
  v = F.add(v, F.mul(c.a4, x));
  return F.add(v, c.a6);
}

}  // namespace

WsCurve ws_curve(const FieldContext& F, const FieldElement& a1,
                 const FieldElement& a2, const FieldElement& a3,
                 const FieldElement& a4, const FieldElement& a6) {
  WsCurve c;
  c.F = &F;
  c.a1 = a1;
  c.a2 = a2;
  c.a3 = a3;
  c.a4 = a4;
  c.a6 = a6;
  if (F.is_zero(ws_discriminant(c))) {
    throw ValidationError("singular Weierstrass curve (zero discriminant)");
  }
  return c;
}

FieldElement ws_discriminant(const WsCurve& c) {
  const FieldContext& F = *c.F;
  // Characteristic-2 b-invariants: b2 = a1^2, b4 = a1*a3, b6 = a3^2,
  // b8 = a1^2*a6 + a1*a3*a4 + a2*a3^2 + a4^2.
  FieldElement b2 = F.sqr(c.a1);
  FieldElement b4 = F.mul(c.a1, c.a3);
  FieldElement b6 = F.sqr(c.a3);
  FieldElement b8 = F.mul(b2, c.a6);
  b8 = F.add(b8, F.mul(b4, c.a4));
  b8 = F.add(b8, F.mul(c.a2, b6));
  b8 = F.add(b8, F.sqr(c.a4));
  // delta = b2^2*b8 + b6^2 + b2*b4*b6 (the 27*b6^2 and cross terms mod 2).
  FieldElement d = F.mul(F.sqr(b2), b8);
  d = F.add(d, F.sqr(b6));
  d = F.add(d, F.mul(F.mul(b2, b4), b6));
  return d;
}

FieldElement ws_j_invariant(const WsCurve& c) {
  const FieldContext& F = *c.F;
  FieldElement c4 = F.sqr(F.sqr(c.a1));  // c4 = b2^2 = a1^4 in char 2
  FieldElement delta = ws_discriminant(c);
  return F.mul(F.mul(F.sqr(c4), c4), F.inv(delta));
}

WsPoint ws_infinity(const WsCurve& c) {
  WsPoint p;
  p.infinity = true;
  p.x = c.F->zero();
  p.y = c.F->zero();
  return p;
}

WsPoint ws_affine(const WsCurve& c, const FieldElement& x,
                  const FieldElement& y) {
  WsPoint p;
  p.infinity = false;
  p.x = x;
  p.y = y;
  if (!ws_is_on(c, p)) {
    throw ValidationError("point is not on the Weierstrass curve");
  }
  return p;
}

bool ws_is_on(const WsCurve& c, const WsPoint& p) {
  if (p.infinity) {
    return true;
  }
  const FieldContext& F = *c.F;
  FieldElement lhs = F.sqr(p.y);
  lhs = F.add(lhs, F.mul(F.mul(c.a1, p.x), p.y));
  lhs = F.add(lhs, F.mul(c.a3, p.y));
  return lhs == rhs(c, p.x);
}

bool ws_eq(const WsPoint& p, const WsPoint& q) {
  if (p.infinity || q.infinity) {
    return p.infinity == q.infinity;
  }
  return p.x == q.x && p.y == q.y;
}

WsPoint ws_neg(const WsCurve& c, const WsPoint& p) {
  if (p.infinity) {
    return p;
  }
  const FieldContext& F = *c.F;
  WsPoint r = p;
  r.y = F.add(F.add(p.y, F.mul(c.a1, p.x)), c.a3);
  return r;
}

WsPoint ws_add(const WsCurve& c, const WsPoint& p, const WsPoint& q) {
  const FieldContext& F = *c.F;
  if (p.infinity) {
    return q;
  }
  if (q.infinity) {
    return p;
  }
  FieldElement lambda;
  if (p.x == q.x) {
    if (!(p.y == q.y)) {
      return ws_infinity(c);  // q = -p (chord is vertical)
    }
    // Tangent: lambda = (x^2 + a4 + a1*y) / (a1*x + a3); a zero denominator
    // marks a 2-torsion point, whose double is infinity.
    FieldElement den = F.add(F.mul(c.a1, p.x), c.a3);
    if (F.is_zero(den)) {
      return ws_infinity(c);
    }
    FieldElement num = F.add(F.add(F.sqr(p.x), c.a4), F.mul(c.a1, p.y));
    lambda = F.mul(num, F.inv(den));
  } else {
    lambda = F.mul(F.add(p.y, q.y), F.inv(F.add(p.x, q.x)));
  }
  FieldElement nu = F.add(p.y, F.mul(lambda, p.x));
  FieldElement x3 = F.add(F.add(F.sqr(lambda), F.mul(c.a1, lambda)), c.a2);
  x3 = F.add(F.add(x3, p.x), q.x);
  FieldElement y3 =
      F.add(F.add(F.mul(F.add(lambda, c.a1), x3), nu), c.a3);
  WsPoint r;
  r.infinity = false;
  r.x = x3;
  r.y = y3;
  return r;
}

WsPoint ws_dbl(const WsCurve& c, const WsPoint& p) { return ws_add(c, p, p); }

WsPoint ws_smul(const WsCurve& c, std::uint64_t n, const WsPoint& p) {
  WsPoint acc = ws_infinity(c);
  if (n == 0 || p.infinity) {
    return acc;
  }
  for (int i = 63 - std::countl_zero(n); i >= 0; --i) {
    acc = ws_dbl(c, acc);
    if ((n >> i) & 1) {
      acc = ws_add(c, acc, p);
    }
  }
  return acc;
}

std::uint64_t ws_order(const WsCurve& c, const WsPoint& p) {
  std::uint64_t n = 1;
  WsPoint q = p;
  while (!q.infinity) {
    q = ws_add(c, q, p);
    ++n;
  }
  return n;
}

std::vector<WsPoint> ws_all_points(const WsCurve& c) {
  const FieldContext& F = *c.F;
  if (F.degree() > 20) {
    throw ValidationError("point enumeration is limited to small fields");
  }
  std::vector<WsPoint> pts;
  pts.push_back(ws_infinity(c));
  const std::uint64_t q = 1ull << F.degree();
  for (std::uint64_t xv = 0; xv < q; ++xv) {
    for (std::uint64_t yv = 0; yv < q; ++yv) {
      WsPoint p;
      p.infinity = false;
      p.x = F.from_uint(xv);
      p.y = F.from_uint(yv);
      if (ws_is_on(c, p)) {
        pts.push_back(p);
      }
    }
  }
  return pts;
}

WsPoint ws_random_point(const WsCurve& c, SplitMix64& rng) {
  const FieldContext& F = *c.F;
  for (;;) {
    FieldElement x = F.random_element(rng);
    // y^2 + L*y = R with L = a1*x + a3, R = rhs(x).
    FieldElement L = F.add(F.mul(c.a1, x), c.a3);
    FieldElement R = rhs(c, x);
    if (F.is_zero(L)) {
      // Unique solution y = sqrt(R).
      return ws_affine(c, x, F.root(R, 2));
    }
    // Substitute y = L*z: z^2 + z = R / L^2, solvable iff trace is zero.
    FieldElement a = F.mul(R, F.inv(F.sqr(L)));
    if (F.trace(a) != 0) {
      continue;
    }
    FieldElement z = F.solve_quadratic(a);
    if (rng.next() & 1) {
      z = F.add(z, F.one());  // pick the companion root
    }
    return ws_affine(c, x, F.mul(L, z));
  }
}

std::string ws_point_str(const WsCurve& c, const WsPoint& p) {
  if (p.infinity) {
    return "ws:inf";
  }
  const FieldContext& F = *c.F;
  return "ws:(" + F.to_hex(p.x) + ":" + F.to_hex(p.y) + ")";
}

}  // namespace binform
