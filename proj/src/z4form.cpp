// SPDX-License-Identifier: MIT
#include "binform/z4form.hpp"

#include <bit>

namespace binform {

Z4Point z4_segre(const ProjLine& u, const ProjLine& v, OpMeter* meter) {
  const FieldContext& F = *u.a.ctx;
  Z4Point r;
  r.X[0] = F.mul(u.a, v.a, meter);
  r.X[1] = F.mul(u.b, v.a, meter);
  r.X[2] = F.mul(u.b, v.b, meter);
  r.X[3] = F.mul(u.a, v.b, meter);
  return r;
}

Z4Curve::Z4Curve(const FieldContext& F, const FieldElement& e) : F_(&F) {
  if (F.is_zero(e)) {
    throw ValidationError("degenerate curve parameter e = 0");
  }
  e_ = e;
  inv_e_ = F.inv(e);
  ws_ = binform::ws_curve(F, F.one(), F.zero(), F.zero(), F.sqr(inv_e_), F.zero());
}

FieldElement Z4Curve::j_invariant() const {
  return F_->sqr(F_->sqr(e_));  // e^4
}

Z4Point Z4Curve::point(const FieldElement& x0, const FieldElement& x1,
                       const FieldElement& x2, const FieldElement& x3) const {
  Z4Point p;
  p.X = {x0, x1, x2, x3};
  if (!is_on(p)) {
    throw ValidationError("coordinates do not satisfy the curve equations");
  }
  return p;
}

Z4Point Z4Curve::identity() const {
  Z4Point p;
  p.X = {F_->one(), F_->zero(), F_->zero(), F_->one()};
  return p;
}

Z4Point Z4Curve::torsion_t() const {
  Z4Point p;
  p.X = {F_->one(), F_->one(), F_->zero(), F_->zero()};
  return p;
}

Z4Point Z4Curve::torsion_2t() const {
  Z4Point p;
  p.X = {F_->zero(), F_->one(), F_->one(), F_->zero()};
  return p;
}

Z4Point Z4Curve::torsion_3t() const {
  Z4Point p;
  p.X = {F_->zero(), F_->zero(), F_->one(), F_->one()};
  return p;
}

bool Z4Curve::is_on(const Z4Point& p) const {
  const FieldContext& F = *F_;
  bool all_zero = true;
  for (const auto& x : p.X) {
    if (!F.is_zero(x)) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) {
    return false;
  }
  FieldElement s = F.add(F.add(p.X[0], p.X[1]), F.add(p.X[2], p.X[3]));
  FieldElement lhs = F.sqr(s);
  return lhs == F.mul(e_, F.mul(p.X[0], p.X[2])) &&
         lhs == F.mul(e_, F.mul(p.X[1], p.X[3]));
}

bool Z4Curve::eq(const Z4Point& p, const Z4Point& q) const {
  const FieldContext& F = *F_;
  int k = -1;
  for (int i = 0; i < 4; ++i) {
    if (!F.is_zero(p.X[i])) {
      k = i;
      break;
    }
  }
  if (k < 0 || F.is_zero(q.X[k])) {
    return false;
  }
  for (int i = 0; i < 4; ++i) {
    if (!(F.mul(p.X[i], q.X[k]) == F.mul(q.X[i], p.X[k]))) {
      return false;
    }
  }
  return true;
}

Z4Point Z4Curve::normalized(const Z4Point& p) const {
  const FieldContext& F = *F_;
  for (int i = 0; i < 4; ++i) {
    if (!F.is_zero(p.X[i])) {
      FieldElement s = F.inv(p.X[i]);
      Z4Point r;
      for (int j = 0; j < 4; ++j) {
        r.X[j] = F.mul(p.X[j], s);
      }
      return r;
    }
  }
  throw ValidationError("cannot normalize the zero quadruple");
}

Z4Point Z4Curve::neg(const Z4Point& p) const {
  Z4Point r;
  r.X = {p.X[3], p.X[2], p.X[1], p.X[0]};
  return r;
}

Z4Point Z4Curve::translate_t(const Z4Point& p) const {
  Z4Point r;
  r.X = {p.X[3], p.X[0], p.X[1], p.X[2]};
  return r;
}

ProjLine Z4Curve::add_law(int proj, int law, const Z4Point& p,
                          const Z4Point& q, OpMeter* meter) const {
  const FieldContext& F = *F_;
  const auto& X = p.X;
  const auto& Y = q.X;
  auto bil = [&](int i, int j, int k, int l) {
    return F.add(F.mul(X[i], Y[j], meter), F.mul(X[k], Y[l], meter), meter);
  };
  ProjLine r;
  if (proj == 1 && law == 1) {         // vanishes iff q - p = 3T
    r.a = bil(0, 3, 2, 1);             // X0*Y3 + X2*Y1
    r.b = bil(1, 0, 3, 2);             // X1*Y0 + X3*Y2
  } else if (proj == 1 && law == 2) {  // vanishes iff q - p = T
    r.a = bil(1, 2, 3, 0);             // X1*Y2 + X3*Y0
    r.b = bil(0, 1, 2, 3);             // X0*Y1 + X2*Y3
  } else if (proj == 2 && law == 1) {  // vanishes iff q - p = 2T
    r.a = bil(0, 0, 2, 2);             // X0*Y0 + X2*Y2
    r.b = bil(1, 1, 3, 3);             // X1*Y1 + X3*Y3
  } else if (proj == 2 && law == 2) {  // vanishes iff q - p = O
    r.a = bil(1, 3, 3, 1);             // X1*Y3 + X3*Y1
    r.b = bil(0, 2, 2, 0);             // X0*Y2 + X2*Y0
  } else {
    throw ValidationError("addition-law selector out of range");
  }
  return r;
}

ProjLine Z4Curve::pi1(const Z4Point& p) const {
  if (!F_->is_zero(p.X[0]) || !F_->is_zero(p.X[1])) {
    return ProjLine{p.X[0], p.X[1]};
  }
  return ProjLine{p.X[3], p.X[2]};
}

ProjLine Z4Curve::pi2(const Z4Point& p) const {
  if (!F_->is_zero(p.X[0]) || !F_->is_zero(p.X[3])) {
    return ProjLine{p.X[0], p.X[3]};
  }
  return ProjLine{p.X[1], p.X[2]};
}

Z4Point Z4Curve::add(const Z4Point& p, const Z4Point& q, OpMeter* meter) const {
  const FieldContext& F = *F_;
  ProjLine u = add_law(1, 1, p, q, meter);
  if (F.is_zero(u.a) && F.is_zero(u.b)) {
    u = add_law(1, 2, p, q, meter);
  }
  ProjLine v = add_law(2, 1, p, q, meter);
  if (F.is_zero(v.a) && F.is_zero(v.b)) {
    v = add_law(2, 2, p, q, meter);
  }
  return z4_segre(u, v, meter);
}

Z4Point Z4Curve::dbl(const Z4Point& p, OpMeter* meter) const {
  const FieldContext& F = *F_;
  FieldElement s02 = F.add(p.X[0], p.X[2], meter);
  FieldElement s13 = F.add(p.X[1], p.X[3], meter);
  FieldElement pp = F.mul(p.X[0], p.X[3], meter);
  FieldElement qq = F.mul(p.X[1], p.X[2], meter);
  FieldElement kk = F.mul(s02, s13, meter);
  ProjLine u{F.add(pp, qq, meter), F.add(kk, F.add(pp, qq, meter), meter)};
  ProjLine v{F.sqr(s02, meter), F.sqr(s13, meter)};
  return z4_segre(u, v, meter);
}

Z4Point Z4Curve::smul(std::uint64_t n, const Z4Point& p, OpMeter* meter) const {
  Z4Point acc = identity();
  if (n == 0) {
    return acc;
  }
  for (int i = 63 - std::countl_zero(n); i >= 0; --i) {
    acc = dbl(acc, meter);
    if ((n >> i) & 1) {
      acc = add(acc, p, meter);
    }
  }
  return acc;
}

WsPoint z4_to_ws(const Z4Curve& c, const Z4Point& p) {
  const FieldContext& F = c.field();
  if (!c.is_on(p)) {
    throw ValidationError("point is not on the quartic curve");
  }
  if (c.eq(p, c.torsion_2t())) {
    return ws_affine(c.ws_curve(), F.zero(), F.zero());
  }
  // Projective image (X : Y : Z) = (X0 + X3 : X3 : e*(X1 + X2)).
  FieldElement X = F.add(p.X[0], p.X[3]);
  FieldElement Y = p.X[3];
  FieldElement Z = F.mul(c.param_e(), F.add(p.X[1], p.X[2]));
  if (F.is_zero(Z)) {
    return ws_infinity(c.ws_curve());  // only the identity lands here
  }
  FieldElement iz = F.inv(Z);
  return ws_affine(c.ws_curve(), F.mul(X, iz), F.mul(Y, iz));
}

Z4Point z4_from_ws(const Z4Curve& c, const WsPoint& p) {
  const FieldContext& F = c.field();
  if (!ws_is_on(c.ws_curve(), p)) {
    throw ValidationError("point is not on the associated Weierstrass curve");
  }
  if (p.infinity) {
    return c.identity();
  }
  if (F.is_zero(p.x) && F.is_zero(p.y)) {
    return c.torsion_2t();
  }
  const FieldElement& ie = c.inv_e();
  FieldElement a1 = F.add(p.x, p.y);
  FieldElement a2 = p.y;
  FieldElement a3 = F.mul(ie, F.mul(p.y, F.inv(p.x)));
  FieldElement a0 = F.add(ie, a3);
  return c.point(a1, a0, a3, a2);
}

Z4Point z4_random_point(const Z4Curve& c, SplitMix64& rng) {
  return z4_from_ws(c, ws_random_point(c.ws_curve(), rng));
}

std::uint64_t z4_order(const Z4Curve& c, const Z4Point& p) {
  std::uint64_t n = 1;
  Z4Point q = p;
  while (!c.is_identity(q)) {
    q = c.add(q, p);
    ++n;
  }
  return n;
}

std::string z4_point_str(const Z4Curve& c, const Z4Point& p) {
  const FieldContext& F = c.field();
  Z4Point n = c.normalized(p);
  return "z4:(" + F.to_hex(n.X[0]) + ":" + F.to_hex(n.X[1]) + ":" +
         F.to_hex(n.X[2]) + ":" + F.to_hex(n.X[3]) + ")";
}

}  // namespace binform
