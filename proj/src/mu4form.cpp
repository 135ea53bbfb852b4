// SPDX-License-Identifier: MIT
#include "binform/mu4form.hpp"

#include <bit>

namespace binform {

namespace {

bool quad_zero(const FieldContext& F, const Mu4Point& p) {
  return F.is_zero(p.X[0]) && F.is_zero(p.X[1]) && F.is_zero(p.X[2]) &&
         F.is_zero(p.X[3]);
}

// Projective quadruple equality helper shared by both forms.
bool quad_eq(const FieldContext& F, const Mu4Point& p, const Mu4Point& q) {
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

Mu4Point quad_normalized(const FieldContext& F, const Mu4Point& p) {
  for (int i = 0; i < 4; ++i) {
    if (!F.is_zero(p.X[i])) {
      FieldElement inv = F.inv(p.X[i]);
      Mu4Point r;
      for (int j = 0; j < 4; ++j) {
        r.X[j] = F.mul(p.X[j], inv);
      }
      return r;
    }
  }
  throw ValidationError("cannot normalize the zero quadruple");
}

std::string quad_str(const FieldContext& F, const char* tag,
                     const Mu4Point& n) {
  return std::string(tag) + ":(" + F.to_hex(n.X[0]) + ":" + F.to_hex(n.X[1]) +
         ":" + F.to_hex(n.X[2]) + ":" + F.to_hex(n.X[3]) + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// Split form
// ---------------------------------------------------------------------------

Mu4Curve::Mu4Curve(const FieldContext& F, const FieldElement& c) : F_(&F) {
  if (F.is_zero(c)) {
    throw ValidationError("degenerate curve parameter c = 0");
  }
  c_ = c;
  c2_ = F.sqr(c);
  c4_ = F.sqr(c2_);
  c5_ = F.mul(c4_, c_);
  inv_c_ = F.inv(c);
  s_ = F.inv(c4_);
  ws_ = binform::ws_curve(F, F.one(), F.zero(), F.zero(), s_, F.zero());
}

FieldElement Mu4Curve::j_invariant() const { return F_->sqr(c4_); }

Z4Curve Mu4Curve::z4_curve() const { return Z4Curve(*F_, c2_); }

Mu4NsCurve Mu4Curve::nonsplit_curve() const { return Mu4NsCurve(*F_, s_); }

Mu4Point Mu4Curve::point(const FieldElement& x0, const FieldElement& x1,
                         const FieldElement& x2, const FieldElement& x3) const {
  Mu4Point p;
  p.X = {x0, x1, x2, x3};
  if (!is_on(p)) {
    throw ValidationError("coordinates do not satisfy the curve equations");
  }
  return p;
}

Mu4Point Mu4Curve::identity() const {
  Mu4Point p;
  p.X = {c_, F_->one(), F_->zero(), F_->one()};
  return p;
}

Mu4Point Mu4Curve::torsion_t() const {
  Mu4Point p;
  p.X = {F_->one(), c_, F_->one(), F_->zero()};
  return p;
}

Mu4Point Mu4Curve::torsion_2t() const {
  Mu4Point p;
  p.X = {F_->zero(), F_->one(), c_, F_->one()};
  return p;
}

Mu4Point Mu4Curve::torsion_3t() const {
  Mu4Point p;
  p.X = {F_->one(), F_->zero(), F_->one(), c_};
  return p;
}

bool Mu4Curve::is_on(const Mu4Point& p) const {
  const FieldContext& F = *F_;
  if (quad_zero(F, p)) {
    return false;
  }
  FieldElement l1 = F.sqr(F.add(p.X[0], p.X[2]));
  FieldElement r1 = F.mul(c2_, F.mul(p.X[1], p.X[3]));
  FieldElement l2 = F.sqr(F.add(p.X[1], p.X[3]));
  FieldElement r2 = F.mul(c2_, F.mul(p.X[0], p.X[2]));
  return l1 == r1 && l2 == r2;
}

bool Mu4Curve::eq(const Mu4Point& p, const Mu4Point& q) const {
  return quad_eq(*F_, p, q);
}

Mu4Point Mu4Curve::normalized(const Mu4Point& p) const {
  return quad_normalized(*F_, p);
}

Mu4Point Mu4Curve::neg(const Mu4Point& p) const {
  Mu4Point r;
  r.X = {p.X[0], p.X[3], p.X[2], p.X[1]};
  return r;
}

Mu4Point Mu4Curve::translate_t(const Mu4Point& p) const {
  Mu4Point r;
  r.X = {p.X[3], p.X[0], p.X[1], p.X[2]};
  return r;
}

Mu4Point Mu4Curve::add_fast(const Mu4Point& p, const Mu4Point& q,
                            OpMeter* meter) const {
  const FieldContext& F = *F_;
  if (!is_on(p) || !is_on(q)) {
    throw ValidationError("addition input is not on the curve");
  }
  FieldElement z0 = F.mul(p.X[0], q.X[0], meter);
  FieldElement z1 = F.mul(p.X[1], q.X[1], meter);
  FieldElement z2 = F.mul(p.X[2], q.X[2], meter);
  FieldElement z3 = F.mul(p.X[3], q.X[3], meter);
  FieldElement a = F.mul(z0, z1, meter);
  FieldElement b = F.mul(z2, z3, meter);
  FieldElement s02 = F.add(z0, z2, meter);
  FieldElement s13 = F.add(z1, z3, meter);
  FieldElement k = F.mul(s02, s13, meter);
  Mu4Point r;
  r.X[0] = F.sqr(s02, meter);
  r.X[1] = F.mul(c_, F.add(a, b, meter), meter, MulClass::curve_const);
  r.X[2] = F.sqr(s13, meter);
  r.X[3] = F.mul(c_, F.add(k, F.add(a, b, meter), meter), meter,
                 MulClass::curve_const);
  if (quad_zero(F, r)) {
    throw ExceptionalInputError(
        "fast addition law vanished (difference is the 2-torsion translate)");
  }
  return r;
}

Mu4Point Mu4Curve::add_law(int law, const Mu4Point& p, const Mu4Point& q,
                           OpMeter* meter) const {
  const FieldContext& F = *F_;
  const auto& X = p.X;
  const auto& Y = q.X;
  auto w = [&](int i, int j) { return F.mul(X[i], Y[j], meter); };
  auto cmul = [&](const FieldElement& v) {
    return F.mul(c_, v, meter, MulClass::curve_const);
  };
  Mu4Point r;
  switch (law) {
    case 1: {  // vanishes iff q - p = 2T
      FieldElement d0 = w(0, 0), d1 = w(1, 1), d2 = w(2, 2), d3 = w(3, 3);
      r.X[0] = F.sqr(F.add(d0, d2, meter), meter);
      r.X[1] = cmul(F.add(F.mul(d0, d1, meter), F.mul(d2, d3, meter), meter));
      r.X[2] = F.sqr(F.add(d1, d3, meter), meter);
      r.X[3] = cmul(F.add(F.mul(d0, d3, meter), F.mul(d1, d2, meter), meter));
      return r;
    }
    case 2: {  // vanishes iff q - p = 3T
      FieldElement w03 = w(0, 3), w10 = w(1, 0), w21 = w(2, 1), w32 = w(3, 2);
      r.X[0] =
          cmul(F.add(F.mul(w03, w10, meter), F.mul(w21, w32, meter), meter));
      r.X[1] = F.sqr(F.add(w10, w32, meter), meter);
      r.X[2] =
          cmul(F.add(F.mul(w03, w32, meter), F.mul(w10, w21, meter), meter));
      r.X[3] = F.sqr(F.add(w03, w21, meter), meter);
      return r;
    }
    case 3: {  // vanishes iff q - p = O
      FieldElement v31 = w(3, 1), v13 = w(1, 3), v02 = w(0, 2), v20 = w(2, 0);
      r.X[0] = F.sqr(F.add(v31, v13, meter), meter);
      r.X[1] =
          cmul(F.add(F.mul(v02, v31, meter), F.mul(v13, v20, meter), meter));
      r.X[2] = F.sqr(F.add(v02, v20, meter), meter);
      r.X[3] =
          cmul(F.add(F.mul(v02, v13, meter), F.mul(v20, v31, meter), meter));
      return r;
    }
    case 4: {  // vanishes iff q - p = T
      FieldElement u01 = w(0, 1), u23 = w(2, 3), u12 = w(1, 2), u30 = w(3, 0);
      r.X[0] =
          cmul(F.add(F.mul(u01, u30, meter), F.mul(u12, u23, meter), meter));
      r.X[1] = F.sqr(F.add(u01, u23, meter), meter);
      r.X[2] =
          cmul(F.add(F.mul(u01, u12, meter), F.mul(u23, u30, meter), meter));
      r.X[3] = F.sqr(F.add(u12, u30, meter), meter);
      return r;
    }
    default:
      throw ValidationError("addition-law selector out of range");
  }
}

Mu4Point Mu4Curve::add(const Mu4Point& p, const Mu4Point& q,
                       OpMeter* meter) const {
  try {
    return add_fast(p, q, meter);
  } catch (const ExceptionalInputError&) {
    // Fall through to the complementary laws (any one whose translate
    // differs from 2T is nonzero here; try them in a fixed order).
  }
  for (int law : {3, 2, 4}) {
    Mu4Point r = add_law(law, p, q, meter);
    if (!quad_zero(*F_, r)) {
      return r;
    }
  }
  throw Error("internal: all addition laws vanished on a valid pair");
}

Mu4Point Mu4Curve::dbl(const Mu4Point& p, OpMeter* meter) const {
  const FieldContext& F = *F_;
  if (!is_on(p)) {
    throw ValidationError("doubling input is not on the curve");
  }
  auto cc = [&](const FieldElement& k, const FieldElement& v) {
    return F.mul(k, v, meter, MulClass::curve_const);
  };
  FieldElement U = F.sqr(F.add(p.X[0], p.X[2], meter), meter);
  FieldElement V = F.sqr(F.add(p.X[1], p.X[3], meter), meter);
  FieldElement W =
      F.sqr(F.add(p.X[0], cc(c_, p.X[1]), meter), meter);
  FieldElement U2 = F.sqr(U, meter);
  FieldElement V2 = F.sqr(V, meter);
  Mu4Point r;
  r.X[0] = cc(c5_, U2);
  r.X[2] = cc(c5_, V2);
  FieldElement c2V = cc(c2_, V);
  FieldElement c2UV = F.mul(U, c2V, meter);
  FieldElement G2 = F.mul(F.add(U, F.add(c2V, W, meter), meter), W, meter);
  FieldElement t = F.add(cc(c4_, U2), V2, meter);
  FieldElement c4G2 = cc(c4_, G2);
  FieldElement c6UV = cc(c4_, c2UV);
  r.X[3] = F.add(t, c4G2, meter);
  r.X[1] = F.add(r.X[3], c6UV, meter);
  return r;
}

Mu4Point Mu4Curve::smul(std::uint64_t n, const Mu4Point& p,
                        OpMeter* meter) const {
  Mu4Point acc = identity();
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

std::pair<ProjLine, ProjLine> Mu4Curve::proj_add(const Mu4Point& p,
                                                 const Mu4Point& q) const {
  const FieldContext& F = *F_;
  const auto& X = p.X;
  const auto& Y = q.X;
  auto bil = [&](int i, int j, int k, int l) {
    return F.add(F.mul(X[i], Y[j]), F.mul(X[k], Y[l]));
  };
  // First projection: (X0Y0+X2Y2 : X1Y1+X3Y3), fallback
  // (X1Y3+X3Y1 : X2Y0+X0Y2); second projection: (X0Y3+X2Y1 : X1Y0+X3Y2),
  // fallback (X1Y2+X3Y0 : X0Y1+X2Y3).
  ProjLine u{bil(0, 0, 2, 2), bil(1, 1, 3, 3)};
  if (F.is_zero(u.a) && F.is_zero(u.b)) {
    u = ProjLine{bil(1, 3, 3, 1), bil(2, 0, 0, 2)};
  }
  ProjLine v{bil(0, 3, 2, 1), bil(1, 0, 3, 2)};
  if (F.is_zero(v.a) && F.is_zero(v.b)) {
    v = ProjLine{bil(1, 2, 3, 0), bil(0, 1, 2, 3)};
  }
  return {u, v};
}

// ---------------------------------------------------------------------------
// Nonsplit form
// ---------------------------------------------------------------------------

Mu4NsCurve::Mu4NsCurve(const FieldContext& F, const FieldElement& s) : F_(&F) {
  if (F.is_zero(s)) {
    throw ValidationError("degenerate curve parameter s = 0");
  }
  s_ = s;
  FieldElement inv_s = F.inv(s);
  c_ = F.root(inv_s, 4);   // split parameter of the scaling-equivalent form
  c2_ = F.root(inv_s, 2);  // s^(-1/2), used by torsion and translation
  if (!(F.sqr(c_) == c2_)) {
    throw Error("internal: inconsistent root cache");
  }
}

FieldElement Mu4NsCurve::j_invariant() const {
  return F_->sqr(F_->inv(s_));  // s^-2 = c^8
}

Mu4Curve Mu4NsCurve::split_curve() const { return Mu4Curve(*F_, c_); }

Mu4Point Mu4NsCurve::point(const FieldElement& x0, const FieldElement& x1,
                           const FieldElement& x2,
                           const FieldElement& x3) const {
  Mu4Point p;
  p.X = {x0, x1, x2, x3};
  if (!is_on(p)) {
    throw ValidationError("coordinates do not satisfy the curve equations");
  }
  return p;
}

Mu4Point Mu4NsCurve::identity() const {
  Mu4Point p;
  p.X = {F_->one(), F_->one(), F_->zero(), F_->one()};
  return p;
}

Mu4Point Mu4NsCurve::torsion_t() const {
  Mu4Point p;
  p.X = {F_->one(), c2_, F_->one(), F_->zero()};
  return p;
}

Mu4Point Mu4NsCurve::torsion_2t() const {
  Mu4Point p;
  p.X = {F_->zero(), F_->one(), F_->one(), F_->one()};
  return p;
}

Mu4Point Mu4NsCurve::torsion_3t() const {
  Mu4Point p;
  p.X = {F_->one(), F_->zero(), F_->one(), c2_};
  return p;
}

bool Mu4NsCurve::is_on(const Mu4Point& p) const {
  const FieldContext& F = *F_;
  if (quad_zero(F, p)) {
    return false;
  }
  FieldElement l1 = F.sqr(F.add(p.X[0], p.X[2]));
  FieldElement r1 = F.mul(p.X[1], p.X[3]);
  FieldElement l2 = F.mul(s_, F.sqr(F.add(p.X[1], p.X[3])));
  FieldElement r2 = F.mul(p.X[0], p.X[2]);
  return l1 == r1 && l2 == r2;
}

bool Mu4NsCurve::eq(const Mu4Point& p, const Mu4Point& q) const {
  return quad_eq(*F_, p, q);
}

Mu4Point Mu4NsCurve::normalized(const Mu4Point& p) const {
  return quad_normalized(*F_, p);
}

Mu4Point Mu4NsCurve::neg(const Mu4Point& p) const {
  Mu4Point r;
  r.X = {p.X[0], p.X[3], p.X[2], p.X[1]};
  return r;
}

Mu4Point Mu4NsCurve::translate_t(const Mu4Point& p) const {
  const FieldContext& F = *F_;
  Mu4Point r;
  r.X = {p.X[3], F.mul(c2_, p.X[0]), p.X[1], F.mul(c2_, p.X[2])};
  return r;
}

Mu4Point Mu4NsCurve::add_fast(const Mu4Point& p, const Mu4Point& q,
                              OpMeter* meter) const {
  const FieldContext& F = *F_;
  if (!is_on(p) || !is_on(q)) {
    throw ValidationError("addition input is not on the curve");
  }
  FieldElement z0 = F.mul(p.X[0], q.X[1], meter);
  FieldElement z1 = F.mul(p.X[1], q.X[2], meter);
  FieldElement z2 = F.mul(p.X[2], q.X[3], meter);
  FieldElement z3 = F.mul(p.X[3], q.X[0], meter);
  FieldElement a = F.mul(z0, z1, meter);
  FieldElement b = F.mul(z2, z3, meter);
  FieldElement s02 = F.add(z0, z2, meter);
  FieldElement s13 = F.add(z1, z3, meter);
  FieldElement k = F.mul(s02, s13, meter);
  Mu4Point r;
  r.X[0] = F.add(k, F.add(a, b, meter), meter);
  r.X[1] = F.sqr(s02, meter);
  r.X[2] = F.add(a, b, meter);
  r.X[3] = F.sqr(s13, meter);
  if (quad_zero(F, r)) {
    throw ExceptionalInputError(
        "fast addition law vanished (difference is the 4-torsion translate)");
  }
  return r;
}

Mu4Point Mu4NsCurve::add_law(int law, const Mu4Point& p, const Mu4Point& q,
                             OpMeter* meter) const {
  const FieldContext& F = *F_;
  const auto& X = p.X;
  const auto& Y = q.X;
  auto w = [&](int i, int j) { return F.mul(X[i], Y[j], meter); };
  auto smul_c = [&](const FieldElement& v) {
    return F.mul(s_, v, meter, MulClass::curve_const);
  };
  Mu4Point r;
  switch (law) {
    case 1: {  // constant-bearing analogue of the split first law
      FieldElement d0 = w(0, 0), d1 = w(1, 1), d2 = w(2, 2), d3 = w(3, 3);
      r.X[0] = F.sqr(F.add(d0, d2, meter), meter);
      r.X[1] = F.add(F.mul(d0, d1, meter), F.mul(d2, d3, meter), meter);
      r.X[2] = smul_c(F.sqr(F.add(d1, d3, meter), meter));
      r.X[3] = F.add(F.mul(d0, d3, meter), F.mul(d1, d2, meter), meter);
      return r;
    }
    case 2: {  // vanishes iff q - p = 3T (constant-free)
      FieldElement w03 = w(0, 3), w10 = w(1, 0), w21 = w(2, 1), w32 = w(3, 2);
      r.X[0] = F.add(F.mul(w03, w10, meter), F.mul(w21, w32, meter), meter);
      r.X[1] = F.sqr(F.add(w10, w32, meter), meter);
      r.X[2] = F.add(F.mul(w03, w32, meter), F.mul(w10, w21, meter), meter);
      r.X[3] = F.sqr(F.add(w03, w21, meter), meter);
      return r;
    }
    case 3: {  // constant-bearing analogue of the split third law
      FieldElement v31 = w(3, 1), v13 = w(1, 3), v02 = w(0, 2), v20 = w(2, 0);
      r.X[0] = smul_c(F.sqr(F.add(v13, v31, meter), meter));
      r.X[1] = F.add(F.mul(v02, v31, meter), F.mul(v13, v20, meter), meter);
      r.X[2] = F.sqr(F.add(v02, v20, meter), meter);
      r.X[3] = F.add(F.mul(v02, v13, meter), F.mul(v20, v31, meter), meter);
      return r;
    }
    case 4: {  // vanishes iff q - p = T (constant-free, the fast law)
      FieldElement u01 = w(0, 1), u23 = w(2, 3), u12 = w(1, 2), u30 = w(3, 0);
      r.X[0] = F.add(F.mul(u01, u30, meter), F.mul(u12, u23, meter), meter);
      r.X[1] = F.sqr(F.add(u01, u23, meter), meter);
      r.X[2] = F.add(F.mul(u01, u12, meter), F.mul(u23, u30, meter), meter);
      r.X[3] = F.sqr(F.add(u12, u30, meter), meter);
      return r;
    }
    default:
      throw ValidationError("addition-law selector out of range");
  }
}

Mu4Point Mu4NsCurve::add(const Mu4Point& p, const Mu4Point& q,
                         OpMeter* meter) const {
  try {
    return add_fast(p, q, meter);
  } catch (const ExceptionalInputError&) {
  }
  // The complementary constant-free law vanishes only at the opposite
  // 4-torsion translate, so the pair is complete.
  Mu4Point r = add_law(2, p, q, meter);
  if (quad_zero(*F_, r)) {
    throw Error("internal: complete law pair vanished on a valid pair");
  }
  return r;
}

Mu4Point Mu4NsCurve::dbl(const Mu4Point& p, OpMeter* meter) const {
  const FieldContext& F = *F_;
  if (!is_on(p)) {
    throw ValidationError("doubling input is not on the curve");
  }
  FieldElement A = F.sqr(F.add(p.X[0], p.X[2], meter), meter);
  FieldElement B = F.sqr(F.add(p.X[1], p.X[3], meter), meter);
  FieldElement W = F.sqr(F.add(p.X[0], p.X[1], meter), meter);
  FieldElement A2 = F.sqr(A, meter);
  FieldElement B2 = F.sqr(B, meter);
  FieldElement Q2 = F.mul(W, F.add(A, F.add(B, W, meter), meter), meter);
  FieldElement AB = F.mul(A, B, meter);
  FieldElement P2 = F.add(Q2, AB, meter);
  FieldElement sB2 = F.mul(s_, B2, meter, MulClass::curve_const);
  FieldElement s2B2 = F.mul(s_, sB2, meter, MulClass::curve_const);
  Mu4Point r;
  r.X[0] = A2;
  r.X[1] = F.add(A2, F.add(s2B2, P2, meter), meter);
  r.X[2] = sB2;
  r.X[3] = F.add(A2, F.add(s2B2, Q2, meter), meter);
  return r;
}

Mu4Point Mu4NsCurve::smul(std::uint64_t n, const Mu4Point& p,
                          OpMeter* meter) const {
  Mu4Point acc = identity();
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

// ---------------------------------------------------------------------------
// Model isomorphisms and conversions
// ---------------------------------------------------------------------------

Z4Point mu4_to_z4(const Mu4Curve& c, const Mu4Point& p) {
  const FieldContext& F = c.field();
  if (!c.is_on(p)) {
    throw ValidationError("point is not on the split quartic curve");
  }
  // First line (c*X0 : X1+X3), fallback (X1+X3 : c*X2); second line
  // (X0+X2 : c*X1), fallback (c*X3 : X0+X2); glued by the Segre embedding.
  FieldElement s13 = F.add(p.X[1], p.X[3]);
  ProjLine u{F.mul(c.param_c(), p.X[0]), s13};
  if (F.is_zero(u.a) && F.is_zero(u.b)) {
    u = ProjLine{s13, F.mul(c.param_c(), p.X[2])};
  }
  FieldElement s02 = F.add(p.X[0], p.X[2]);
  ProjLine v{s02, F.mul(c.param_c(), p.X[1])};
  if (F.is_zero(v.a) && F.is_zero(v.b)) {
    v = ProjLine{F.mul(c.param_c(), p.X[3]), s02};
  }
  return z4_segre(u, v);
}

Mu4Point mu4_from_z4(const Mu4Curve& c, const Z4Point& p) {
  const FieldContext& F = c.field();
  const FieldElement& cc = c.param_c();
  const FieldElement& c2 = c.c2();
  const auto& X = p.X;
  auto try_branch = [&](int which) {
    Mu4Point r;
    switch (which) {
      case 1:  // vanishes at O
        r.X[0] = F.add(F.mul(X[0], X[1]), F.mul(X[2], X[3]));
        r.X[1] = F.mul(cc, F.sqr(X[2]));
        r.X[2] = F.add(r.X[0], F.mul(c2, F.mul(X[1], X[2])));
        r.X[3] = F.mul(cc, F.sqr(X[1]));
        break;
      case 2:  // vanishes at T and 3T
        r.X[0] = F.mul(cc, F.mul(X[0], X[3]));
        r.X[1] = F.sqr(F.add(X[2], X[3]));
        r.X[2] = F.mul(cc, F.mul(X[1], X[2]));
        r.X[3] = F.sqr(F.add(X[0], X[1]));
        break;
      case 3:  // vanishes at O and 2T
        r.X[0] = F.sqr(F.add(X[0], X[3]));
        r.X[1] = F.mul(cc, F.mul(X[2], X[3]));
        r.X[2] = F.sqr(F.add(X[1], X[2]));
        r.X[3] = F.mul(cc, F.mul(X[0], X[1]));
        break;
      default:  // 4: vanishes at T
        r.X[0] = F.mul(cc, F.sqr(X[3]));
        r.X[1] = F.add(F.add(F.mul(X[0], X[3]), F.mul(X[1], X[2])),
                       F.mul(c2, F.mul(X[2], X[3])));
        r.X[2] = F.mul(cc, F.sqr(X[2]));
        r.X[3] = F.add(F.mul(X[1], X[2]), F.mul(X[0], X[3]));
        break;
    }
    return r;
  };
  for (int which = 1; which <= 4; ++which) {
    Mu4Point r = try_branch(which);
    if (!quad_zero(F, r)) {
      if (!c.is_on(r)) {
        throw Error("internal: quotient inverse left the curve");
      }
      return r;
    }
  }
  throw ValidationError("point is not in the image of the quotient map");
}

WsPoint mu4_to_ws(const Mu4Curve& c, const Mu4Point& p) {
  const FieldContext& F = c.field();
  if (!c.is_on(p)) {
    throw ValidationError("point is not on the split quartic curve");
  }
  if (c.is_identity(p)) {
    return ws_infinity(c.ws_curve());
  }
  // (X : Y : Z) = (c*(X1 + X3) : X0 + c*X1 + X2 : c^4 * X2); only the
  // identity maps to Z = 0.
  FieldElement X = F.mul(c.param_c(), F.add(p.X[1], p.X[3]));
  FieldElement Y =
      F.add(F.add(p.X[0], F.mul(c.param_c(), p.X[1])), p.X[2]);
  FieldElement Z = F.mul(c.c4(), p.X[2]);
  if (F.is_zero(Z)) {
    throw Error("internal: nonidentity point with vanishing denominator");
  }
  FieldElement iz = F.inv(Z);
  return ws_affine(c.ws_curve(), F.mul(X, iz), F.mul(Y, iz));
}

Mu4Point mu4_from_ws(const Mu4Curve& c, const WsPoint& p) {
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
  FieldElement x2 = c.param_s();  // the Z = 1 denormalization
  FieldElement x1 =
      F.mul(F.sqr(p.y), F.inv(F.mul(c.param_c(), p.x)));
  FieldElement x3 = F.add(F.mul(c.inv_c(), p.x), x1);
  FieldElement x0 = F.add(F.add(p.y, F.mul(c.param_c(), x1)), x2);
  return c.point(x0, x1, x2, x3);
}

Mu4Point to_nonsplit(const Mu4Curve& c, const Mu4Point& p) {
  const FieldContext& F = c.field();
  if (!c.is_on(p)) {
    throw ValidationError("point is not on the split quartic curve");
  }
  Mu4Point r;
  r.X = {F.mul(c.inv_c(), p.X[0]), p.X[1], F.mul(c.inv_c(), p.X[2]), p.X[3]};
  return r;
}

Mu4Point to_split(const Mu4NsCurve& c, const Mu4Point& p) {
  const FieldContext& F = c.field();
  if (!c.is_on(p)) {
    throw ValidationError("point is not on the nonsplit quartic curve");
  }
  const FieldElement& cc = c.split_scale();
  Mu4Point r;
  r.X = {F.mul(cc, p.X[0]), p.X[1], F.mul(cc, p.X[2]), p.X[3]};
  return r;
}

Mu4Point mu4_random_point(const Mu4Curve& c, SplitMix64& rng) {
  return mu4_from_ws(c, ws_random_point(c.ws_curve(), rng));
}

Mu4Point mu4ns_random_point(const Mu4NsCurve& c, SplitMix64& rng) {
  Mu4Curve split = c.split_curve();
  return to_nonsplit(split, mu4_random_point(split, rng));
}

std::uint64_t mu4_order(const Mu4Curve& c, const Mu4Point& p) {
  std::uint64_t n = 1;
  Mu4Point q = p;
  while (!c.is_identity(q)) {
    q = c.add(q, p);
    ++n;
  }
  return n;
}

std::uint64_t mu4ns_order(const Mu4NsCurve& c, const Mu4Point& p) {
  std::uint64_t n = 1;
  Mu4Point q = p;
  while (!c.is_identity(q)) {
    q = c.add(q, p);
    ++n;
  }
  return n;
}

std::string mu4_point_str(const Mu4Curve& c, const Mu4Point& p) {
  return quad_str(c.field(), "mu4", c.normalized(p));
}

std::string mu4ns_point_str(const Mu4NsCurve& c, const Mu4Point& p) {
  return quad_str(c.field(), "mu4ns", c.normalized(p));
}

CurvePair curve_from_j(const FieldContext& F, const FieldElement& j) {
  if (F.is_zero(j)) {
    throw DomainError(
        "j = 0 is supersingular in characteristic 2; no curve in these "
        "families has that invariant");
  }
  // c = j^(1/8): three successive square roots (Frobenius is bijective).
  FieldElement c = F.root(F.root(F.root(j, 2), 2), 2);
  return CurvePair{Z4Curve(F, F.sqr(c)), Mu4Curve(F, c)};
}

}  // namespace binform
