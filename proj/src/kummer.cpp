// SPDX-License-Identifier: MIT
#include "binform/kummer.hpp"

#include <bit>

namespace binform {

namespace {

bool line_zero(const FieldContext& F, const KumLine& u) {
  return F.is_zero(u.u0) && F.is_zero(u.u1);
}

// The ladder arithmetic itself only needs the field, the quotient-model
// parameter e, and the orientation coefficient t1 (t0 is normalized to 1).
struct LadderOps {
  const FieldContext* F;
  FieldElement e, t1;

  // ((U0^2 + U1^2)^2 : e * U0^2 * U1^2) — 1M + 3S + 1m_c.
  KumLine dbl(const KumLine& u, OpMeter* meter) const {
    FieldElement A = F->sqr(u.u0, meter);
    FieldElement B = F->sqr(u.u1, meter);
    KumLine r;
    r.u0 = F->sqr(F->add(A, B, meter), meter);
    r.u1 = F->mul(e, F->mul(A, B, meter), meter, MulClass::curve_const);
    return r;
  }

  KumLine diff_add(const KumLine& u, const KumLine& v, OpMeter* meter,
                   LadderVariant variant) const {
    FieldElement z0 = F->mul(u.u0, v.u0, meter);
    FieldElement z1 = F->mul(u.u1, v.u1, meter);
    KumLine r;
    if (variant == LadderVariant::square_rich) {
      // (t1*(z0 + z1)^2 : (U0*V1 + U1*V0)^2) — 3M + 2S + 1m_t.
      FieldElement k = F->mul(F->add(u.u0, u.u1, meter),
                              F->add(v.u0, v.u1, meter), meter);
      FieldElement cross = F->add(k, F->add(z0, z1, meter), meter);
      r.u0 = F->mul(t1, F->sqr(F->add(z0, z1, meter), meter), meter,
                    MulClass::point_const);
      r.u1 = F->sqr(cross, meter);
    } else {
      // The correspondence equation rewrites the cross square:
      // ((z0 + z1)^2 : t1*(z0 + z1)^2 + e*z0*z1) — 3M + 1S + 1m_t + 1m_c.
      FieldElement zz = F->mul(z0, z1, meter);
      FieldElement cs = F->sqr(F->add(z0, z1, meter), meter);
      r.u0 = cs;
      r.u1 = F->add(F->mul(t1, cs, meter, MulClass::point_const),
                    F->mul(e, zz, meter, MulClass::curve_const), meter);
    }
    return r;
  }

  KumPair step(bool bit, const KumPair& st, OpMeter* meter,
               LadderVariant variant) const {
    KumPair out;
    if (bit) {
      out.q = dbl(st.q, meter);
      out.d = diff_add(st.q, st.d, meter, variant);
    } else {
      out.q = diff_add(st.q, st.d, meter, variant);
      out.d = dbl(st.d, meter);
    }
    return out;
  }

  KumPair run(std::uint64_t n, const KumLine& base_line, OpMeter* meter,
              LadderVariant variant) const {
    KumPair st;
    st.q = base_line;
    st.d = KumLine{F->one(), F->zero()};  // line of the identity
    if (n == 0) {
      return st;
    }
    for (int i = 63 - std::countl_zero(n); i >= 0; --i) {
      st = step((n >> i) & 1, st, meter, variant);
    }
    return st;
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// Z/4Z-model orientation
// ---------------------------------------------------------------------------

KummerZ4::KummerZ4(const Z4Curve& curve, const Z4Point& base)
    : curve_(curve), base_(base) {
  const FieldContext& F = curve_.field();
  if (!curve_.is_on(base)) {
    throw ValidationError("orientation base is not on the curve");
  }
  if (curve_.eq(base, curve_.identity()) ||
      curve_.eq(base, curve_.torsion_2t())) {
    throw UnsupportedBaseError(
        "2-torsion base points induce a degenerate orientation");
  }
  coef_ = base.X;
  ProjLine t = curve_.pi1(base);
  if (F.is_zero(t.a) || F.is_zero(t.b)) {
    throw UnsupportedBaseError("degenerate orientation coefficients");
  }
  t0_ = F.one();
  t1_ = F.mul(t.b, F.inv(t.a));  // the one-time setup inversion
}

KumLine KummerZ4::line(const Z4Point& q) const {
  ProjLine u = curve_.pi1(q);
  return KumLine{u.a, u.b};
}

KumPair KummerZ4::embed(const Z4Point& q) const {
  const FieldContext& F = curve_.field();
  if (!curve_.is_on(q)) {
    throw ValidationError("point is not on the curve");
  }
  KumPair out;
  out.q = line(q);
  const auto& p = coef_;
  const auto& X = q.X;
  KumLine w{F.add(F.mul(p[0], X[0]), F.mul(p[2], X[2])),
            F.add(F.mul(p[3], X[1]), F.mul(p[1], X[3]))};
  if (line_zero(F, w)) {
    w = KumLine{F.add(F.mul(p[1], X[1]), F.mul(p[3], X[3])),
                F.add(F.mul(p[2], X[0]), F.mul(p[0], X[2]))};
  }
  out.d = w;
  return out;
}

Z4Point KummerZ4::lift(const KumPair& pr) const {
  const FieldContext& F = curve_.field();
  const auto& p = coef_;
  const FieldElement& U0 = pr.q.u0;
  const FieldElement& U1 = pr.q.u1;
  const FieldElement& V0 = pr.d.u0;
  const FieldElement& V1 = pr.d.u1;
  FieldElement u0v0 = F.mul(U0, V0), u1v1 = F.mul(U1, V1);
  FieldElement u0v1 = F.mul(U0, V1), u1v0 = F.mul(U1, V0);
  KumLine w{F.add(F.mul(p[1], u0v0), F.mul(p[2], u1v1)),
            F.add(F.mul(p[0], u0v1), F.mul(p[3], u1v0))};
  if (line_zero(F, w)) {
    w = KumLine{F.add(F.mul(p[3], u0v1), F.mul(p[0], u1v0)),
                F.add(F.mul(p[2], u0v0), F.mul(p[1], u1v1))};
  }
  Z4Point r = z4_segre(ProjLine{U0, U1}, ProjLine{w.u0, w.u1});
  if (!curve_.is_on(r)) {
    throw ValidationError("pair does not lie on the oriented correspondence");
  }
  return r;
}

bool KummerZ4::on_oriented(const KumPair& pr) const {
  const FieldContext& F = curve_.field();
  const FieldElement& U0 = pr.q.u0;
  const FieldElement& U1 = pr.q.u1;
  const FieldElement& V0 = pr.d.u0;
  const FieldElement& V1 = pr.d.u1;
  FieldElement cross = F.add(F.mul(U0, V1), F.mul(U1, V0));
  FieldElement diag = F.add(F.mul(U0, V0), F.mul(U1, V1));
  // t0^2*cross^2 + t1^2*diag^2 = e*t0*t1*U0*U1*V0*V1, with t0 = 1.
  FieldElement lhs = F.add(F.sqr(cross), F.mul(F.sqr(t1_), F.sqr(diag)));
  FieldElement rhs = F.mul(F.mul(curve_.param_e(), t1_),
                           F.mul(F.mul(U0, U1), F.mul(V0, V1)));
  return lhs == rhs;
}

KumLine KummerZ4::dbl_line(const KumLine& u, OpMeter* meter) const {
  return LadderOps{&curve_.field(), curve_.param_e(), t1_}.dbl(u, meter);
}

KumLine KummerZ4::diff_add(const KumLine& u, const KumLine& v, OpMeter* meter,
                           LadderVariant variant) const {
  return LadderOps{&curve_.field(), curve_.param_e(), t1_}.diff_add(
      u, v, meter, variant);
}

KumPair KummerZ4::step(bool bit, const KumPair& state, OpMeter* meter,
                       LadderVariant variant) const {
  return LadderOps{&curve_.field(), curve_.param_e(), t1_}.step(
      bit, state, meter, variant);
}

KumPair KummerZ4::ladder(std::uint64_t n, OpMeter* meter,
                         LadderVariant variant) const {
  return LadderOps{&curve_.field(), curve_.param_e(), t1_}.run(
      n, KumLine{t0_, t1_}, meter, variant);
}

Z4Point KummerZ4::smul_recover(std::uint64_t n, OpMeter* meter,
                               LadderVariant variant) const {
  KumPair st = ladder(n, meter, variant);
  Z4Point lifted = lift(st);  // (n+1)*base
  return curve_.add(lifted, curve_.neg(base_), meter);
}

// ---------------------------------------------------------------------------
// mu4-model orientation
// ---------------------------------------------------------------------------

KummerMu4::KummerMu4(const Mu4Curve& curve, const Mu4Point& base)
    : curve_(curve), base_(base) {
  const FieldContext& F = curve_.field();
  if (!curve_.is_on(base)) {
    throw ValidationError("orientation base is not on the curve");
  }
  if (curve_.eq(base, curve_.identity()) ||
      curve_.eq(base, curve_.torsion_2t())) {
    throw UnsupportedBaseError(
        "2-torsion base points induce a degenerate orientation");
  }
  coef_ = base.X;
  e_ = curve_.c2();
  const FieldElement& c = curve_.param_c();
  FieldElement s13 = F.add(coef_[1], coef_[3]);
  KumLine t{F.mul(c, coef_[0]), s13};
  if (line_zero(F, t)) {
    t = KumLine{s13, F.mul(c, coef_[2])};
  }
  if (F.is_zero(t.u0) || F.is_zero(t.u1)) {
    throw UnsupportedBaseError("degenerate orientation coefficients");
  }
  t0_ = F.one();
  t1_ = F.mul(t.u1, F.inv(t.u0));
}

KumLine KummerMu4::line(const Mu4Point& q) const {
  const FieldContext& F = curve_.field();
  const FieldElement& c = curve_.param_c();
  FieldElement s13 = F.add(q.X[1], q.X[3]);
  KumLine u{F.mul(c, q.X[0]), s13};
  if (line_zero(F, u)) {
    u = KumLine{s13, F.mul(c, q.X[2])};
  }
  return u;
}

KumPair KummerMu4::embed(const Mu4Point& q) const {
  const FieldContext& F = curve_.field();
  if (!curve_.is_on(q)) {
    throw ValidationError("point is not on the curve");
  }
  KumPair out;
  out.q = line(q);
  const auto& s = coef_;
  const auto& X = q.X;
  KumLine w{F.add(F.mul(s[0], X[0]), F.mul(s[2], X[2])),
            F.add(F.mul(s[3], X[1]), F.mul(s[1], X[3]))};
  if (line_zero(F, w)) {
    w = KumLine{F.add(F.mul(s[1], X[1]), F.mul(s[3], X[3])),
                F.add(F.mul(s[2], X[0]), F.mul(s[0], X[2]))};
  }
  out.d = w;
  return out;
}

Mu4Point KummerMu4::lift(const KumPair& pr) const {
  const FieldContext& F = curve_.field();
  const auto& s = coef_;
  const FieldElement& c = curve_.param_c();
  const FieldElement& U0 = pr.q.u0;
  const FieldElement& U1 = pr.q.u1;
  const FieldElement& V0 = pr.d.u0;
  const FieldElement& V1 = pr.d.u1;
  FieldElement s13 = F.add(s[1], s[3]);
  FieldElement U0sq = F.sqr(U0), U1sq = F.sqr(U1);
  FieldElement cU0U1 = F.mul(c, F.mul(U0, U1));
  auto branch = [&](bool second) {
    // Branch 1 pairs V0 with the quadratic terms; branch 2 swaps the roles
    // of V0 and V1 and the two odd coefficients.
    const FieldElement& Vq = second ? V1 : V0;   // multiplies U_i^2 * s13
    const FieldElement& Vl = second ? V0 : V1;   // multiplies the even form
    FieldElement even = second
                            ? F.add(F.mul(s[2], U0sq), F.mul(s[0], U1sq))
                            : F.add(F.mul(s[0], U0sq), F.mul(s[2], U1sq));
    FieldElement evenV = F.mul(even, Vl);
    FieldElement oddV = F.mul(cU0U1, Vq);
    FieldElement odd1 = F.mul(second ? s[3] : s[1], oddV);
    FieldElement odd2 = F.mul(second ? s[1] : s[3], oddV);
    Mu4Point r;
    r.X[0] = F.mul(s13, F.mul(U0sq, Vq));
    r.X[1] = F.add(evenV, odd1);
    r.X[2] = F.mul(s13, F.mul(U1sq, Vq));
    r.X[3] = F.add(evenV, odd2);
    return r;
  };
  for (bool second : {false, true}) {
    Mu4Point r = branch(second);
    bool zero = F.is_zero(r.X[0]) && F.is_zero(r.X[1]) && F.is_zero(r.X[2]) &&
                F.is_zero(r.X[3]);
    if (!zero) {
      if (!curve_.is_on(r)) {
        throw ValidationError(
            "pair does not lie on the oriented correspondence");
      }
      return r;
    }
  }
  throw ValidationError("pair does not lie on the oriented correspondence");
}

bool KummerMu4::on_oriented(const KumPair& pr) const {
  const FieldContext& F = curve_.field();
  FieldElement cross =
      F.add(F.mul(pr.q.u0, pr.d.u1), F.mul(pr.q.u1, pr.d.u0));
  FieldElement diag =
      F.add(F.mul(pr.q.u0, pr.d.u0), F.mul(pr.q.u1, pr.d.u1));
  FieldElement lhs = F.add(F.sqr(cross), F.mul(F.sqr(t1_), F.sqr(diag)));
  FieldElement rhs =
      F.mul(F.mul(e_, t1_), F.mul(F.mul(pr.q.u0, pr.q.u1),
                                  F.mul(pr.d.u0, pr.d.u1)));
  return lhs == rhs;
}

KumLine KummerMu4::dbl_line(const KumLine& u, OpMeter* meter) const {
  return LadderOps{&curve_.field(), e_, t1_}.dbl(u, meter);
}

KumLine KummerMu4::diff_add(const KumLine& u, const KumLine& v, OpMeter* meter,
                            LadderVariant variant) const {
  return LadderOps{&curve_.field(), e_, t1_}.diff_add(u, v, meter, variant);
}

KumPair KummerMu4::step(bool bit, const KumPair& state, OpMeter* meter,
                        LadderVariant variant) const {
  return LadderOps{&curve_.field(), e_, t1_}.step(bit, state, meter, variant);
}

KumPair KummerMu4::ladder(std::uint64_t n, OpMeter* meter,
                          LadderVariant variant) const {
  return LadderOps{&curve_.field(), e_, t1_}.run(n, KumLine{t0_, t1_}, meter,
                                                 variant);
}

Mu4Point KummerMu4::smul_recover(std::uint64_t n, OpMeter* meter,
                                 LadderVariant variant) const {
  KumPair st = ladder(n, meter, variant);
  Mu4Point lifted = lift(st);  // (n+1)*base
  return curve_.add(lifted, curve_.neg(base_), meter);
}

}  // namespace binform
