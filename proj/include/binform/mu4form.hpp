// SPDX-License-Identifier: MIT
// The mu4-normal forms of an elliptic curve in characteristic 2.
//
// Split form C_c in P^3:
//   (X0 + X2)^2 = c^2 * X1 * X3,  (X1 + X3)^2 = c^2 * X0 * X2,
// identity (c:1:0:1), rational 4-torsion T = (1:c:1:0), j = c^8.
// Addition: 7M + 2S + 2m_c fast law (complete after fallback), doubling
// 2M + 5S + 7m_c.
//
// Nonsplit form C'_s in P^3 (s = c^-4 under the scaling equivalence):
//   (X0 + X2)^2 = X1 * X3,  s * (X1 + X3)^2 = X0 * X2,
// identity (1:1:0:1).  Addition: 7M + 2S fast law (complete after
// fallback), doubling 2M + 5S + 2m_s.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>

#include "binform/binfield.hpp"
#include "binform/wsref.hpp"
#include "binform/z4form.hpp"

namespace binform {

struct Mu4Point {
  std::array<FieldElement, 4> X;
};

class Mu4NsCurve;

// Split mu4-normal curve C_c (requires c != 0).
class Mu4Curve {
 public:
  Mu4Curve(const FieldContext& F, const FieldElement& c);

  const FieldContext& field() const { return *F_; }
  const FieldElement& param_c() const { return c_; }
  const FieldElement& c2() const { return c2_; }
  const FieldElement& c4() const { return c4_; }
  const FieldElement& c5() const { return c5_; }
  const FieldElement& inv_c() const { return inv_c_; }
  const FieldElement& param_s() const { return s_; }  // s = c^-4
  FieldElement j_invariant() const;                   // c^8

  // The quotient curve in Z/4Z-normal form (parameter e = c^2).
  Z4Curve z4_curve() const;
  // The associated Weierstrass curve y^2 + xy = x^3 + c^-4 * x.
  const WsCurve& ws_curve() const { return ws_; }
  // The scaling-equivalent nonsplit form (parameter s = c^-4).
  Mu4NsCurve nonsplit_curve() const;

  Mu4Point point(const FieldElement& x0, const FieldElement& x1,
                 const FieldElement& x2, const FieldElement& x3) const;

  Mu4Point identity() const;    // O  = (c:1:0:1)
  Mu4Point torsion_t() const;   // T  = (1:c:1:0)
  Mu4Point torsion_2t() const;  // 2T = (0:1:c:1)
  Mu4Point torsion_3t() const;  // 3T = (1:0:1:c)

  bool is_on(const Mu4Point& p) const;
  bool eq(const Mu4Point& p, const Mu4Point& q) const;
  bool is_identity(const Mu4Point& p) const { return eq(p, identity()); }
  Mu4Point normalized(const Mu4Point& p) const;

  Mu4Point neg(const Mu4Point& p) const;          // (X0:X3:X2:X1)
  Mu4Point translate_t(const Mu4Point& p) const;  // (X3:X0:X1:X2)

  // Fast addition, 7M + 2S + 2m_c; throws ExceptionalInputError exactly
  // when p - q = 2T (the law's exceptional translate).
  Mu4Point add_fast(const Mu4Point& p, const Mu4Point& q,
                    OpMeter* meter = nullptr) const;

  // Complete addition: the fast law, falling back to the other biquadratic
  // laws on its exceptional locus.
  Mu4Point add(const Mu4Point& p, const Mu4Point& q,
               OpMeter* meter = nullptr) const;

  // Raw biquadratic law `law` in {1,2,3,4}; vanishes identically exactly
  // when p - q is the law's translate: 1 -> 2T, 2 -> 3T, 3 -> O, 4 -> T.
  Mu4Point add_law(int law, const Mu4Point& p, const Mu4Point& q,
                   OpMeter* meter = nullptr) const;

  // Doubling, 2M + 5S + 7m_c, valid for every input.
  Mu4Point dbl(const Mu4Point& p, OpMeter* meter = nullptr) const;

  Mu4Point smul(std::uint64_t n, const Mu4Point& p,
                OpMeter* meter = nullptr) const;

  // Addition projected to the two P^1 lines of the quotient model: equals
  // (pi1, pi2) of the quotient-model sum of the images.  Each projection has
  // a two-law complete system.
  std::pair<ProjLine, ProjLine> proj_add(const Mu4Point& p,
                                         const Mu4Point& q) const;

 private:
  const FieldContext* F_;
  FieldElement c_, c2_, c4_, c5_, inv_c_, s_;
  WsCurve ws_;
};

// Nonsplit mu4-normal curve C'_s (requires s != 0).
class Mu4NsCurve {
 public:
  Mu4NsCurve(const FieldContext& F, const FieldElement& s);

  const FieldContext& field() const { return *F_; }
  const FieldElement& param_s() const { return s_; }
  const FieldElement& c2() const { return c2_; }       // s^(-1/2)
  const FieldElement& split_scale() const { return c_; }  // s^(-1/4)
  FieldElement j_invariant() const;                    // s^-2

  // The scaling-equivalent split form (parameter c = s^(-1/4)).
  Mu4Curve split_curve() const;

  Mu4Point point(const FieldElement& x0, const FieldElement& x1,
                 const FieldElement& x2, const FieldElement& x3) const;

  Mu4Point identity() const;    // O  = (1:1:0:1)
  Mu4Point torsion_t() const;   // T  = (1:c^2:1:0)
  Mu4Point torsion_2t() const;  // 2T = (0:1:1:1)
  Mu4Point torsion_3t() const;  // 3T = (1:0:1:c^2)

  bool is_on(const Mu4Point& p) const;
  bool eq(const Mu4Point& p, const Mu4Point& q) const;
  bool is_identity(const Mu4Point& p) const { return eq(p, identity()); }
  Mu4Point normalized(const Mu4Point& p) const;

  Mu4Point neg(const Mu4Point& p) const;          // (X0:X3:X2:X1)
  Mu4Point translate_t(const Mu4Point& p) const;  // (X3:c^2*X0:X1:c^2*X2)

  // Fast addition, 7M + 2S with no constant multiplications; throws
  // ExceptionalInputError exactly when p - q = T.
  Mu4Point add_fast(const Mu4Point& p, const Mu4Point& q,
                    OpMeter* meter = nullptr) const;

  // Complete addition (fast law with its complementary-law fallback).
  Mu4Point add(const Mu4Point& p, const Mu4Point& q,
               OpMeter* meter = nullptr) const;

  // Raw biquadratic law `law` in {1,2,3,4}, vanishing where p - q equals
  // the law's translate; the constant-free pair is law 4 (translate T, the
  // fast law) and law 2 (translate 3T).
  Mu4Point add_law(int law, const Mu4Point& p, const Mu4Point& q,
                   OpMeter* meter = nullptr) const;

  // Doubling, 2M + 5S + 2m_s, valid for every input.
  Mu4Point dbl(const Mu4Point& p, OpMeter* meter = nullptr) const;

  Mu4Point smul(std::uint64_t n, const Mu4Point& p,
                OpMeter* meter = nullptr) const;

 private:
  const FieldContext* F_;
  FieldElement s_, c_, c2_;
};

// Quotient isomorphism onto the Z/4Z-normal curve with e = c^2 (the split
// parameter squared), and its inverse (four-branch biquadratic system).
Z4Point mu4_to_z4(const Mu4Curve& c, const Mu4Point& p);
Mu4Point mu4_from_z4(const Mu4Curve& c, const Z4Point& p);

// Group isomorphism onto the associated Weierstrass curve, with O -> infinity
// and 2T -> (0,0).
WsPoint mu4_to_ws(const Mu4Curve& c, const Mu4Point& p);
Mu4Point mu4_from_ws(const Mu4Curve& c, const WsPoint& p);

// Scaling equivalence between the split and nonsplit forms:
//   split -> nonsplit: (c^-1*X0 : X1 : c^-1*X2 : X3)
//   nonsplit -> split: (c*X0 : X1 : c*X2 : X3)
Mu4Point to_nonsplit(const Mu4Curve& c, const Mu4Point& p);
Mu4Point to_split(const Mu4NsCurve& c, const Mu4Point& p);

Mu4Point mu4_random_point(const Mu4Curve& c, SplitMix64& rng);
Mu4Point mu4ns_random_point(const Mu4NsCurve& c, SplitMix64& rng);
std::uint64_t mu4_order(const Mu4Curve& c, const Mu4Point& p);
std::uint64_t mu4ns_order(const Mu4NsCurve& c, const Mu4Point& p);

std::string mu4_point_str(const Mu4Curve& c, const Mu4Point& p);
std::string mu4ns_point_str(const Mu4NsCurve& c, const Mu4Point& p);

// Both normal forms with a prescribed j-invariant (j != 0): the curve pair
// (E_{c^2}, C_c) with c = j^(1/8).  Throws DomainError for j = 0 (that class
// is supersingular and carries no rational 4-torsion).
struct CurvePair {
  Z4Curve z4;
  Mu4Curve mu4;
};
CurvePair curve_from_j(const FieldContext& F, const FieldElement& j);

}  // namespace binform
