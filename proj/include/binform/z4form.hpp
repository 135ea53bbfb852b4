// SPDX-License-Identifier: MIT
// The Z/4Z-normal form of an elliptic curve in characteristic 2:
//   (X0 + X1 + X2 + X3)^2 = e*X0*X2 = e*X1*X3  in P^3,
// with identity (1:0:0:1) and a rational 4-torsion point T = (1:1:0:0).
// Carries complete 12M addition (biquadratic law pairs on two P^1
// projections glued by a skew Segre embedding) and 7M+2S doubling.
#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "binform/binfield.hpp"
#include "binform/wsref.hpp"

namespace binform {

// A point (a : b) of P^1, used for the two coordinate projections.
struct ProjLine {
  FieldElement a, b;
};

struct Z4Point {
  std::array<FieldElement, 4> X;
};

// Skew Segre embedding of P^1 x P^1 into P^3:
//   s(u, v) = (U0*V0 : U1*V0 : U1*V1 : U0*V1)   [4M]
Z4Point z4_segre(const ProjLine& u, const ProjLine& v, OpMeter* meter = nullptr);

class Z4Curve {
 public:
  // Requires e != 0 (the curve is singular otherwise); j-invariant is e^4.
  Z4Curve(const FieldContext& F, const FieldElement& e);

  const FieldContext& field() const { return *F_; }
  const FieldElement& param_e() const { return e_; }
  const FieldElement& inv_e() const { return inv_e_; }
  FieldElement j_invariant() const;

  // The associated Weierstrass curve y^2 + xy = x^3 + e^-2 * x.
  const WsCurve& ws_curve() const { return ws_; }

  // Validated construction (coordinates must satisfy both curve equations
  // and not be identically zero).
  Z4Point point(const FieldElement& x0, const FieldElement& x1,
                const FieldElement& x2, const FieldElement& x3) const;

  Z4Point identity() const;     // O  = (1:0:0:1)
  Z4Point torsion_t() const;    // T  = (1:1:0:0)
  Z4Point torsion_2t() const;   // 2T = (0:1:1:0)
  Z4Point torsion_3t() const;   // 3T = (0:0:1:1)

  bool is_on(const Z4Point& p) const;
  bool eq(const Z4Point& p, const Z4Point& q) const;  // projective equality
  bool is_identity(const Z4Point& p) const { return eq(p, identity()); }
  Z4Point normalized(const Z4Point& p) const;  // first nonzero coord -> 1

  Z4Point neg(const Z4Point& p) const;          // (X3:X2:X1:X0)
  Z4Point translate_t(const Z4Point& p) const;  // (X3:X0:X1:X2), adds T

  // Complete addition: 12M on generic pairs (each projection's first law,
  // plus the Segre gluing); a vanished first law falls back to its partner
  // at +4M.  Never fails.
  Z4Point add(const Z4Point& p, const Z4Point& q, OpMeter* meter = nullptr) const;

  // Doubling, 7M + 2S, valid for every input.
  Z4Point dbl(const Z4Point& p, OpMeter* meter = nullptr) const;

  // Double-and-add over the complete law.
  Z4Point smul(std::uint64_t n, const Z4Point& p, OpMeter* meter = nullptr) const;

  // Raw biquadratic addition-law pair for projection `proj` (1 or 2), law
  // `law` (1 or 2); vanishes identically exactly when p - q lies on one
  // designated translate of the 4-torsion: (proj, law) -> translate is
  // (1,1) -> 3T, (1,2) -> T, (2,1) -> 2T, (2,2) -> O.
  ProjLine add_law(int proj, int law, const Z4Point& p, const Z4Point& q,
                   OpMeter* meter = nullptr) const;

  // Coordinate projections with their fallback branch:
  //   pi1 = (X0:X1), else (X3:X2);  pi2 = (X0:X3), else (X1:X2).
  ProjLine pi1(const Z4Point& p) const;
  ProjLine pi2(const Z4Point& p) const;

 private:
  const FieldContext* F_;
  FieldElement e_, inv_e_;
  WsCurve ws_;
};

// Group isomorphism onto the associated Weierstrass curve, with
// O -> infinity and 2T -> (0,0).
WsPoint z4_to_ws(const Z4Curve& c, const Z4Point& p);
Z4Point z4_from_ws(const Z4Curve& c, const WsPoint& p);

Z4Point z4_random_point(const Z4Curve& c, SplitMix64& rng);
std::uint64_t z4_order(const Z4Curve& c, const Z4Point& p);

// "z4:(0x..:0x..:0x..:0x..)", normalized.
std::string z4_point_str(const Z4Curve& c, const Z4Point& p);

}  // namespace binform
