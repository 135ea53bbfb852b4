// SPDX-License-Identifier: MIT
// Reference Weierstrass model: affine chord-tangent arithmetic, kept
// deliberately independent of the quartic-model formulas so it can serve as
// a cross-validation oracle.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "binform/binfield.hpp"

namespace binform {

// y^2 + a1*xy + a3*y = x^3 + a2*x^2 + a4*x + a6 over GF(2^m).
struct WsCurve {
  const FieldContext* F = nullptr;
  FieldElement a1, a2, a3, a4, a6;
};

// Affine point, with an explicit flag for the point at infinity.
struct WsPoint {
  bool infinity = true;
  FieldElement x, y;
};

// Validates non-singularity (discriminant != 0).
WsCurve ws_curve(const FieldContext& F, const FieldElement& a1,
                 const FieldElement& a2, const FieldElement& a3,
                 const FieldElement& a4, const FieldElement& a6);

FieldElement ws_discriminant(const WsCurve& c);
FieldElement ws_j_invariant(const WsCurve& c);

WsPoint ws_infinity(const WsCurve& c);
WsPoint ws_affine(const WsCurve& c, const FieldElement& x,
                  const FieldElement& y);  // validates on-curve

bool ws_is_on(const WsCurve& c, const WsPoint& p);
bool ws_eq(const WsPoint& p, const WsPoint& q);

WsPoint ws_neg(const WsCurve& c, const WsPoint& p);
WsPoint ws_add(const WsCurve& c, const WsPoint& p, const WsPoint& q);
WsPoint ws_dbl(const WsCurve& c, const WsPoint& p);
WsPoint ws_smul(const WsCurve& c, std::uint64_t n, const WsPoint& p);

// Order of p in the group (brute force; intended for small fields/tests).
std::uint64_t ws_order(const WsCurve& c, const WsPoint& p);

// Every rational point, infinity first (exhaustive suites on tiny fields).
std::vector<WsPoint> ws_all_points(const WsCurve& c);

// Samples a random affine point by solving for y over random x values until
// the quadratic splits.
WsPoint ws_random_point(const WsCurve& c, SplitMix64& rng);

std::string ws_point_str(const WsCurve& c, const WsPoint& p);

}  // namespace binform
