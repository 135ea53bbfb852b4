// SPDX-License-Identifier: MIT
// Kummer-oriented scalar multiplication.  A base point P orients the
// quotient line K = E/<+/-1>: the pair map Q -> (line(Q), line(Q - P)) is
// injective, satisfies one biquadratic correspondence equation, and admits
// an explicit inverse, so a Montgomery ladder on lines recovers full points.
//
// Ladder step costs (per scalar bit, both branches identical):
//   square-rich variant: 4M + 5S + 1m_t + 1m_c
//   mul-rich variant:    4M + 4S + 1m_t + 2m_c
#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "binform/binfield.hpp"
#include "binform/mu4form.hpp"
#include "binform/z4form.hpp"

namespace binform {

// A point (u0 : u1) of the quotient line P^1.
struct KumLine {
  FieldElement u0, u1;
};

// An oriented pair (q, d) = (line(Q), line(Q - P)) for the base point P.
// The ladder's running state has this shape: after the bits of n it holds
// (line((n+1)P), line(nP)).
struct KumPair {
  KumLine q, d;
};

enum class LadderVariant {
  square_rich,  // trades a constant multiplication for a squaring
  mul_rich,     // uses the correspondence equation to drop one squaring
};

// Orientation of the Z/4Z-normal model by a base point.
class KummerZ4 {
 public:
  // The base must not be 2-torsion (its line pair would be degenerate).
  KummerZ4(const Z4Curve& curve, const Z4Point& base);

  const Z4Curve& curve() const { return curve_; }
  const Z4Point& base() const { return base_; }
  // Oriented-equation coefficients, normalized to t0 = 1 (one inversion at
  // setup).
  const FieldElement& t0() const { return t0_; }
  const FieldElement& t1() const { return t1_; }

  KumLine line(const Z4Point& q) const;   // image on the quotient line
  KumPair embed(const Z4Point& q) const;  // (line(Q), line(Q - P))
  // Inverse of embed; throws ValidationError when the pair does not lie on
  // the oriented correspondence.
  Z4Point lift(const KumPair& p) const;
  bool on_oriented(const KumPair& p) const;

  // Line doubling: 1M + 3S + 1m_c.
  KumLine dbl_line(const KumLine& u, OpMeter* meter = nullptr) const;
  // Differential addition of lines with difference line(P):
  // 3M + 2S + 1m_t (square-rich) or 3M + 1S + 1m_t + 1m_c (mul-rich).
  KumLine diff_add(const KumLine& u, const KumLine& v, OpMeter* meter = nullptr,
                   LadderVariant variant = LadderVariant::square_rich) const;
  // One ladder step; both bit values execute the same operation sequence.
  KumPair step(bool bit, const KumPair& state, OpMeter* meter = nullptr,
               LadderVariant variant = LadderVariant::square_rich) const;
  // Full ladder over all bits of n, most significant first, starting from
  // (line(P), line(O)); returns (line((n+1)P), line(nP)).
  KumPair ladder(std::uint64_t n, OpMeter* meter = nullptr,
                 LadderVariant variant = LadderVariant::square_rich) const;
  // n*P with full coordinates: lift the ladder output, subtract the base.
  Z4Point smul_recover(std::uint64_t n, OpMeter* meter = nullptr,
                       LadderVariant variant = LadderVariant::square_rich) const;

 private:
  Z4Curve curve_;
  Z4Point base_;
  std::array<FieldElement, 4> coef_;  // base coordinates, as given
  FieldElement t0_, t1_;
};

// Orientation of the split mu4-normal model by a base point; the quotient
// line is shared with the Z/4Z model through the quotient isomorphism.
class KummerMu4 {
 public:
  KummerMu4(const Mu4Curve& curve, const Mu4Point& base);

  const Mu4Curve& curve() const { return curve_; }
  const Mu4Point& base() const { return base_; }
  const FieldElement& t0() const { return t0_; }
  const FieldElement& t1() const { return t1_; }

  KumLine line(const Mu4Point& q) const;
  KumPair embed(const Mu4Point& q) const;
  Mu4Point lift(const KumPair& p) const;
  bool on_oriented(const KumPair& p) const;

  KumLine dbl_line(const KumLine& u, OpMeter* meter = nullptr) const;
  KumLine diff_add(const KumLine& u, const KumLine& v, OpMeter* meter = nullptr,
                   LadderVariant variant = LadderVariant::square_rich) const;
  KumPair step(bool bit, const KumPair& state, OpMeter* meter = nullptr,
               LadderVariant variant = LadderVariant::square_rich) const;
  KumPair ladder(std::uint64_t n, OpMeter* meter = nullptr,
                 LadderVariant variant = LadderVariant::square_rich) const;
  Mu4Point smul_recover(std::uint64_t n, OpMeter* meter = nullptr,
                        LadderVariant variant = LadderVariant::square_rich) const;

 private:
  Mu4Curve curve_;
  Mu4Point base_;
  std::array<FieldElement, 4> coef_;  // base coordinates, as given
  FieldElement t0_, t1_, e_;          // e = c^2, the quotient-model parameter
};

}  // namespace binform
