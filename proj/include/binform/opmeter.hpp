// SPDX-License-Identifier: MIT
// Field-operation metering and exact cost-claim verification.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace binform {

// Cost class of a field multiplication, chosen by the caller: the same value
// can be a general multiplication in one formula and a multiplication by a
// cached constant in another.
enum class MulClass {
  general,      // counted as M
  curve_const,  // counted as m_c (multiplication by a fixed curve constant)
  point_const,  // counted as m_t (multiplication by a fixed base-point constant)
};

// Accumulator of field-operation counts.  Counters only increase between
// explicit resets; a squaring is never also counted as a multiplication.
// Additions are recorded in A but never asserted against a claim.
struct OpMeter {
  std::uint64_t M = 0;    // general multiplications
  std::uint64_t S = 0;    // squarings
  std::uint64_t m_c = 0;  // multiplications by a curve constant
  std::uint64_t m_t = 0;  // multiplications by a base-point constant
  std::uint64_t I = 0;    // inversions
  std::uint64_t A = 0;    // additions

  void reset() { *this = OpMeter{}; }

  OpMeter& operator+=(const OpMeter& o) {
    M += o.M;
    S += o.S;
    m_c += o.m_c;
    m_t += o.m_t;
    I += o.I;
    A += o.A;
    return *this;
  }

  // Counter-wise difference from an earlier snapshot of the same meter.
  OpMeter delta_since(const OpMeter& base) const {
    return OpMeter{M - base.M, S - base.S, m_c - base.m_c,
                   m_t - base.m_t, I - base.I, A - base.A};
  }

  bool operator==(const OpMeter&) const = default;

  std::string to_json() const;
};

// An exact operation-count claim about one curve operation.  `expected` maps
// counter names to counts; accepted keys are "M", "S", "m_c", "m_t", "m_s"
// and "I".  "m_s" is the non-split spelling of the curve-constant counter and
// is checked against the m_c counter.  Counters not named in `expected`
// (other than A) must read zero for the claim to pass.
struct CostClaim {
  std::string label;
  std::vector<std::pair<std::string, std::uint64_t>> expected;
  std::string source;
};

struct CostReport {
  CostClaim claim;
  OpMeter observed;
  bool pass = false;

  // {"claim": ..., "expected": {...}, "observed": {...}, "pass": ..., "source": ...}
  std::string to_json() const;
};

// Runs `run` with a fresh meter and compares the recorded counts against the
// claim with exact equality (not <=).  `run` must execute exactly one
// instance of the claimed operation on generic inputs; if it throws
// ExceptionalInputError (its random draw hit an exceptional locus), it is
// re-invoked, up to max_retries times.
CostReport assert_cost(const CostClaim& claim,
                       const std::function<void(OpMeter&)>& run,
                       int max_retries = 32);

// The documented per-model complexity results (doubling / addition).  Rows
// for models outside this library's scope are carried as documentation only
// and flagged implemented = false.
struct ModelCosts {
  std::string model;
  std::string doubling;
  std::string addition;
  bool implemented;
};

const std::vector<ModelCosts>& complexity_table();

}  // namespace binform
