// SPDX-License-Identifier: MIT
// GF(2^m) arithmetic in polynomial basis: dense bit-vector representation,
// word-level carry-less multiplication, sparse-modulus reduction, exact
// 2-power roots, quadratic solvers, and operation metering.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "binform/errors.hpp"
#include "binform/opmeter.hpp"

namespace binform {

// Maximum supported extension degree is 64*kMaxFieldWords - 1.
inline constexpr unsigned kMaxFieldWords = 8;

class FieldContext;

// An element of GF(2^m): bit i of the word array is the coefficient of x^i.
// Always stored reduced (degree < m).  Elements carry a pointer to their
// context; contexts must outlive the elements created from them.
struct FieldElement {
  const FieldContext* ctx = nullptr;
  std::array<std::uint64_t, kMaxFieldWords> w{};
};

bool operator==(const FieldElement& a, const FieldElement& b);
inline bool operator!=(const FieldElement& a, const FieldElement& b) {
  return !(a == b);
}

// splitmix64: the fixed, seedable PRNG used for every randomized suite and
// for emitted test vectors, so runs are reproducible across implementations.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, bound) for small bounds.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// GF(2^m) = GF(2)[x] / (modulus).  The modulus is validated irreducible at
// construction (Rabin's test: x^(2^m) = x mod f and gcd(x^(2^(m/p)) - x, f)
// = 1 for every prime p dividing m).
class FieldContext {
 public:
  // modulus_words encode an irreducible degree-m polynomial (bit m set).
  FieldContext(unsigned m, const std::vector<std::uint64_t>& modulus_words);

  // Built-in lowest-weight trinomial/pentanomial moduli.
  static FieldContext standard(unsigned m);
  static const std::vector<unsigned>& standard_degrees();

  // Accepts "m" (standard modulus) or "m:0xhex" (explicit modulus).
  static FieldContext parse(std::string_view spec);

  unsigned degree() const { return m_; }
  unsigned words() const { return nwords_; }
  std::string modulus_hex() const;
  std::string spec_string() const;  // "m:0xhex"

  // Content equality (same degree and modulus), independent of identity.
  bool same_as(const FieldContext& o) const;

  // --- element construction / encoding ---
  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_uint(std::uint64_t v) const;        // requires bitlen(v) <= m
  std::uint64_t to_uint(const FieldElement& a) const;   // requires m <= 64
  FieldElement from_hex(std::string_view s) const;      // "0x..." lowercase out, any case in
  std::string to_hex(const FieldElement& a) const;
  FieldElement random_element(SplitMix64& rng) const;

  bool is_zero(const FieldElement& a) const;
  bool is_one(const FieldElement& a) const;

  // --- arithmetic (meters are optional; null means unmetered) ---
  FieldElement add(const FieldElement& a, const FieldElement& b,
                   OpMeter* meter = nullptr) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b,
                   OpMeter* meter = nullptr,
                   MulClass cls = MulClass::general) const;
  FieldElement sqr(const FieldElement& a, OpMeter* meter = nullptr) const;

  // Extended-Euclid (binary) inversion; counts a single I on the meter.
  FieldElement inv(const FieldElement& a, OpMeter* meter = nullptr) const;
  // Fermat inversion a^(2^m - 2), the independent verification path; also
  // counts a single I (internal steps are not itemized).
  FieldElement inv_fermat(const FieldElement& a, OpMeter* meter = nullptr) const;

  // Unique k-th root for k in {2, 4}: (m-1)-fold resp. 2(m-1)-fold squaring;
  // the squarings are metered as S.
  FieldElement root(const FieldElement& a, unsigned k,
                    OpMeter* meter = nullptr) const;

  // Absolute trace GF(2^m) -> GF(2).
  int trace(const FieldElement& a) const;

  // Solves z^2 + z = a (requires trace(a) == 0): half-trace for odd m, a
  // trace-one-element expansion for even m.  The returned root's companion
  // is z + 1.
  FieldElement solve_quadratic(const FieldElement& a,
                               OpMeter* meter = nullptr) const;

 private:
  unsigned m_ = 0;
  unsigned nwords_ = 0;
  std::array<std::uint64_t, kMaxFieldWords> mod_low_{};  // bits below m
  std::vector<unsigned> taps_;   // exponents of modulus terms below m
  // Trace-one element, cached for even m (stored as raw words so that
  // copies of the context never hold a stale self-pointer).
  std::array<std::uint64_t, kMaxFieldWords> theta_w_{};
  bool has_theta_ = false;

  void check_ctx(const FieldElement& a) const;
  void check_pair(const FieldElement& a, const FieldElement& b) const;
  void reduce_into(std::uint64_t* buf, FieldElement& out) const;
  void verify_irreducible() const;
};

// --- free-function spellings used throughout the curve modules ---

FieldElement fe_add(const FieldElement& a, const FieldElement& b,
                    OpMeter* meter = nullptr);
FieldElement fe_mul(const FieldElement& a, const FieldElement& b,
                    OpMeter* meter = nullptr, MulClass cls = MulClass::general);
FieldElement fe_sqr(const FieldElement& a, OpMeter* meter = nullptr);
FieldElement fe_inv(const FieldElement& a, OpMeter* meter = nullptr);
FieldElement fe_root(const FieldElement& a, unsigned k, OpMeter* meter = nullptr);
int fe_trace(const FieldElement& a);
bool fe_is_zero(const FieldElement& a);
std::string fe_hex(const FieldElement& a);

}  // namespace binform
