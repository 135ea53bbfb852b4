// SPDX-License-Identifier: MIT
#include "binform/binfield.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstring>

namespace binform {

namespace {

constexpr unsigned kBufWords = 2 * kMaxFieldWords + 1;

// Highest set bit index of a word array, or -1 if zero.
int top_bit(const std::uint64_t* w, unsigned len) {
  for (int i = static_cast<int>(len) - 1; i >= 0; --i) {
    if (w[i]) {
      return i * 64 + (63 - std::countl_zero(w[i]));
    }
  }
  return -1;
}

// buf ^= w << off (off >= 0, in bits).
inline void xor_shifted(std::uint64_t* buf, std::uint64_t w, unsigned off) {
  const unsigned wi = off >> 6, s = off & 63;
  buf[wi] ^= w << s;
  if (s) {
    buf[wi + 1] ^= w >> (64 - s);
  }
}

// dst ^= src << j, operating on `len` destination words (src has `len` too;
// callers guarantee no overflow past len).
void xor_shifted_poly(std::uint64_t* dst, const std::uint64_t* src,
                      unsigned j, unsigned len) {
  const unsigned wj = j >> 6, s = j & 63;
  if (s == 0) {
    for (unsigned i = wj; i < len; ++i) {
      dst[i] ^= src[i - wj];
    }
  } else {
    for (unsigned i = wj; i < len; ++i) {
      std::uint64_t v = src[i - wj] << s;
      if (i > wj) {
        v |= src[i - wj - 1] >> (64 - s);
      }
      dst[i] ^= v;
    }
  }
}

// Bit-interleave table: byte b -> 16-bit word with b's bits spread to even
// positions (the carry-less square of a byte).
const std::array<std::uint16_t, 256>& square_spread_table() {
  static const std::array<std::uint16_t, 256> table = [] {
    std::array<std::uint16_t, 256> t{};
    for (unsigned b = 0; b < 256; ++b) {
      std::uint16_t v = 0;
      for (unsigned i = 0; i < 8; ++i) {
        if (b & (1u << i)) {
          v |= static_cast<std::uint16_t>(1u << (2 * i));
        }
      }
      t[b] = v;
    }
    return t;
  }();
  return table;
}

std::uint64_t spread32(std::uint32_t v) {
  const auto& t = square_spread_table();
  return static_cast<std::uint64_t>(t[v & 0xff]) |
         (static_cast<std::uint64_t>(t[(v >> 8) & 0xff]) << 16) |
         (static_cast<std::uint64_t>(t[(v >> 16) & 0xff]) << 32) |
         (static_cast<std::uint64_t>(t[(v >> 24) & 0xff]) << 48);
}

// Carry-less multiplication of two nw-word operands into buf (zeroed by the
// caller, kBufWords long), using a 16-entry window table.
void clmul(const std::uint64_t* a, const std::uint64_t* b, unsigned nw,
           std::uint64_t* buf) {
  // tab[i] = a * (polynomial i), i < 16; one spill word for the <<3 shift.
  std::uint64_t tab[16][kMaxFieldWords + 1];
  std::memset(tab, 0, sizeof(tab));
  for (unsigned i = 0; i < nw; ++i) {
    tab[1][i] = a[i];
  }
  for (unsigned i = 2; i < 16; i += 2) {
    // tab[i] = tab[i/2] << 1; tab[i+1] = tab[i] ^ a.
    std::uint64_t carry = 0;
    for (unsigned k = 0; k <= nw; ++k) {
      const std::uint64_t v = tab[i / 2][k];
      tab[i][k] = (v << 1) | carry;
      carry = v >> 63;
    }
    for (unsigned k = 0; k <= nw; ++k) {
      tab[i + 1][k] = tab[i][k] ^ (k < nw ? a[k] : 0);
    }
  }
  for (unsigned j = 0; j < nw; ++j) {
    const std::uint64_t bw = b[j];
    if (!bw) {
      continue;
    }
    for (unsigned t = 0; t < 16; ++t) {
      const unsigned nib = (bw >> (4 * t)) & 0xf;
      if (!nib) {
        continue;
      }
      const unsigned s = 4 * t;
      for (unsigned k = 0; k <= nw; ++k) {
        const std::uint64_t v = tab[nib][k];
        if (!v) {
          continue;
        }
        buf[j + k] ^= v << s;
        if (s) {
          buf[j + k + 1] ^= v >> (64 - s);
        }
      }
    }
  }
}

// Parses "0x..."-prefixed hex into words (little-endian words, bit i of the
// value = bit i of the polynomial).
std::vector<std::uint64_t> parse_hex_words(std::string_view s) {
  if (s.size() < 3 || s[0] != '0' || (s[1] != 'x' && s[1] != 'X')) {
    throw ValidationError("hex value must start with 0x: '" + std::string(s) +
                          "'");
  }
  std::vector<std::uint64_t> out;
  unsigned bits = 0;
  for (std::size_t i = s.size(); i-- > 2;) {
    const char c = s[i];
    unsigned v;
    if (c >= '0' && c <= '9') {
      v = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      v = 10 + (c - 'a');
    } else if (c >= 'A' && c <= 'F') {
      v = 10 + (c - 'A');
    } else {
      throw ValidationError("bad hex digit in '" + std::string(s) + "'");
    }
    const unsigned wi = bits >> 6, sh = bits & 63;
    if (wi >= out.size()) {
      out.push_back(0);
    }
    out[wi] |= static_cast<std::uint64_t>(v) << sh;
    bits += 4;
  }
  if (out.empty()) {
    throw ValidationError("empty hex value");
  }
  return out;
}

std::string words_to_hex(const std::uint64_t* w, unsigned len) {
  int hi = top_bit(w, len);
  if (hi < 0) {
    return "0x0";
  }
  std::string out;
  bool significant = false;
  for (int nib = hi / 4; nib >= 0; --nib) {
    const unsigned wi = static_cast<unsigned>(nib) / 16;
    const unsigned sh = (static_cast<unsigned>(nib) % 16) * 4;
    const unsigned v = (w[wi] >> sh) & 0xf;
    if (v || significant) {
      out += "0123456789abcdef"[v];
      significant = true;
    }
  }
  return "0x" + out;
}

std::vector<unsigned> prime_factors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) {
        n /= p;
      }
    }
  }
  if (n > 1) {
    out.push_back(n);
  }
  return out;
}

}  // namespace

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.ctx == nullptr || b.ctx == nullptr) {
    return a.ctx == b.ctx && a.w == b.w;
  }
  if (a.ctx != b.ctx && !a.ctx->same_as(*b.ctx)) {
    return false;
  }
  return a.w == b.w;
}

FieldContext::FieldContext(unsigned m,
                           const std::vector<std::uint64_t>& modulus_words) {
  if (m < 1 || m > 64 * kMaxFieldWords - 1) {
    throw ValidationError("extension degree out of supported range [1, " +
                          std::to_string(64 * kMaxFieldWords - 1) + "]");
  }
  m_ = m;
  nwords_ = (m + 63) / 64;
  // Validate modulus shape: bit m set, nothing above.
  std::vector<std::uint64_t> mw = modulus_words;
  mw.resize(kMaxFieldWords + 1, 0);
  const int deg = top_bit(mw.data(), kMaxFieldWords + 1);
  if (deg != static_cast<int>(m)) {
    throw ValidationError("modulus degree " + std::to_string(deg) +
                          " does not match field degree " + std::to_string(m));
  }
  if (!(mw[0] & 1)) {
    // A zero constant term means x divides the modulus.
    throw ValidationError("modulus is reducible: zero constant term");
  }
  // Record the taps (set bits strictly between 0 and m; the always-present
  // constant term is handled separately by the reducer).
  mw[m >> 6] &= ~(1ull << (m & 63));
  for (unsigned i = 0; i < kMaxFieldWords; ++i) {
    mod_low_[i] = mw[i];
  }
  for (unsigned i = 1; i < m; ++i) {
    if (mod_low_[i >> 6] & (1ull << (i & 63))) {
      taps_.push_back(i);
    }
  }
  verify_irreducible();
  if (m_ % 2 == 0 && m_ > 1) {
    // Cache a trace-one element for the even-degree quadratic solver.
    for (unsigned k = 0; k < m_; ++k) {
      FieldElement cand = zero();
      cand.w[k >> 6] |= 1ull << (k & 63);
      if (trace(cand) == 1) {
        theta_w_ = cand.w;
        has_theta_ = true;
        break;
      }
    }
    if (!has_theta_) {
      throw Error("internal: no trace-one basis element found");
    }
  }
}

void FieldContext::verify_irreducible() const {
  // Rabin's criterion, using raw squaring + reduction (valid mod any f).
  auto sqr_mod = [this](const FieldElement& a) {
    FieldElement out;
    std::uint64_t buf[kBufWords] = {0};
    for (unsigned i = 0; i < nwords_; ++i) {
      buf[2 * i] = spread32(static_cast<std::uint32_t>(a.w[i]));
      buf[2 * i + 1] = spread32(static_cast<std::uint32_t>(a.w[i] >> 32));
    }
    reduce_into(buf, out);
    return out;
  };
  auto iterate = [&](FieldElement v, unsigned k) {
    for (unsigned i = 0; i < k; ++i) {
      v = sqr_mod(v);
    }
    return v;
  };
  FieldElement x = zero();
  if (m_ == 1) {
    return;  // both degree-1 polynomials are irreducible
  }
  x.w[0] = 2;  // the polynomial x
  const FieldElement xm = iterate(x, m_);
  if (xm.w != x.w) {
    throw ValidationError("modulus is reducible (x^(2^m) != x)");
  }
  for (unsigned p : prime_factors(m_)) {
    FieldElement d = iterate(x, m_ / p);
    for (unsigned i = 0; i < nwords_; ++i) {
      d.w[i] ^= x.w[i];
    }
    // gcd(d, modulus) must be a nonzero constant.
    std::uint64_t u[kMaxFieldWords + 1] = {0};
    std::uint64_t v[kMaxFieldWords + 1] = {0};
    for (unsigned i = 0; i < nwords_; ++i) {
      u[i] = d.w[i];
      v[i] = mod_low_[i];
    }
    v[m_ >> 6] |= 1ull << (m_ & 63);
    int du = top_bit(u, kMaxFieldWords + 1);
    int dv = top_bit(v, kMaxFieldWords + 1);
    if (du < 0) {
      // x^(2^(m/p)) == x mod f: every root of f lies in a proper subfield.
      throw ValidationError("modulus is reducible (splits over a subfield)");
    }
    while (du > 0 && dv > 0) {
      if (du < dv) {
        std::swap_ranges(u, u + kMaxFieldWords + 1, v);
        std::swap(du, dv);
      }
      xor_shifted_poly(u, v, static_cast<unsigned>(du - dv),
                       kMaxFieldWords + 1);
      du = top_bit(u, kMaxFieldWords + 1);
      if (du < 0) {
        // v divides u: gcd is v.
        du = dv;
        std::swap_ranges(u, u + kMaxFieldWords + 1, v);
        dv = -1;
        break;
      }
    }
    const int gcd_deg = dv < 0 ? du : (du == 0 ? 0 : dv);
    if (gcd_deg != 0) {
      throw ValidationError("modulus is reducible (nontrivial gcd)");
    }
  }
}

FieldContext FieldContext::standard(unsigned m) {
  switch (m) {
    case 3:
      return FieldContext(3, {0xbull});
    case 5:
      return FieldContext(5, {0x25ull});
    case 7:
      return FieldContext(7, {0x83ull});
    case 11:
      return FieldContext(11, {0x805ull});
    case 17:
      return FieldContext(17, {0x20009ull});
    case 23:
      return FieldContext(23, {0x800021ull});
    case 127:  // x^127 + x + 1
      return FieldContext(127, {0x3ull, 1ull << 63});
    case 163:  // x^163 + x^7 + x^6 + x^3 + 1
      return FieldContext(163, {0xc9ull, 0, 1ull << 35});
    case 233:  // x^233 + x^74 + 1
      return FieldContext(233, {0x1ull, 1ull << 10, 0, 1ull << 41});
    case 283:  // x^283 + x^12 + x^7 + x^5 + 1
      return FieldContext(283, {0x10a1ull, 0, 0, 0, 1ull << 27});
    default: {
      std::string degrees;
      for (unsigned d : standard_degrees()) {
        degrees += (degrees.empty() ? "" : ", ") + std::to_string(d);
      }
      throw ValidationError("no standard modulus for degree " +
                            std::to_string(m) + " (available: " + degrees +
                            "); supply one as m:0xhex");
    }
  }
}

const std::vector<unsigned>& FieldContext::standard_degrees() {
  static const std::vector<unsigned> degrees = {3,  5,   7,   11,  17,
                                                23, 127, 163, 233, 283};
  return degrees;
}

FieldContext FieldContext::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string mstr(spec.substr(0, colon));
  unsigned m = 0;
  try {
    std::size_t pos = 0;
    const unsigned long v = std::stoul(mstr, &pos);
    if (pos != mstr.size() || v == 0 || v > 64 * kMaxFieldWords - 1) {
      throw std::invalid_argument("range");
    }
    m = static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw ValidationError("bad field spec '" + std::string(spec) +
                          "': expected m or m:0xhex");
  }
  if (colon == std::string_view::npos) {
    return standard(m);
  }
  return FieldContext(m, parse_hex_words(spec.substr(colon + 1)));
}

std::string FieldContext::modulus_hex() const {
  std::uint64_t w[kMaxFieldWords + 1] = {0};
  for (unsigned i = 0; i < kMaxFieldWords; ++i) {
    w[i] = mod_low_[i];
  }
  w[m_ >> 6] |= 1ull << (m_ & 63);
  return words_to_hex(w, kMaxFieldWords + 1);
}

std::string FieldContext::spec_string() const {
  return std::to_string(m_) + ":" + modulus_hex();
}

bool FieldContext::same_as(const FieldContext& o) const {
  return m_ == o.m_ && mod_low_ == o.mod_low_;
}

FieldElement FieldContext::zero() const {
  FieldElement e;
  e.ctx = this;
  return e;
}

FieldElement FieldContext::one() const {
  FieldElement e = zero();
  e.w[0] = 1;
  return e;
}

FieldElement FieldContext::from_uint(std::uint64_t v) const {
  if (m_ < 64 && v >> m_) {
    throw ValidationError("value does not fit in field of degree " +
                          std::to_string(m_));
  }
  FieldElement e = zero();
  e.w[0] = v;
  return e;
}

std::uint64_t FieldContext::to_uint(const FieldElement& a) const {
  check_ctx(a);
  if (m_ > 64) {
    throw ValidationError("to_uint requires degree <= 64");
  }
  return a.w[0];
}

FieldElement FieldContext::from_hex(std::string_view s) const {
  const auto words = parse_hex_words(s);
  if (top_bit(words.data(), static_cast<unsigned>(words.size())) >=
      static_cast<int>(m_)) {
    throw ValidationError("field element '" + std::string(s) +
                          "' has degree >= " + std::to_string(m_));
  }
  FieldElement e = zero();
  for (unsigned i = 0; i < words.size() && i < kMaxFieldWords; ++i) {
    e.w[i] = words[i];
  }
  return e;
}

std::string FieldContext::to_hex(const FieldElement& a) const {
  check_ctx(a);
  return words_to_hex(a.w.data(), nwords_);
}

FieldElement FieldContext::random_element(SplitMix64& rng) const {
  FieldElement e = zero();
  for (unsigned i = 0; i < nwords_; ++i) {
    e.w[i] = rng.next();
  }
  const unsigned mb = m_ & 63;
  if (mb) {
    e.w[nwords_ - 1] &= (1ull << mb) - 1;
  }
  return e;
}

bool FieldContext::is_zero(const FieldElement& a) const {
  check_ctx(a);
  for (unsigned i = 0; i < nwords_; ++i) {
    if (a.w[i]) {
      return false;
    }
  }
  return true;
}

bool FieldContext::is_one(const FieldElement& a) const {
  check_ctx(a);
  if (a.w[0] != 1) {
    return false;
  }
  for (unsigned i = 1; i < nwords_; ++i) {
    if (a.w[i]) {
      return false;
    }
  }
  return true;
}

void FieldContext::check_ctx(const FieldElement& a) const {
  if (a.ctx == nullptr) {
    throw ValidationError("uninitialized field element");
  }
  if (a.ctx != this && !same_as(*a.ctx)) {
    throw ValidationError("field element belongs to a different field");
  }
}

void FieldContext::check_pair(const FieldElement& a,
                              const FieldElement& b) const {
  check_ctx(a);
  check_ctx(b);
}

void FieldContext::reduce_into(std::uint64_t* buf, FieldElement& out) const {
  const unsigned topw = m_ >> 6, mb = m_ & 63;
  for (;;) {
    int hi = -1;
    for (int i = kBufWords - 1; i >= static_cast<int>(topw); --i) {
      std::uint64_t w = buf[i];
      if (i == static_cast<int>(topw) && mb) {
        w >>= mb;
      }
      if (w) {
        hi = i;
        break;
      }
    }
    if (hi < 0) {
      break;
    }
    if (hi > static_cast<int>(topw)) {
      const std::uint64_t w = buf[hi];
      buf[hi] = 0;
      const unsigned base = static_cast<unsigned>(hi) * 64 - m_;
      xor_shifted(buf, w, base);  // tap at exponent 0
      for (unsigned e : taps_) {
        xor_shifted(buf, w, base + e);
      }
    } else {
      const std::uint64_t w = mb ? (buf[topw] >> mb) : buf[topw];
      if (mb) {
        buf[topw] &= (1ull << mb) - 1;
      } else {
        buf[topw] = 0;
      }
      buf[0] ^= w;  // tap at exponent 0 with zero offset
      for (unsigned e : taps_) {
        xor_shifted(buf, w, e);
      }
    }
  }
  out.ctx = this;
  out.w.fill(0);
  for (unsigned i = 0; i < nwords_; ++i) {
    out.w[i] = buf[i];
  }
}

FieldElement FieldContext::add(const FieldElement& a, const FieldElement& b,
                               OpMeter* meter) const {
  check_pair(a, b);
  FieldElement out = zero();
  for (unsigned i = 0; i < nwords_; ++i) {
    out.w[i] = a.w[i] ^ b.w[i];
  }
  if (meter) {
    meter->A += 1;
  }
  return out;
}

FieldElement FieldContext::mul(const FieldElement& a, const FieldElement& b,
                               OpMeter* meter, MulClass cls) const {
  check_pair(a, b);
  std::uint64_t buf[kBufWords] = {0};
  clmul(a.w.data(), b.w.data(), nwords_, buf);
  FieldElement out;
  reduce_into(buf, out);
  if (meter) {
    switch (cls) {
      case MulClass::general:
        meter->M += 1;
        break;
      case MulClass::curve_const:
        meter->m_c += 1;
        break;
      case MulClass::point_const:
        meter->m_t += 1;
        break;
    }
  }
  return out;
}

FieldElement FieldContext::sqr(const FieldElement& a, OpMeter* meter) const {
  check_ctx(a);
  std::uint64_t buf[kBufWords] = {0};
  for (unsigned i = 0; i < nwords_; ++i) {
    buf[2 * i] = spread32(static_cast<std::uint32_t>(a.w[i]));
    buf[2 * i + 1] = spread32(static_cast<std::uint32_t>(a.w[i] >> 32));
  }
  FieldElement out;
  reduce_into(buf, out);
  if (meter) {
    meter->S += 1;
  }
  return out;
}

FieldElement FieldContext::inv(const FieldElement& a, OpMeter* meter) const {
  check_ctx(a);
  if (is_zero(a)) {
    throw DomainError("inverse of zero");
  }
  constexpr unsigned L = kMaxFieldWords + 2;
  std::uint64_t u[L] = {0}, v[L] = {0}, g1[L] = {0}, g2[L] = {0};
  for (unsigned i = 0; i < nwords_; ++i) {
    u[i] = a.w[i];
    v[i] = mod_low_[i];
  }
  v[m_ >> 6] |= 1ull << (m_ & 63);
  g1[0] = 1;
  int du = top_bit(u, L), dv = static_cast<int>(m_);
  while (du > 0) {
    if (du < dv) {
      std::swap_ranges(u, u + L, v);
      std::swap_ranges(g1, g1 + L, g2);
      std::swap(du, dv);
    }
    const unsigned j = static_cast<unsigned>(du - dv);
    xor_shifted_poly(u, v, j, L);
    xor_shifted_poly(g1, g2, j, L);
    du = top_bit(u, L);
  }
  // u is now the constant 1 (gcd with an irreducible modulus).
  std::uint64_t buf[kBufWords] = {0};
  for (unsigned i = 0; i < L && i < kBufWords; ++i) {
    buf[i] = g1[i];
  }
  FieldElement out;
  reduce_into(buf, out);
  if (meter) {
    meter->I += 1;
  }
  return out;
}

FieldElement FieldContext::inv_fermat(const FieldElement& a,
                                      OpMeter* meter) const {
  check_ctx(a);
  if (is_zero(a)) {
    throw DomainError("inverse of zero");
  }
  if (meter) {
    meter->I += 1;
  }
  if (m_ == 1) {
    return one();
  }
  // a^(2^m - 2) = (a^(2^(m-1) - 1))^2.
  FieldElement t = a;  // exponent 2^1 - 1
  for (unsigned i = 1; i + 1 < m_; ++i) {
    t = mul(sqr(t, nullptr), a, nullptr);  // exponent 2^(i+1) - 1
  }
  return sqr(t, nullptr);
}

FieldElement FieldContext::root(const FieldElement& a, unsigned k,
                                OpMeter* meter) const {
  check_ctx(a);
  if (k != 2 && k != 4) {
    throw ValidationError("root index must be 2 or 4");
  }
  const unsigned steps = (k == 2 ? 1 : 2) * (m_ - 1);
  FieldElement r = a;
  for (unsigned i = 0; i < steps; ++i) {
    r = sqr(r, meter);
  }
  return r;
}

int FieldContext::trace(const FieldElement& a) const {
  check_ctx(a);
  FieldElement t = a, s = a;
  for (unsigned i = 1; i < m_; ++i) {
    t = sqr(t, nullptr);
    for (unsigned j = 0; j < nwords_; ++j) {
      s.w[j] ^= t.w[j];
    }
  }
  if (!is_zero(s) && !is_one(s)) {
    throw Error("internal: trace not in GF(2)");
  }
  return is_one(s) ? 1 : 0;
}

FieldElement FieldContext::solve_quadratic(const FieldElement& a,
                                           OpMeter* meter) const {
  check_ctx(a);
  if (trace(a) != 0) {
    throw DomainError("quadratic z^2 + z = a has no root (trace 1)");
  }
  FieldElement z;
  if (m_ % 2 == 1) {
    // Half-trace: sum of a^(4^i) for i = 0 .. (m-1)/2.
    z = a;
    FieldElement cur = a;
    for (unsigned i = 1; i <= (m_ - 1) / 2; ++i) {
      cur = sqr(sqr(cur, meter), meter);
      z = add(z, cur, meter);
    }
  } else {
    // Even degree: z = sum_{i=0}^{m-2} (sum_{j<=i} a^(2^j)) * theta^(2^(i+1))
    // for any theta of trace 1.
    FieldElement theta = zero();
    theta.w = theta_w_;
    FieldElement prefix = a, apow = a, tp = theta;
    z = zero();
    for (unsigned i = 0; i + 1 < m_; ++i) {
      tp = sqr(tp, meter);
      if (i > 0) {
        apow = sqr(apow, meter);
        prefix = add(prefix, apow, meter);
      }
      z = add(z, mul(prefix, tp, meter), meter);
    }
  }
  // The two roots are z and z + 1.
  FieldElement check = add(sqr(z, nullptr), z, nullptr);
  if (!(check == a)) {
    throw Error("internal: quadratic solver produced a non-root");
  }
  return z;
}

FieldElement fe_add(const FieldElement& a, const FieldElement& b,
                    OpMeter* meter) {
  if (!a.ctx) {
    throw ValidationError("uninitialized field element");
  }
  return a.ctx->add(a, b, meter);
}

FieldElement fe_mul(const FieldElement& a, const FieldElement& b,
                    OpMeter* meter, MulClass cls) {
  if (!a.ctx) {
    throw ValidationError("uninitialized field element");
  }
  return a.ctx->mul(a, b, meter, cls);
}

FieldElement fe_sqr(const FieldElement& a, OpMeter* meter) {
  if (!a.ctx) {
    throw ValidationError("uninitialized field element");
  }
  return a.ctx->sqr(a, meter);
}

FieldElement fe_inv(const FieldElement& a, OpMeter* meter) {
  if (!a.ctx) {
    throw ValidationError("uninitialized field element");
  }
  return a.ctx->inv(a, meter);
}

FieldElement fe_root(const FieldElement& a, unsigned k, OpMeter* meter) {
  if (!a.ctx) {
    throw ValidationError("uninitialized field element");
  }
  return a.ctx->root(a, k, meter);
}

int fe_trace(const FieldElement& a) {
  if (!a.ctx) {
    throw ValidationError("uninitialized field element");
  }
  return a.ctx->trace(a);
}

bool fe_is_zero(const FieldElement& a) {
  if (!a.ctx) {
    throw ValidationError("uninitialized field element");
  }
  return a.ctx->is_zero(a);
}

std::string fe_hex(const FieldElement& a) {
  if (!a.ctx) {
    throw ValidationError("uninitialized field element");
  }
  return a.ctx->to_hex(a);
}

}  // namespace binform
