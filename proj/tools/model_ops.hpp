// SPDX-License-Identifier: MIT
// Front-end helpers shared by the CLI and the vector suite: text encodings
// for points, per-model dispatch, directed model conversion, and
// ladder-backed scalar multiplication with a double-and-add fallback for
// 2-torsion bases.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "binform/binfield.hpp"
#include "binform/errors.hpp"
#include "binform/kummer.hpp"
#include "binform/mu4form.hpp"
#include "binform/wsref.hpp"
#include "binform/z4form.hpp"

namespace binform::cli {

// --- encodings -------------------------------------------------------------

// Splits "prefix:(a:b:...)" into its coordinate strings, enforcing arity.
inline std::vector<std::string> coords_of(std::string_view text,
                                          std::string_view prefix,
                                          std::size_t arity) {
  std::string head(prefix);
  head += ":(";
  if (text.size() < head.size() + 1 ||
      text.substr(0, head.size()) != head || text.back() != ')') {
    throw ValidationError("malformed point encoding '" + std::string(text) +
                          "' (want " + std::string(prefix) + ":(...))");
  }
  std::string_view body =
      text.substr(head.size(), text.size() - head.size() - 1);
  std::vector<std::string> parts;
  std::size_t pos = 0;
  for (;;) {
    std::size_t colon = body.find(':', pos);
    if (colon == std::string_view::npos) {
      parts.emplace_back(body.substr(pos));
      break;
    }
    parts.emplace_back(body.substr(pos, colon - pos));
    pos = colon + 1;
  }
  if (parts.size() != arity) {
    throw ValidationError("point encoding '" + std::string(text) + "' has " +
                          std::to_string(parts.size()) +
                          " coordinates, want " + std::to_string(arity));
  }
  return parts;
}

inline Z4Point parse_point(const Z4Curve& c, std::string_view s) {
  const FieldContext& F = c.field();
  auto v = coords_of(s, "z4", 4);
  return c.point(F.from_hex(v[0]), F.from_hex(v[1]), F.from_hex(v[2]),
                 F.from_hex(v[3]));
}

inline Mu4Point parse_point(const Mu4Curve& c, std::string_view s) {
  const FieldContext& F = c.field();
  auto v = coords_of(s, "mu4", 4);
  return c.point(F.from_hex(v[0]), F.from_hex(v[1]), F.from_hex(v[2]),
                 F.from_hex(v[3]));
}

inline Mu4Point parse_point(const Mu4NsCurve& c, std::string_view s) {
  const FieldContext& F = c.field();
  auto v = coords_of(s, "mu4ns", 4);
  return c.point(F.from_hex(v[0]), F.from_hex(v[1]), F.from_hex(v[2]),
                 F.from_hex(v[3]));
}

inline WsPoint parse_point(const WsCurve& c, std::string_view s) {
  if (s == "ws:inf") {
    return ws_infinity(c);
  }
  auto v = coords_of(s, "ws", 2);
  return ws_affine(c, c.F->from_hex(v[0]), c.F->from_hex(v[1]));
}

inline std::string pstr(const Z4Curve& c, const Z4Point& p) {
  return z4_point_str(c, p);
}
inline std::string pstr(const Mu4Curve& c, const Mu4Point& p) {
  return mu4_point_str(c, p);
}
inline std::string pstr(const Mu4NsCurve& c, const Mu4Point& p) {
  return mu4ns_point_str(c, p);
}
inline std::string pstr(const WsCurve& c, const WsPoint& p) {
  return ws_point_str(c, p);
}

inline std::string pair_str(const FieldContext& F, const KumPair& p) {
  return "kum:((" + F.to_hex(p.q.u0) + ":" + F.to_hex(p.q.u1) + "),(" +
         F.to_hex(p.d.u0) + ":" + F.to_hex(p.d.u1) + "))";
}

inline Z4Point rand_pt(const Z4Curve& c, SplitMix64& rng) {
  return z4_random_point(c, rng);
}
inline Mu4Point rand_pt(const Mu4Curve& c, SplitMix64& rng) {
  return mu4_random_point(c, rng);
}
inline Mu4Point rand_pt(const Mu4NsCurve& c, SplitMix64& rng) {
  return mu4ns_random_point(c, rng);
}

// --- model dispatch ---------------------------------------------------------

// Runs fn(curve) with the concrete curve type named by `model`.
template <class Fn>
void with_model(const FieldContext& F, const std::string& model,
                const FieldElement& param, Fn&& fn) {
  if (model == "z4") {
    fn(Z4Curve(F, param));
  } else if (model == "mu4") {
    fn(Mu4Curve(F, param));
  } else if (model == "mu4ns") {
    fn(Mu4NsCurve(F, param));
  } else {
    throw ValidationError("unknown model '" + model +
                          "' (want z4, mu4 or mu4ns)");
  }
}

inline const FieldElement& curve_param(const Z4Curve& c) { return c.param_e(); }
inline const FieldElement& curve_param(const Mu4Curve& c) { return c.param_c(); }
inline const FieldElement& curve_param(const Mu4NsCurve& c) { return c.param_s(); }

// Associated Weierstrass curve (by value: the nonsplit form reaches its
// companion through a temporary split curve).
inline WsCurve assoc_ws(const Z4Curve& c) { return c.ws_curve(); }
inline WsCurve assoc_ws(const Mu4Curve& c) { return c.ws_curve(); }
inline WsCurve assoc_ws(const Mu4NsCurve& c) {
  return c.split_curve().ws_curve();
}

template <class Curve>
std::vector<std::string> torsion_orbit_strs(const Curve& c) {
  return {pstr(c, c.identity()), pstr(c, c.torsion_t()),
          pstr(c, c.torsion_2t()), pstr(c, c.torsion_3t())};
}

// --- ladder-backed scalar multiplication ------------------------------------

// [n]P through the oriented ladder with full-coordinate recovery.  A
// 2-torsion base carries no orientation, so those inputs fall back to the
// double-and-add law; `used_fallback` reports which path ran.  Both paths
// return the same group element.
inline Z4Point smul_ladder(const Z4Curve& c, std::uint64_t n, const Z4Point& p,
                           bool* used_fallback = nullptr,
                           OpMeter* meter = nullptr) {
  try {
    KummerZ4 k(c, p);
    if (used_fallback) *used_fallback = false;
    return k.smul_recover(n, meter);
  } catch (const UnsupportedBaseError&) {
    if (used_fallback) *used_fallback = true;
    return c.smul(n, p, meter);
  }
}

inline Mu4Point smul_ladder(const Mu4Curve& c, std::uint64_t n,
                            const Mu4Point& p, bool* used_fallback = nullptr,
                            OpMeter* meter = nullptr) {
  try {
    KummerMu4 k(c, p);
    if (used_fallback) *used_fallback = false;
    return k.smul_recover(n, meter);
  } catch (const UnsupportedBaseError&) {
    if (used_fallback) *used_fallback = true;
    return c.smul(n, p, meter);
  }
}

inline Mu4Point smul_ladder(const Mu4NsCurve& c, std::uint64_t n,
                            const Mu4Point& p, bool* used_fallback = nullptr,
                            OpMeter* meter = nullptr) {
  // The nonsplit form rides the split ladder through the scaling
  // equivalence (a coordinate scaling, not metered as curve arithmetic).
  Mu4Curve sc = c.split_curve();
  Mu4Point sp = to_split(c, p);
  try {
    KummerMu4 k(sc, sp);
    if (used_fallback) *used_fallback = false;
    return to_nonsplit(sc, k.smul_recover(n, meter));
  } catch (const UnsupportedBaseError&) {
    if (used_fallback) *used_fallback = true;
    return c.smul(n, p, meter);
  }
}

// --- directed conversions ---------------------------------------------------

// Converts one encoded point between models.  `param` is the SOURCE curve's
// parameter, except when the source is ws: the reference model has no single
// parameter of its own here, so `param` then names the TARGET curve and the
// Weierstrass curve is the target's associated one.  Companion parameters
// are always derived: e = c^2, s = c^-4.
inline std::string convert_point(const FieldContext& F,
                                 const std::string& from,
                                 const std::string& to,
                                 const FieldElement& param,
                                 const std::string& point_text) {
  auto bad_target = [&]() -> std::string {
    throw ValidationError("unknown target model '" + to +
                          "' (want z4, mu4, mu4ns or ws)");
  };
  if (from == "z4") {
    Z4Curve src(F, param);
    Z4Point p = parse_point(src, point_text);
    if (to == "z4") return pstr(src, p);
    if (to == "ws") return pstr(src.ws_curve(), z4_to_ws(src, p));
    Mu4Curve mid(F, F.root(param, 2));  // c = sqrt(e)
    Mu4Point q = mu4_from_z4(mid, p);
    if (to == "mu4") return pstr(mid, q);
    if (to == "mu4ns") return pstr(mid.nonsplit_curve(), to_nonsplit(mid, q));
    return bad_target();
  }
  if (from == "mu4") {
    Mu4Curve src(F, param);
    Mu4Point p = parse_point(src, point_text);
    if (to == "mu4") return pstr(src, p);
    if (to == "z4") return pstr(src.z4_curve(), mu4_to_z4(src, p));
    if (to == "mu4ns") return pstr(src.nonsplit_curve(), to_nonsplit(src, p));
    if (to == "ws") return pstr(src.ws_curve(), mu4_to_ws(src, p));
    return bad_target();
  }
  if (from == "mu4ns") {
    Mu4NsCurve src(F, param);
    Mu4Point p = parse_point(src, point_text);
    if (to == "mu4ns") return pstr(src, p);
    Mu4Curve sc = src.split_curve();
    Mu4Point q = to_split(src, p);
    if (to == "mu4") return pstr(sc, q);
    if (to == "z4") return pstr(sc.z4_curve(), mu4_to_z4(sc, q));
    if (to == "ws") return pstr(sc.ws_curve(), mu4_to_ws(sc, q));
    return bad_target();
  }
  if (from == "ws") {
    if (to == "z4") {
      Z4Curve dst(F, param);
      return pstr(dst, z4_from_ws(dst, parse_point(dst.ws_curve(), point_text)));
    }
    if (to == "mu4") {
      Mu4Curve dst(F, param);
      return pstr(dst, mu4_from_ws(dst, parse_point(dst.ws_curve(), point_text)));
    }
    if (to == "mu4ns") {
      Mu4NsCurve dst(F, param);
      Mu4Curve sc = dst.split_curve();
      return pstr(dst, to_nonsplit(sc, mu4_from_ws(
                           sc, parse_point(sc.ws_curve(), point_text))));
    }
    if (to == "ws") {
      // Plain re-encoding on the curve y^2 + xy = x^3 + param*x.
      WsCurve c = ws_curve(F, F.one(), F.zero(), F.zero(), param, F.zero());
      return pstr(c, parse_point(c, point_text));
    }
    return bad_target();
  }
  throw ValidationError("unknown source model '" + from +
                        "' (want z4, mu4, mu4ns or ws)");
}

}  // namespace binform::cli
