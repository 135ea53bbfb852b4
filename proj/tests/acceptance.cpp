// SPDX-License-Identifier: MIT
// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.
//
//   1. exact operation-count reproduction (< 1 s)
//   2. exhaustive oracle agreement on GF(2^3) and GF(2^5)
//   3. randomized oracle agreement on GF(2^11), GF(2^17), GF(2^163)
//   4. model isomorphisms mutually inverse (exhaustive small, random large)
//   5. addition-law exceptional divisors are single translate diagonals
//   6. ladder recovery equals the oracle; per-bit meters bit-independent
//   7. torsion orbit tables verbatim; [4]T = O, [2]T != O
//   8. complexity table verified on the implemented rows; wall-clock
//      benchmarks reported without thresholds
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "binform/binfield.hpp"
#include "binform/costsuite.hpp"
#include "binform/errors.hpp"
#include "binform/kummer.hpp"
#include "binform/mu4form.hpp"
#include "binform/opmeter.hpp"
#include "binform/wsref.hpp"
#include "binform/z4form.hpp"

namespace {

using namespace binform;
using clock_type = std::chrono::steady_clock;

struct Result {
  bool ok = true;
  std::string detail;                  // appended to the criterion line
  std::vector<std::string> report;     // extra informational lines
  void fail(const std::string& why) {
    ok = false;
    detail = detail.empty() ? why : detail + "; " + why;
  }
};

FieldElement random_nonzero(const FieldContext& F, SplitMix64& rng) {
  for (;;) {
    FieldElement a = F.random_element(rng);
    if (!F.is_zero(a)) return a;
  }
}

// --- criterion 1: exact operation counts ------------------------------------

Result criterion1() {
  Result r;
  const auto t0 = clock_type::now();
  auto reports = run_cost_suite(FieldContext::standard(17), 0x5eed01);
  int npass = 0;
  for (const CostReport& cr : reports) {
    if (cr.pass) {
      ++npass;
    } else {
      r.fail(cr.claim.label + " observed " + cr.observed.to_json());
    }
  }
  const double secs =
      std::chrono::duration<double>(clock_type::now() - t0).count();
  if (secs >= 1.0) {
    r.fail("took " + std::to_string(secs) + " s (budget 1 s)");
  }
  if (r.ok) {
    r.detail = std::to_string(npass) + "/" + std::to_string(reports.size()) +
               " exact claims";
  }
  return r;
}

// --- criterion 2: exhaustive oracle agreement --------------------------------

Result criterion2() {
  Result r;
  std::uint64_t pairs = 0;
  for (unsigned m : {3u, 5u}) {
    FieldContext F = FieldContext::standard(m);
    for (std::uint64_t cv = 1; cv < (1ull << m); ++cv) {
      Mu4Curve split(F, F.from_uint(cv));
      Mu4NsCurve ns = split.nonsplit_curve();
      Z4Curve z4 = split.z4_curve();
      const WsCurve& w = split.ws_curve();  // shared: a4 = c^-4 for all three
      const auto all = ws_all_points(w);
      for (const WsPoint& P : all) {
        for (const WsPoint& Q : all) {
          const WsPoint R = ws_add(w, P, Q);
          const Z4Point zp = z4_from_ws(z4, P), zq = z4_from_ws(z4, Q);
          if (!z4.eq(z4.add(zp, zq), z4_from_ws(z4, R))) {
            r.fail("z4 mismatch on GF(2^" + std::to_string(m) + ")");
            return r;
          }
          const Mu4Point mp = mu4_from_ws(split, P), mq = mu4_from_ws(split, Q);
          const Mu4Point mr = mu4_from_ws(split, R);
          if (!split.eq(split.add(mp, mq), mr)) {
            r.fail("mu4 mismatch on GF(2^" + std::to_string(m) + ")");
            return r;
          }
          if (!ns.eq(ns.add(to_nonsplit(split, mp), to_nonsplit(split, mq)),
                     to_nonsplit(split, mr))) {
            r.fail("mu4ns mismatch on GF(2^" + std::to_string(m) + ")");
            return r;
          }
          ++pairs;
        }
      }
    }
  }
  r.detail = std::to_string(pairs) +
             " ordered pairs x 3 models, every curve parameter, 0 mismatches";
  return r;
}

// --- criterion 3: randomized oracle agreement --------------------------------

Result criterion3() {
  Result r;
  std::uint64_t adds = 0, smuls = 0;
  for (unsigned m : {11u, 17u, 163u}) {
    FieldContext F = FieldContext::standard(m);
    SplitMix64 rng(0xacce55ed ^ m);
    Mu4Curve split(F, random_nonzero(F, rng));
    Mu4NsCurve ns = split.nonsplit_curve();
    Z4Curve z4 = split.z4_curve();
    const WsCurve& w = split.ws_curve();
    for (int i = 0; i < 1000; ++i) {
      const WsPoint P = ws_random_point(w, rng);
      const WsPoint Q = ws_random_point(w, rng);
      const WsPoint R = ws_add(w, P, Q);
      bool ok = true;
      switch (i % 3) {
        case 0:
          ok = z4.eq(z4.add(z4_from_ws(z4, P), z4_from_ws(z4, Q)),
                     z4_from_ws(z4, R));
          break;
        case 1:
          ok = split.eq(split.add(mu4_from_ws(split, P), mu4_from_ws(split, Q)),
                        mu4_from_ws(split, R));
          break;
        default:
          ok = ns.eq(ns.add(to_nonsplit(split, mu4_from_ws(split, P)),
                            to_nonsplit(split, mu4_from_ws(split, Q))),
                     to_nonsplit(split, mu4_from_ws(split, R)));
          break;
      }
      if (!ok) {
        r.fail("addition mismatch on GF(2^" + std::to_string(m) + ")");
        return r;
      }
      ++adds;
    }
    for (int i = 0; i < 1000; ++i) {
      const WsPoint P = ws_random_point(w, rng);
      const std::uint64_t n = rng.next();
      const WsPoint R = ws_smul(w, n, P);
      bool ok = true;
      switch (i % 3) {
        case 0:
          ok = z4.eq(z4.smul(n, z4_from_ws(z4, P)), z4_from_ws(z4, R));
          break;
        case 1:
          ok = split.eq(split.smul(n, mu4_from_ws(split, P)),
                        mu4_from_ws(split, R));
          break;
        default:
          ok = ns.eq(ns.smul(n, to_nonsplit(split, mu4_from_ws(split, P))),
                     to_nonsplit(split, mu4_from_ws(split, R)));
          break;
      }
      if (!ok) {
        r.fail("smul mismatch on GF(2^" + std::to_string(m) + ")");
        return r;
      }
      ++smuls;
    }
  }
  r.detail = std::to_string(adds) + " additions + " + std::to_string(smuls) +
             " 64-bit scalar multiples vs oracle, 0 mismatches";
  return r;
}

// --- criterion 4: isomorphism suite ------------------------------------------

Result criterion4() {
  Result r;

  // Exhaustive on GF(2^5), c = 2: the quotient isomorphism and its inverse.
  FieldContext F5 = FieldContext::standard(5);
  Mu4Curve split(F5, F5.from_uint(2));
  Z4Curve z4 = split.z4_curve();
  const WsCurve& w5 = split.ws_curve();
  std::vector<Mu4Point> mpts;
  std::vector<Z4Point> zpts;
  for (const WsPoint& P : ws_all_points(w5)) {
    mpts.push_back(mu4_from_ws(split, P));
    zpts.push_back(z4_from_ws(z4, P));
  }
  for (const Mu4Point& p : mpts) {
    if (!split.eq(mu4_from_z4(split, mu4_to_z4(split, p)), p)) {
      r.fail("iota^-1 . iota != id (exhaustive)");
      return r;
    }
  }
  for (const Z4Point& p : zpts) {
    if (!z4.eq(mu4_to_z4(split, mu4_from_z4(split, p)), p)) {
      r.fail("iota . iota^-1 != id (exhaustive)");
      return r;
    }
  }
  for (const Mu4Point& p : mpts) {
    for (const Mu4Point& q : mpts) {
      if (!z4.eq(mu4_to_z4(split, split.add(p, q)),
                 z4.add(mu4_to_z4(split, p), mu4_to_z4(split, q)))) {
        r.fail("iota is not a homomorphism (exhaustive)");
        return r;
      }
    }
  }

  // Randomized on larger fields.
  for (unsigned m : {17u, 163u}) {
    FieldContext F = FieldContext::standard(m);
    SplitMix64 rng(0x150c0de ^ m);
    Mu4Curve sp(F, random_nonzero(F, rng));
    Z4Curve zc = sp.z4_curve();
    for (int i = 0; i < 200; ++i) {
      const Mu4Point p = mu4_random_point(sp, rng);
      const Mu4Point q = mu4_random_point(sp, rng);
      const Z4Point zp = z4_random_point(zc, rng);
      if (!sp.eq(mu4_from_z4(sp, mu4_to_z4(sp, p)), p) ||
          !zc.eq(mu4_to_z4(sp, mu4_from_z4(sp, zp)), zp) ||
          !zc.eq(mu4_to_z4(sp, sp.add(p, q)),
                 zc.add(mu4_to_z4(sp, p), mu4_to_z4(sp, q)))) {
        r.fail("iota suite failed on GF(2^" + std::to_string(m) + ")");
        return r;
      }
    }
  }

  // Exhaustive on GF(2^5): the oriented pair maps and their inverses, for
  // both models (a generic order-40 base and an order-4 torsion base).
  const Z4Point base_z4 =
      z4.point(F5.from_uint(1), F5.from_uint(5), F5.from_uint(19),
               F5.from_uint(14));
  const Mu4Point base_mu4 =
      split.point(F5.from_uint(1), F5.from_uint(31), F5.from_uint(17),
                  F5.from_uint(21));
  std::uint64_t lifts = 0;
  for (const Z4Point& b : {base_z4, z4.torsion_t()}) {
    KummerZ4 k(z4, b);
    for (const Z4Point& q : zpts) {
      const KumPair pr = k.embed(q);
      if (!k.on_oriented(pr) || !z4.eq(k.lift(pr), q)) {
        r.fail("z4 pair map not inverted by its lift");
        return r;
      }
      ++lifts;
    }
  }
  for (const Mu4Point& b : {base_mu4, split.torsion_t()}) {
    KummerMu4 k(split, b);
    for (const Mu4Point& q : mpts) {
      const KumPair pr = k.embed(q);
      if (!k.on_oriented(pr) || !split.eq(k.lift(pr), q)) {
        r.fail("mu4 pair map not inverted by its lift");
        return r;
      }
      ++lifts;
    }
  }

  r.detail = "quotient iso exhaustive on GF(2^5) + randomized on GF(2^17), "
             "GF(2^163); pair maps lift-inverted for " +
             std::to_string(lifts) + " embeddings";
  return r;
}

// --- criterion 5: exceptional divisors ----------------------------------------

// One addition law's sweep: returns the unique vanishing translate index
// (0..3 for O,T,2T,3T) or -1 on any violation.
template <class Curve, class Point, class Vanishes>
int vanishing_translate(const Curve& c, const std::vector<Point>& pts,
                        Vanishes&& vanished, std::string* why) {
  const Point orbit[4] = {c.identity(), c.torsion_t(), c.torsion_2t(),
                          c.torsion_3t()};
  int found = -1;
  for (const Point& p : pts) {
    for (const Point& q : pts) {
      const Point diff = c.add(p, c.neg(q));  // the diagonal x - y = nT
      int diag = -1;
      for (int i = 0; i < 4; ++i) {
        if (c.eq(diff, orbit[i])) {
          diag = i;
          break;
        }
      }
      const bool v = vanished(p, q);
      if (v) {
        if (diag < 0) {
          *why = "law vanished off every torsion diagonal";
          return -1;
        }
        if (found >= 0 && found != diag) {
          *why = "law vanished on two distinct diagonals";
          return -1;
        }
        found = diag;
      } else if (diag >= 0 && found == diag) {
        *why = "law nonzero on part of its own diagonal";
        return -1;
      }
    }
  }
  if (found < 0) {
    *why = "law vanished nowhere";
    return -1;
  }
  return found;
}

Result criterion5() {
  Result r;
  FieldContext F = FieldContext::standard(5);
  const FieldElement c = F.from_uint(2);
  Mu4Curve split(F, c);
  Z4Curve z4 = split.z4_curve();
  const WsCurve& w = split.ws_curve();
  std::vector<Mu4Point> mpts;
  std::vector<Z4Point> zpts;
  for (const WsPoint& P : ws_all_points(w)) {
    mpts.push_back(mu4_from_ws(split, P));
    zpts.push_back(z4_from_ws(z4, P));
  }
  const char* names[4] = {"O", "T", "2T", "3T"};
  std::string why;

  // The quotient model's two-law bases, one per coordinate projection.
  for (int proj = 1; proj <= 2; ++proj) {
    std::set<int> in_basis;
    for (int law = 1; law <= 2; ++law) {
      const int diag = vanishing_translate(
          z4, zpts,
          [&](const Z4Point& p, const Z4Point& q) {
            const ProjLine o = z4.add_law(proj, law, p, q);
            return F.is_zero(o.a) && F.is_zero(o.b);
          },
          &why);
      if (diag < 0) {
        r.fail("z4 projection " + std::to_string(proj) + " law " +
               std::to_string(law) + ": " + why);
        return r;
      }
      in_basis.insert(diag);
      r.report.push_back(std::string("  z4 proj ") + std::to_string(proj) +
                         " law " + std::to_string(law) + " vanishes at " +
                         names[diag]);
    }
    if (in_basis.size() != 2) {
      r.fail("z4 projection " + std::to_string(proj) +
             ": translates not distinct within the basis");
      return r;
    }
  }

  // The split model's four-law basis; law 1 is pinned to 2T = (0:1:c:1).
  std::set<int> translates;
  for (int law = 1; law <= 4; ++law) {
    const int diag = vanishing_translate(
        split, mpts,
        [&](const Mu4Point& p, const Mu4Point& q) {
          const Mu4Point o = split.add_law(law, p, q);
          return F.is_zero(o.X[0]) && F.is_zero(o.X[1]) &&
                 F.is_zero(o.X[2]) && F.is_zero(o.X[3]);
        },
        &why);
    if (diag < 0) {
      r.fail("mu4 law " + std::to_string(law) + ": " + why);
      return r;
    }
    translates.insert(diag);
    r.report.push_back(std::string("  mu4 law ") + std::to_string(law) +
                       " vanishes at " + names[diag]);
    if (law == 1) {
      const Mu4Point two_t =
          split.point(F.zero(), F.one(), c, F.one());  // (0:1:c:1)
      if (diag != 2 || !split.eq(split.torsion_2t(), two_t)) {
        r.fail("mu4 law 1 must vanish exactly at 2T = (0:1:c:1)");
        return r;
      }
    }
  }
  if (translates.size() != 4) {
    r.fail("mu4 translates not pairwise distinct");
    return r;
  }
  r.detail = "each law vanishes on exactly one translate diagonal x - y = nT "
             "(exhaustive GF(2^5))";
  return r;
}

// --- criterion 6: ladder recovery vs oracle ------------------------------------

Result criterion6() {
  Result r;
  std::uint64_t cases = 0;

  for (unsigned m : {11u, 17u, 163u}) {
    FieldContext F = FieldContext::standard(m);
    SplitMix64 rng(0x1adde7 ^ m);
    Mu4Curve split(F, random_nonzero(F, rng));
    Z4Curve z4 = split.z4_curve();
    const WsCurve& w = split.ws_curve();

    // Random (n, P) cases, alternating models; fresh base every 10 cases.
    int i = 0;
    while (i < 1000) {
      const WsPoint Pw = ws_random_point(w, rng);
      if ((i / 10) % 2 == 0) {
        const Z4Point P = z4_from_ws(z4, Pw);
        KummerZ4 k = [&] {
          try {
            return KummerZ4(z4, P);
          } catch (const UnsupportedBaseError&) {
            return KummerZ4(z4, z4.add(P, z4.torsion_t()));  // order > 2 now
          }
        }();
        for (int j = 0; j < 10 && i < 1000; ++j, ++i, ++cases) {
          const std::uint64_t n = rng.next();
          const auto variant = (i & 1) ? LadderVariant::mul_rich
                                       : LadderVariant::square_rich;
          const WsPoint Rw = ws_smul(w, n, z4_to_ws(z4, k.base()));
          if (!z4.eq(k.smul_recover(n, nullptr, variant),
                     z4_from_ws(z4, Rw))) {
            r.fail("z4 recovery mismatch on GF(2^" + std::to_string(m) + ")");
            return r;
          }
        }
      } else {
        const Mu4Point P = mu4_from_ws(split, Pw);
        KummerMu4 k = [&] {
          try {
            return KummerMu4(split, P);
          } catch (const UnsupportedBaseError&) {
            return KummerMu4(split, split.add(P, split.torsion_t()));
          }
        }();
        for (int j = 0; j < 10 && i < 1000; ++j, ++i, ++cases) {
          const std::uint64_t n = rng.next();
          const auto variant = (i & 1) ? LadderVariant::mul_rich
                                       : LadderVariant::square_rich;
          const WsPoint Rw = ws_smul(w, n, mu4_to_ws(split, k.base()));
          if (!split.eq(k.smul_recover(n, nullptr, variant),
                        mu4_from_ws(split, Rw))) {
            r.fail("mu4 recovery mismatch on GF(2^" + std::to_string(m) + ")");
            return r;
          }
        }
      }
    }

    // Edge scalars: 0, 1, 2 everywhere; around the base order on the small
    // fields (brute-force order stays cheap there).
    Z4Point P = z4_random_point(z4, rng);
    for (;;) {
      try {
        KummerZ4 probe(z4, P);
        break;
      } catch (const UnsupportedBaseError&) {
        P = z4_random_point(z4, rng);
      }
    }
    KummerZ4 k(z4, P);
    std::vector<std::uint64_t> edges = {0, 1, 2};
    if (m <= 17) {
      const std::uint64_t ord = z4_order(z4, P);
      edges.push_back(ord);
      edges.push_back(ord - 1);
      edges.push_back(ord + 1);
    }
    const WsPoint Pw = z4_to_ws(z4, P);
    for (std::uint64_t n : edges) {
      if (!z4.eq(k.smul_recover(n), z4_from_ws(z4, ws_smul(w, n, Pw)))) {
        r.fail("edge scalar " + std::to_string(n) + " mismatch on GF(2^" +
               std::to_string(m) + ")");
        return r;
      }
      ++cases;
    }
  }

  // Per-bit meter deltas must not depend on the bit value: at every position
  // of a ladder, metering a 0-step and a 1-step from the same state gives
  // identical deltas (both variants, both models).
  {
    FieldContext F = FieldContext::standard(17);
    SplitMix64 rng(0xb175a3e);
    Mu4Curve split(F, random_nonzero(F, rng));
    Z4Curve z4 = split.z4_curve();
    const std::uint64_t n = 0x9e3779b97f4a7c15ull;
    for (auto variant :
         {LadderVariant::square_rich, LadderVariant::mul_rich}) {
      KummerZ4 kz = [&] {
        for (;;) {
          try {
            return KummerZ4(z4, z4_random_point(z4, rng));
          } catch (const UnsupportedBaseError&) {
          }
        }
      }();
      KummerMu4 km = [&] {
        for (;;) {
          try {
            return KummerMu4(split, mu4_random_point(split, rng));
          } catch (const UnsupportedBaseError&) {
          }
        }
      }();
      KumPair sz = kz.embed(kz.base());
      KumPair sm = km.embed(km.base());
      for (int i = 63; i >= 0; --i) {
        OpMeter m0, m1;
        kz.step(false, sz, &m0, variant);
        kz.step(true, sz, &m1, variant);
        if (!(m0 == m1)) {
          r.fail("z4 step meter depends on the bit value");
          return r;
        }
        km.step(false, sm, &m0, variant);
        km.step(true, sm, &m1, variant);
        if (!(m0 == m1)) {
          r.fail("mu4 step meter depends on the bit value");
          return r;
        }
        const bool bit = (n >> i) & 1;
        sz = kz.step(bit, sz, nullptr, variant);
        sm = km.step(bit, sm, nullptr, variant);
      }
    }
  }

  r.detail = std::to_string(cases) +
             " recoveries vs oracle, 0 mismatches; per-bit meters "
             "bit-independent at all 64 positions (both variants)";
  return r;
}

// --- criterion 7: torsion orbit tables ----------------------------------------

Result criterion7() {
  Result r;
  int tables = 0;
  for (unsigned m : {5u, 17u}) {
    FieldContext F = FieldContext::standard(m);
    SplitMix64 rng(0x70125107 ^ m);
    for (int rep = 0; rep < 3; ++rep) {
      const FieldElement c = random_nonzero(F, rng);

      // Quotient model: the orbit listing is parameter-independent.
      Z4Curve z4(F, c);
      const Z4Point zo[4] = {
          z4.point(F.one(), F.zero(), F.zero(), F.one()),    // (1:0:0:1)
          z4.point(F.one(), F.one(), F.zero(), F.zero()),    // (1:1:0:0)
          z4.point(F.zero(), F.one(), F.one(), F.zero()),    // (0:1:1:0)
          z4.point(F.zero(), F.zero(), F.one(), F.one())};   // (0:0:1:1)
      if (!z4.eq(z4.identity(), zo[0]) || !z4.eq(z4.torsion_t(), zo[1]) ||
          !z4.eq(z4.torsion_2t(), zo[2]) || !z4.eq(z4.torsion_3t(), zo[3])) {
        r.fail("z4 orbit listing differs from "
               "{(1:0:0:1),(1:1:0:0),(0:1:1:0),(0:0:1:1)}");
        return r;
      }
      if (!z4.eq(z4.smul(4, z4.torsion_t()), z4.identity()) ||
          z4.eq(z4.dbl(z4.torsion_t()), z4.identity()) ||
          !z4.eq(z4.dbl(z4.torsion_t()), z4.torsion_2t()) ||
          !z4.eq(z4.smul(3, z4.torsion_t()), z4.torsion_3t())) {
        r.fail("z4 <T> is not cyclic of order exactly 4");
        return r;
      }

      // Split model: O = (c:1:0:1), T = (1:c:1:0), 2T = (0:1:c:1),
      // 3T = (1:0:1:c).
      Mu4Curve mu(F, c);
      const Mu4Point mo[4] = {
          mu.point(c, F.one(), F.zero(), F.one()),
          mu.point(F.one(), c, F.one(), F.zero()),
          mu.point(F.zero(), F.one(), c, F.one()),
          mu.point(F.one(), F.zero(), F.one(), c)};
      if (!mu.eq(mu.identity(), mo[0]) || !mu.eq(mu.torsion_t(), mo[1]) ||
          !mu.eq(mu.torsion_2t(), mo[2]) || !mu.eq(mu.torsion_3t(), mo[3])) {
        r.fail("mu4 orbit listing differs from O/T/2T/3T in the parameter c");
        return r;
      }
      if (!mu.eq(mu.smul(4, mu.torsion_t()), mu.identity()) ||
          mu.eq(mu.dbl(mu.torsion_t()), mu.identity()) ||
          !mu.eq(mu.dbl(mu.torsion_t()), mu.torsion_2t())) {
        r.fail("mu4 <T> is not cyclic of order exactly 4");
        return r;
      }

      // Nonsplit companion: O = (1:1:0:1), 2T = (0:1:1:1), with c^2 in the
      // odd translates.
      Mu4NsCurve ns = mu.nonsplit_curve();
      const FieldElement c2 = ns.c2();
      if (!ns.eq(ns.identity(),
                 ns.point(F.one(), F.one(), F.zero(), F.one())) ||
          !ns.eq(ns.torsion_t(), ns.point(F.one(), c2, F.one(), F.zero())) ||
          !ns.eq(ns.torsion_2t(),
                 ns.point(F.zero(), F.one(), F.one(), F.one())) ||
          !ns.eq(ns.torsion_3t(), ns.point(F.one(), F.zero(), F.one(), c2))) {
        r.fail("mu4ns orbit listing differs from its table");
        return r;
      }
      if (!ns.eq(ns.smul(4, ns.torsion_t()), ns.identity()) ||
          ns.eq(ns.dbl(ns.torsion_t()), ns.identity())) {
        r.fail("mu4ns <T> is not cyclic of order exactly 4");
        return r;
      }
      ++tables;
    }
  }
  r.detail = std::to_string(tables) +
             " curves x 3 models match the orbit listings verbatim; "
             "[4]T = O and [2]T != O everywhere";
  return r;
}

// --- criterion 8: complexity table + unthresholded benchmarks -----------------

double median_ns(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  return xs[xs.size() / 2];
}

template <class Op>
double time_ns_per_op(Op&& op, int batch = 128, int samples = 9) {
  std::vector<double> ns;
  std::uint64_t sink = 0;
  for (int s = 0; s < samples; ++s) {
    const auto t0 = clock_type::now();
    for (int j = 0; j < batch; ++j) {
      sink = (sink << 1 | sink >> 63) ^ op(j);
    }
    const auto t1 = clock_type::now();
    ns.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count() /
                 batch);
  }
  if (sink == 0x5a5a5a5a5a5a5a5aull) {  // defeat dead-code elimination
    std::cerr << "";
  }
  return median_ns(ns);
}

Result criterion8() {
  Result r;

  // The documented table: exactly the two in-scope rows are implemented, and
  // their cost strings are the ones criterion 1 verifies exactly.
  const auto& table = complexity_table();
  if (table.size() != 6) {
    r.fail("complexity table must carry exactly 6 rows");
    return r;
  }
  int implemented = 0;
  for (const ModelCosts& row : table) {
    if (row.model == "z4-normal") {
      if (!row.implemented || row.doubling != "7M + 2S" ||
          row.addition != "12M") {
        r.fail("z4-normal row mismatch");
        return r;
      }
      ++implemented;
    } else if (row.model == "mu4-normal") {
      if (!row.implemented || row.doubling != "2M + 5S + 2m" ||
          row.addition != "7M + 2S") {
        r.fail("mu4-normal row mismatch");
        return r;
      }
      ++implemented;
    } else if (row.implemented) {
      r.fail("out-of-scope model '" + row.model + "' claims implementation");
      return r;
    }
  }
  if (implemented != 2) {
    r.fail("expected exactly the two implemented rows");
    return r;
  }

  // The implemented rows are backed by the exact-count claims.
  for (const CostReport& cr :
       run_cost_suite(FieldContext::standard(17), 0xc0575)) {
    if (!cr.pass) {
      r.fail("claim '" + cr.claim.label + "' failed");
      return r;
    }
  }

  // Wall-clock numbers are reported, never judged.
  FieldContext F = FieldContext::standard(233);
  SplitMix64 rng(0xbe4c4);
  Mu4Curve split(F, random_nonzero(F, rng));
  Z4Curve z4 = split.z4_curve();
  std::vector<std::pair<Mu4Point, Mu4Point>> mpool;
  std::vector<std::pair<Z4Point, Z4Point>> zpool;
  for (int i = 0; i < 32; ++i) {
    mpool.emplace_back(mu4_random_point(split, rng),
                       mu4_random_point(split, rng));
    zpool.emplace_back(z4_random_point(z4, rng), z4_random_point(z4, rng));
  }
  auto fmt = [](double ns) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0f", ns);
    return std::string(buf);
  };
  r.report.push_back(
      "  bench GF(2^233) mu4 add:    " +
      fmt(time_ns_per_op([&](int j) {
        const auto& [a, b] = mpool[j & 31];
        return split.add(a, b).X[0].w[0];
      })) +
      " ns/op (informational)");
  r.report.push_back(
      "  bench GF(2^233) mu4 double: " +
      fmt(time_ns_per_op(
          [&](int j) { return split.dbl(mpool[j & 31].first).X[0].w[0]; })) +
      " ns/op (informational)");
  r.report.push_back(
      "  bench GF(2^233) z4 add:     " +
      fmt(time_ns_per_op([&](int j) {
        const auto& [a, b] = zpool[j & 31];
        return z4.add(a, b).X[0].w[0];
      })) +
      " ns/op (informational)");
  r.report.push_back(
      "  bench GF(2^233) z4 double:  " +
      fmt(time_ns_per_op(
          [&](int j) { return z4.dbl(zpool[j & 31].first).X[0].w[0]; })) +
      " ns/op (informational)");
  KummerMu4 k = [&] {
    for (;;) {
      try {
        return KummerMu4(split, mu4_random_point(split, rng));
      } catch (const UnsupportedBaseError&) {
      }
    }
  }();
  std::vector<std::uint64_t> scalars;
  for (int i = 0; i < 8; ++i) {
    scalars.push_back(rng.next());
  }
  r.report.push_back(
      "  bench GF(2^233) mu4 ladder: " +
      fmt(time_ns_per_op(
              [&](int j) { return k.ladder(scalars[j & 7]).q.u0.w[0]; },
              /*batch=*/4, /*samples=*/5) /
          64) +
      " ns/bit (informational)");

  r.detail = "two implemented rows verified by exact claims; "
             "out-of-scope rows documented only; timings reported without "
             "thresholds";
  return r;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* title;
    Result (*fn)();
  };
  const Entry entries[] = {
      {1, "exact operation counts", criterion1},
      {2, "exhaustive oracle agreement (GF(2^3), GF(2^5))", criterion2},
      {3, "randomized oracle agreement (GF(2^11), GF(2^17), GF(2^163))",
       criterion3},
      {4, "model isomorphisms mutually inverse", criterion4},
      {5, "addition-law exceptional divisors", criterion5},
      {6, "ladder recovery vs oracle; bit-independent meters", criterion6},
      {7, "torsion orbit tables verbatim", criterion7},
      {8, "complexity table on implemented rows; unthresholded benchmarks",
       criterion8},
  };

  int failures = 0;
  for (const Entry& e : entries) {
    const auto t0 = clock_type::now();
    Result res;
    try {
      res = e.fn();
    } catch (const std::exception& ex) {
      res.ok = false;
      res.detail = std::string("unexpected exception: ") + ex.what();
    }
    const double secs =
        std::chrono::duration<double>(clock_type::now() - t0).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << "criterion " << e.id << ": " << (res.ok ? "PASS" : "FAIL")
              << " — " << e.title << " (" << res.detail << "; " << timing
              << ")\n";
    for (const std::string& line : res.report) {
      std::cout << line << "\n";
    }
    if (!res.ok) {
      ++failures;
    }
  }
  std::cout << "acceptance: " << (8 - failures) << "/8 criteria passed\n";
  return failures == 0 ? 0 : 1;
}
