// SPDX-License-Identifier: MIT
// Command-line front end: curve construction, point arithmetic, scalar
// multiplication (complete double-and-add or oriented ladder with point
// recovery), model conversion, test vectors, cost reports, benchmarks.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "binform/binfield.hpp"
#include "binform/costsuite.hpp"
#include "binform/errors.hpp"
#include "binform/kummer.hpp"
#include "binform/mu4form.hpp"
#include "binform/opmeter.hpp"
#include "binform/wsref.hpp"
#include "binform/z4form.hpp"
#include "model_ops.hpp"
#include "vectors.hpp"

namespace {

using namespace binform;
using namespace binform::cli;

// --field, overridden by the BINFORM_DEFAULT_FIELD environment variable;
// "17" when neither is given.
FieldContext resolve_field(const std::string& cli_spec) {
  const char* env = std::getenv("BINFORM_DEFAULT_FIELD");
  std::string spec = (env && *env) ? std::string(env) : cli_spec;
  if (spec.empty()) {
    spec = "17";
  }
  return FieldContext::parse(spec);
}

std::uint64_t parse_scalar_arg(const std::string& text) {
  if (text.empty() || text[0] == '-' || text[0] == '+') {
    throw ValidationError("scalar '" + text + "' is not an unsigned integer");
  }
  const bool hex = text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0;
  try {
    std::size_t used = 0;
    std::uint64_t n = std::stoull(text, &used, hex ? 16 : 10);
    if (used != text.size()) {
      throw ValidationError("trailing characters in scalar '" + text + "'");
    }
    return n;
  } catch (const std::invalid_argument&) {
    throw ValidationError("scalar '" + text + "' is not an unsigned integer");
  } catch (const std::out_of_range&) {
    throw ValidationError("scalar '" + text + "' exceeds 64 bits");
  }
}

// One metered ladder over all 64 scalar bits, printing a per-bit meter
// delta; returns [n]P recovered from the final state.
template <class Kum, class Curve, class Point>
Point traced_ladder(const Curve& c, const Kum& k, std::uint64_t n,
                    const Point& p) {
  KumPair state = k.embed(p);  // (line(P), line(O))
  OpMeter meter;
  OpMeter prev;
  for (int i = 63; i >= 0; --i) {
    const bool bit = (n >> i) & 1;
    state = k.step(bit, state, &meter);
    std::cout << "trace bit=" << i << " value=" << bit
              << " meter=" << meter.delta_since(prev).to_json() << "\n";
    prev = meter;
  }
  std::cout << "trace total meter=" << meter.to_json()
            << " state=" << pair_str(c.field(), state) << "\n";
  return c.add(k.lift(state), c.neg(p));
}

template <class Curve, class Point>
void run_smul(const Curve& c, std::uint64_t n, const Point& p,
              const std::string& method, bool trace) {
  if (method == "double-add") {
    std::cout << pstr(c, c.smul(n, p)) << "\n";
    return;
  }
  if (method != "ladder") {
    throw ValidationError("unknown method '" + method +
                          "' (want ladder or double-add)");
  }
  if (!trace) {
    bool used_fallback = false;
    Point r = smul_ladder(c, n, p, &used_fallback);
    if (used_fallback) {
      std::cerr << "note: 2-torsion base has no ladder orientation; "
                   "computed by double-and-add\n";
    }
    std::cout << pstr(c, r) << "\n";
    return;
  }
  using C = std::decay_t<Curve>;
  try {
    if constexpr (std::is_same_v<C, Z4Curve>) {
      KummerZ4 k(c, p);
      std::cout << pstr(c, traced_ladder(c, k, n, p)) << "\n";
    } else if constexpr (std::is_same_v<C, Mu4Curve>) {
      KummerMu4 k(c, p);
      std::cout << pstr(c, traced_ladder(c, k, n, p)) << "\n";
    } else {
      Mu4Curve sc = c.split_curve();
      Mu4Point sp = to_split(c, p);
      KummerMu4 k(sc, sp);
      std::cout << pstr(c, to_nonsplit(sc, traced_ladder(sc, k, n, sp)))
                << "\n";
    }
  } catch (const UnsupportedBaseError&) {
    std::cerr << "note: 2-torsion base has no ladder orientation; "
                 "computed by double-and-add (no trace)\n";
    std::cout << pstr(c, c.smul(n, p)) << "\n";
  }
}

double median_of(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

struct Timing {
  double median_ns = 0, min_ns = 0, max_ns = 0;
  std::uint64_t sink = 0;  // folds every result so the loop cannot vanish
};

// Times `op()` (one sample = kBatch calls) and reports ns per call.
template <class Op>
Timing time_op(std::uint64_t iters, int batch, Op&& op) {
  using clock = std::chrono::steady_clock;
  Timing t;
  std::vector<double> samples;
  samples.reserve(iters);
  for (std::uint64_t it = 0; it < iters; ++it) {
    auto t0 = clock::now();
    for (int j = 0; j < batch; ++j) {
      // Rotate-and-xor so repeated inputs cannot cancel out of the fold.
      t.sink = (t.sink << 1 | t.sink >> 63) ^ op(j);
    }
    auto t1 = clock::now();
    samples.push_back(
        std::chrono::duration<double, std::nano>(t1 - t0).count() / batch);
  }
  t.median_ns = median_of(samples);
  t.min_ns = *std::min_element(samples.begin(), samples.end());
  t.max_ns = *std::max_element(samples.begin(), samples.end());
  return t;
}

void print_timing_line(const std::string& label, const Timing& t,
                       const std::string& per_bit_note) {
  std::cout << "timing (nondeterministic): median=" << std::fixed
            << std::setprecision(1) << t.median_ns << " " << label
            << per_bit_note << " min=" << t.min_ns << " max=" << t.max_ns
            << "\n";
  std::cout << "checksum: 0x" << std::hex << t.sink << std::dec << "\n";
}

// Deterministic meter section from the claim suite, then wall-clock timing.
void run_bench(const FieldContext& F, const std::string& model,
               const std::string& op, std::uint64_t iters,
               std::uint64_t seed) {
  if (iters == 0) {
    iters = 1;
  }
  SplitMix64 rng(seed);
  FieldElement param = F.random_element(rng);
  while (F.is_zero(param)) {
    param = F.random_element(rng);
  }

  const int kBatch = op == "ladder" ? 1 : 256;
  std::cout << "bench: model=" << model << " op=" << op
            << " field=" << F.spec_string() << " iters=" << iters
            << " batch=" << kBatch << " seed=" << seed << "\n";

  if (op == "add" || op == "double") {
    // The matching claim from the standard suite doubles as the meter
    // section: exact counts, independent of timing noise.
    auto reports = run_cost_suite(F, seed);
    const int idx = model == "mu4"   ? (op == "add" ? 0 : 1)
                    : model == "mu4ns" ? (op == "add" ? 3 : 2)
                    : model == "z4"    ? (op == "add" ? 4 : 5)
                                       : -1;
    if (idx < 0) {
      throw ValidationError("unknown model '" + model +
                            "' (want z4, mu4 or mu4ns)");
    }
    const CostReport& r = reports[idx];
    std::cout << "deterministic meter/op: " << r.observed.to_json()
              << "  [claim: " << r.claim.label << " — "
              << (r.pass ? "pass" : "FAIL") << "]\n";

    with_model(F, model, param, [&](const auto& c) {
      using Point = decltype(c.identity());
      std::vector<std::pair<Point, Point>> pool;
      for (int i = 0; i < 64; ++i) {
        pool.emplace_back(rand_pt(c, rng), rand_pt(c, rng));
      }
      Timing t = time_op(iters, kBatch, [&](int j) {
        const auto& [a, b] = pool[j & 63];
        Point r2 = op == "add" ? c.add(a, b) : c.dbl(a);
        return r2.X[0].w[0];
      });
      print_timing_line("ns/op", t, "");
    });
    return;
  }

  if (op != "ladder") {
    throw ValidationError("unknown op '" + op +
                          "' (want add, double or ladder)");
  }

  // Ladder: meter one full 64-bit run directly; per-bit counts divide
  // exactly (both bit values execute the same sequence).
  with_model(F, model, param, [&](const auto& c) {
    using C = std::decay_t<decltype(c)>;
    auto bench_kummer = [&](const auto& k) {
      OpMeter meter;
      KumPair warm = k.ladder(rng.next(), &meter);
      (void)warm;
      OpMeter bit{meter.M / 64, meter.S / 64,   meter.m_c / 64,
                  meter.m_t / 64, meter.I / 64, meter.A / 64};
      std::cout << "deterministic meter/ladder(64-bit): " << meter.to_json()
                << "\n";
      std::cout << "deterministic meter/bit: " << bit.to_json() << "\n";
      std::vector<std::uint64_t> scalars;
      for (int i = 0; i < 16; ++i) {
        scalars.push_back(rng.next());
      }
      std::size_t next = 0;
      Timing t = time_op(iters, 1, [&](int) {
        KumPair s = k.ladder(scalars[next++ & 15]);
        return s.q.u0.w[0];
      });
      std::ostringstream per_bit;
      per_bit << " (" << std::fixed << std::setprecision(1)
              << t.median_ns / 64 << " ns/bit)";
      print_timing_line("ns/ladder", t, per_bit.str());
    };
    if constexpr (std::is_same_v<C, Z4Curve>) {
      for (;;) {
        try {
          bench_kummer(KummerZ4(c, rand_pt(c, rng)));
          break;
        } catch (const UnsupportedBaseError&) {
        }
      }
    } else if constexpr (std::is_same_v<C, Mu4Curve>) {
      for (;;) {
        try {
          bench_kummer(KummerMu4(c, rand_pt(c, rng)));
          break;
        } catch (const UnsupportedBaseError&) {
        }
      }
    } else {
      Mu4Curve sc = c.split_curve();
      for (;;) {
        try {
          bench_kummer(KummerMu4(sc, rand_pt(sc, rng)));
          break;
        } catch (const UnsupportedBaseError&) {
        }
      }
    }
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "arithmetic on binary-field elliptic curves in quartic normal forms: "
      "complete addition laws, oriented ladders with point recovery, model "
      "conversions, exact operation counting"};
  app.require_subcommand(1);
  int rc = 0;

  struct Shared {
    std::string field;
    std::uint64_t seed = 1;
  };
  auto add_shared = [](CLI::App* sub, Shared& s) {
    sub->add_option("--field", s.field,
                    "field spec 'm' or 'm:0xhex' (default 17; the "
                    "BINFORM_DEFAULT_FIELD environment variable overrides)");
    sub->add_option("--seed", s.seed, "seed for any randomized inputs");
  };

  // field -------------------------------------------------------------------
  Shared field_s;
  auto* sub_field =
      app.add_subcommand("field", "print the resolved field parameters");
  add_shared(sub_field, field_s);
  sub_field->callback([&] {
    FieldContext F = resolve_field(field_s.field);
    std::cout << "field: m=" << F.degree() << " modulus=" << F.modulus_hex()
              << " words=" << F.words() << " spec=" << F.spec_string()
              << "\n";
  });

  // curve ---------------------------------------------------------------
  Shared curve_s;
  std::string curve_model, curve_param_hex;
  auto* sub_curve = app.add_subcommand(
      "curve", "print curve invariants and the <T> torsion orbit");
  add_shared(sub_curve, curve_s);
  sub_curve->add_option("--model", curve_model, "z4 | mu4 | mu4ns")
      ->required();
  sub_curve->add_option("--param", curve_param_hex, "curve parameter (hex)")
      ->required();
  sub_curve->callback([&] {
    FieldContext F = resolve_field(curve_s.field);
    with_model(F, curve_model, F.from_hex(curve_param_hex),
               [&](const auto& c) {
                 std::cout << "curve: model=" << curve_model
                           << " param=" << F.to_hex(curve_param(c))
                           << " field=" << F.spec_string() << "\n";
                 std::cout << "j-invariant: " << F.to_hex(c.j_invariant())
                           << "\n";
                 WsCurve w = assoc_ws(c);
                 std::cout << "weierstrass: y^2 + xy = x^3 + "
                           << F.to_hex(w.a4) << "*x\n";
                 auto t = torsion_orbit_strs(c);
                 std::cout << "O: " << t[0] << "\nT: " << t[1]
                           << "\n2T: " << t[2] << "\n3T: " << t[3] << "\n";
               });
  });

  // add -----------------------------------------------------------------
  Shared add_s;
  std::string add_model, add_param_hex;
  std::vector<std::string> add_points;
  auto* sub_add =
      app.add_subcommand("add", "add two points with the complete law");
  add_shared(sub_add, add_s);
  sub_add->add_option("--model", add_model, "z4 | mu4 | mu4ns")->required();
  sub_add->add_option("--param", add_param_hex, "curve parameter (hex)")
      ->required();
  sub_add
      ->add_option("--point", add_points,
                   "the two addends (repeat the flag or pass two values)")
      ->required();
  sub_add->callback([&] {
    if (add_points.size() != 2) {
      throw ValidationError("add needs exactly two --point values");
    }
    FieldContext F = resolve_field(add_s.field);
    with_model(F, add_model, F.from_hex(add_param_hex), [&](const auto& c) {
      auto p = parse_point(c, add_points[0]);
      auto q = parse_point(c, add_points[1]);
      std::cout << pstr(c, c.add(p, q)) << "\n";
    });
  });

  // double ----------------------------------------------------------------
  Shared dbl_s;
  std::string dbl_model, dbl_param_hex, dbl_point;
  auto* sub_dbl = app.add_subcommand("double", "double a point");
  add_shared(sub_dbl, dbl_s);
  sub_dbl->add_option("--model", dbl_model, "z4 | mu4 | mu4ns")->required();
  sub_dbl->add_option("--param", dbl_param_hex, "curve parameter (hex)")
      ->required();
  sub_dbl->add_option("--point", dbl_point, "the point to double")
      ->required();
  sub_dbl->callback([&] {
    FieldContext F = resolve_field(dbl_s.field);
    with_model(F, dbl_model, F.from_hex(dbl_param_hex), [&](const auto& c) {
      std::cout << pstr(c, c.dbl(parse_point(c, dbl_point))) << "\n";
    });
  });

  // smul ----------------------------------------------------------------
  Shared smul_s;
  std::string smul_model, smul_param_hex, smul_point, smul_scalar;
  std::string smul_method = "ladder";
  bool smul_trace = false;
  auto* sub_smul = app.add_subcommand(
      "smul", "scalar multiple [n]P (oriented ladder or double-and-add)");
  add_shared(sub_smul, smul_s);
  sub_smul->add_option("--model", smul_model, "z4 | mu4 | mu4ns")->required();
  sub_smul->add_option("--param", smul_param_hex, "curve parameter (hex)")
      ->required();
  sub_smul->add_option("--point", smul_point, "the base point")->required();
  sub_smul
      ->add_option("--scalar", smul_scalar, "n, decimal or 0x-hex (64-bit)")
      ->required();
  sub_smul->add_option("--method", smul_method, "ladder | double-add");
  sub_smul->add_flag("--trace", smul_trace,
                     "print a per-bit meter trace (ladder only)");
  sub_smul->callback([&] {
    if (smul_trace && smul_method != "ladder") {
      throw ValidationError("--trace requires --method ladder");
    }
    FieldContext F = resolve_field(smul_s.field);
    std::uint64_t n = parse_scalar_arg(smul_scalar);
    with_model(F, smul_model, F.from_hex(smul_param_hex), [&](const auto& c) {
      run_smul(c, n, parse_point(c, smul_point), smul_method, smul_trace);
    });
  });

  // convert -------------------------------------------------------------
  Shared conv_s;
  std::string conv_from, conv_to, conv_param_hex, conv_point;
  auto* sub_conv = app.add_subcommand(
      "convert", "map a point between models (z4, mu4, mu4ns, ws)");
  add_shared(sub_conv, conv_s);
  sub_conv->add_option("--from", conv_from, "source model")->required();
  sub_conv->add_option("--to", conv_to, "target model")->required();
  sub_conv
      ->add_option("--param", conv_param_hex,
                   "source curve parameter in hex (target's when the source "
                   "is ws); companion parameters are derived (e = c^2, "
                   "s = c^-4)")
      ->required();
  sub_conv->add_option("--point", conv_point, "point in the source encoding")
      ->required();
  sub_conv->callback([&] {
    FieldContext F = resolve_field(conv_s.field);
    std::cout << convert_point(F, conv_from, conv_to,
                               F.from_hex(conv_param_hex), conv_point)
              << "\n";
  });

  // vectors -------------------------------------------------------------
  Shared vec_s;
  bool vec_emit = false;
  std::string vec_check, vec_out;
  auto* sub_vec = app.add_subcommand(
      "vectors", "emit or replay the canonical test-vector suite");
  add_shared(sub_vec, vec_s);
  sub_vec->add_flag("--emit", vec_emit,
                    "write the canonical JSON suite (fields m = 5, 11, 17)");
  sub_vec->add_option("--check", vec_check,
                      "replay a suite file, one pass/fail line per record");
  sub_vec->add_option("--out", vec_out,
                      "write --emit output to this file instead of stdout");
  sub_vec->callback([&] {
    if (vec_emit == !vec_check.empty()) {
      throw ValidationError("vectors needs exactly one of --emit or --check");
    }
    rc = vec_emit ? vectors_emit(vec_out, vec_s.seed)
                  : vectors_check(vec_check);
  });

  // cost ------------------------------------------------------------------
  Shared cost_s;
  auto* sub_cost = app.add_subcommand(
      "cost", "verify the documented operation counts (one JSON line each)");
  add_shared(sub_cost, cost_s);
  sub_cost->callback([&] {
    FieldContext F = resolve_field(cost_s.field);
    auto reports = run_cost_suite(F, cost_s.seed);
    std::size_t npass = 0;
    for (const CostReport& r : reports) {
      std::cout << r.to_json() << "\n";
      npass += r.pass ? 1 : 0;
    }
    std::cout << "cost: " << npass << "/" << reports.size()
              << " claims pass\n";
    if (npass != reports.size()) {
      rc = 1;
    }
  });

  // bench -----------------------------------------------------------------
  Shared bench_s;
  std::string bench_model = "mu4", bench_op = "add";
  std::uint64_t bench_iters = 101;
  auto* sub_bench = app.add_subcommand(
      "bench", "wall-clock timing plus the exact meter for one operation");
  add_shared(sub_bench, bench_s);
  sub_bench->add_option("--model", bench_model, "z4 | mu4 | mu4ns");
  sub_bench->add_option("--op", bench_op, "add | double | ladder");
  sub_bench->add_option("--iters", bench_iters, "timing samples (default 101)");
  sub_bench->callback([&] {
    run_bench(resolve_field(bench_s.field), bench_model, bench_op,
              bench_iters, bench_s.seed);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const binform::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
