// SPDX-License-Identifier: MIT
#include "vectors.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "binform/binfield.hpp"
#include "binform/errors.hpp"
#include "binform/mu4form.hpp"
#include "binform/z4form.hpp"
#include "model_ops.hpp"

namespace binform::cli {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

FieldElement random_nonzero(const FieldContext& F, SplitMix64& rng) {
  for (;;) {
    FieldElement a = F.random_element(rng);
    if (!F.is_zero(a)) return a;
  }
}

// --- emission ----------------------------------------------------------------

template <class Curve>
ordered_json emit_group(const Curve& curve, const std::string& model,
                        const std::vector<std::string>& convert_targets,
                        SplitMix64& rng) {
  const FieldContext& F = curve.field();
  ordered_json group;
  group["field"] = {{"m", F.degree()}, {"modulus", F.modulus_hex()}};
  group["model"] = model;
  group["param"] = F.to_hex(curve_param(curve));
  ordered_json records = ordered_json::array();

  records.push_back(
      {{"op", "torsion-orbit"}, {"expected", torsion_orbit_strs(curve)}});

  for (int i = 0; i < 6; ++i) {
    auto p = rand_pt(curve, rng);
    auto q = rand_pt(curve, rng);
    records.push_back({{"op", "add"},
                       {"p", pstr(curve, p)},
                       {"q", pstr(curve, q)},
                       {"expected", pstr(curve, curve.add(p, q))}});
  }

  for (int i = 0; i < 4; ++i) {
    auto p = rand_pt(curve, rng);
    records.push_back({{"op", "double"},
                       {"p", pstr(curve, p)},
                       {"expected", pstr(curve, curve.dbl(p))}});
  }

  const std::uint64_t scalars[4] = {0, 1, rng.next() % 100000, rng.next()};
  for (int i = 0; i < 4; ++i) {
    auto p = rand_pt(curve, rng);
    const bool ladder = (i % 2) == 0;
    // Both methods compute the same multiple; the method tag picks the
    // replay path.
    auto r = ladder ? smul_ladder(curve, scalars[i], p)
                    : curve.smul(scalars[i], p);
    records.push_back({{"op", "smul"},
                       {"p", pstr(curve, p)},
                       {"n", std::to_string(scalars[i])},
                       {"method", ladder ? "ladder" : "double-add"},
                       {"expected", pstr(curve, r)}});
  }

  for (const std::string& to : convert_targets) {
    auto p = rand_pt(curve, rng);
    std::string text = pstr(curve, p);
    records.push_back(
        {{"op", "convert"},
         {"to", to},
         {"p", text},
         {"expected", convert_point(F, model, to, curve_param(curve), text)}});
  }

  group["records"] = std::move(records);
  return group;
}

ordered_json emit_suite(std::uint64_t seed) {
  SplitMix64 rng(seed);
  ordered_json suite;
  suite["suite"] = "binform-vectors";
  suite["version"] = 1;
  suite["seed"] = seed;
  ordered_json groups = ordered_json::array();
  for (unsigned m : {5u, 11u, 17u}) {
    FieldContext F = FieldContext::standard(m);
    Mu4Curve split(F, random_nonzero(F, rng));
    groups.push_back(
        emit_group(split.z4_curve(), "z4", {"mu4", "ws"}, rng));
    groups.push_back(emit_group(split, "mu4", {"z4", "mu4ns"}, rng));
    groups.push_back(
        emit_group(split.nonsplit_curve(), "mu4ns", {"mu4", "z4"}, rng));
  }
  suite["groups"] = std::move(groups);
  return suite;
}

// --- checking ----------------------------------------------------------------

struct SchemaError {
  std::string what;
};

const json& need_key(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw SchemaError{std::string("missing key '") + key + "'"};
  }
  return obj.at(key);
}

std::string need_string(const json& obj, const char* key) {
  const json& v = need_key(obj, key);
  if (!v.is_string()) {
    throw SchemaError{std::string("key '") + key + "' is not a string"};
  }
  return v.get<std::string>();
}

std::uint64_t parse_scalar(const std::string& text) {
  std::size_t used = 0;
  std::uint64_t n = 0;
  try {
    n = std::stoull(text, &used, 10);
  } catch (const std::exception&) {
    throw SchemaError{"scalar '" + text + "' is not a decimal uint64"};
  }
  if (used != text.size()) {
    throw SchemaError{"scalar '" + text + "' is not a decimal uint64"};
  }
  return n;
}

// Replays one record against its curve; returns the failure message, empty
// on pass.  Schema problems throw SchemaError.
template <class Curve>
std::string replay_record(const Curve& curve, const std::string& model,
                          const json& rec) {
  const std::string op = need_string(rec, "op");
  auto mismatch = [](const std::string& want,
                     const std::string& got) -> std::string {
    return "expected " + want + ", got " + got;
  };

  if (op == "torsion-orbit") {
    const json& exp = need_key(rec, "expected");
    if (!exp.is_array() || exp.size() != 4) {
      throw SchemaError{"'expected' is not a 4-element array"};
    }
    std::vector<std::string> got = torsion_orbit_strs(curve);
    for (int i = 0; i < 4; ++i) {
      if (!exp[i].is_string()) {
        throw SchemaError{"'expected' entries must be strings"};
      }
      if (exp[i].get<std::string>() != got[i]) {
        return mismatch(exp[i].get<std::string>(), got[i]);
      }
    }
    return {};
  }
  if (op == "add") {
    auto p = parse_point(curve, need_string(rec, "p"));
    auto q = parse_point(curve, need_string(rec, "q"));
    std::string want = need_string(rec, "expected");
    std::string got = pstr(curve, curve.add(p, q));
    return want == got ? std::string{} : mismatch(want, got);
  }
  if (op == "double") {
    auto p = parse_point(curve, need_string(rec, "p"));
    std::string want = need_string(rec, "expected");
    std::string got = pstr(curve, curve.dbl(p));
    return want == got ? std::string{} : mismatch(want, got);
  }
  if (op == "smul") {
    auto p = parse_point(curve, need_string(rec, "p"));
    std::uint64_t n = parse_scalar(need_string(rec, "n"));
    std::string method = need_string(rec, "method");
    std::string want = need_string(rec, "expected");
    std::string got;
    if (method == "ladder") {
      got = pstr(curve, smul_ladder(curve, n, p));
    } else if (method == "double-add") {
      got = pstr(curve, curve.smul(n, p));
    } else {
      throw SchemaError{"unknown smul method '" + method + "'"};
    }
    return want == got ? std::string{} : mismatch(want, got);
  }
  if (op == "convert") {
    std::string to = need_string(rec, "to");
    std::string text = need_string(rec, "p");
    std::string want = need_string(rec, "expected");
    std::string got =
        convert_point(curve.field(), model, to, curve_param(curve), text);
    return want == got ? std::string{} : mismatch(want, got);
  }
  throw SchemaError{"unknown op '" + op + "'"};
}

}  // namespace

int vectors_emit(const std::string& out_path, std::uint64_t seed) {
  ordered_json suite = emit_suite(seed);
  if (out_path.empty()) {
    std::cout << suite.dump(2) << "\n";
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return 1;
  }
  out << suite.dump(2) << "\n";
  return 0;
}

int vectors_check(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return 1;
  }
  json suite = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (suite.is_discarded()) {
    std::cerr << "error: '" << path << "' is not valid JSON\n";
    return 1;
  }

  std::size_t passed = 0, failed = 0;
  auto report = [&](std::size_t gi, std::size_t ri, const std::string& msg) {
    if (msg.empty()) {
      ++passed;
      std::cout << "group " << gi << " record " << ri << ": pass\n";
    } else {
      ++failed;
      std::cout << "group " << gi << " record " << ri << ": FAIL (" << msg
                << ")\n";
    }
  };

  if (!suite.is_object() || !suite.contains("groups") ||
      !suite["groups"].is_array()) {
    std::cerr << "error: top level must be an object with a 'groups' array\n";
    return 1;
  }

  const json& groups = suite["groups"];
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const json& g = groups[gi];
    std::string model;
    try {
      model = need_string(g, "model");
      const json& fld = need_key(g, "field");
      const json& m = need_key(fld, "m");
      if (!m.is_number_unsigned()) {
        throw SchemaError{"field.m is not an unsigned integer"};
      }
      std::string modulus = need_string(fld, "modulus");
      FieldContext F = FieldContext::parse(
          std::to_string(m.get<unsigned>()) + ":" + modulus);
      FieldElement param = F.from_hex(need_string(g, "param"));
      const json& records = need_key(g, "records");
      if (!records.is_array()) {
        throw SchemaError{"'records' is not an array"};
      }
      with_model(F, model, param, [&](const auto& curve) {
        for (std::size_t ri = 0; ri < records.size(); ++ri) {
          try {
            report(gi, ri, replay_record(curve, model, records[ri]));
          } catch (const SchemaError& e) {
            ++failed;
            std::cout << "group " << gi << " record " << ri
                      << ": schema error: " << e.what << "\n";
          } catch (const Error& e) {
            report(gi, ri, std::string("error: ") + e.what());
          }
        }
      });
    } catch (const SchemaError& e) {
      ++failed;
      std::cout << "group " << gi << ": schema error: " << e.what << "\n";
    } catch (const Error& e) {
      ++failed;
      std::cout << "group " << gi << ": error: " << e.what() << "\n";
    }
  }

  std::cout << "vectors: " << passed << "/" << (passed + failed)
            << " records pass\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace binform::cli
