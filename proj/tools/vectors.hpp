// SPDX-License-Identifier: MIT
// Canonical test-vector suite: reproducible JSON emission and bit-exact
// replay checking.
#pragma once

#include <cstdint>
#include <string>

namespace binform::cli {

// Writes the canonical suite (fields m in {5, 11, 17}; all three quartic
// models; torsion orbits, additions, doublings, both scalar-multiplication
// methods, conversions) to `out_path`, or to stdout when empty.  The suite
// is a pure function of the seed.
int vectors_emit(const std::string& out_path, std::uint64_t seed);

// Replays a vector file, printing one pass/fail line per record (schema
// violations are reported with their group/record index).  Returns 0 iff
// every record passes.
int vectors_check(const std::string& path);

}  // namespace binform::cli
