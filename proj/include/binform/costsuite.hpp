// SPDX-License-Identifier: MIT
// The standard suite of exact operation-count claims: one CostReport per
// documented formula of the two implemented quartic models and the oriented
// ladder.  Each claim meters a single operation on fresh random inputs and
// requires exact counter equality.
#pragma once

#include <cstdint>
#include <vector>

#include "binform/binfield.hpp"
#include "binform/opmeter.hpp"

namespace binform {

// Runs every claim over the given field with a seeded generator.  Reports
// come back in a fixed order:
//   split mu4 addition / doubling, nonsplit mu4 doubling / addition,
//   z4 addition (generic pair) / doubling, ladder step (square-rich),
//   ladder step (mul-rich), ladder per bit (mul-rich).
std::vector<CostReport> run_cost_suite(const FieldContext& F,
                                       std::uint64_t seed);

}  // namespace binform
