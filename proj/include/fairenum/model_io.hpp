#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "fairenum/ising.hpp"

namespace fairenum::io {

// Text format for QUBO and Ising models, one coefficient per line:
//
//   # qubo <n>          (or "# ising <n>"; required, before any coefficient)
//   # offset <value>    (optional)
//   <i> <i> <value>     linear term (QUBO) or field h_i (Ising)
//   <i> <j> <value>     quadratic term (QUBO) or coupling J_ij (Ising), i != j
//
// Indices are 0-based. Repeated entries accumulate. Any other line starting
// with '#' is a comment. Values are written in shortest round-trip form, so
// read(write(m)) == m exactly.
using AnyModel = std::variant<ising::QuboModel, ising::IsingModel>;

std::string write_model(const ising::QuboModel& model);
std::string write_model(const ising::IsingModel& model);

// Throws ParseError on malformed input.
AnyModel read_model(std::string_view text);
ising::QuboModel read_qubo(std::string_view text);
ising::IsingModel read_ising(std::string_view text);

// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

}  // namespace fairenum::io
