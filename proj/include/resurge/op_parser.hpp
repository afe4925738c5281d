#pragma once

#include <string>

#include "resurge/theta_op.hpp"

namespace resurge {

// Text syntax for operators: a sum of terms `c * x^p * theta^i` with a
// rational c, integer p and integer i >= 0, in any factor order, whitespace
// insensitive. `x` alone means x^1, `theta` alone theta^1; the variable name
// matches ThetaOp::var ("x" by default).
ThetaOpQ parse_theta_op(const std::string& text, const std::string& var = "x");

// Inverse of the parser, mainly for reports: "16*theta^2 + (...)".
std::string format_theta_op(const ThetaOpQ& h);

} // namespace resurge
