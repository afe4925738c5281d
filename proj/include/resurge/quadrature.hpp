#pragma once

#include <functional>

#include "resurge/complexnum.hpp"

namespace resurge {

struct QuadratureResult {
    Complex value;
    BigFloat error;    // |last refinement delta| plus truncation allowance
    long evaluations = 0;
    int level = 0;
};

// integrand of a real variable, complex-valued
using ComplexIntegrand = std::function<Complex(const BigFloat&)>;

// Double-exponential (tanh-sinh) quadrature on [a, b]. Levels are doubled
// until two refinements agree within tol (absolute); spectrally accurate for
// integrands analytic on the open interval.
QuadratureResult tanh_sinh(const ComplexIntegrand& f, const BigFloat& a, const BigFloat& b,
                           const BigFloat& tol, int max_level = 12);

// As above but splitting [a, b] at the given interior breakpoints, which get
// endpoint-style node clustering (useful when a pole sits near the contour).
QuadratureResult tanh_sinh_split(const ComplexIntegrand& f, const BigFloat& a, const BigFloat& b,
                                 const std::vector<BigFloat>& breakpoints, const BigFloat& tol,
                                 int max_level = 12);

// Double-exponential quadrature on [0, inf) for integrands with
// Gaussian-or-faster decay, via x = exp(t - exp(-t)).
QuadratureResult integrate_half_line(const ComplexIntegrand& f, const BigFloat& tol,
                                     int max_level = 12);

} // namespace resurge
