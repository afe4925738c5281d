#pragma once

#include <optional>
#include <vector>

#include "resurge/poly.hpp"
#include "resurge/quadrature.hpp"
#include "resurge/series.hpp"

namespace resurge {

// ---------------------------------------------------------------------------
// Numerical Borel plane. Series here live in the critical variable (level
// one): f = sum A_m x^m corresponds to sum A_m z^{-m} at z = 1/x ~ infinity,
// and after dropping the constant term the minor is
//
//     fhat(zeta) = sum_n c_n zeta^n,   c_n = A_{n+1} / n!.
//
// The dropped A_0 is carried along and restored by the Laplace sum.

struct BorelSeries {
    std::vector<Complex> c;      // minor coefficients
    Complex removed_constant;    // A_0
    long shift = 1;              // leading terms removed before the transform
    long source_ram = 1;
};

BorelSeries borel_series(const PowerSeries<Complex>& f);

inline BorelSeries borel_series(const PowerSeries<Rational>& f) {
    return borel_series(f.map<Complex>([](const Rational& a) { return Complex(a); }));
}

// ---------------------------------------------------------------------------
// Pade continuation of the minor.

struct PadePole {
    Complex z;
    bool stable = false; // persists at neighbouring table orders
};

struct PadeApproximant {
    PolyC num, den; // den(0) = 1
    long L = 0, M = 0;
    std::vector<PadePole> poles;
    // carried over from the source series so Laplace sums can restore them
    Complex removed_constant;
    long shift = 1;

    Complex eval(const Complex& zeta) const { return num.eval(zeta) / den.eval(zeta); }

    std::vector<Complex> stable_poles() const {
        std::vector<Complex> r;
        for (const auto& p : poles)
            if (p.stable) r.push_back(p.z);
        return r;
    }
};

// Rational (L, M) fit matching the series through order L + M. Poles are
// flagged stable when a matching pole (relative distance < 1e-3) appears in
// the (L-2, M-2) and, coefficients permitting, (L+2, M+2) tables. Froissart
// doublets (pole-zero pairs closer than 1e-6) are dropped beforehand.
PadeApproximant pade_approximant(const BorelSeries& b, long L, long M);

// ---------------------------------------------------------------------------
// Directional Laplace sum  A_0 + int_0^{e^{i theta} inf} e^{-z zeta} p(zeta) dzeta.

struct LaplaceResult {
    Complex value;
    BigFloat error;        // quadrature estimate plus tail bound
    BigFloat tail_cutoff;  // T where the ray integral was truncated
    bool tail_polynomial_growth = true; // diagnostic along the ray
};

struct LaplaceOptions {
    BigFloat tol = 0;          // absolute target; defaults to 1e-20
    BigFloat pole_distance = 0; // minimum ray-pole separation, default 1e-3
    bool restore_removed_terms = true;
};

LaplaceResult laplace_sum(const PadeApproximant& p, const Complex& z, const BigFloat& theta,
                          const LaplaceOptions& opt = {});

// ---------------------------------------------------------------------------
// Stokes jump across a singular direction: lateral Laplace sums on both
// sides, divided by e^{-omega z} and (when given) a resummed partner series,
// yield the jump constant. zSamples are magnitudes; the evaluation points are
// z = r e^{-i theta_sing}, the common convergence bisector of both laterals.

struct StokesEstimate {
    BigFloat theta_sing = 0;
    Complex omega;                                    // singularity used
    std::vector<std::pair<Complex, Complex>> jumps;   // (z, lateral difference)
    Complex A;                                        // averaged constant
    BigFloat spread = 0;   // max pairwise relative deviation across samples
    bool unstable = false; // spread above threshold; result still returned
};

struct StokesOptions {
    std::optional<Complex> omega;          // default: stable pole nearest the ray
    std::optional<BorelSeries> partner;    // series multiplying e^{-omega z} in the jump
    BigFloat lateral_offset = 0;           // epsilon, default min(1e-2, half gap)
    long pade_L = -1, pade_M = -1;         // default near-diagonal from available terms
    BigFloat tol = 0;                      // quadrature target per lateral
};

StokesEstimate stokes_jump(const BorelSeries& b, const BigFloat& theta_sing,
                           const std::vector<BigFloat>& z_magnitudes,
                           const StokesOptions& opt = {});

} // namespace resurge
