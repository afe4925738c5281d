#pragma once

#include <optional>
#include <vector>

#include "resurge/borel_op.hpp"
#include "resurge/formal.hpp"
#include "resurge/quadrature.hpp"

namespace resurge {

// ---------------------------------------------------------------------------
// Polynomial potential V(phi) = sum v_i phi^i of even degree 2k with positive
// leading coefficient; the weight in every partition-function integral.

struct Potential {
    std::vector<Rational> v; // v[i] coefficient of phi^i

    explicit Potential(std::vector<Rational> coeffs);
    static Potential monomial(long two_k); // V = phi^{2k}

    long degree() const { return static_cast<long>(v.size()) - 1; }
    long k() const { return degree() / 2; }
    bool is_even() const;
    BigFloat eval(const BigFloat& phi) const;
    Rational coeff(long i) const {
        return (i >= 0 && i < static_cast<long>(v.size())) ? v[static_cast<size_t>(i)] : Rational(0);
    }
};

// ---------------------------------------------------------------------------
// moments  Z_j(lambda) = int phi^j e^{-phi^2/2 - lambda V(phi)} dphi / sqrt(2 pi)

struct MomentValue {
    long j = 0;
    Complex lambda;
    Complex value;
    BigFloat error;
};

// phi^{2j} weight (the even moments of the text); Re lambda >= 0
MomentValue quad_moment(const Potential& V, long j, const Complex& lambda, const BigFloat& tol);

// general phi^j weight, used by the governing-relation checks
MomentValue quad_moment_any(const Potential& V, long j, const Complex& lambda, const BigFloat& tol);

// derivative d/dlambda via the -V-weighted integrand
MomentValue quad_moment_derivative(const Potential& V, long j, const Complex& lambda,
                                   const BigFloat& tol);

// ---------------------------------------------------------------------------
// exact asymptotic coefficients alpha_n = f^{(n)}(0)/n! against Gaussian
// moments; for V = phi^{2k}, j = 0 they reduce to the closed form
// (-1)^n (2kn)! / (n! 2^{kn} (kn)!)

std::vector<Rational> asymptotic_coeffs(const Potential& V, long j, long N);
Rational gaussian_moment(long m); // int phi^m e^{-phi^2/2} dphi / sqrt(2 pi)
Rational phi2k_alpha_closed(long k, long n);

// ---------------------------------------------------------------------------
// the operator family governing the phi^{2k} partition function

struct EkModel {
    long k = 0;
    Rational m;                  // 1/(k-1) for k >= 2
    ThetaOpQ op_lambda;          // in the coupling
    std::optional<ThetaOpQ> op_x; // ramified to the critical variable (k >= 2)
    std::optional<DeterminingData> determining;
    std::vector<BasisElement> basis; // from the ramified operator
    // nonzero determining roots (duplicated from basis for convenience)
    std::vector<Complex> roots;
    std::vector<Rational> exact_roots;
};

EkModel build_Ek(long k, long order = 60);

// ---------------------------------------------------------------------------
// residuals of the two governing relations at a sample coupling

struct GoverningRow {
    long j = 0;
    BigFloat rec1_fd;   // |central difference of Z_j' + sum_i v_i Z_{j+i}|
    BigFloat rec1_wq;   // same with the weighted-quadrature derivative
    BigFloat rec2;      // |(j+1) Z_j - Z_{j+2} - lambda sum i v_i Z_{i+j}|
};

struct GoverningReport {
    Complex lambda;
    BigFloat tol;
    std::vector<GoverningRow> rows;
    BigFloat max_residual;
};

GoverningReport verify_governing(const Potential& V, long j_max, const BigFloat& lambda,
                                 const BigFloat& tol);

// ---------------------------------------------------------------------------
// free-energy singularity group: discrete exactly when the rotation order
// k-1 is crystallographic

struct LatticeVerdict {
    long k = 0;
    long rotation_order = 0; // k - 1
    bool discrete = false;
    std::vector<Complex> generators;
    // corroborating search over bounded words in the generators
    BigFloat witness_min_modulus; // smallest nonzero |sum| found
    long witness_depth = 0;
    bool witness_agrees = false;
};

LatticeVerdict singularity_discreteness(long k, long depth = 12);

// ---------------------------------------------------------------------------
// the quantum-pendulum warm-up: Airy's equation in the hbar^2 coupling

struct AiryModel {
    Complex q;
    std::optional<Rational> q_exact;

    ThetaOpC op_lambda;                   // (3 theta + 2)(3 theta + 1) - q^3/lambda
    ThetaOpC op_x;                        // ramified, x = lambda^{1/2}, scaled by 4
    std::optional<ThetaOpQ> op_lambda_exact, op_x_exact; // when q^3 is rational

    Complex u_plus, u_minus;              // +-(2/3) q^{3/2}, principal branch
    std::optional<Rational> u_exact;      // |u| as a rational when sqrt(q) is
    Rational beta = Rational(-1, 2);

    PowerSeries<Complex> h_plus, h_minus; // twisted, beta-conjugated series
    std::optional<PowerSeries<Rational>> h_plus_exact, h_minus_exact;

    // Borel operators of the h_{+-} equations and their leading-coefficient zeros
    BorelOperator<Complex> borel_plus, borel_minus;
    std::vector<Complex> borel_plus_zeros, borel_minus_zeros; // {0, 2 u_{+-}}
};

AiryModel build_airy(const Complex& q, long order = 40);

} // namespace resurge
