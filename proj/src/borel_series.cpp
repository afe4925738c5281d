#include "resurge/borel_series.hpp"

#include <algorithm>

namespace resurge {

BorelSeries borel_series(const PowerSeries<Complex>& f) {
    if (f.ram != 1)
        fail(ErrorKind::Domain, "Borel transform needs the critical variable (ramification 1)");
    if (denominator(f.beta) != 1 || f.beta < 0)
        fail(ErrorKind::Domain, "Borel transform needs a nonnegative integer base exponent");
    long beta = numerator(f.beta).convert_to<long>();

    // absolute coefficients A_m of x^m
    std::vector<Complex> A(static_cast<size_t>(beta + f.order()) + 1, Complex(0));
    for (long n = 0; n <= f.order(); ++n) A[static_cast<size_t>(beta + n)] = f.coeff(n);

    BorelSeries out;
    out.removed_constant = A[0];
    out.shift = 1;
    out.source_ram = f.ram;
    if (A.size() > 1) {
        out.c.resize(A.size() - 1);
        BigFloat fact = 1;
        for (size_t n = 0; n + 1 < A.size(); ++n) {
            if (n > 0) fact *= static_cast<long>(n);
            out.c[n] = A[n + 1] / Complex(fact);
        }
    }
    return out;
}

namespace {

// (L, M) rational fit to sum c_n zeta^n through order L+M; denominator
// normalized to q_0 = 1. Returns false when the linear system is singular.
bool solve_pade(const std::vector<Complex>& c, long L, long M, PolyC& num, PolyC& den) {
    auto cof = [&](long k) { return (k >= 0 && k < static_cast<long>(c.size())) ? c[static_cast<size_t>(k)] : Complex(0); };

    std::vector<Complex> q(static_cast<size_t>(M) + 1, Complex(0));
    q[0] = Complex(1);
    if (M > 0) {
        // rows: sum_{j=1..M} q_j c_{L+i-j} = -c_{L+i},  i = 1..M
        std::vector<std::vector<Complex>> a(static_cast<size_t>(M),
                                            std::vector<Complex>(static_cast<size_t>(M) + 1));
        BigFloat scale = 0;
        for (long i = 1; i <= M; ++i) {
            for (long j = 1; j <= M; ++j) {
                a[i - 1][j - 1] = cof(L + i - j);
                scale = std::max(scale, abs(a[i - 1][j - 1]));
            }
            a[i - 1][static_cast<size_t>(M)] = -cof(L + i);
        }
        if (scale.is_zero()) return false;
        BigFloat tiny = scale * precision_eps(16);

        for (long col = 0; col < M; ++col) {
            long piv = col;
            BigFloat best = abs(a[col][col]);
            for (long r = col + 1; r < M; ++r) {
                BigFloat v = abs(a[r][col]);
                if (v > best) { best = v; piv = r; }
            }
            if (best <= tiny) return false;
            std::swap(a[static_cast<size_t>(col)], a[static_cast<size_t>(piv)]);
            for (long r = col + 1; r < M; ++r) {
                Complex f = a[r][col] / a[col][col];
                if (scalar_ops<Complex>::is_zero(f)) continue;
                for (long cc = col; cc <= M; ++cc) a[r][cc] -= f * a[col][cc];
            }
        }
        for (long r = M - 1; r >= 0; --r) {
            Complex acc = a[r][static_cast<size_t>(M)];
            for (long cc = r + 1; cc < M; ++cc) acc -= a[r][cc] * q[static_cast<size_t>(cc + 1)];
            q[static_cast<size_t>(r + 1)] = acc / a[r][r];
        }
    }
    den = PolyC(std::move(q));
    if (den.is_zero()) return false;

    std::vector<Complex> p(static_cast<size_t>(L) + 1, Complex(0));
    for (long i = 0; i <= L; ++i) {
        Complex acc(0);
        for (long j = 0; j <= std::min(i, M); ++j) acc += den.coeff(j) * cof(i - j);
        p[static_cast<size_t>(i)] = acc;
    }
    num = PolyC(std::move(p));
    return true;
}

std::vector<Complex> pade_pole_set(const std::vector<Complex>& c, long L, long M,
                                   double froissart_gap) {
    PolyC num, den;
    if (!solve_pade(c, L, M, num, den)) return {};
    std::vector<Complex> poles = poly_roots(den);
    std::vector<Complex> zeros = poly_roots(num);
    std::vector<Complex> keep;
    BigFloat gap(froissart_gap);
    for (const auto& p : poles) {
        bool doublet = false;
        for (const auto& z : zeros)
            if (abs(p - z) < gap) { doublet = true; break; }
        if (!doublet) keep.push_back(p);
    }
    return keep;
}

} // namespace

PadeApproximant pade_approximant(const BorelSeries& b, long L, long M) {
    if (L < 0 || M < 0 || L + M + 1 > static_cast<long>(b.c.size()))
        fail(ErrorKind::InsufficientData,
             "Pade (" + std::to_string(L) + "," + std::to_string(M) + ") needs " +
                 std::to_string(L + M + 1) + " coefficients, have " + std::to_string(b.c.size()));

    PadeApproximant out;
    out.L = L;
    out.M = M;
    out.removed_constant = b.removed_constant;
    out.shift = b.shift;
    if (!solve_pade(b.c, L, M, out.num, out.den))
        fail(ErrorKind::DegeneratePade,
             "singular Pade system at (" + std::to_string(L) + "," + std::to_string(M) +
                 "); try different orders");

    const double froissart_gap = 1e-6;
    std::vector<Complex> poles = pade_pole_set(b.c, L, M, froissart_gap);

    // stability: a matching pole must persist at the neighbouring tables
    std::vector<std::vector<Complex>> neighbours;
    if (L - 2 >= 0 && M - 2 >= 1) neighbours.push_back(pade_pole_set(b.c, L - 2, M - 2, froissart_gap));
    if (L + M + 5 <= static_cast<long>(b.c.size()))
        neighbours.push_back(pade_pole_set(b.c, L + 2, M + 2, froissart_gap));

    for (const auto& p : poles) {
        bool stable = !neighbours.empty();
        for (const auto& nb : neighbours) {
            bool matched = false;
            for (const auto& p2 : nb) {
                if (abs(p - p2) < BigFloat(1e-3) * std::max(BigFloat(1), abs(p))) {
                    matched = true;
                    break;
                }
            }
            if (!matched) { stable = false; break; }
        }
        out.poles.push_back({p, stable});
    }
    std::sort(out.poles.begin(), out.poles.end(), [](const PadePole& a, const PadePole& b2) {
        BigFloat ra = abs(a.z), rb = abs(b2.z);
        if (ra != rb) return ra < rb;
        return arg(a.z) < arg(b2.z);
    });
    return out;
}

LaplaceResult laplace_sum(const PadeApproximant& p, const Complex& z, const BigFloat& theta,
                          const LaplaceOptions& opt) {
    BigFloat tol = opt.tol > 0 ? opt.tol : BigFloat("1e-20");
    BigFloat delta = opt.pole_distance > 0 ? opt.pole_distance : BigFloat("1e-3");

    Complex dir = polar(BigFloat(1), theta);
    Complex w = z * dir;
    if (w.re <= 0)
        fail(ErrorKind::NonConvergent,
             "Laplace integral diverges: Re(z e^{i theta}) = " + w.re.str(6) + " <= 0");

    // ray-pole separation (stable poles only; Froissart noise is excluded)
    for (const auto& pole : p.poles) {
        if (!pole.stable) continue;
        BigFloat s = (pole.z * conj(dir)).re; // projection onto the ray
        BigFloat dist = s >= 0 ? abs(pole.z - Complex(s) * dir) : abs(pole.z);
        if (dist < delta)
            fail(ErrorKind::RayHitsPole,
                 "Laplace ray passes within " + dist.str(4) + " of a stable pole");
    }

    // truncation point: |e^{-wT}| * sup_{t>=T}|p| / Re(w) below target
    auto p_at = [&](const BigFloat& t) { return p.eval(Complex(t) * dir); };
    BigFloat T = std::max(BigFloat(4), (log(1 / tol) + 4) / w.re);
    BigFloat tail_bound;
    for (int rounds = 0;; ++rounds) {
        BigFloat m = std::max({abs(p_at(T)), abs(p_at(2 * T)), abs(p_at(4 * T))});
        tail_bound = exp(-w.re * T) * 2 * (m + tol) / w.re;
        if (tail_bound <= tol / 4 || rounds > 60) break;
        T *= BigFloat("1.5");
    }

    LaplaceResult out;
    // growth diagnostic along the ray: rational tails grow at most like a power
    {
        BigFloat g1 = abs(p_at(T)), g4 = abs(p_at(4 * T));
        long dd = std::max(p.num.degree() - p.den.degree(), 0L);
        out.tail_polynomial_growth = g4 <= (g1 + 1) * pow(BigFloat(4), dd + 1) * 100;
    }

    // interior breakpoints where a pole sits near the ray
    std::vector<BigFloat> breaks;
    for (const auto& pole : p.poles) {
        BigFloat s = (pole.z * conj(dir)).re;
        if (s > 0 && s < T) {
            BigFloat dist = abs(pole.z - Complex(s) * dir);
            if (dist < abs(pole.z) / 4 + delta * 10) breaks.push_back(s);
        }
    }

    auto integrand = [&](const BigFloat& t) { return exp(-w * Complex(t)) * p_at(t) * dir; };
    QuadratureResult quad = breaks.empty() ? tanh_sinh(integrand, BigFloat(0), T, tol / 2)
                                           : tanh_sinh_split(integrand, BigFloat(0), T, breaks, tol / 2);

    out.value = quad.value;
    if (opt.restore_removed_terms) out.value += p.removed_constant;
    out.error = quad.error + tail_bound;
    out.tail_cutoff = T;
    return out;
}

StokesEstimate stokes_jump(const BorelSeries& b, const BigFloat& theta_sing,
                           const std::vector<BigFloat>& z_magnitudes, const StokesOptions& opt) {
    if (z_magnitudes.empty()) fail(ErrorKind::Domain, "stokes_jump needs at least one z sample");

    long n = static_cast<long>(b.c.size());
    long M = opt.pade_M >= 0 ? opt.pade_M : n / 2;
    long L = opt.pade_L >= 0 ? opt.pade_L : n - 1 - M;
    PadeApproximant pade = pade_approximant(b, L, M);

    Complex ray_dir = polar(BigFloat(1), theta_sing);
    BigFloat pi = const_pi();

    auto angdist = [&](const Complex& zp) {
        BigFloat d = arg(zp) - theta_sing;
        while (d > pi) d -= 2 * pi;
        while (d < -pi) d += 2 * pi;
        return abs(d);
    };

    // singularity on the ray: nearest stable pole, unless given
    StokesEstimate out;
    out.theta_sing = theta_sing;
    out.omega = Complex(0);
    bool have_omega = false;
    if (opt.omega) {
        out.omega = *opt.omega;
        have_omega = true;
    } else {
        BigFloat best;
        for (const auto& pole : pade.poles) {
            if (!pole.stable) continue;
            if (angdist(pole.z) < BigFloat("0.15")) {
                BigFloat r = abs(pole.z);
                if (!have_omega || r < best) { out.omega = pole.z; best = r; have_omega = true; }
            }
        }
    }

    // lateral offset: stay away from poles off the singular ray
    BigFloat eps = opt.lateral_offset;
    if (!(eps > 0)) {
        eps = BigFloat("0.01");
        for (const auto& pole : pade.poles) {
            if (!pole.stable) continue;
            BigFloat d = angdist(pole.z);
            if (d > BigFloat("0.15")) eps = std::min(eps, d / 2);
        }
    }

    std::optional<PadeApproximant> partner;
    if (opt.partner) {
        long np = static_cast<long>(opt.partner->c.size());
        long Mp = np / 2, Lp = np - 1 - Mp;
        partner = pade_approximant(*opt.partner, Lp, Mp);
    }

    BigFloat lateral_tol = opt.tol > 0 ? opt.tol : BigFloat("1e-30");
    LaplaceOptions lop;
    lop.tol = lateral_tol;
    lop.restore_removed_terms = false; // the removed constant cancels in the difference

    std::vector<Complex> As;
    for (const auto& r : z_magnitudes) {
        Complex z = polar(r, -theta_sing); // bisector of both lateral half-planes
        LaplaceResult above = laplace_sum(pade, z, theta_sing - eps, lop);
        LaplaceResult below = laplace_sum(pade, z, theta_sing + eps, lop);
        Complex jump = above.value - below.value;
        out.jumps.emplace_back(z, jump);

        Complex prefactor(1);
        if (have_omega) prefactor = exp(-out.omega * z);
        if (partner) {
            LaplaceOptions pop;
            pop.tol = lateral_tol;
            LaplaceResult ps = laplace_sum(*partner, z, theta_sing, pop);
            prefactor *= ps.value;
        }
        As.push_back(jump / prefactor);
    }

    Complex mean(0);
    for (const auto& a : As) mean += a;
    mean /= Complex(BigFloat(static_cast<long>(As.size())));
    out.A = mean;

    BigFloat scale = 0;
    for (const auto& a : As) scale = std::max(scale, abs(a));
    for (size_t i = 0; i < As.size(); ++i)
        for (size_t j = i + 1; j < As.size(); ++j)
            if (scale > 0) out.spread = std::max(out.spread, abs(As[i] - As[j]) / scale);
    out.unstable = out.spread > BigFloat("1e-3");
    return out;
}

} // namespace resurge
