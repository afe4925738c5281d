#include "resurge/report.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "resurge/op_parser.hpp"

namespace resurge {

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

std::string fstr(const BigFloat& x) { return bigfloat_str(x, 30); }

} // namespace

Json to_json(const NewtonPolygon& np) {
    Json j;
    j["vertices"] = Json::array();
    for (const auto& v : np.vertices) j["vertices"].push_back({v[0], v[1]});
    j["slopes"] = Json::array();
    for (const auto& s : np.slopes) j["slopes"].push_back({{"q", s.q.str()}, {"length", s.length}});
    return j;
}

Json to_json(const Complex& z) {
    return Json{{"re", fstr(z.re)}, {"im", fstr(z.im)}};
}

Json series_to_json(const PowerSeries<Rational>& f, long max_coeffs) {
    Json j;
    j["beta"] = f.beta.str();
    j["ramification"] = f.ram;
    j["exact"] = true;
    Json coeffs = Json::array();
    long n = f.order();
    if (max_coeffs >= 0) n = std::min(n, max_coeffs - 1);
    for (long i = 0; i <= n; ++i) coeffs.push_back(f.coeff(i).str());
    j["coeffs"] = coeffs;
    return j;
}

Json series_to_json(const PowerSeries<Complex>& f, long max_coeffs) {
    Json j;
    j["beta"] = f.beta.str();
    j["ramification"] = f.ram;
    j["exact"] = false;
    Json coeffs = Json::array();
    long n = f.order();
    if (max_coeffs >= 0) n = std::min(n, max_coeffs - 1);
    for (long i = 0; i <= n; ++i) coeffs.push_back({fstr(f.coeff(i).re), fstr(f.coeff(i).im)});
    j["coeffs"] = coeffs;
    return j;
}

Json poles_to_json(const std::vector<PadePole>& poles) {
    Json j = Json::array();
    for (const auto& p : poles) j.push_back({fstr(p.z.re), fstr(p.z.im), p.stable});
    return j;
}

Json to_json(const GevreyEstimate& g) {
    return Json{{"s", g.s},
                {"A", g.A},
                {"window", {g.window_lo, g.window_hi}},
                {"residual", g.residual}};
}

Json to_json(const StokesEstimate& s) {
    Json samples = Json::array();
    for (const auto& [z, jump] : s.jumps)
        samples.push_back({{"z", to_json(z)}, {"jump", to_json(jump)}});
    return Json{{"direction", fstr(s.theta_sing)}, {"omega", to_json(s.omega)},
                {"A", to_json(s.A)},               {"spread", fstr(s.spread)},
                {"unstable", s.unstable},          {"samples", samples}};
}

namespace {

Json basis_to_json(const std::vector<BasisElement>& basis) {
    Json j = Json::array();
    for (const auto& e : basis) {
        Json el;
        el["label"] = e.label;
        el["beta"] = e.beta.str();
        el["q"] = e.q.str();
        if (e.u_exact) el["u"] = Json{{"exact", e.u_exact->str()}};
        else el["u"] = to_json(e.u);
        if (e.series_exact) el["series"] = series_to_json(*e.series_exact, 4);
        else el["series"] = series_to_json(e.series, 4);
        j.push_back(std::move(el));
    }
    return j;
}

// singular directions and Stokes estimation for the basis
Json stokes_section(const std::vector<BasisElement>& basis, long order, Json& warnings) {
    Json out = Json::array();
    if (basis.empty() || basis.size() < 2) return out;
    const BasisElement& e0 = basis.front();

    BorelSeries b = borel_series(e0.series.truncated(order));
    for (size_t j = 1; j < basis.size(); ++j) {
        Complex omega = e0.u - basis[j].u; // singularity of element 0 seen from u_j
        BigFloat theta = arg(omega);

        StokesOptions sopt;
        sopt.omega = omega;
        BorelSeries partner = borel_series(basis[j].series.truncated(order));
        sopt.partner = partner;
        std::vector<BigFloat> zs{BigFloat(2), BigFloat(4), BigFloat(8)};
        try {
            StokesEstimate est = stokes_jump(b, theta, zs, sopt);
            Json je = to_json(est);
            je["partner_label"] = basis[j].label;
            if (est.unstable)
                warnings.push_back("stokes estimate toward element " +
                                   std::to_string(basis[j].label) + " has spread " +
                                   fstr(est.spread));
            out.push_back(std::move(je));
        } catch (const Error& err) {
            warnings.push_back(std::string("stokes estimation failed: ") + err.what());
        }
    }
    return out;
}

} // namespace

Json run_analyze(const std::string& op_text, long k, const GlobalOptions& opt) {
    auto t0 = Clock::now();
    Json report;
    Json warnings = Json::array();
    report["command"] = "analyze";
    report["precision_bits"] = opt.precision;
    report["order"] = opt.order;
    report["tol"] = opt.tol;

    ThetaOpQ op;      // operator in the analysis variable (ramified if needed)
    long ram_applied = 1;
    if (k > 0) {
        report["input"] = Json{{"k", k}};
        EkModel ek = build_Ek(k, opt.order);
        report["operator_lambda"] = format_theta_op(ek.op_lambda);
        report["polygon_lambda_zero"] = to_json(newton_polygon(ek.op_lambda, PolygonAt::Zero));
        if (!ek.op_x) {
            // analytic case: no positive slope, nothing to resum
            report["analytic"] = true;
            report["timings_ms"] = Json{{"total", ms_since(t0)}};
            report["warnings"] = warnings;
            return report;
        }
        op = *ek.op_x;
        ram_applied = k - 1;
    } else {
        report["input"] = Json{{"op", op_text}};
        op = parse_theta_op(op_text);
        NewtonPolygon np = newton_polygon(op, PolygonAt::Zero);
        auto sp = np.single_positive_slope();
        if (sp && denominator(*sp) != 1) {
            ram_applied = denominator(*sp).convert_to<long>();
            op = ramify(op, ram_applied);
        }
    }
    report["operator"] = format_theta_op(op);
    report["ramification_applied"] = ram_applied;

    auto t_sym = Clock::now();
    NewtonPolygon np0 = newton_polygon(op, PolygonAt::Zero);
    report["polygon_zero"] = to_json(np0);
    report["polygon_infinity"] = to_json(newton_polygon(op, PolygonAt::Infinity));

    IndicialData<Rational> ind = indicial_polynomial(op);
    {
        Json ji;
        Json poly = Json::array();
        for (long i = 0; i <= ind.Q.degree(); ++i) poly.push_back(ind.Q.coeff(i).str());
        ji["polynomial"] = poly;
        Json rr = Json::array();
        for (const auto& r : ind.rational_roots) rr.push_back(r.str());
        ji["rational_roots"] = rr;
        Json cr = Json::array();
        for (const auto& z : ind.other_roots) cr.push_back(to_json(z));
        ji["complex_roots"] = cr;
        report["indicial"] = ji;
    }

    auto sp = np0.single_positive_slope();
    std::vector<BasisElement> basis;
    if (sp && denominator(*sp) == 1) {
        DeterminingData det = determining_polynomial(op, *sp);
        Json jd;
        Json poly = Json::array();
        for (long i = 0; i <= det.P.degree(); ++i) poly.push_back(det.P.coeff(i).str());
        jd["P"] = poly;
        jd["q"] = det.q.str();
        Json roots = Json::array();
        for (const auto& r : det.exact_roots) roots.push_back(Json{{"exact", r.str()}});
        for (const auto& z : det.numeric_roots) roots.push_back(to_json(z));
        jd["nonzero_roots"] = roots;
        jd["max_residual"] = fstr(det.max_residual);
        report["determining"] = jd;

        basis = formal_basis(op, opt.order);
        report["basis"] = basis_to_json(basis);
    } else {
        warnings.push_back("no single integer positive slope; basis construction skipped");
    }
    long t_symbolic = ms_since(t_sym);

    auto t_num = Clock::now();
    if (!basis.empty()) {
        const BasisElement& e0 = basis.front();
        if (e0.series_exact)
            report["gevrey"] = to_json(gevrey_estimate(*e0.series_exact));

        BorelSeries b = borel_series(e0.series.truncated(opt.order));
        long n = static_cast<long>(b.c.size());
        long M = n / 2, L = n - 1 - M;
        try {
            PadeApproximant pade = pade_approximant(b, L, M);
            Json jb;
            jb["pade_orders"] = {L, M};
            jb["poles"] = poles_to_json(pade.poles);
            report["borel"] = jb;
        } catch (const Error& err) {
            warnings.push_back(std::string("Pade continuation failed: ") + err.what());
        }
        report["stokes"] = stokes_section(basis, opt.order, warnings);
    }
    long t_numeric = ms_since(t_num);

    report["timings_ms"] =
        Json{{"symbolic", t_symbolic}, {"numeric", t_numeric}, {"total", ms_since(t0)}};
    report["warnings"] = warnings;
    return report;
}

Json run_partition(long k, const std::vector<Rational>& lambdas, long j, const GlobalOptions& opt) {
    auto t0 = Clock::now();
    Json report;
    Json warnings = Json::array();
    report["command"] = "partition";
    report["precision_bits"] = opt.precision;
    report["order"] = opt.order;
    report["tol"] = opt.tol;
    report["input"] = Json{{"k", k}, {"j", j}};

    BigFloat tol(opt.tol);
    Potential V = Potential::monomial(2 * k);
    EkModel ek = build_Ek(k, opt.order);
    std::vector<Rational> alpha = asymptotic_coeffs(V, j, std::min<long>(opt.order, 40));

    // resummation machinery once per run (j = 0 only; the moments' series is
    // the partition function itself only for j = 0)
    std::optional<PadeApproximant> pade;
    if (j == 0 && ek.op_x && !ek.basis.empty()) {
        BorelSeries b = borel_series(ek.basis.front().series);
        long n = static_cast<long>(b.c.size());
        pade = pade_approximant(b, n - 1 - n / 2, n / 2);
    } else if (j != 0) {
        warnings.push_back("resummation is reported for j = 0 only");
    }

    Json rows = Json::array();
    for (const auto& lam : lambdas) {
        Json row;
        row["lambda"] = lam.str();
        MomentValue mv = quad_moment(V, j, Complex(lam), tol);
        row["quadrature"] = Json{{"value", fstr(mv.value.re)}, {"err", fstr(mv.error)}};

        // truncated series at its optimal order: stop before the smallest term
        BigFloat lf(lam);
        BigFloat best;
        long n_star = 0;
        for (long n = 1; n < static_cast<long>(alpha.size()); ++n) {
            BigFloat term = abs(BigFloat(alpha[static_cast<size_t>(n)])) * pow(lf, n);
            if (n == 1 || term < best) { best = term; n_star = n; }
            else break;
        }
        BigFloat partial = 0;
        for (long n = 0; n < n_star; ++n)
            partial += BigFloat(alpha[static_cast<size_t>(n)]) * pow(lf, n);
        row["series"] = Json{{"value", fstr(partial)}, {"truncation", n_star - 1}};

        if (pade) {
            Complex z = Complex(1) / Complex(lam);
            // the ramified series lives in x = lambda^{1/(k-1)}
            if (k > 2) z = pow(Complex(1) / Complex(lam), Rational(1, k - 1));
            LaplaceResult ls = laplace_sum(*pade, z, BigFloat(0));
            row["resummation"] = Json{{"value", fstr(ls.value.re)}, {"err", fstr(ls.error)}};
            row["abs_quad_minus_resum"] = fstr(abs(mv.value - ls.value));
        }
        rows.push_back(std::move(row));
    }
    report["rows"] = rows;
    report["timings_ms"] = Json{{"total", ms_since(t0)}};
    report["warnings"] = warnings;
    return report;
}

Json run_resum(const std::string& coeffs_path, const std::string& direction, const std::string& z,
               const GlobalOptions& opt) {
    auto t0 = Clock::now();
    Json report;
    Json warnings = Json::array();
    report["command"] = "resum";
    report["precision_bits"] = opt.precision;
    report["order"] = opt.order;
    report["input"] = Json{{"coeffs", coeffs_path}, {"direction", direction}, {"z", z}};

    std::ifstream in(coeffs_path);
    if (!in) fail(ErrorKind::Parse, "cannot open coefficient file " + coeffs_path);
    std::vector<Complex> coeffs;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string a, b;
        if (!(ls >> a)) continue; // blank line
        if (ls >> b) coeffs.emplace_back(BigFloat(a), BigFloat(b));
        else coeffs.emplace_back(parse_rational(a));
        if (static_cast<long>(coeffs.size()) > opt.order) break;
    }
    if (coeffs.empty()) fail(ErrorKind::Parse, "no coefficients in " + coeffs_path);

    PowerSeries<Complex> f(0, 1, std::move(coeffs));
    BorelSeries b = borel_series(f);
    long n = static_cast<long>(b.c.size());
    long M = n / 2, L = n - 1 - M;
    PadeApproximant pade = pade_approximant(b, L, M);

    Json jb;
    jb["pade_orders"] = {L, M};
    jb["poles"] = poles_to_json(pade.poles);
    report["borel"] = jb;

    BigFloat theta(direction);
    Complex zv;
    {
        auto comma = z.find(',');
        if (comma == std::string::npos) zv = Complex(BigFloat(z));
        else zv = Complex(BigFloat(z.substr(0, comma)), BigFloat(z.substr(comma + 1)));
    }
    LaplaceResult ls = laplace_sum(pade, zv, theta);
    report["laplace"] = Json{{"z", to_json(zv)},
                             {"theta", fstr(theta)},
                             {"value", to_json(ls.value)},
                             {"err", fstr(ls.error)}};

    // Stokes data across the nearest singular direction, when one exists
    std::vector<Complex> stable = pade.stable_poles();
    if (!stable.empty()) {
        Complex nearest = stable.front();
        StokesOptions sopt;
        sopt.omega = nearest;
        BigFloat r = abs(zv);
        std::vector<BigFloat> zs{r, 2 * r, 4 * r};
        try {
            StokesEstimate est = stokes_jump(b, arg(nearest), zs, sopt);
            report["stokes"] = to_json(est);
            if (est.unstable)
                warnings.push_back("stokes estimate has spread " + fstr(est.spread));
        } catch (const Error& err) {
            warnings.push_back(std::string("stokes estimation failed: ") + err.what());
        }
    }
    report["timings_ms"] = Json{{"total", ms_since(t0)}};
    report["warnings"] = warnings;
    return report;
}

Json run_airy(const std::string& q_text, const GlobalOptions& opt) {
    auto t0 = Clock::now();
    Json report;
    report["command"] = "airy";
    report["precision_bits"] = opt.precision;
    report["order"] = opt.order;
    report["input"] = Json{{"q", q_text}};

    Complex q;
    auto comma = q_text.find(',');
    if (comma == std::string::npos) q = Complex(parse_rational(q_text));
    else q = Complex(BigFloat(q_text.substr(0, comma)), BigFloat(q_text.substr(comma + 1)));

    AiryModel airy = build_airy(q, opt.order);
    report["q"] = to_json(airy.q);
    if (airy.op_lambda_exact) report["operator_lambda"] = format_theta_op(*airy.op_lambda_exact);
    if (airy.op_x_exact) report["operator_x"] = format_theta_op(*airy.op_x_exact);
    report["polygon_lambda_zero"] = to_json(newton_polygon(airy.op_lambda, PolygonAt::Zero));
    report["polygon_x_zero"] = to_json(newton_polygon(airy.op_x, PolygonAt::Zero));
    report["beta"] = airy.beta.str();
    if (airy.u_exact) {
        report["u_plus"] = Json{{"exact", airy.u_exact->str()}};
        report["u_minus"] = Json{{"exact", (-*airy.u_exact).str()}};
    } else {
        report["u_plus"] = to_json(airy.u_plus);
        report["u_minus"] = to_json(airy.u_minus);
    }
    if (airy.h_plus_exact) report["h_plus"] = series_to_json(*airy.h_plus_exact, 6);
    else report["h_plus"] = series_to_json(airy.h_plus, 6);
    if (airy.h_minus_exact) report["h_minus"] = series_to_json(*airy.h_minus_exact, 6);
    else report["h_minus"] = series_to_json(airy.h_minus, 6);

    Json zp = Json::array();
    for (const auto& z : airy.borel_plus_zeros) zp.push_back(to_json(z));
    Json zm = Json::array();
    for (const auto& z : airy.borel_minus_zeros) zm.push_back(to_json(z));
    report["borel_leading_zeros_plus"] = zp;
    report["borel_leading_zeros_minus"] = zm;

    report["timings_ms"] = Json{{"total", ms_since(t0)}};
    report["warnings"] = Json::array();
    return report;
}

} // namespace resurge
