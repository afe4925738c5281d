#include "resurge/quadrature.hpp"

#include <vector>

namespace resurge {

namespace {

// Trapezoid-with-level-doubling driver over a node map t -> (x, w). The
// transform owns the t-range; we stop adding nodes once several consecutive
// contributions fall below the noise floor.
struct LevelSummer {
    BigFloat floor_tol;
    long evaluations = 0;

    template <class NodeFun>
    Complex level_sum(const NodeFun& node, const ComplexIntegrand& f, const BigFloat& h,
                      bool odd_only, const BigFloat& t_cap) {
        Complex acc(0);
        for (int dir : {+1, -1}) {
            int misses = 0;
            long k = (dir > 0) ? (odd_only ? 1 : 0) : (odd_only ? -1 : -1);
            long step = odd_only ? 2 * dir : dir;
            // dir>0 covers t >= 0, dir<0 covers t < 0
            for (;; k += step) {
                BigFloat t = k * h;
                if (abs(t) > t_cap) break;
                BigFloat x, w;
                if (!node(t, x, w)) break;
                Complex term = f(x) * w;
                ++evaluations;
                acc += term;
                if (abs(term) < floor_tol) {
                    if (++misses >= 4) break;
                } else {
                    misses = 0;
                }
            }
        }
        return acc;
    }
};

} // namespace

QuadratureResult tanh_sinh(const ComplexIntegrand& f, const BigFloat& a, const BigFloat& b,
                           const BigFloat& tol, int max_level) {
    BigFloat half_pi = const_pi() / 2;
    BigFloat c = (a + b) / 2, s = (b - a) / 2;
    // distance of x(t) to the endpoints shrinks like exp(-pi/2 e^{|t|});
    // past the precision floor the nodes collapse onto the endpoints
    BigFloat ln2(log(BigFloat(2)));
    BigFloat reach = (precision_bits() + 16) * ln2 / half_pi;
    BigFloat t_cap = log(reach + sqrt(reach * reach + 1)); // asinh

    auto node = [&](const BigFloat& t, BigFloat& x, BigFloat& w) {
        BigFloat u = half_pi * sinh(t);
        BigFloat ch = cosh(u);
        x = c + s * tanh(u);
        if (x <= a || x >= b) return false;
        w = s * half_pi * cosh(t) / (ch * ch);
        return true;
    };

    LevelSummer sum{ldexp(tol, -24)};
    BigFloat h = 1;
    Complex total = sum.level_sum(node, f, h, /*odd_only=*/false, t_cap) * h;
    QuadratureResult out;
    out.error = abs(total);
    for (int level = 1; level <= max_level; ++level) {
        h /= 2;
        Complex refine = sum.level_sum(node, f, h, /*odd_only=*/true, t_cap) * h;
        Complex next = total * BigFloat("0.5") + refine;
        out.error = abs(next - total);
        total = next;
        out.level = level;
        if (out.error <= tol && level >= 3) break;
    }
    out.value = total;
    out.evaluations = sum.evaluations;
    return out;
}

QuadratureResult tanh_sinh_split(const ComplexIntegrand& f, const BigFloat& a, const BigFloat& b,
                                 const std::vector<BigFloat>& breakpoints, const BigFloat& tol,
                                 int max_level) {
    std::vector<BigFloat> cuts;
    cuts.push_back(a);
    for (const auto& t : breakpoints)
        if (t > a && t < b) cuts.push_back(t);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());

    QuadratureResult out;
    BigFloat piece_tol = tol / static_cast<long>(cuts.size());
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        QuadratureResult r = tanh_sinh(f, cuts[i], cuts[i + 1], piece_tol, max_level);
        out.value += r.value;
        out.error += r.error;
        out.evaluations += r.evaluations;
        out.level = std::max(out.level, r.level);
    }
    return out;
}

QuadratureResult integrate_half_line(const ComplexIntegrand& f, const BigFloat& tol,
                                     int max_level) {
    // x = exp(t - e^{-t}): double-exponential approach to 0 on the left,
    // single-exponential growth on the right (the integrand's decay does the
    // rest there)
    BigFloat t_cap = 3 + log(BigFloat(precision_bits()));

    auto node = [&](const BigFloat& t, BigFloat& x, BigFloat& w) {
        BigFloat emt = exp(-t);
        x = exp(t - emt);
        if (x.is_zero()) return false;
        w = x * (1 + emt);
        return true;
    };

    LevelSummer sum{ldexp(tol, -24)};
    BigFloat h = 1;
    Complex total = sum.level_sum(node, f, h, /*odd_only=*/false, t_cap * 4) * h;
    QuadratureResult out;
    out.error = abs(total);
    for (int level = 1; level <= max_level; ++level) {
        h /= 2;
        Complex refine = sum.level_sum(node, f, h, /*odd_only=*/true, t_cap * 4) * h;
        Complex next = total * BigFloat("0.5") + refine;
        out.error = abs(next - total);
        total = next;
        out.level = level;
        if (out.error <= tol && level >= 3) break;
    }
    out.value = total;
    out.evaluations = sum.evaluations;
    return out;
}

} // namespace resurge
