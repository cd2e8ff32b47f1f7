#pragma once

#include "hurwitz_cx/feynman_graph.hpp"
#include "hurwitz_cx/numbers.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace hurwitz_cx {

/// Coefficient of (u/v)^n in the propagator uv/(u-v)^2 expanded for
/// |u| < |v|: n for n >= 1, otherwise 0.
inline long long propagator_coefficient(long long n) { return n >= 1 ? n : 0; }

/// A degree assignment to the edge instances of a graph, parallel to
/// FeynmanGraph::edge_instances(). All degrees are >= 1 and the totals
/// balance at every intermediate vertex.
struct EdgeFlow {
    std::vector<long long> degrees;
};

namespace detail {

// Enumerates every admissible edge flow: z-edges carry the fixed d_i,
// w-edges the fixed e_j, and each x vertex splits its inflow over its
// free out-instances in all positive ways.
template <class Fn>
void for_each_edge_flow(const FeynmanGraph& g, const Composition& d_comp,
                        const Composition& e_comp, Fn&& fn) {
    const auto inst = g.edge_instances();
    EdgeFlow flow;
    flow.degrees.assign(inst.size(), 0);

    // Seed source edges; a z->w edge must carry both boundary degrees.
    for (std::size_t idx = 0; idx < inst.size(); ++idx) {
        const auto [u, v] = inst[idx];
        if (!g.is_z(u)) continue;
        const long long value = d_comp.parts()[u];
        if (g.is_w(v) && value != e_comp.parts()[v - g.k() - g.b()]) return;
        flow.degrees[idx] = value;
    }

    auto process_x = [&](auto&& self, int xi) -> void {
        if (xi > g.b()) {
            fn(flow);
            return;
        }
        const int xv = g.x_vertex(xi);
        long long inflow = 0;
        for (std::size_t idx = 0; idx < inst.size(); ++idx)
            if (inst[idx].second == xv) inflow += flow.degrees[idx];

        long long forced = 0;
        std::vector<std::size_t> free_out;
        for (std::size_t idx = 0; idx < inst.size(); ++idx) {
            if (inst[idx].first != xv) continue;
            const int v = inst[idx].second;
            if (g.is_w(v)) {
                const long long e = e_comp.parts()[v - g.k() - g.b()];
                flow.degrees[idx] = e;
                forced += e;
            } else {
                free_out.push_back(idx);
            }
        }

        const long long remaining = inflow - forced;
        auto split = [&](auto&& inner, std::size_t fi, long long rem) -> void {
            if (fi == free_out.size()) {
                if (rem == 0) self(self, xi + 1);
                return;
            }
            const long long slots_after = static_cast<long long>(free_out.size() - fi - 1);
            for (long long v = 1; v <= rem - slots_after; ++v) {
                flow.degrees[free_out[fi]] = v;
                inner(inner, fi + 1, rem - v);
            }
        };
        if (remaining < 0) return;
        split(split, 0, remaining);
    };
    process_x(process_x, 1);
}

}  // namespace detail

/// Coefficient of prod z_i^{d_i} prod w_j^{-e_j} in I_Gamma: the sum
/// over admissible edge flows of the product of edge degrees. The
/// contour extraction at each x vertex is exactly flow conservation, so
/// no radii appear; mismatched totals admit no flow and give 0.
inline Int integral_coefficient(const FeynmanGraph& g, const Composition& d_comp,
                                const Composition& e_comp) {
    if (d_comp.size() != g.k() || e_comp.size() != g.l())
        throw std::invalid_argument("integral_coefficient: composition lengths must be (k, l)");
    Int total = 0;
    detail::for_each_edge_flow(g, d_comp, e_comp, [&](const EdgeFlow& flow) {
        Int w = 1;
        for (long long v : flow.degrees) w *= v;
        total += w;
    });
    return total;
}

/// F_Gamma coefficient: I_Gamma coefficient divided by #Aut(Gamma).
inline Rational f_gamma_coefficient(const FeynmanGraph& g, const Composition& d_comp,
                                    const Composition& e_comp) {
    return Rational(integral_coefficient(g, d_comp, e_comp)) / Rational(aut_order(g));
}

struct ResidueTerm {
    long long coefficient;
    long long exponent;
};

/// The one-in/two-removed residue: integrating x w/(x-w)^2 x^{-e'} x^{-e''}
/// over dx/(2 pi i x) leaves e w^{-e} with e = e' + e''.
inline ResidueTerm residue_case1(int e_left, int e_right) {
    if (e_left < 1 || e_right < 1) throw std::invalid_argument("residue_case1: exponents must be >= 1");
    const long long e = e_left + e_right;
    return {e, e};
}

struct SplitTerm {
    int e1;
    int e2;
    long long weight;
};

/// The two-out residue: integrating the double propagator against
/// x^{-e'} yields the sum over ordered positive splits e1 + e2 = e',
/// each weighted e1*e2. Empty for e' = 1.
inline std::vector<SplitTerm> residue_case2(int e_prime) {
    if (e_prime < 1) throw std::invalid_argument("residue_case2: exponent must be >= 1");
    std::vector<SplitTerm> out;
    for (int e1 = 1; e1 < e_prime; ++e1)
        out.push_back({e1, e_prime - e1, static_cast<long long>(e1) * (e_prime - e1)});
    return out;
}

namespace detail {

inline std::complex<double> propagator_value(std::complex<double> u, std::complex<double> v) {
    const std::complex<double> diff = u - v;
    return u * v / (diff * diff);
}

inline std::complex<double> propagator_pow(std::complex<double> u, std::complex<double> v, int m) {
    std::complex<double> p = 1.0;
    const std::complex<double> base = propagator_value(u, v);
    for (int i = 0; i < m; ++i) p *= base;
    return p;
}

}  // namespace detail

/// Geometric ladder of radii strictly between 1.1*max|z| and 0.9*min|w|.
inline std::vector<double> default_radii(int b, const std::vector<std::complex<double>>& z_values,
                                         const std::vector<std::complex<double>>& w_values) {
    double zmax = 0.0, wmin = std::numeric_limits<double>::infinity();
    for (auto z : z_values) zmax = std::max(zmax, std::abs(z));
    for (auto w : w_values) wmin = std::min(wmin, std::abs(w));
    const double lo = 1.1 * zmax, hi = 0.9 * wmin;
    if (b > 0 && !(lo < hi))
        throw std::invalid_argument("default_radii: no room between |z| and |w| scales");
    std::vector<double> radii(b);
    for (int i = 1; i <= b; ++i) radii[i - 1] = lo * std::pow(hi / lo, double(i) / (b + 1));
    return radii;
}

/// Direct numerical evaluation of I_Gamma at the given boundary values:
/// each contour is a composite trapezoid rule on |x_i| = r_i (spectrally
/// accurate for these integrands), contracted vertex by vertex. Graphs
/// that would force a tensor of order > 2 across a cut are rejected;
/// the classes exercised here stay well below that.
inline std::complex<double> numeric_contour_check(const FeynmanGraph& g,
                                                  const std::vector<std::complex<double>>& z_values,
                                                  const std::vector<std::complex<double>>& w_values,
                                                  std::vector<double> radii,
                                                  int quadrature_points = 512) {
    const int b = g.b(), n = quadrature_points;
    if (static_cast<int>(z_values.size()) != g.k() || static_cast<int>(w_values.size()) != g.l())
        throw std::invalid_argument("numeric_contour_check: boundary value counts must be (k, l)");
    if (n < 64) throw std::invalid_argument("numeric_contour_check: need at least 64 points");
    if (radii.empty() && b > 0) radii = default_radii(b, z_values, w_values);
    if (static_cast<int>(radii.size()) != b)
        throw std::invalid_argument("numeric_contour_check: need one radius per x vertex");
    double zmax = 0.0, wmin = std::numeric_limits<double>::infinity();
    for (auto z : z_values) zmax = std::max(zmax, std::abs(z));
    for (auto w : w_values) wmin = std::min(wmin, std::abs(w));
    double prev = zmax;
    for (double r : radii) {
        if (!(prev < r)) throw std::invalid_argument("numeric_contour_check: radii must increase");
        prev = r;
    }
    if (b > 0 && !(prev < wmin))
        throw std::invalid_argument("numeric_contour_check: radii must stay below min |w|");

    using cd = std::complex<double>;
    // Scalar z->w factors need no integration at all.
    cd scalar = 1.0;
    for (const auto& [e, m] : g.multiplicity())
        if (g.is_z(e.first) && g.is_w(e.second))
            scalar *= detail::propagator_pow(z_values[e.first], w_values[e.second - g.k() - b], m);
    if (b == 0) return scalar;

    // Sample points of each contour.
    std::vector<std::vector<cd>> pts(b + 1);
    for (int i = 1; i <= b; ++i) {
        pts[i].resize(n);
        for (int j = 0; j < n; ++j) {
            const double th = 2.0 * std::numbers::pi * j / n;
            pts[i][j] = radii[i - 1] * cd(std::cos(th), std::sin(th));
        }
    }

    auto has_future_edge = [&](int xi, int beyond) {
        for (const auto& [e, m] : g.multiplicity())
            if (e.first == g.x_vertex(xi) && g.is_x(e.second) && e.second > g.x_vertex(beyond))
                return true;
        return false;
    };

    std::vector<int> vars;          // frontier x-indices, in insertion order
    std::vector<cd> data{cd(1.0)};  // tensor over vars, row-major, extent n each

    for (int i = 1; i <= b; ++i) {
        // Local factor from boundary edges at x_i.
        std::vector<cd> local(n, cd(1.0));
        for (const auto& [e, m] : g.multiplicity()) {
            if (e.second == g.x_vertex(i) && g.is_z(e.first))
                for (int j = 0; j < n; ++j) local[j] *= detail::propagator_pow(z_values[e.first], pts[i][j], m);
            if (e.first == g.x_vertex(i) && g.is_w(e.second))
                for (int j = 0; j < n; ++j)
                    local[j] *= detail::propagator_pow(pts[i][j], w_values[e.second - g.k() - b], m);
        }

        // Coupling matrices toward frontier variables.
        const int f = static_cast<int>(vars.size());
        if (f + 1 > 3)
            throw std::runtime_error("numeric_contour_check: graph frontier too wide for contraction");
        std::vector<std::vector<cd>> coupling(f);
        for (int p = 0; p < f; ++p) {
            const int m = g.multiplicity_of(g.x_vertex(vars[p]), g.x_vertex(i));
            if (m == 0) continue;
            coupling[p].resize(static_cast<std::size_t>(n) * n);
            for (int ju = 0; ju < n; ++ju)
                for (int ji = 0; ji < n; ++ji)
                    coupling[p][static_cast<std::size_t>(ju) * n + ji] =
                        detail::propagator_pow(pts[vars[p]][ju], pts[i][ji], m);
        }

        std::vector<int> full = vars;
        full.push_back(i);
        std::vector<int> kept_pos;
        for (int p = 0; p <= f; ++p)
            if (has_future_edge(full[p], i)) kept_pos.push_back(p);
        if (kept_pos.size() > 2)
            throw std::runtime_error("numeric_contour_check: graph frontier too wide for contraction");

        std::vector<cd> out(static_cast<std::size_t>(std::pow(double(n), kept_pos.size())), cd(0.0));
        std::vector<int> j(f + 1, 0);
        auto loop = [&](auto&& self, int p, std::size_t tidx) -> void {
            if (p == f) {
                for (j[f] = 0; j[f] < n; ++j[f]) {
                    cd val = data[tidx] * local[j[f]];
                    for (int q = 0; q < f; ++q)
                        if (!coupling[q].empty())
                            val *= coupling[q][static_cast<std::size_t>(j[q]) * n + j[f]];
                    std::size_t oidx = 0;
                    for (int kp : kept_pos) oidx = oidx * n + j[kp];
                    out[oidx] += val;
                }
                return;
            }
            for (j[p] = 0; j[p] < n; ++j[p]) self(self, p + 1, tidx * n + j[p]);
        };
        loop(loop, 0, 0);

        const int eliminated = f + 1 - static_cast<int>(kept_pos.size());
        const double scale = std::pow(double(n), -eliminated);
        for (auto& v : out) v *= scale;

        std::vector<int> new_vars;
        for (int kp : kept_pos) new_vars.push_back(full[kp]);
        vars = std::move(new_vars);
        data = std::move(out);
    }

    return scalar * data[0];
}

/// The exact series truncated at total degree max_total, evaluated at
/// the given boundary values; the tail is geometric in max|z|/min|w|.
inline std::complex<double> truncated_series_value(const FeynmanGraph& g,
                                                   const std::vector<std::complex<double>>& z_values,
                                                   const std::vector<std::complex<double>>& w_values,
                                                   int max_total) {
    std::complex<double> sum = 0.0;
    for (int n = 1; n <= max_total; ++n)
        for (const auto& dc : compositions_of(n, g.k()))
            for (const auto& ec : compositions_of(n, g.l())) {
                const Int coeff = integral_coefficient(g, dc, ec);
                if (coeff == 0) continue;
                std::complex<double> term = coeff.convert_to<double>();
                for (int i = 0; i < g.k(); ++i) term *= std::pow(z_values[i], dc.parts()[i]);
                for (int i = 0; i < g.l(); ++i) term *= std::pow(w_values[i], -ec.parts()[i]);
                sum += term;
            }
    return sum;
}

}  // namespace hurwitz_cx
