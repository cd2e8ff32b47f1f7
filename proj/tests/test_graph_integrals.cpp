#include "hurwitz_cx/graph_integrals.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

using namespace hurwitz_cx;

namespace {

constexpr auto standard = GraphClassVariant::standard;
constexpr auto extended = GraphClassVariant::extended;
using cd = std::complex<double>;

FeynmanGraph single_edge_graph() {
    FeynmanGraph g(0, 1, 1);
    g.add_edge(g.z_vertex(1), g.w_vertex(1));
    return g;
}

FeynmanGraph double_edge_chain() {
    FeynmanGraph g(2, 1, 1);
    g.add_edge(g.z_vertex(1), g.x_vertex(1));
    g.add_edge(g.x_vertex(1), g.x_vertex(2), 2);
    g.add_edge(g.x_vertex(2), g.w_vertex(1));
    return g;
}

// Independent trapezoid contour integral of f over |x| = r against
// dx/(2 pi i x); the oracle for the residue identities.
cd contour_average(const std::function<cd(cd)>& f, double r, int n = 512) {
    cd sum = 0.0;
    for (int j = 0; j < n; ++j) {
        const double th = 2.0 * std::numbers::pi * j / n;
        sum += f(r * cd(std::cos(th), std::sin(th)));
    }
    return sum / double(n);
}

cd propagator(cd u, cd v) { return u * v / ((u - v) * (u - v)); }

}  // namespace

TEST_CASE("propagator coefficients") {
    CHECK(propagator_coefficient(1) == 1);
    CHECK(propagator_coefficient(0) == 0);
    CHECK(propagator_coefficient(-3) == 0);
    CHECK(propagator_coefficient(7) == 7);

    // Independent check: extract the 7th Taylor coefficient of
    // u/(1-u)^2-style expansion numerically at v = 1.
    const auto c7 = contour_average([](cd u) { return propagator(u, 1.0) / std::pow(u, 7); }, 0.5);
    CHECK(std::abs(c7 - cd(7.0)) < 1e-8);
}

TEST_CASE("integral coefficients on pinned graphs") {
    const auto zw = single_edge_graph();
    for (int n = 1; n <= 8; ++n)
        CHECK(integral_coefficient(zw, Composition{std::vector<int>{n}},
                                   Composition{std::vector<int>{n}}) == n);

    CHECK(integral_coefficient(double_edge_chain(), Composition{2}, Composition{2}) == 4);
    CHECK(integral_coefficient(double_edge_chain(), Composition{2}, Composition{3}) == 0);
    CHECK(integral_coefficient(zw, Composition{1}, Composition{4}) == 0);

    CHECK_THROWS_AS(integral_coefficient(zw, Composition{1, 1}, Composition{2}),
                    std::invalid_argument);
}

TEST_CASE("flow degrees are positive and conserved") {
    const auto graphs = enumerate_graphs(4, 1, 1, standard);
    for (const auto& g : graphs) {
        const auto inst = g.edge_instances();
        detail::for_each_edge_flow(g, Composition{5}, Composition{5}, [&](const EdgeFlow& flow) {
            REQUIRE(flow.degrees.size() == inst.size());
            for (long long v : flow.degrees) CHECK(v >= 1);
            for (int xi = 1; xi <= g.b(); ++xi) {
                long long in = 0, out = 0;
                for (std::size_t i = 0; i < inst.size(); ++i) {
                    if (inst[i].second == g.x_vertex(xi)) in += flow.degrees[i];
                    if (inst[i].first == g.x_vertex(xi)) out += flow.degrees[i];
                }
                CHECK(in == out);
            }
        });
    }
}

TEST_CASE("f_gamma divides by the automorphism order") {
    CHECK(f_gamma_coefficient(double_edge_chain(), Composition{2}, Composition{2}) == Rational(2));
    CHECK(f_gamma_coefficient(single_edge_graph(), Composition{3}, Composition{3}) == Rational(3));
}

TEST_CASE("extended-only graphs integrate to zero") {
    for (int b = 1; b <= 3; ++b)
        for (int k = 1; k <= 2; ++k)
            for (int l = 1; l <= 2; ++l)
                for (const auto& g : enumerate_graphs(b, k, l, extended)) {
                    if (!g.has_zero_three_vertex()) continue;
                    for (int n = 1; n <= 6; ++n)
                        for (const auto& dc : compositions_of(n, k))
                            for (const auto& ec : compositions_of(n, l))
                                CHECK(integral_coefficient(g, dc, ec) == 0);
                }
}

TEST_CASE("integral coefficient is stable under boundary relabeling") {
    // Swap the two z labels together with the two d-parts; the graph is
    // symmetric in z1, z2 so only the parts move.
    FeynmanGraph g(1, 2, 1);
    g.add_edge(g.z_vertex(1), g.x_vertex(1));
    g.add_edge(g.z_vertex(2), g.x_vertex(1));
    g.add_edge(g.x_vertex(1), g.w_vertex(1));

    for (int d1 = 1; d1 <= 4; ++d1)
        for (int d2 = 1; d2 <= 4; ++d2)
            CHECK(integral_coefficient(g, Composition{d1, d2},
                                       Composition{std::vector<int>{d1 + d2}}) ==
                  integral_coefficient(g, Composition{d2, d1},
                                       Composition{std::vector<int>{d1 + d2}}));

    // Swapping w labels really changes the graph here; swapping the
    // e-parts along with it must not change the coefficient.
    FeynmanGraph h1(0, 2, 2), h2(0, 2, 2);
    h1.add_edge(h1.z_vertex(1), h1.w_vertex(1));
    h1.add_edge(h1.z_vertex(2), h1.w_vertex(2));
    h2.add_edge(h2.z_vertex(1), h2.w_vertex(2));
    h2.add_edge(h2.z_vertex(2), h2.w_vertex(1));
    for (int d1 = 1; d1 <= 3; ++d1)
        for (int d2 = 1; d2 <= 3; ++d2)
            for (int e1 = 1; e1 <= 3; ++e1)
                for (int e2 = 1; e2 <= 3; ++e2)
                    CHECK(integral_coefficient(h1, Composition{d1, d2}, Composition{e1, e2}) ==
                          integral_coefficient(h2, Composition{d1, d2}, Composition{e2, e1}));
}

TEST_CASE("residue case 1") {
    CHECK(residue_case1(1, 1).coefficient == 2);
    CHECK(residue_case1(1, 1).exponent == 2);
    CHECK(residue_case1(2, 3).coefficient == 5);
    CHECK(residue_case1(1, 4).exponent == 5);
    CHECK_THROWS_AS(residue_case1(0, 1), std::invalid_argument);

    // Against quadrature at w = 2, r = 1.
    const cd w = 2.0;
    for (int el = 1; el <= 4; ++el)
        for (int er = 1; er <= 4; ++er) {
            const auto term = residue_case1(el, er);
            const auto numeric = contour_average(
                [&](cd x) { return propagator(x, w) * std::pow(x, -el) * std::pow(x, -er); }, 1.0);
            const cd symbolic = double(term.coefficient) * std::pow(w, -double(term.exponent));
            CHECK(std::abs(numeric - symbolic) < 1e-8);
        }
}

TEST_CASE("residue case 2") {
    using terms = std::vector<SplitTerm>;
    auto as_tuples = [](const terms& ts) {
        std::vector<std::array<long long, 3>> v;
        for (const auto& t : ts) v.push_back({t.e1, t.e2, t.weight});
        return v;
    };
    CHECK(as_tuples(residue_case2(2)) == std::vector<std::array<long long, 3>>{{1, 1, 1}});
    CHECK(as_tuples(residue_case2(4)) ==
          std::vector<std::array<long long, 3>>{{1, 3, 3}, {2, 2, 4}, {3, 1, 3}});
    CHECK(residue_case2(1).empty());
    CHECK_THROWS_AS(residue_case2(0), std::invalid_argument);

    // Against quadrature at w_{l-1} = 2, w_l = 3, r = 1.
    const cd w1 = 2.0, w2 = 3.0;
    for (int ep = 1; ep <= 5; ++ep) {
        const auto numeric = contour_average(
            [&](cd x) { return propagator(x, w1) * propagator(x, w2) * std::pow(x, -ep); }, 1.0);
        cd symbolic = 0.0;
        for (const auto& t : residue_case2(ep))
            symbolic += double(t.weight) * std::pow(w1, -double(t.e1)) * std::pow(w2, -double(t.e2));
        CHECK(std::abs(numeric - symbolic) < 1e-8);
    }
}

TEST_CASE("numeric contour check validates its inputs") {
    const auto g = double_edge_chain();
    CHECK_THROWS_AS(numeric_contour_check(g, {cd(0.2)}, {cd(1.0)}, {0.7, 0.4}),
                    std::invalid_argument);
    CHECK_THROWS_AS(numeric_contour_check(g, {cd(0.2)}, {cd(1.0)}, {0.1, 0.5}),
                    std::invalid_argument);
    CHECK_THROWS_AS(numeric_contour_check(g, {cd(0.2)}, {cd(1.0)}, {0.5, 1.5}),
                    std::invalid_argument);
    CHECK_THROWS_AS(numeric_contour_check(g, {cd(0.2)}, {cd(1.0)}, {0.4}), std::invalid_argument);
    CHECK_THROWS_AS(numeric_contour_check(g, {cd(0.2)}, {cd(1.0)}, {0.4, 0.7}, 32),
                    std::invalid_argument);
}

TEST_CASE("numeric contour check against closed form and series") {
    // b = 0: no contours at all, just the propagator value.
    const auto zw = single_edge_graph();
    const auto v = numeric_contour_check(zw, {cd(0.3)}, {cd(1.0)}, {});
    CHECK(std::abs(v - cd(0.3 / 0.49)) < 1e-12);

    // The double-edge chain at the pinned sample point.
    const auto g = double_edge_chain();
    const auto numeric = numeric_contour_check(g, {cd(0.2)}, {cd(1.0)}, {0.4, 0.7}, 512);
    const auto series = truncated_series_value(g, {cd(0.2)}, {cd(1.0)}, 30);
    CHECK(std::abs(numeric - series) < 1e-8);

    // Default radii work too.
    const auto numeric2 = numeric_contour_check(g, {cd(0.2)}, {cd(1.0)}, {});
    CHECK(std::abs(numeric2 - series) < 1e-8);
}

TEST_CASE("numeric contour check vanishes on extended-only graphs") {
    for (const auto& g : enumerate_graphs(2, 1, 1, extended)) {
        if (!g.has_zero_three_vertex()) continue;
        const auto v = numeric_contour_check(g, {cd(0.2)}, {cd(1.0)}, {}, 128);
        CHECK(std::abs(v) < 1e-8);
    }
}
