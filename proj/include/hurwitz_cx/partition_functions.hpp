#pragma once

#include "hurwitz_cx/cover_counts.hpp"
#include "hurwitz_cx/feynman_graph.hpp"
#include "hurwitz_cx/graph_integrals.hpp"
#include "hurwitz_cx/numbers.hpp"
#include "hurwitz_cx/work_bound.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

namespace hurwitz_cx {

namespace detail {

inline Int boson_sum_over(const std::vector<FeynmanGraph>& graphs, const Composition& d_comp,
                          const Composition& e_comp) {
    Rational total = 0;
    for (const auto& g : graphs) total += f_gamma_coefficient(g, d_comp, e_comp);
    if (!is_integral(total) || total < 0)
        throw std::logic_error("boson sum is not a nonnegative integer: " +
                               numerator(total).str() + "/" + denominator(total).str());
    return numerator(total);
}

}  // namespace detail

/// The graph-side count: sum of I_Gamma / #Aut(Gamma) over the graph
/// class. A priori rational; it must land on a nonnegative integer, and
/// anything else is reported as a hard error.
inline Int boson_sum(int b, int k, int l, const Composition& d_comp, const Composition& e_comp,
                     GraphClassVariant variant = GraphClassVariant::standard) {
    return detail::boson_sum_over(enumerate_graphs(b, k, l, variant), d_comp, e_comp);
}

/// Key-by-key comparison of the graph sum against the brute-force
/// factorization count.
struct BosonReport {
    struct Row {
        CountKey key;
        Int oracle;
        Int graph_sum;
        bool match;
    };

    int b_max, k_max, l_max, d_max;
    std::vector<Row> rows;

    bool all_match() const {
        for (const auto& r : rows)
            if (!r.match) return false;
        return true;
    }

    std::vector<Row> mismatches() const {
        std::vector<Row> out;
        for (const auto& r : rows)
            if (!r.match) out.push_back(r);
        return out;
    }
};

/// Compares boson_sum with the brute-force count for every key with
/// b <= b_max, composition lengths <= (k_max, l_max) and equal totals
/// <= d_max. The oracle side shares one (g, tau) enumeration per
/// (b, d-composition); the graph side never sees a factorization.
inline BosonReport verify_boson(int b_max, int k_max, int l_max, int d_max,
                                const WorkPolicy& policy = {}) {
    BosonReport report{b_max, k_max, l_max, d_max, {}};
    std::map<std::array<int, 3>, std::vector<FeynmanGraph>> graph_cache;  // (b,k,l) -> class
    for (int b = 0; b <= b_max; ++b)
        for (int k = 1; k <= k_max; ++k)
            for (int n = 1; n <= d_max; ++n)
                for (const auto& d_comp : compositions_of(n, k)) {
                    const auto oracle = count_covers_by_target(b, d_comp, l_max, policy);
                    for (int l = 1; l <= l_max; ++l) {
                        auto [it, fresh] = graph_cache.try_emplace({b, k, l});
                        if (fresh) it->second = enumerate_graphs(b, k, l, GraphClassVariant::standard);
                        for (const auto& e_comp : compositions_of(n, l)) {
                            auto oit = oracle.find(e_comp);
                            Int count = oit == oracle.end() ? Int(0) : oit->second;
                            Int graph_sum = detail::boson_sum_over(it->second, d_comp, e_comp);
                            report.rows.push_back(
                                {CountKey{b, d_comp, e_comp}, count, graph_sum, count == graph_sum});
                        }
                    }
                }
    return report;
}

/// Coefficient of q^d lambda^b / b! in the two-theta product: the finite
/// sum over half-integers p + p' = d of ((p^2 - p'^2)/2)^b, with 0^0 = 1.
/// Computed in exact rational arithmetic and asserted integral.
inline Int fermion_coefficient(int b, int d) {
    if (b < 0 || d < 1) throw std::invalid_argument("fermion_coefficient: need b >= 0, d >= 1");
    Rational sum = 0;
    for (int i = 0; i < d; ++i) {
        // p = i + 1/2, p' = d - p; (p^2 - p'^2)/2 = (2i + 1 - d) d / 2.
        const Rational base(Int(2 * i + 1 - d) * d, 2);
        Rational term = 1;
        for (int j = 0; j < b; ++j) term *= base;
        sum += term;
    }
    if (!is_integral(sum))
        throw std::logic_error("fermion coefficient is not an integer");
    return numerator(sum);
}

/// Coefficient-wise check of the fermionic product formula against the
/// diagonal counts n_{b;(d);(d)}.
struct FermionReport {
    struct Row {
        int b;
        int d;
        Int cover_count;
        Int fermion_sum;
        bool match;
    };

    int b_max, d_max;
    std::vector<Row> rows;

    bool all_match() const {
        for (const auto& r : rows)
            if (!r.match) return false;
        return true;
    }

    std::vector<Row> mismatches() const {
        std::vector<Row> out;
        for (const auto& r : rows)
            if (!r.match) out.push_back(r);
        return out;
    }
};

inline FermionReport verify_fermion(int b_max, int d_max, const WorkPolicy& policy = {}) {
    FermionReport report{b_max, d_max, {}};
    for (int b = 0; b <= b_max; ++b)
        for (int d = 1; d <= d_max; ++d) {
            const Composition diag{std::vector<int>{d}};
            const Int lhs = count_covers_fast(CountKey{b, diag, diag}, policy);
            const Int rhs = fermion_coefficient(b, d);
            report.rows.push_back({b, d, lhs, rhs, lhs == rhs});
        }
    return report;
}

}  // namespace hurwitz_cx
