#include "hurwitz_cx/partition_functions.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace hurwitz_cx;

namespace {
constexpr auto standard = GraphClassVariant::standard;
constexpr auto extended = GraphClassVariant::extended;
}  // namespace

TEST_CASE("boson sum on pinned keys") {
    CHECK(boson_sum(0, 1, 1, Composition{5}, Composition{5}) == 5);
    CHECK(boson_sum(2, 1, 1, Composition{2}, Composition{2}) == 2);
    CHECK(boson_sum(1, 1, 1, Composition{3}, Composition{3}) == 0);
    CHECK(boson_sum(1, 2, 1, Composition{1, 2}, Composition{2}) == 0);  // parity via graphs
    CHECK(boson_sum(0, 1, 1, Composition{2}, Composition{3}) == 0);     // mismatched totals
}

TEST_CASE("verify_boson matches brute force on a small sweep") {
    const auto report = verify_boson(2, 2, 2, 4);
    CHECK(report.all_match());
    CHECK(report.mismatches().empty());
    // All composition pairs with equal totals <= 4, for b = 0,1,2.
    std::size_t expected = 0;
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 2; ++k)
            for (int l = 1; l <= 2; ++l)
                expected += compositions_of(n, k).size() * compositions_of(n, l).size();
    CHECK(report.rows.size() == 3 * expected);

    // Rows with odd k+l+b are zero on both sides.
    for (const auto& row : report.rows)
        if ((row.key.b + row.key.d_comp.size() + row.key.e_comp.size()) % 2 == 1) {
            CHECK(row.oracle == 0);
            CHECK(row.graph_sum == 0);
        }
}

TEST_CASE("per-graph refinement agrees with counted buckets") {
    for (int b = 0; b <= 2; ++b)
        for (int n = 1; n <= 4; ++n)
            for (const auto& dc : compositions_of(n, 1))
                for (const auto& ec : compositions_of(n, 2)) {
                    const auto buckets = count_by_graph({b, dc, ec});
                    for (const auto& g : enumerate_graphs(b, 1, 2, standard)) {
                        const auto it = buckets.find(g);
                        const Int counted = it == buckets.end() ? Int(0) : it->second;
                        CHECK(Rational(counted) == f_gamma_coefficient(g, dc, ec));
                    }
                }
}

TEST_CASE("including extended graphs changes no boson sum") {
    for (int b = 0; b <= 3; ++b)
        for (int k = 1; k <= 2; ++k)
            for (int l = 1; l <= 2; ++l)
                for (int n = 1; n <= 5; ++n)
                    for (const auto& dc : compositions_of(n, k))
                        for (const auto& ec : compositions_of(n, l))
                            CHECK(boson_sum(b, k, l, dc, ec, standard) ==
                                  boson_sum(b, k, l, dc, ec, extended));
}

TEST_CASE("fermion coefficients") {
    CHECK(fermion_coefficient(0, 3) == 3);
    CHECK(fermion_coefficient(2, 2) == 2);
    for (int d = 1; d <= 8; ++d) CHECK(fermion_coefficient(0, d) == d);
    for (int b = 1; b <= 7; b += 2)
        for (int d = 1; d <= 6; ++d) CHECK(fermion_coefficient(b, d) == 0);
    CHECK_THROWS_AS(fermion_coefficient(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(fermion_coefficient(2, 0), std::invalid_argument);
}

TEST_CASE("verify_fermion on a small range") {
    const auto report = verify_fermion(4, 5);
    CHECK(report.all_match());
    CHECK(report.rows.size() == 5 * 5);
    for (const auto& row : report.rows)
        if (row.b % 2 == 1) {
            CHECK(row.cover_count == 0);
            CHECK(row.fermion_sum == 0);
        }
    // The b = 0 diagonal is d on both sides.
    for (const auto& row : report.rows)
        if (row.b == 0) CHECK(row.cover_count == row.d);
}
