#include "hurwitz_cx/feynman_graph.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace hurwitz_cx;

namespace {

constexpr auto standard = GraphClassVariant::standard;
constexpr auto extended = GraphClassVariant::extended;

FeynmanGraph double_edge_chain() {
    // z1 -> x1, x1 => x2, x2 -> w1: the only element of G_{2,1,1}.
    FeynmanGraph g(2, 1, 1);
    g.add_edge(g.z_vertex(1), g.x_vertex(1));
    g.add_edge(g.x_vertex(1), g.x_vertex(2), 2);
    g.add_edge(g.x_vertex(2), g.w_vertex(1));
    return g;
}

}  // namespace

TEST_CASE("graph construction respects the vertex order") {
    FeynmanGraph g(1, 2, 1);
    CHECK(g.label(g.z_vertex(2)) == "z2");
    CHECK(g.label(g.x_vertex(1)) == "x1");
    CHECK(g.label(g.w_vertex(1)) == "w1");
    CHECK_THROWS_AS(g.add_edge(g.z_vertex(1), g.z_vertex(2)), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(g.x_vertex(1), g.x_vertex(1)), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(g.w_vertex(1), g.x_vertex(1)), std::invalid_argument);
    g.add_edge(g.z_vertex(1), g.w_vertex(1));
    CHECK(g.multiplicity_of(g.z_vertex(1), g.w_vertex(1)) == 1);
}

TEST_CASE("enumerate_graphs on pinned classes") {
    const auto g022 = enumerate_graphs(0, 2, 2, standard);
    REQUIRE(g022.size() == 2);
    std::set<std::string> names;
    for (const auto& g : g022) names.insert(g.canonical_string());
    CHECK(names == std::set<std::string>{"z1->w1:1 z2->w2:1", "z1->w2:1 z2->w1:1"});

    CHECK(enumerate_graphs(1, 1, 1, standard).empty());

    const auto g211 = enumerate_graphs(2, 1, 1, standard);
    REQUIRE(g211.size() == 1);
    CHECK(g211[0].canonical_string() == "z1->x1:1 x1->x2:2 x2->w1:1");
    CHECK(g211[0] == double_edge_chain());
}

TEST_CASE("enumerated graphs satisfy their degree rules and are distinct") {
    for (int b = 0; b <= 4; ++b)
        for (int k = 1; k <= 2; ++k)
            for (int l = 1; l <= 2; ++l)
                for (auto variant : {standard, extended}) {
                    const auto graphs = enumerate_graphs(b, k, l, variant);
                    std::set<std::string> seen;
                    for (const auto& g : graphs) {
                        CHECK(g.in_class(variant));
                        CHECK(seen.insert(g.canonical_string()).second);
                    }
                    if (variant == standard && (b + k + l) % 2 == 1) CHECK(graphs.empty());
                }
    // Parity also holds for wider boundaries.
    for (int b = 0; b <= 5; ++b)
        for (int k = 1; k <= 3; ++k)
            for (int l = 1; l <= 3; ++l)
                if ((b + k + l) % 2 == 1) CHECK(enumerate_graphs(b, k, l, standard).empty());
}

TEST_CASE("extended enumeration strictly contains the standard class") {
    const auto ext = enumerate_graphs(2, 1, 1, extended);
    REQUIRE(ext.size() == 3);
    int zero_three = 0;
    for (const auto& g : ext) {
        CHECK(g.in_class(extended));
        if (g.has_zero_three_vertex()) {
            ++zero_three;
            CHECK_FALSE(g.in_class(standard));
        }
    }
    CHECK(zero_three == 2);
}

TEST_CASE("aut_order multiplies multiplicity factorials") {
    const auto simple = enumerate_graphs(0, 2, 2, standard);
    for (const auto& g : simple) CHECK(aut_order(g) == 1);

    CHECK(aut_order(double_edge_chain()) == 2);

    // Two disjoint double edges: z1->x1, x1=>x2, x2->x3, x3=>x4, x4->w1.
    FeynmanGraph g(4, 1, 1);
    g.add_edge(g.z_vertex(1), g.x_vertex(1));
    g.add_edge(g.x_vertex(1), g.x_vertex(2), 2);
    g.add_edge(g.x_vertex(2), g.x_vertex(3));
    g.add_edge(g.x_vertex(3), g.x_vertex(4), 2);
    g.add_edge(g.x_vertex(4), g.w_vertex(1));
    CHECK(aut_order(g) == 4);
}

TEST_CASE("aut_order is a power of two on the standard class") {
    for (int b = 0; b <= 5; ++b)
        for (int k = 1; k <= 3; ++k)
            for (int l = 1; l <= 3; ++l)
                for (const auto& g : enumerate_graphs(b, k, l, standard)) {
                    Int a = aut_order(g);
                    while (a % 2 == 0) a /= 2;
                    CHECK(a == 1);
                }
}

TEST_CASE("associate_graph on pinned tuples") {
    // b = 0: a single persistent cycle gives z1 -> w1.
    for (const auto& t : enumerate_factorizations({0, Composition{4}, Composition{4}})) {
        const auto g = associate_graph(t, Composition{4}, Composition{4});
        CHECK(g.canonical_string() == "z1->w1:1");
    }

    // b = 2, both g's the same transposition: the double-edge chain.
    {
        const auto t12 = Permutation::transposition(2, 1, 2);
        FactorizationTuple t{{t12, t12}, Permutation::identity(2), 2};
        const auto g = associate_graph(t, Composition{2}, Composition{2});
        CHECK(g == double_edge_chain());
    }

    // b = 1 joining two unit cycles: z1 -> x1, z2 -> x1, x1 -> w1.
    {
        FactorizationTuple t{{Permutation::transposition(2, 1, 2)}, Permutation::identity(2), 2};
        const auto g = associate_graph(t, Composition{1, 1}, Composition{2});
        CHECK(g.canonical_string() == "z1->x1:1 z2->x1:1 x1->w1:1");
    }

    // Tuples violating the cover equation are rejected.
    {
        FactorizationTuple t{{Permutation::transposition(2, 1, 2)}, Permutation::identity(2), 2};
        CHECK_THROWS_AS(associate_graph(t, Composition{2}, Composition{2}), std::invalid_argument);
    }
}

TEST_CASE("associated graphs always land in the standard class") {
    for (int d = 1; d <= 4; ++d)
        for (int b = 0; b <= 3; ++b)
            for (const auto& dc : all_compositions(d))
                for (const auto& ec : all_compositions(d))
                    for (const auto& t : enumerate_factorizations({b, dc, ec})) {
                        const auto g = associate_graph(t, dc, ec);
                        CHECK(g.b() == b);
                        CHECK(g.k() == dc.size());
                        CHECK(g.l() == ec.size());
                        CHECK(g.in_class(GraphClassVariant::standard));
                    }

    // d = 5 up to b = 4, through the shared pass (all boundary lengths).
    for (int b = 0; b <= 4; ++b)
        for (const auto& dc : all_compositions(5))
            for (const auto& [ec, graphs] : count_by_graph_by_target(b, dc, 5))
                for (const auto& [g, cnt] : graphs) {
                    CHECK(g.in_class(GraphClassVariant::standard));
                    CHECK(g.l() == ec.size());
                    CHECK(cnt >= 1);
                }
}

TEST_CASE("count_by_graph buckets factorizations") {
    {
        const auto m = count_by_graph({0, Composition{2}, Composition{2}});
        REQUIRE(m.size() == 1);
        CHECK(m.begin()->first.canonical_string() == "z1->w1:1");
        CHECK(m.begin()->second == 2);
    }
    {
        const auto m = count_by_graph({2, Composition{2}, Composition{2}});
        REQUIRE(m.size() == 1);
        CHECK(m.begin()->first == double_edge_chain());
        CHECK(m.begin()->second == 2);
    }
    CHECK(count_by_graph({1, Composition{2}, Composition{2}}).empty());

    // Bucket totals recover the plain count.
    for (int d = 2; d <= 4; ++d)
        for (int b = 0; b <= 3; ++b)
            for (const auto& ec : all_compositions(d)) {
                CountKey key{b, Composition{std::vector<int>{d}}, ec};
                Int total = 0;
                for (const auto& [g, c] : count_by_graph(key)) total += c;
                CHECK(total == count_covers_bruteforce(key));
            }
}

TEST_CASE("count_by_graph_by_target slices match the per-key maps") {
    for (int b = 0; b <= 2; ++b) {
        const Composition dc{2, 1};
        const auto buckets = count_by_graph_by_target(b, dc, 3);
        for (const auto& [ec, graphs] : buckets) {
            const auto direct = count_by_graph({b, dc, ec});
            CHECK(graphs == direct);
        }
    }
}

TEST_CASE("graph ordering and equality are structural") {
    const auto a = double_edge_chain();
    auto b = double_edge_chain();
    CHECK(a == b);
    CHECK_FALSE(a < b);
    FeynmanGraph c(2, 1, 1);
    c.add_edge(c.z_vertex(1), c.x_vertex(1));
    c.add_edge(c.x_vertex(1), c.x_vertex(2));
    c.add_edge(c.x_vertex(1), c.w_vertex(1));
    c.add_edge(c.x_vertex(2), c.w_vertex(1));  // not in the class; ordering still total
    CHECK((a < c) != (c < a));
}
