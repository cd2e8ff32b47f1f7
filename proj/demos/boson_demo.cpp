// Counts the degree-2 covers with two simple branch points both ways:
// once by enumerating transposition factorizations, once by summing
// graph integrals, and prints the pieces.

#include "hurwitz_cx/hurwitz_cx.hpp"

#include <iostream>

using namespace hurwitz_cx;

int main() {
    const Composition d{2}, e{2};
    const int b = 2;

    std::cout << "factorizations of sigma_(2) with " << b << " transpositions:\n";
    for (const auto& t : enumerate_factorizations({b, d, e})) {
        for (const auto& g : t.transpositions) std::cout << "  g = " << g.to_cycle_string();
        std::cout << "  tau = " << t.tau.to_cycle_string()
                  << "  graph: " << associate_graph(t, d, e).canonical_string() << '\n';
    }

    std::cout << "\ngraph class G_{" << b << ",1,1}:\n";
    for (const auto& g : enumerate_graphs(b, 1, 1, GraphClassVariant::standard)) {
        std::cout << "  " << g.canonical_string() << "  I = " << integral_coefficient(g, d, e)
                  << "  #Aut = " << aut_order(g) << '\n';
    }

    std::cout << "\ncover count  " << count_covers_bruteforce({b, d, e}) << '\n';
    std::cout << "graph sum    " << boson_sum(b, 1, 1, d, e) << '\n';
    return 0;
}
