#pragma once

#include "hurwitz_cx/cover_counts.hpp"
#include "hurwitz_cx/numbers.hpp"
#include "hurwitz_cx/permutation.hpp"

#include <array>
#include <compare>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hurwitz_cx {

/// Degree rule at the intermediate vertices: the standard class uses
/// the {1,2} in/out split; the extended class also admits {0,3}.
enum class GraphClassVariant { standard, extended };

/// A labeled oriented multigraph on z_1..z_k, x_1..x_b, w_1..w_l.
/// Vertices are encoded 0..k-1 (z), k..k+b-1 (x), k+b..k+b+l-1 (w);
/// this total order refines the defining partial order (z < x < w,
/// x_i < x_j for i < j; z's and w's are mutually incomparable).
/// A graph IS its multiplicity map: all vertices carry labels, so
/// isomorphism classes collapse to equal maps.
class FeynmanGraph {
public:
    FeynmanGraph(int b, int k, int l) : b_(b), k_(k), l_(l) {
        if (b < 0 || k < 1 || l < 1) throw std::invalid_argument("graph needs b>=0, k>=1, l>=1");
    }

    int b() const { return b_; }
    int k() const { return k_; }
    int l() const { return l_; }
    int vertex_count() const { return k_ + b_ + l_; }

    int z_vertex(int i) const { return check_range(i, k_), i - 1; }
    int x_vertex(int i) const { return check_range(i, b_), k_ + i - 1; }
    int w_vertex(int i) const { return check_range(i, l_), k_ + b_ + i - 1; }

    bool is_z(int v) const { return v < k_; }
    bool is_x(int v) const { return v >= k_ && v < k_ + b_; }
    bool is_w(int v) const { return v >= k_ + b_; }

    std::string label(int v) const {
        std::ostringstream os;
        if (is_z(v))
            os << 'z' << v + 1;
        else if (is_x(v))
            os << 'x' << v - k_ + 1;
        else
            os << 'w' << v - k_ - b_ + 1;
        return os.str();
    }

    /// True iff u < v in the defining partial order (an edge u->v is legal).
    bool precedes(int u, int v) const {
        const int cu = is_z(u) ? 0 : is_x(u) ? 1 : 2;
        const int cv = is_z(v) ? 0 : is_x(v) ? 1 : 2;
        if (cu != cv) return cu < cv;
        return cu == 1 && u < v;
    }

    void add_edge(int u, int v, int multiplicity = 1) {
        if (multiplicity < 1) throw std::invalid_argument("edge multiplicity must be positive");
        if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count() || !precedes(u, v))
            throw std::invalid_argument("edge endpoints must satisfy the vertex order");
        mult_[{u, v}] += multiplicity;
    }

    const std::map<std::pair<int, int>, int>& multiplicity() const { return mult_; }

    int multiplicity_of(int u, int v) const {
        auto it = mult_.find({u, v});
        return it == mult_.end() ? 0 : it->second;
    }

    int out_degree(int v) const {
        int s = 0;
        for (const auto& [e, m] : mult_)
            if (e.first == v) s += m;
        return s;
    }

    int in_degree(int v) const {
        int s = 0;
        for (const auto& [e, m] : mult_)
            if (e.second == v) s += m;
        return s;
    }

    /// Membership in G_{b,k,l} (or its extended relaxation).
    bool in_class(GraphClassVariant variant) const {
        for (int i = 0; i < k_; ++i)
            if (out_degree(i) != 1 || in_degree(i) != 0) return false;
        for (int i = k_ + b_; i < vertex_count(); ++i)
            if (in_degree(i) != 1 || out_degree(i) != 0) return false;
        for (int i = k_; i < k_ + b_; ++i) {
            const int out = out_degree(i), in = in_degree(i);
            const bool std_split = (out == 1 && in == 2) || (out == 2 && in == 1);
            const bool ext_split = (out == 0 && in == 3) || (out == 3 && in == 0);
            if (variant == GraphClassVariant::standard ? !std_split : !(std_split || ext_split))
                return false;
        }
        return true;
    }

    /// Has some x vertex with the {0,3} split (so it lies outside the
    /// standard class even though the extended rule admits it).
    bool has_zero_three_vertex() const {
        for (int i = k_; i < k_ + b_; ++i) {
            const int out = out_degree(i), in = in_degree(i);
            if ((out == 0 && in == 3) || (out == 3 && in == 0)) return true;
        }
        return false;
    }

    /// Edge instances, parallel edges expanded, sorted by endpoint pair.
    std::vector<std::pair<int, int>> edge_instances() const {
        std::vector<std::pair<int, int>> out;
        for (const auto& [e, m] : mult_)
            for (int i = 0; i < m; ++i) out.push_back(e);
        return out;
    }

    /// Sorted "u->v:m" tokens joined by single spaces; the canonical
    /// text form used in output and as a map key.
    std::string canonical_string() const {
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, m] : mult_) {
            if (!first) os << ' ';
            first = false;
            os << label(e.first) << "->" << label(e.second) << ':' << m;
        }
        return os.str();
    }

    friend bool operator==(const FeynmanGraph& a, const FeynmanGraph& b) {
        return a.b_ == b.b_ && a.k_ == b.k_ && a.l_ == b.l_ && a.mult_ == b.mult_;
    }
    friend bool operator<(const FeynmanGraph& a, const FeynmanGraph& b) {
        if (a.b_ != b.b_) return a.b_ < b.b_;
        if (a.k_ != b.k_) return a.k_ < b.k_;
        if (a.l_ != b.l_) return a.l_ < b.l_;
        return a.mult_ < b.mult_;
    }

private:
    static int check_range(int i, int n) {
        if (i < 1 || i > n) throw std::out_of_range("vertex index out of range");
        return i;
    }

    int b_, k_, l_;
    std::map<std::pair<int, int>, int> mult_;
};

/// #Aut: vertices are labeled, so automorphisms only permute parallel
/// edges; the order is the product of multiplicity factorials.
inline Int aut_order(const FeynmanGraph& g) {
    Int a = 1;
    for (const auto& [e, m] : g.multiplicity()) a *= factorial(m);
    return a;
}

namespace detail {

struct GraphSearch {
    const FeynmanGraph& proto;          // carries b,k,l and the vertex order
    std::vector<int> in_cap;            // exact required in-degree per vertex
    std::vector<int> in_used;
    std::map<std::pair<int, int>, int> mult;
    std::vector<FeynmanGraph>& out;

    void accept() {
        const int n = proto.vertex_count();
        for (int v = 0; v < n; ++v)
            if (in_used[v] != in_cap[v]) return;
        FeynmanGraph g(proto.b(), proto.k(), proto.l());
        for (const auto& [e, m] : mult) g.add_edge(e.first, e.second, m);
        out.push_back(std::move(g));
    }

    void place_vertex(int vertex) {
        const int n = proto.vertex_count();
        if (vertex == proto.k() + proto.b()) {  // only sinks remain
            accept();
            return;
        }
        // In-edges of an x vertex all come from earlier vertices, so its
        // in-degree is final once we reach it.
        if (proto.is_x(vertex) && in_used[vertex] != in_cap[vertex]) return;

        const int budget = proto.is_z(vertex) ? 1 : 3 - in_cap[vertex];
        std::vector<int> targets;
        for (int v = vertex + 1; v < n; ++v)
            if (proto.precedes(vertex, v) && in_cap[v] > in_used[v]) targets.push_back(v);
        distribute(vertex, targets, 0, budget);
    }

    void distribute(int vertex, const std::vector<int>& targets, std::size_t ti, int remaining) {
        if (ti == targets.size()) {
            if (remaining == 0) place_vertex(vertex + 1);
            return;
        }
        const int v = targets[ti];
        const int room = in_cap[v] - in_used[v];
        for (int m = 0; m <= std::min(remaining, room); ++m) {
            if (m > 0) {
                mult[{vertex, v}] = m;
                in_used[v] += m;
            }
            distribute(vertex, targets, ti + 1, remaining - m);
            if (m > 0) {
                mult.erase({vertex, v});
                in_used[v] -= m;
            }
        }
    }
};

}  // namespace detail

/// One representative per isomorphism class of G_{b,k,l} (classes are
/// exactly multiplicity maps), in a deterministic order. For each x
/// vertex the in/out split is chosen first, then edges are assigned by
/// backtracking over remaining capacities; split choices whose stub
/// totals cannot balance are pruned outright.
inline std::vector<FeynmanGraph> enumerate_graphs(int b, int k, int l, GraphClassVariant variant) {
    std::vector<FeynmanGraph> out;
    const std::vector<int> in_choices =
        variant == GraphClassVariant::standard ? std::vector<int>{1, 2} : std::vector<int>{0, 1, 2, 3};

    const FeynmanGraph proto(b, k, l);
    // in_split[i] = required in-degree of x_{i+1}; out-degree is 3 - in.
    std::vector<int> in_split(b, 0);
    auto choose_splits = [&](auto&& self, int i) -> void {
        if (i == b) {
            int out_stubs = k, in_stubs = l;
            for (int s : in_split) {
                out_stubs += 3 - s;
                in_stubs += s;
            }
            if (out_stubs != in_stubs) return;
            detail::GraphSearch search{proto,
                                       std::vector<int>(proto.vertex_count(), 0),
                                       std::vector<int>(proto.vertex_count(), 0),
                                       {},
                                       out};
            for (int j = 0; j < b; ++j) search.in_cap[k + j] = in_split[j];
            for (int j = 0; j < l; ++j) search.in_cap[k + b + j] = 1;
            search.place_vertex(0);
            return;
        }
        for (int c : in_choices) {
            in_split[i] = c;
            self(self, i + 1);
        }
    };
    choose_splits(choose_splits, 0);
    return out;
}

namespace detail {

// Canonical form of one cyclic component: the cycle written from its
// minimal point. Components are compared with their supports, so a
// 1-cycle (a) only ever matches the 1-cycle on the same point.
inline std::vector<std::vector<int>> components_of(const std::vector<int>& images) {
    const int d = static_cast<int>(images.size());
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(d + 1, 0);
    for (int s = 1; s <= d; ++s) {
        if (seen[s]) continue;
        std::vector<int> c;
        int cur = s;
        do {
            seen[cur] = 1;
            c.push_back(cur);
            cur = images[cur - 1];
        } while (cur != s);
        comps.push_back(std::move(c));
    }
    return comps;
}

}  // namespace detail

/// The graph associated to a factorization tuple: levels 0..b carry the
/// cyclic components of g_i...g_1.sigma_d; equal components at
/// consecutive levels are glued into one edge whose endpoints are read
/// off from the first and last level of the run. The tuple must satisfy
/// the defining equation for (d_comp, e_comp).
inline FeynmanGraph associate_graph(const FactorizationTuple& t, const Composition& d_comp,
                                    const Composition& e_comp) {
    const int d = t.degree;
    const int b = static_cast<int>(t.transpositions.size());
    if (d_comp.total() != d || e_comp.total() != d)
        throw std::invalid_argument("associate_graph: compositions do not match the degree");

    // Products Q_i = g_i ... g_1 . sigma_d and their components.
    std::vector<std::vector<int>> q(b + 1);
    q[0] = sigma_from_composition(d_comp).images();
    for (int i = 1; i <= b; ++i) {
        const auto& g = t.transpositions[i - 1].images();
        q[i].resize(d);
        for (int p = 0; p < d; ++p) q[i][p] = g[q[i - 1][p] - 1];
    }
    if (!detail::equals_conjugate(q[b], sigma_from_composition(e_comp).images(), t.tau.images()))
        throw std::invalid_argument("associate_graph: tuple does not satisfy the cover equation");

    std::vector<std::vector<std::vector<int>>> levels(b + 1);
    std::vector<std::vector<int>> comp_at(b + 1, std::vector<int>(d + 1));
    for (int i = 0; i <= b; ++i) {
        levels[i] = detail::components_of(q[i]);
        for (std::size_t ci = 0; ci < levels[i].size(); ++ci)
            for (int p : levels[i][ci]) comp_at[i][p] = static_cast<int>(ci);
    }

    const int k = d_comp.size(), l = e_comp.size();
    FeynmanGraph graph(b, k, l);

    // Block index of a level-0 component (a cycle of sigma_d) from its
    // minimal point; ditto for level b via tau-images of the e-blocks.
    std::vector<int> z_block_of_min(d + 1, 0);
    for (int v = 1; v <= k; ++v) z_block_of_min[d_comp.prefix(v - 1) + 1] = v;
    std::vector<int> w_block_of_point(d + 1, 0);
    for (int v = 1; v <= l; ++v) w_block_of_point[t.tau.apply(e_comp.prefix(v - 1) + 1)] = v;

    for (int i = 0; i <= b; ++i) {
        for (const auto& comp : levels[i]) {
            // Start of a run? The same component must not occur at level i-1.
            if (i > 0 && levels[i - 1][comp_at[i - 1][comp[0]]] == comp) continue;
            int end = i;
            while (end < b && levels[end + 1][comp_at[end + 1][comp[0]]] == comp) ++end;

            int v_in, v_fin;
            if (i == 0)
                v_in = graph.z_vertex(z_block_of_min[comp[0]]);
            else
                v_in = graph.x_vertex(i);
            if (end == b) {
                int wb = 0;
                for (int p : comp)
                    if (w_block_of_point[p]) wb = w_block_of_point[p];
                v_fin = graph.w_vertex(wb);
            } else {
                v_fin = graph.x_vertex(end + 1);
            }
            graph.add_edge(v_in, v_fin);
        }
    }
    return graph;
}

/// Counts of n_{Gamma;d;e}: factorizations for the key, bucketed by the
/// canonical representative of their associated graph. Values sum to
/// count_covers_bruteforce(key).
inline std::map<FeynmanGraph, Int> count_by_graph(const CountKey& key,
                                                  const WorkPolicy& policy = {}) {
    std::map<FeynmanGraph, Int> out;
    for (const auto& t : enumerate_factorizations(key, policy))
        ++out[associate_graph(t, key.d_comp, key.e_comp)];
    return out;
}

/// Shared-pass variant of count_by_graph for verification sweeps: one
/// enumeration of the (g, tau) space for a fixed (b, d_comp), bucketed
/// by boundary composition (at most max_parts parts) and graph.
inline std::map<Composition, std::map<FeynmanGraph, Int>> count_by_graph_by_target(
    int b, const Composition& d_comp, int max_parts, const WorkPolicy& policy = {}) {
    const int d = d_comp.total();
    const Int m = detail::g_space_size(d, b);
    ensure_within_bound(m * factorial(d), policy);
    const std::uint64_t space = detail::checked_space(m, policy);

    const auto transpositions = enumerate_transpositions(d);
    const Permutation sigma_d = sigma_from_composition(d_comp);
    using Buckets = std::map<std::vector<int>, std::map<FeynmanGraph, Int>>;

    auto chunk_scan = [&](std::uint64_t lo, std::uint64_t hi) -> Buckets {
        Buckets local;
        std::vector<int> tau(d), inv(d), parts;
        if (b > 0 && transpositions.empty()) return local;
        detail::scan_g_products(
            sigma_d, b, transpositions, lo, hi,
            [&](const std::vector<int>& digits, const std::vector<int>& product) {
                std::iota(tau.begin(), tau.end(), 1);
                do {
                    for (int i = 0; i < d; ++i) inv[tau[i] - 1] = i + 1;
                    parts.clear();
                    int s = 1, j = 1;
                    bool ok = true;
                    while (true) {
                        const int r = inv[product[tau[j - 1] - 1] - 1];
                        if (r == j + 1) {
                            ++j;
                        } else if (r == s) {
                            parts.push_back(j - s + 1);
                            if (static_cast<int>(parts.size()) > max_parts) {
                                ok = false;
                                break;
                            }
                            s = j + 1;
                            j = s;
                            if (s > d) break;
                        } else {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) continue;
                    std::vector<Permutation> gs;
                    gs.reserve(digits.size());
                    for (int gi : digits) gs.push_back(transpositions[gi]);
                    FactorizationTuple t{std::move(gs), Permutation(tau), d};
                    ++local[parts][associate_graph(t, d_comp, Composition(parts))];
                } while (std::next_permutation(tau.begin(), tau.end()));
            });
        return local;
    };

    std::map<Composition, std::map<FeynmanGraph, Int>> out;
    for (auto& chunk : detail::run_chunked<Buckets>(space, policy.threads, chunk_scan))
        for (auto& [parts, graphs] : chunk) {
            auto& dst = out[Composition(parts)];
            for (auto& [g, c] : graphs) dst[g] += c;
        }
    return out;
}

}  // namespace hurwitz_cx
