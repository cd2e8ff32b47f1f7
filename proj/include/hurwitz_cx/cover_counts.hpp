#pragma once

#include "hurwitz_cx/numbers.hpp"
#include "hurwitz_cx/permutation.hpp"
#include "hurwitz_cx/work_bound.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <map>
#include <thread>
#include <utility>
#include <vector>

namespace hurwitz_cx {

/// One counted cover: b transpositions g_1..g_b plus the sheet
/// relabeling tau, all in the same S_d.
struct FactorizationTuple {
    std::vector<Permutation> transpositions;
    Permutation tau;
    int degree;
};

/// Subscript of a count n_{b; d_1..d_k; e_1..e_l}. Keys with mismatched
/// totals are legal; their count is 0.
struct CountKey {
    int b;
    Composition d_comp;
    Composition e_comp;

    friend bool operator==(const CountKey&, const CountKey&) = default;
    friend auto operator<=>(const CountKey& a, const CountKey& b) {
        if (auto c = a.b <=> b.b; c != 0) return c;
        if (auto c = a.d_comp <=> b.d_comp; c != 0) return c;
        return a.e_comp <=> b.e_comp;
    }
};

/// Exact-integer coefficient table of a generating function F_{b,k,l}.
class CoefficientTable {
public:
    void set(CountKey key, Int value) { entries_.insert_or_assign(std::move(key), std::move(value)); }

    Int get(const CountKey& key) const {
        auto it = entries_.find(key);
        return it == entries_.end() ? Int(0) : it->second;
    }

    const std::map<CountKey, Int>& entries() const { return entries_; }

private:
    std::map<CountKey, Int> entries_;
};

namespace detail {

// Number of transposition tuples to enumerate: T^b with the empty
// product convention for b = 0.
inline Int g_space_size(int d, int b) {
    if (b == 0) return 1;
    const Int t = Int(d) * (d - 1) / 2;
    return int_pow(t, b);
}

// Largest index space we are willing to walk even if the caller raised
// the work bound; beyond this the run time is hopeless anyway.
inline constexpr std::uint64_t max_enumerable = std::uint64_t(1) << 62;

inline std::uint64_t checked_space(const Int& m, const WorkPolicy& policy) {
    if (m > Int(max_enumerable)) throw WorkBoundError(m, policy.work_bound);
    return m.convert_to<std::uint64_t>();
}

// Walks the transposition tuples with linear indices in [lo, hi),
// maintaining the prefix products g_j...g_1.sigma. The last factor g_b
// is the fastest-changing digit, so an increment usually recomputes a
// single product. Visits visit(digits, product_images) where digits[j]
// indexes g_{j+1} in `transpositions`.
template <class Visitor>
void scan_g_products(const Permutation& sigma_d, int b,
                     const std::vector<Permutation>& transpositions,
                     std::uint64_t lo, std::uint64_t hi, Visitor&& visit) {
    const int d = sigma_d.degree();
    static const std::vector<int> no_digits;
    if (b == 0) {
        if (lo == 0 && hi > 0) visit(no_digits, sigma_d.images());
        return;
    }
    const std::uint64_t t = transpositions.size();
    if (t == 0 || lo >= hi) return;

    std::vector<int> digits(b, 0);
    std::uint64_t rem = lo;
    for (int j = b - 1; j >= 0; --j) {
        digits[j] = static_cast<int>(rem % t);
        rem /= t;
    }

    // prefix[j] = g_j ... g_1 . sigma_d (prefix[0] = sigma_d)
    std::vector<std::vector<int>> prefix(b + 1, std::vector<int>(d));
    prefix[0] = sigma_d.images();
    auto recompute_from = [&](int j) {
        for (; j < b; ++j) {
            const auto& g = transpositions[digits[j]].images();
            const auto& q = prefix[j];
            auto& out = prefix[j + 1];
            for (int i = 0; i < d; ++i) out[i] = g[q[i] - 1];
        }
    };
    recompute_from(0);

    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        visit(digits, prefix[b]);
        if (idx + 1 == hi) break;
        int pos = b - 1;
        while (true) {
            if (++digits[pos] < static_cast<int>(t)) break;
            digits[pos] = 0;
            --pos;
        }
        recompute_from(pos);
    }
}

// Runs fn(lo, hi) over contiguous chunks of [0, total) and returns the
// per-chunk results in index order.
template <class Result, class Fn>
std::vector<Result> run_chunked(std::uint64_t total, int threads, Fn&& fn) {
    const int n = std::max(1, threads);
    if (n == 1 || total < 2 * static_cast<std::uint64_t>(n)) {
        std::vector<Result> out;
        out.push_back(fn(std::uint64_t(0), total));
        return out;
    }
    const std::uint64_t chunk = (total + n - 1) / n;
    std::vector<Result> results(static_cast<std::size_t>(n));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
    std::vector<std::thread> pool;
    for (int i = 0; i < n; ++i) {
        const std::uint64_t lo = std::min(total, i * chunk);
        const std::uint64_t hi = std::min(total, lo + chunk);
        pool.emplace_back([&, i, lo, hi] {
            try {
                results[i] = fn(lo, hi);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

// Checks P = tau . sigma_e . tau^{-1} pointwise without forming the
// conjugate: P(tau(i)) == tau(sigma_e(i)) for all i.
inline bool equals_conjugate(const std::vector<int>& product, const std::vector<int>& sigma_e,
                             const std::vector<int>& tau) {
    const int d = static_cast<int>(tau.size());
    for (int i = 0; i < d; ++i)
        if (product[tau[i] - 1] != tau[sigma_e[i] - 1]) return false;
    return true;
}

}  // namespace detail

/// n_{b;d;e} by direct enumeration of all transposition tuples and all
/// tau in S_d, checking g_b...g_1.sigma_d = (sigma_e)^tau.
inline Int count_covers_bruteforce(const CountKey& key, const WorkPolicy& policy = {}) {
    if (key.d_comp.total() != key.e_comp.total()) return 0;
    const int d = key.d_comp.total();
    const Int m = detail::g_space_size(d, key.b);
    ensure_within_bound(m * factorial(d), policy);
    const std::uint64_t space = detail::checked_space(m, policy);

    const auto transpositions = enumerate_transpositions(d);
    if (key.b > 0 && transpositions.empty()) return 0;
    const Permutation sigma_d = sigma_from_composition(key.d_comp);
    const std::vector<int> sigma_e = sigma_from_composition(key.e_comp).images();

    auto chunk_count = [&](std::uint64_t lo, std::uint64_t hi) -> Int {
        Int count = 0;
        std::vector<int> tau(d);
        detail::scan_g_products(sigma_d, key.b, transpositions, lo, hi,
                                [&](const std::vector<int>&, const std::vector<int>& product) {
                                    std::iota(tau.begin(), tau.end(), 1);
                                    do {
                                        if (detail::equals_conjugate(product, sigma_e, tau)) ++count;
                                    } while (std::next_permutation(tau.begin(), tau.end()));
                                });
        return count;
    };
    Int total = 0;
    for (auto& c : detail::run_chunked<Int>(space, policy.threads, chunk_count)) total += c;
    return total;
}

/// Same count, factored through the tau-coset structure: for a fixed
/// g-tuple the number of admissible tau is 0 or the centralizer order
/// of sigma_e, so only the cycle type of the product matters.
inline Int count_covers_fast(const CountKey& key, const WorkPolicy& policy = {}) {
    if (key.d_comp.total() != key.e_comp.total()) return 0;
    const int d = key.d_comp.total();
    const Int m = detail::g_space_size(d, key.b);
    ensure_within_bound(m, policy);
    const std::uint64_t space = detail::checked_space(m, policy);

    const auto transpositions = enumerate_transpositions(d);
    if (key.b > 0 && transpositions.empty()) return 0;
    const Permutation sigma_d = sigma_from_composition(key.d_comp);

    std::vector<int> need(d + 1, 0);
    for (int p : key.e_comp.parts()) ++need[p];

    auto chunk_count = [&](std::uint64_t lo, std::uint64_t hi) -> Int {
        Int matches = 0;
        std::vector<char> visited(d);
        std::vector<int> remaining(d + 1);
        detail::scan_g_products(
            sigma_d, key.b, transpositions, lo, hi,
            [&](const std::vector<int>&, const std::vector<int>& product) {
                std::fill(visited.begin(), visited.end(), 0);
                std::copy(need.begin(), need.end(), remaining.begin());
                for (int s = 0; s < d; ++s) {
                    if (visited[s]) continue;
                    int len = 0, cur = s;
                    do {
                        visited[cur] = 1;
                        ++len;
                        cur = product[cur] - 1;
                    } while (cur != s);
                    if (remaining[len] == 0) return;
                    --remaining[len];
                }
                ++matches;
            });
        return matches;
    };
    Int matches = 0;
    for (auto& c : detail::run_chunked<Int>(space, policy.threads, chunk_count)) matches += c;
    return centralizer_order(key.e_comp) * matches;
}

/// One brute-force pass for a fixed (b, d-composition) that buckets every
/// admissible (g-tuple, tau) by the boundary composition it produces:
/// tau^{-1}.P.tau must be a block-canonical permutation, and its block
/// sizes are the e-composition. Compositions with more than max_parts
/// parts are skipped.
inline std::map<Composition, Int> count_covers_by_target(int b, const Composition& d_comp,
                                                         int max_parts,
                                                         const WorkPolicy& policy = {}) {
    const int d = d_comp.total();
    const Int m = detail::g_space_size(d, b);
    ensure_within_bound(m * factorial(d), policy);
    const std::uint64_t space = detail::checked_space(m, policy);

    const auto transpositions = enumerate_transpositions(d);
    const Permutation sigma_d = sigma_from_composition(d_comp);
    using PartsMap = std::map<std::vector<int>, Int>;

    auto chunk_scan = [&](std::uint64_t lo, std::uint64_t hi) -> PartsMap {
        PartsMap local;
        std::vector<int> tau(d), inv(d), parts;
        if (b > 0 && transpositions.empty()) return local;
        detail::scan_g_products(
            sigma_d, b, transpositions, lo, hi,
            [&](const std::vector<int>&, const std::vector<int>& product) {
                std::iota(tau.begin(), tau.end(), 1);
                do {
                    for (int i = 0; i < d; ++i) inv[tau[i] - 1] = i + 1;
                    // Scan tau^{-1}.P.tau for the consecutive-block pattern.
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
                    if (ok) ++local[parts];
                } while (std::next_permutation(tau.begin(), tau.end()));
            });
        return local;
    };

    std::map<Composition, Int> out;
    for (auto& chunk : detail::run_chunked<PartsMap>(space, policy.threads, chunk_scan))
        for (auto& [parts, count] : chunk) out[Composition(parts)] += count;
    return out;
}

/// Materializes every sequence counted by count_covers_bruteforce, in
/// the same deterministic order (g-tuple index major, tau lexicographic).
inline std::vector<FactorizationTuple> enumerate_factorizations(const CountKey& key,
                                                                const WorkPolicy& policy = {}) {
    std::vector<FactorizationTuple> out;
    if (key.d_comp.total() != key.e_comp.total()) return out;
    const int d = key.d_comp.total();
    const Int m = detail::g_space_size(d, key.b);
    ensure_within_bound(m * factorial(d), policy);
    const std::uint64_t space = detail::checked_space(m, policy);

    const auto transpositions = enumerate_transpositions(d);
    if (key.b > 0 && transpositions.empty()) return out;
    const Permutation sigma_d = sigma_from_composition(key.d_comp);
    const std::vector<int> sigma_e = sigma_from_composition(key.e_comp).images();

    auto chunk_collect = [&](std::uint64_t lo, std::uint64_t hi) -> std::vector<FactorizationTuple> {
        std::vector<FactorizationTuple> local;
        std::vector<int> tau(d);
        detail::scan_g_products(
            sigma_d, key.b, transpositions, lo, hi,
            [&](const std::vector<int>& digits, const std::vector<int>& product) {
                std::iota(tau.begin(), tau.end(), 1);
                do {
                    if (!detail::equals_conjugate(product, sigma_e, tau)) continue;
                    std::vector<Permutation> gs;
                    gs.reserve(digits.size());
                    for (int gi : digits) gs.push_back(transpositions[gi]);
                    local.push_back({std::move(gs), Permutation(tau), d});
                } while (std::next_permutation(tau.begin(), tau.end()));
            });
        return local;
    };
    for (auto& chunk :
         detail::run_chunked<std::vector<FactorizationTuple>>(space, policy.threads, chunk_collect))
        for (auto& t : chunk) out.push_back(std::move(t));
    return out;
}

/// All coefficients n_{b;d;e} with len(d)=k, len(e)=l and common total
/// <= d_max. Zero entries are kept; mismatched totals are not stored.
inline CoefficientTable build_table(int b, int k, int l, int d_max,
                                    const WorkPolicy& policy = {}) {
    CoefficientTable table;
    for (int n = 1; n <= d_max; ++n) {
        for (const auto& dc : compositions_of(n, k))
            for (const auto& ec : compositions_of(n, l)) {
                CountKey key{b, dc, ec};
                table.set(key, count_covers_fast(key, policy));
            }
    }
    return table;
}

}  // namespace hurwitz_cx
