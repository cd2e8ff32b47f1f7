#pragma once

#include "hurwitz_cx/numbers.hpp"

#include <algorithm>
#include <compare>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hurwitz_cx {

/// An element of S_d acting on the points {1,...,d}.
/// Point labels are 1-based everywhere; internally images_[i-1] is the
/// image of i. Values are immutable after construction.
class Permutation {
public:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        if (images_.empty()) throw std::invalid_argument("permutation degree must be >= 1");
        std::vector<char> seen(images_.size(), 0);
        for (int v : images_) {
            if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
                throw std::invalid_argument("images do not form a bijection of {1..d}");
            seen[v - 1] = 1;
        }
    }

    static Permutation identity(int degree) {
        std::vector<int> im(degree);
        std::iota(im.begin(), im.end(), 1);
        return Permutation(std::move(im));
    }

    static Permutation transposition(int degree, int a, int b) {
        if (a == b) throw std::invalid_argument("transposition needs two distinct points");
        Permutation p = identity(degree);
        std::swap(p.images_[a - 1], p.images_[b - 1]);
        return p;
    }

    /// Rebuild from cycles; points not mentioned are fixed.
    static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
        Permutation p = identity(degree);
        for (const auto& c : cycles)
            for (std::size_t i = 0; i < c.size(); ++i)
                p.images_[c[i] - 1] = c[(i + 1) % c.size()];
        return Permutation(std::move(p.images_));  // revalidate
    }

    int degree() const { return static_cast<int>(images_.size()); }
    int apply(int point) const { return images_[point - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const {
        std::vector<int> inv(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<int>(i) + 1;
        return Permutation(std::move(inv));
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != static_cast<int>(i) + 1) return false;
        return true;
    }

    bool is_transposition() const {
        int moved = 0;
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != static_cast<int>(i) + 1) ++moved;
        return moved == 2;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

    /// Cycle notation, fixed points omitted; "()" for the identity.
    std::string to_cycle_string() const;

private:
    std::vector<int> images_;
};

/// compose(a, b) applies b first: result(i) = a(b(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> im(a.degree());
    for (int i = 1; i <= a.degree(); ++i) im[i - 1] = a.apply(b.apply(i));
    return Permutation(std::move(im));
}

/// sigma^tau as the relabeling map tau . sigma . tau^{-1}:
/// it sends tau(i) to tau(sigma(i)).
inline Permutation conjugate(const Permutation& sigma, const Permutation& tau) {
    if (sigma.degree() != tau.degree()) throw std::invalid_argument("conjugate: degree mismatch");
    std::vector<int> im(sigma.degree());
    for (int i = 1; i <= sigma.degree(); ++i) im[tau.apply(i) - 1] = tau.apply(sigma.apply(i));
    return Permutation(std::move(im));
}

/// An ordered tuple of positive integers. Order is significant:
/// (2,3) and (3,2) are different boundary data.
class Composition {
public:
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw std::invalid_argument("composition must have at least one part");
        total_ = 0;
        for (int p : parts_) {
            if (p < 1) throw std::invalid_argument("composition parts must be positive");
            total_ += p;
        }
    }

    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int total() const { return total_; }
    int size() const { return static_cast<int>(parts_.size()); }

    /// Partial sum of the first i parts (prefix(0) = 0).
    int prefix(int i) const {
        int s = 0;
        for (int j = 0; j < i; ++j) s += parts_[j];
        return s;
    }

    /// Part sizes as a descending multiset, i.e. the cycle type it induces.
    std::vector<int> sorted_parts_desc() const {
        std::vector<int> s = parts_;
        std::sort(s.begin(), s.end(), std::greater<int>());
        return s;
    }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition& a, const Composition& b) {
        return a.parts_ <=> b.parts_;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        os << ')';
        return os.str();
    }

private:
    std::vector<int> parts_;
    int total_;
};

/// The permutation whose cycles are the consecutive blocks of the
/// composition: for (2,3) the cycles (1 2)(3 4 5).
inline Permutation sigma_from_composition(const Composition& c) {
    std::vector<int> im(c.total());
    int start = 1;
    for (int part : c.parts()) {
        for (int p = start; p < start + part - 1; ++p) im[p - 1] = p + 1;
        im[start + part - 2] = start;
        start += part;
    }
    return Permutation(std::move(im));
}

/// Disjoint cycles covering {1..d}; fixed points kept as 1-cycles.
/// Canonical form: each cycle starts at its minimum, cycles ordered by
/// their minima.
class CycleDecomposition {
public:
    explicit CycleDecomposition(const Permutation& p) {
        const int d = p.degree();
        std::vector<char> seen(d + 1, 0);
        for (int s = 1; s <= d; ++s) {
            if (seen[s]) continue;
            std::vector<int> cyc;
            int cur = s;
            do {
                seen[cur] = 1;
                cyc.push_back(cur);
                cur = p.apply(cur);
            } while (cur != s);
            cycles_.push_back(std::move(cyc));
        }
    }

    const std::vector<std::vector<int>>& cycles() const { return cycles_; }

    /// Multiset of cycle lengths, descending.
    std::vector<int> cycle_type() const {
        std::vector<int> t;
        t.reserve(cycles_.size());
        for (const auto& c : cycles_) t.push_back(static_cast<int>(c.size()));
        std::sort(t.begin(), t.end(), std::greater<int>());
        return t;
    }

    Permutation to_permutation(int degree) const { return Permutation::from_cycles(degree, cycles_); }

private:
    std::vector<std::vector<int>> cycles_;
};

inline CycleDecomposition cycle_decomposition(const Permutation& p) { return CycleDecomposition(p); }

inline std::vector<int> cycle_type(const Permutation& p) {
    return CycleDecomposition(p).cycle_type();
}

inline std::string Permutation::to_cycle_string() const {
    CycleDecomposition dec(*this);
    std::ostringstream os;
    bool any = false;
    for (const auto& c : dec.cycles()) {
        if (c.size() < 2) continue;
        any = true;
        os << '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) os << ' ';
            os << c[i];
        }
        os << ')';
    }
    return any ? os.str() : "()";
}

/// Order of the S_d-centralizer of sigma_from_composition(c):
/// prod_j j^{m_j} m_j! over the part multiplicities m_j.
inline Int centralizer_order(const Composition& c) {
    std::vector<int> mult(c.total() + 1, 0);
    for (int p : c.parts()) ++mult[p];
    Int z = 1;
    for (int j = 1; j <= c.total(); ++j) {
        for (int r = 0; r < mult[j]; ++r) z *= j;
        z *= factorial(mult[j]);
    }
    return z;
}

/// All d(d-1)/2 transpositions of S_d, (1 2), (1 3), ..., in
/// lexicographic order of the swapped pair. Empty for d < 2.
inline std::vector<Permutation> enumerate_transpositions(int d) {
    std::vector<Permutation> out;
    if (d < 2) return out;
    out.reserve(static_cast<std::size_t>(d) * (d - 1) / 2);
    for (int a = 1; a <= d; ++a)
        for (int b = a + 1; b <= d; ++b) out.push_back(Permutation::transposition(d, a, b));
    return out;
}

/// Ordered k-tuples of positive integers summing to total, lexicographic.
inline std::vector<Composition> compositions_of(int total, int num_parts) {
    std::vector<Composition> out;
    if (num_parts < 1 || total < num_parts) return out;
    std::vector<int> parts(num_parts);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == num_parts - 1) {
            parts[pos] = remaining;
            out.emplace_back(parts);
            return;
        }
        const int slots_after = num_parts - pos - 1;
        for (int v = 1; v <= remaining - slots_after; ++v) {
            parts[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, total);
    return out;
}

/// All 2^{total-1} compositions of total, grouped by length then lexicographic.
inline std::vector<Composition> all_compositions(int total) {
    std::vector<Composition> out;
    for (int k = 1; k <= total; ++k) {
        auto byk = compositions_of(total, k);
        out.insert(out.end(), byk.begin(), byk.end());
    }
    return out;
}

}  // namespace hurwitz_cx
