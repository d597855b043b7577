// Integer coweights for GL_n, permutations, and the two partial orders
// (dominance and coordinatewise) used throughout.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "schubert/core.hpp"

namespace schubert {

// An element of the coweight lattice of the diagonal torus, identified
// with Z^n. Entries stay tiny at the scales we work at.
struct Coweight {
    std::vector<int> v;

    Coweight() = default;
    explicit Coweight(std::vector<int> entries) : v(std::move(entries)) {
        require(!v.empty(), "coweight must have rank >= 1");
    }
    Coweight(std::initializer_list<int> entries) : Coweight(std::vector<int>(entries)) {}

    int rank() const { return static_cast<int>(v.size()); }
    int operator[](int i) const { return v[static_cast<size_t>(i)]; }  // 0-based

    friend bool operator==(const Coweight& a, const Coweight& b) { return a.v == b.v; }
    friend bool operator!=(const Coweight& a, const Coweight& b) { return !(a == b); }
    friend bool operator<(const Coweight& a, const Coweight& b) { return a.v < b.v; }

    friend Coweight operator+(const Coweight& a, const Coweight& b) {
        require(a.rank() == b.rank(), "coweight rank mismatch");
        Coweight r = a;
        for (int i = 0; i < a.rank(); ++i) r.v[i] += b.v[i];
        return r;
    }
    friend Coweight operator-(const Coweight& a, const Coweight& b) {
        require(a.rank() == b.rank(), "coweight rank mismatch");
        Coweight r = a;
        for (int i = 0; i < a.rank(); ++i) r.v[i] -= b.v[i];
        return r;
    }
};

inline Coweight zero_coweight(int n) {
    require(n >= 1, "rank must be >= 1");
    return Coweight(std::vector<int>(static_cast<size_t>(n), 0));
}

// e_i (1-based) in rank n.
inline Coweight basis_coweight(int i, int n) {
    require(1 <= i && i <= n, "basis index out of range");
    Coweight r = zero_coweight(n);
    r.v[static_cast<size_t>(i - 1)] = 1;
    return r;
}

// i leading ones, n-i trailing zeros. fundamental(0,n) = 0, fundamental(n,n) = (1,...,1).
inline Coweight fundamental(int i, int n) {
    require(0 <= i && i <= n, "fundamental coweight index out of range");
    std::vector<int> e(static_cast<size_t>(n), 0);
    std::fill(e.begin(), e.begin() + i, 1);
    return Coweight(std::move(e));
}

inline long long size(const Coweight& a) {
    return std::accumulate(a.v.begin(), a.v.end(), 0LL);
}

inline bool is_dominant(const Coweight& a) {
    return std::is_sorted(a.v.begin(), a.v.end(), std::greater<int>());
}

// The unique dominant representative in the symmetric-group orbit.
inline Coweight dom(const Coweight& a) {
    Coweight r = a;
    std::sort(r.v.begin(), r.v.end(), std::greater<int>());
    return r;
}

// mu <= lambda in dominance order: equal sizes and all partial sums of mu
// bounded by those of lambda. Defined on all of Z^n, not just dominant vectors.
inline bool leq_dominance(const Coweight& mu, const Coweight& lambda) {
    require(mu.rank() == lambda.rank(), "dominance comparison across ranks");
    long long pm = 0, pl = 0;
    for (int i = 0; i < mu.rank(); ++i) {
        pm += mu.v[static_cast<size_t>(i)];
        pl += lambda.v[static_cast<size_t>(i)];
        if (pm > pl) return false;
    }
    return pm == pl;
}

inline bool leq_coordinatewise(const Coweight& a, const Coweight& b) {
    require(a.rank() == b.rank(), "coordinatewise comparison across ranks");
    for (int i = 0; i < a.rank(); ++i)
        if (a.v[static_cast<size_t>(i)] > b.v[static_cast<size_t>(i)]) return false;
    return true;
}

// A permutation of {1,...,n}, stored by images: img[i-1] = s(i).
struct Permutation {
    std::vector<int> img;

    Permutation() = default;
    explicit Permutation(std::vector<int> images) : img(std::move(images)) {
        std::vector<bool> seen(img.size(), false);
        for (int x : img) {
            require(1 <= x && x <= static_cast<int>(img.size()) && !seen[static_cast<size_t>(x - 1)],
                    "images do not form a permutation of 1..n");
            seen[static_cast<size_t>(x - 1)] = true;
        }
    }
    Permutation(std::initializer_list<int> images) : Permutation(std::vector<int>(images)) {}

    int rank() const { return static_cast<int>(img.size()); }
    int operator()(int i) const {  // 1-based
        require(1 <= i && i <= rank(), "permutation argument out of range");
        return img[static_cast<size_t>(i - 1)];
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img == b.img; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }

    static Permutation identity(int n) {
        std::vector<int> im(static_cast<size_t>(n));
        std::iota(im.begin(), im.end(), 1);
        return Permutation(std::move(im));
    }

    // The n-cycle 1 -> 2 -> ... -> n -> 1.
    static Permutation long_cycle(int n) {
        std::vector<int> im(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) im[static_cast<size_t>(i - 1)] = (i % n) + 1;
        return Permutation(std::move(im));
    }

    Permutation inverse() const {
        std::vector<int> im(img.size());
        for (int i = 1; i <= rank(); ++i) im[static_cast<size_t>((*this)(i)-1)] = i;
        return Permutation(std::move(im));
    }

    // Composition: (a*b)(i) = a(b(i)), matching the product of permutation matrices.
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        require(a.rank() == b.rank(), "permutation rank mismatch");
        std::vector<int> im(a.img.size());
        for (int i = 1; i <= a.rank(); ++i) im[static_cast<size_t>(i - 1)] = a(b(i));
        return Permutation(std::move(im));
    }

    Permutation power(int e) const {
        int n = rank();
        Permutation base = e >= 0 ? *this : inverse();
        int k = e >= 0 ? e : -e;
        Permutation acc = identity(n);
        for (int j = 0; j < k; ++j) acc = acc * base;
        return acc;
    }
};

// Action on coweights: (s.a)_{s(i)} = a_i, so the permutation matrix of s
// sends e_i to e_{s(i)}.
inline Coweight permute(const Permutation& s, const Coweight& a) {
    require(s.rank() == a.rank(), "permutation/coweight rank mismatch");
    Coweight r = a;
    for (int i = 1; i <= a.rank(); ++i) r.v[static_cast<size_t>(s(i) - 1)] = a[i - 1];
    return r;
}

// An element (s, lambda) of the extended affine Weyl group, realized as the
// matrix (permutation of s) * t^lambda. Multiplication follows that realization:
// (s,a)(u,b) = (su, u^{-1}(a) + b).
struct ExtendedWeylElement {
    Permutation perm;
    Coweight translation;

    ExtendedWeylElement(Permutation p, Coweight tr)
        : perm(std::move(p)), translation(std::move(tr)) {
        require(perm.rank() == translation.rank(), "perm/translation rank mismatch");
    }

    int rank() const { return perm.rank(); }

    static ExtendedWeylElement identity(int n) {
        return ExtendedWeylElement(Permutation::identity(n), zero_coweight(n));
    }

    friend ExtendedWeylElement operator*(const ExtendedWeylElement& w1,
                                         const ExtendedWeylElement& w2) {
        return ExtendedWeylElement(
            w1.perm * w2.perm,
            permute(w2.perm.inverse(), w1.translation) + w2.translation);
    }

    ExtendedWeylElement inverse() const {
        Coweight neg = zero_coweight(rank()) - translation;
        return ExtendedWeylElement(perm.inverse(), permute(perm, neg));
    }

    friend bool operator==(const ExtendedWeylElement& a, const ExtendedWeylElement& b) {
        return a.perm == b.perm && a.translation == b.translation;
    }
};

// All dominant mu with mu <= lambda in dominance order, found by exhaustive
// search: dominance confines every entry of such mu to [lambda_n, lambda_1].
// Returned sorted (lexicographically descending-entry vectors sort naturally).
inline std::vector<Coweight> dominated_set(const Coweight& lambda) {
    require(is_dominant(lambda), "dominated_set needs a dominant coweight");
    const int n = lambda.rank();
    const int lo = lambda[n - 1], hi = lambda[0];
    std::vector<Coweight> out;
    std::vector<int> cur(static_cast<size_t>(n));
    std::function<void(int, int, long long)> walk = [&](int pos, int capv, long long remaining) {
        if (pos == n) {
            if (remaining == 0) {
                Coweight mu{std::vector<int>(cur)};
                if (leq_dominance(mu, lambda)) out.push_back(mu);
            }
            return;
        }
        // weakly decreasing, so each later entry is bounded by the current cap
        for (int e = std::min(capv, hi); e >= lo; --e) {
            long long rest = remaining - e;
            if (rest < static_cast<long long>(lo) * (n - pos - 1)) continue;
            if (rest > static_cast<long long>(e) * (n - pos - 1)) continue;
            cur[static_cast<size_t>(pos)] = e;
            walk(pos + 1, e, rest);
        }
    };
    walk(0, hi, size(lambda));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace schubert
