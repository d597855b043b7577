// Alcoves in the coweight lattice: n-tuples of coweights forming a
// coordinatewise-increasing chain with unit size steps. These model the
// extended affine Weyl group combinatorially; the spine permutation records
// which coordinate increments at each step.
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "schubert/coweight.hpp"

namespace schubert {

struct Alcove {
    std::vector<Coweight> terms;  // terms[i-1] is the i-th member

    int rank() const { return static_cast<int>(terms.size()); }

    const Coweight& term(int i) const {  // 1-based, i in [1, n]
        require(1 <= i && i <= rank(), "alcove term index out of range");
        return terms[static_cast<size_t>(i - 1)];
    }

    // Extends the tuple by the convention term(n+1) = term(1) + (1,...,1).
    Coweight term_ext(int i) const {
        if (i == rank() + 1) return term(1) + fundamental(rank(), rank());
        return term(i);
    }

    friend bool operator==(const Alcove& a, const Alcove& b) { return a.terms == b.terms; }
    friend bool operator!=(const Alcove& a, const Alcove& b) { return !(a == b); }
    friend bool operator<(const Alcove& a, const Alcove& b) { return a.terms < b.terms; }
};

// Checks the chain and size-step conditions and returns the alcove.
inline Alcove validate_alcove(const std::vector<Coweight>& terms) {
    require(!terms.empty(), "alcove needs at least one term");
    const int n = static_cast<int>(terms.size());
    for (const auto& c : terms) require(c.rank() == n, "alcove must have n terms of rank n");
    Alcove x{terms};
    for (int i = 1; i <= n; ++i) {
        const Coweight cur = x.term(i);
        const Coweight nxt = x.term_ext(i + 1);
        require(leq_coordinatewise(cur, nxt), "alcove chain violates coordinatewise order");
        require(size(nxt) == size(cur) + 1, "alcove chain violates unit size step");
    }
    return x;
}

inline Alcove base_alcove(int n) {
    std::vector<Coweight> terms;
    terms.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) terms.push_back(fundamental(i, n));
    return Alcove{std::move(terms)};
}

// The permutation i -> (coordinate that increments from term(i) to term(i+1)),
// using term(n+1) = term(1) + (1,...,1). A bijection for every valid alcove.
inline Permutation spine_permutation(const Alcove& x) {
    const int n = x.rank();
    std::vector<int> img(static_cast<size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        const Coweight diff = x.term_ext(i + 1) - x.term(i);
        int where = 0;
        for (int j = 1; j <= n; ++j) {
            if (diff[j - 1] == 1 && where == 0) {
                where = j;
            } else {
                internal_check(diff[j - 1] == 0, "alcove step is not a unit vector");
            }
        }
        internal_check(where != 0, "alcove step has no increment");
        img[static_cast<size_t>(i - 1)] = where;
    }
    return Permutation(std::move(img));
}

// (s, lambda) . x applies the translation then the permutation termwise.
// This is a simply transitive group action.
inline Alcove wext_act(const ExtendedWeylElement& w, const Alcove& x) {
    require(w.rank() == x.rank(), "group element/alcove rank mismatch");
    std::vector<Coweight> terms;
    terms.reserve(x.terms.size());
    for (const auto& c : x.terms) terms.push_back(permute(w.perm, w.translation + c));
    return Alcove{std::move(terms)};
}

// The unique w with w . (base alcove) = x.
inline ExtendedWeylElement alcove_to_wext(const Alcove& x) {
    Permutation p = spine_permutation(x);
    Coweight tr = permute(p.inverse(), x.term(1));
    return ExtendedWeylElement(std::move(p), std::move(tr));
}

inline bool is_permissible(const Alcove& x, const Coweight& lambda) {
    require(is_dominant(lambda), "permissibility needs a dominant coweight");
    require(x.rank() == lambda.rank(), "alcove/coweight rank mismatch");
    const int n = x.rank();
    for (int i = 1; i <= n; ++i)
        if (!leq_dominance(dom(x.term(i) - fundamental(i - 1, n)), lambda)) return false;
    return true;
}

// The common dominant representative of the termwise differences, when it
// exists; nullopt when the differences are not all in one orbit.
inline std::optional<Coweight> relative_position(const Alcove& x, const Alcove& y) {
    require(x.rank() == y.rank(), "alcove rank mismatch");
    std::optional<Coweight> pos;
    for (int i = 1; i <= x.rank(); ++i) {
        Coweight d = dom(x.term(i) - y.term(i));
        if (!pos) {
            pos = d;
        } else if (*pos != d) {
            return std::nullopt;
        }
    }
    return pos;
}

// rot(x)^{(i)} = c^{-1}(x^{(i+1)} - w_1) for i < n, and c^{-1}(x^{(1)}) + w_{n-1}
// at i = n; equivalently the i < n formula applied to the extended tuple.
// Preserves validity and permissibility, and rot^n = id.
inline Alcove rotate(const Alcove& x) {
    const int n = x.rank();
    const Permutation cinv = Permutation::long_cycle(n).inverse();
    const Coweight w1 = fundamental(1, n);
    std::vector<Coweight> terms;
    terms.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) terms.push_back(permute(cinv, x.term_ext(i + 1) - w1));
    return Alcove{std::move(terms)};
}

inline Alcove rotate_pow(const Alcove& x, int k) {
    Alcove r = x;
    const int n = x.rank();
    int kk = ((k % n) + n) % n;
    for (int j = 0; j < kk; ++j) r = rotate(r);
    return r;
}

namespace detail {

// Walks all ways to extend a first term by n-1 distinct unit increments,
// invoking sink on each completed alcove that passes the per-term filter.
inline void extend_first_term(const Coweight& first,
                              const std::function<bool(const Coweight&, int)>& term_ok,
                              const std::function<void(Alcove&&)>& sink) {
    const int n = first.rank();
    if (!term_ok(first, 1)) return;
    std::vector<Coweight> terms{first};
    std::vector<bool> used(static_cast<size_t>(n + 1), false);
    std::function<void(int)> step = [&](int i) {
        if (i == n) {
            sink(Alcove{std::vector<Coweight>(terms)});
            return;
        }
        for (int j = 1; j <= n; ++j) {
            if (used[static_cast<size_t>(j)]) continue;
            Coweight nxt = terms.back() + basis_coweight(j, n);
            if (!term_ok(nxt, i + 1)) continue;
            used[static_cast<size_t>(j)] = true;
            terms.push_back(std::move(nxt));
            step(i + 1);
            terms.pop_back();
            used[static_cast<size_t>(j)] = false;
        }
    };
    step(1);
}

// All first terms with entries in [lo, hi] and the given coordinate sum.
inline std::vector<Coweight> box_vectors(int n, int lo, int hi, long long total) {
    std::vector<Coweight> out;
    std::vector<int> cur(static_cast<size_t>(n));
    std::function<void(int, long long)> walk = [&](int pos, long long remaining) {
        if (pos == n) {
            if (remaining == 0) out.push_back(Coweight{std::vector<int>(cur)});
            return;
        }
        for (int e = lo; e <= hi; ++e) {
            long long rest = remaining - e;
            if (rest < static_cast<long long>(lo) * (n - pos - 1)) continue;
            if (rest > static_cast<long long>(hi) * (n - pos - 1)) continue;
            cur[static_cast<size_t>(pos)] = e;
            walk(pos + 1, rest);
        }
    };
    walk(0, total);
    return out;
}

}  // namespace detail

// Exactly the lambda-permissible alcoves, in lexicographic order of their
// flattened coordinates. Complete because permissibility confines every entry
// of term(i) - w_{i-1} to [lambda_n, lambda_1], so first terms live in a finite
// box and each extension step is filtered by the same dominance bound.
inline std::vector<Alcove> enumerate_permissible(const Coweight& lambda) {
    require(is_dominant(lambda), "enumeration needs a dominant coweight");
    const int n = lambda.rank();
    std::vector<Alcove> out;
    auto term_ok = [&](const Coweight& c, int i) {
        return leq_dominance(dom(c - fundamental(i - 1, n)), lambda);
    };
    auto sink = [&](Alcove&& x) { out.push_back(std::move(x)); };
    for (const Coweight& first : detail::box_vectors(n, lambda[n - 1], lambda[0], size(lambda)))
        detail::extend_first_term(first, term_ok, sink);
    std::sort(out.begin(), out.end());
    return out;
}

// All valid alcoves whose first term has entries in [lo, hi] and coordinate
// sum in [sum_lo, sum_hi]; the unconstrained test-box companion of
// enumerate_permissible.
inline std::vector<Alcove> enumerate_alcoves_box(int n, int lo, int hi,
                                                 long long sum_lo, long long sum_hi) {
    std::vector<Alcove> out;
    auto term_ok = [](const Coweight&, int) { return true; };
    auto sink = [&](Alcove&& x) { out.push_back(std::move(x)); };
    for (long long total = sum_lo; total <= sum_hi; ++total)
        for (const Coweight& first : detail::box_vectors(n, lo, hi, total))
            detail::extend_first_term(first, term_ok, sink);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace schubert
