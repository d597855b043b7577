// Index orders attached to an alcove, their rotation-compatible refinements,
// the sorting permutations they induce, and the descent construction that
// peels one fundamental coweight off a permissible alcove.
#pragma once

#include <optional>
#include <vector>

#include "schubert/alcove.hpp"

namespace schubert {

// The partial order on {1,...,n} attached to an alcove. Writing h_i for the
// i-th entry of the first term and p for the spine permutation, i precedes j
// when one of these rows holds:
//   (1) h_i > h_j
//   (2) h_i = h_j,  p^{-1}(i) < i,  p^{-1}(j) < j,  i >= j
//   (3) h_i = h_j,  p^{-1}(i) < i,  p^{-1}(j) >= j
//   (4) h_i = h_j,  p^{-1}(i) = i,  p^{-1}(j) = j,  i = j
//   (5) h_i = h_j,  p^{-1}(i) = i,  p^{-1}(j) > j
//   (6) h_i = h_j,  p^{-1}(i) > i,  p^{-1}(j) > j,  i >= j
// Distinct indices are incomparable exactly when both are spine-fixed at the
// same first-term level.
inline bool alcove_index_leq(const Alcove& x, int i, int j) {
    const int n = x.rank();
    require(1 <= i && i <= n && 1 <= j && j <= n, "index out of range");
    const Coweight& h = x.term(1);
    if (h[i - 1] > h[j - 1]) return true;
    if (h[i - 1] != h[j - 1]) return false;
    const Permutation pinv = spine_permutation(x).inverse();
    const int pi = pinv(i), pj = pinv(j);
    if (pi < i && pj < j) return i >= j;
    if (pi < i && pj >= j) return true;
    if (pi == i && pj == j) return i == j;
    if (pi == i && pj > j) return true;
    if (pi > i && pj > j) return i >= j;
    return false;
}

// Indices fixed by the spine whose first-term entry equals m. These are the
// incomparability classes of alcove_index_leq.
inline std::vector<int> fix_set(const Alcove& x, int m) {
    const Permutation p = spine_permutation(x);
    std::vector<int> out;
    for (int i = 1; i <= x.rank(); ++i)
        if (x.term(1)[i - 1] == m && p(i) == i) out.push_back(i);
    return out;
}

// A total order on {1,...,n} refining the partial order of some alcove.
// ranking lists the indices from smallest to largest.
struct IndexOrder {
    std::vector<int> ranking;

    int rank() const { return static_cast<int>(ranking.size()); }

    // 1-based position of index i in the order.
    int position(int i) const {
        for (int k = 0; k < rank(); ++k)
            if (ranking[static_cast<size_t>(k)] == i) return k + 1;
        require(false, "index not present in order");
        return 0;
    }

    bool before(int i, int j) const { return position(i) < position(j); }

    friend bool operator==(const IndexOrder& a, const IndexOrder& b) {
        return a.ranking == b.ranking;
    }
    friend bool operator!=(const IndexOrder& a, const IndexOrder& b) { return !(a == b); }
};

inline bool refines(const IndexOrder& order, const Alcove& x) {
    const int n = x.rank();
    if (order.rank() != n) return false;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j && alcove_index_leq(x, i, j) && !alcove_index_leq(x, j, i) &&
                !order.before(i, j))
                return false;
    return true;
}

inline IndexOrder make_index_order(const Alcove& x, std::vector<int> ranking) {
    IndexOrder order{std::move(ranking)};
    Permutation{std::vector<int>(order.ranking)};  // permutation-of-1..n check
    require(refines(order, x), "ranking does not refine the alcove's partial order");
    return order;
}

namespace detail {

// Builds the total order with the given strict comparator by rank counting;
// a comparator that is not a total order trips the check below.
template <typename Less>
IndexOrder order_from_less(int n, Less&& less) {
    std::vector<int> ranking(static_cast<size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        int pos = 0;
        for (int j = 1; j <= n; ++j)
            if (j != i && less(j, i)) ++pos;
        internal_check(ranking[static_cast<size_t>(pos)] == 0, "comparator is not a total order");
        ranking[static_cast<size_t>(pos)] = i;
    }
    return IndexOrder{std::move(ranking)};
}

}  // namespace detail

// The refinement in which ties inside each fixed-level class are broken by
// ascending index. The refinement choice is free; this one is the pinned
// default everywhere downstream.
inline IndexOrder default_refinement(const Alcove& x) {
    auto less = [&](int i, int j) {
        bool ij = alcove_index_leq(x, i, j), ji = alcove_index_leq(x, j, i);
        if (ij && !ji) return true;
        if (ji && !ij) return false;
        return i < j;  // incomparable: same fixed-level class
    };
    IndexOrder order = detail::order_from_less(x.rank(), less);
    internal_check(refines(order, x), "default refinement failed to linearize");
    return order;
}

// The unique refinement of the rotated alcove's partial order compatible with
// the given one: on each fixed-level class, i before j under the input order
// forces c^{-1}(i) before c^{-1}(j) in the output.
inline IndexOrder compatible_successor(const Alcove& x, const IndexOrder& order) {
    require(refines(order, x), "order does not refine the alcove's partial order");
    const Alcove rx = rotate(x);
    const Permutation c = Permutation::long_cycle(x.rank());
    auto less = [&](int i, int j) {
        bool ij = alcove_index_leq(rx, i, j), ji = alcove_index_leq(rx, j, i);
        if (ij && !ji) return true;
        if (ji && !ij) return false;
        return order.before(c(i), c(j));  // transported tie-break
    };
    IndexOrder next = detail::order_from_less(x.rank(), less);
    internal_check(refines(next, rx), "successor failed to refine the rotated order");
    return next;
}

// One order per rotation power: orders[k] refines the partial order of
// rot^k(x), consecutive pairs are compatible, and so is the wrap-around pair.
struct OrderSequence {
    std::vector<IndexOrder> orders;
};

inline OrderSequence order_sequence(const Alcove& x) {
    const int n = x.rank();
    OrderSequence seq;
    seq.orders.push_back(default_refinement(x));
    Alcove cur = x;
    for (int k = 1; k < n; ++k) {
        seq.orders.push_back(compatible_successor(cur, seq.orders.back()));
        cur = rotate(cur);
    }
    // wrap-around: the successor of the last order, taken at rot^{n-1}(x),
    // must reproduce the first order since rot^n(x) = x
    internal_check(compatible_successor(cur, seq.orders.back()) == seq.orders.front(),
                   "order sequence does not close up under rotation");
    return seq;
}

// The k-th sorting permutation (1-based, k = 1..n): d(i) is the position of
// c^{1-k}(i) in the k-th order of the sequence. Each d applied to
// term(k) - w_{k-1} is dominant.
inline std::vector<Permutation> delta_sequence(const Alcove& x) {
    const int n = x.rank();
    const OrderSequence seq = order_sequence(x);
    const Permutation c = Permutation::long_cycle(n);
    std::vector<Permutation> deltas;
    deltas.reserve(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const Permutation shift = c.power(1 - k);
        std::vector<int> img(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i)
            img[static_cast<size_t>(i - 1)] = seq.orders[static_cast<size_t>(k - 1)].position(shift(i));
        Permutation d{std::move(img)};
        internal_check(is_dominant(permute(d, x.term(k) - fundamental(k - 1, n))),
                       "sorting permutation failed to dominate the alcove term");
        deltas.push_back(std::move(d));
    }
    return deltas;
}

// The index that increments between the descended alcove's terms k and k+1:
// the unique b with
//   delta_{k+1}^{-1}(w_t) = delta_k^{-1}(w_t) - e_b + e_{spine(k)},
// where delta_{n+1} = delta_1.
inline int descent_step(const Alcove& x, const std::vector<Permutation>& deltas, int t, int k) {
    const int n = x.rank();
    require(1 <= t && t <= n - 1, "descent direction out of range");
    require(1 <= k && k <= n, "descent step out of range");
    const Coweight wt = fundamental(t, n);
    const Coweight cur = permute(deltas[static_cast<size_t>(k - 1)].inverse(), wt);
    const Coweight nxt = permute(deltas[static_cast<size_t>(k % n)].inverse(), wt);
    const int target = spine_permutation(x)(k);
    const Coweight diff = cur - nxt + basis_coweight(target, n);
    int b = 0;
    for (int j = 1; j <= n; ++j) {
        if (diff[j - 1] == 1 && b == 0) {
            b = j;
        } else {
            internal_check(diff[j - 1] == 0, "descent step identity has no single-index solution");
        }
    }
    internal_check(b != 0, "descent step identity has no solution");
    return b;
}

inline int descent_step(const Alcove& x, int t, int k) {
    return descent_step(x, delta_sequence(x), t, k);
}

// Given lambda-permissible x and lambda = mu + w_t with mu dominant, produces
// a mu-permissible alcove y with x in relative position w_t with respect to y:
// y^{(k)} = x^{(k)} - delta_k^{-1}(w_t).
inline Alcove descend(const Alcove& x, const Coweight& lambda, int t) {
    const int n = x.rank();
    require(is_dominant(lambda), "descend needs a dominant coweight");
    require(1 <= t && t <= n - 1, "descent direction out of range");
    const Coweight mu = lambda - fundamental(t, n);
    require(is_dominant(mu), "lambda - w_t must be dominant (lambda_t > lambda_{t+1})");
    require(is_permissible(x, lambda), "descend needs a lambda-permissible alcove");

    const std::vector<Permutation> deltas = delta_sequence(x);
    const Coweight wt = fundamental(t, n);
    std::vector<Coweight> terms;
    terms.reserve(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k)
        terms.push_back(x.term(k) - permute(deltas[static_cast<size_t>(k - 1)].inverse(), wt));

    Alcove y = validate_alcove(terms);
    internal_check(is_permissible(y, mu), "descended alcove is not mu-permissible");
    std::optional<Coweight> pos = relative_position(x, y);
    internal_check(pos && *pos == wt, "descended alcove is not in relative position w_t");
    return y;
}

}  // namespace schubert
