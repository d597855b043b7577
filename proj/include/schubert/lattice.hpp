// Lattices over the power-series ring inside the Laurent-series field,
// represented by invertible Laurent-polynomial basis matrices: valuation,
// containment, quotient dimensions, finite-window truncation, and the
// spherical Schubert membership tests.
#pragma once

#include <vector>

#include "schubert/matrix.hpp"
#include "schubert/subspace.hpp"

namespace schubert {

// The column span, over power series, of an invertible n x n matrix. Two
// values are the same lattice iff they contain each other; bases are far from
// unique.
struct Lattice {
    LaurentMatrix basis;

    int rank() const { return basis.rows(); }
};

inline Lattice make_lattice(const LaurentMatrix& basis) {
    require(basis.rows() == basis.cols(), "lattice basis must be square");
    require(!basis.determinant().is_zero(), "lattice basis must be invertible");
    return Lattice{basis};
}

// Order of the determinant in t; basis-independent.
inline long long valuation(const Lattice& lat) {
    return lat.basis.determinant().val();
}

// The diagonal lattice with t^{a_i} in the i-th slot. valuation = size(a).
inline Lattice coweight_lattice(const Coweight& a) {
    return Lattice{LaurentMatrix::diagonal_power(a)};
}

inline Lattice standard_lattice(int n) { return coweight_lattice(zero_coweight(n)); }

// g . L for an invertible Laurent matrix g.
inline Lattice apply_matrix(const LaurentMatrix& g, const Lattice& lat) {
    return make_lattice(g * lat.basis);
}

// t^k . L.
inline Lattice scale_lattice(const Lattice& lat, long long k) {
    return Lattice{lat.basis.scaled(LaurentScalar::monomial(k, Rat(1)))};
}

// Whether inner is contained in outer. Solving outer.basis * X = inner.basis
// over the Laurent field, containment means every entry of X has nonnegative
// order; with X = adj * inner.basis / det this reads off valuations without
// ever leaving Laurent polynomials.
inline bool contains(const Lattice& outer, const Lattice& inner) {
    require(outer.rank() == inner.rank(), "lattice rank mismatch");
    const LaurentScalar det = outer.basis.determinant();
    require(!det.is_zero(), "containment against a degenerate basis");
    const long long dv = det.val();
    const LaurentMatrix num = outer.basis.adjugate() * inner.basis;
    for (int i = 0; i < num.rows(); ++i)
        for (int j = 0; j < num.cols(); ++j) {
            const LaurentScalar& e = num.at(i, j);
            if (!e.is_zero() && e.val() < dv) return false;
        }
    return true;
}

inline bool lattice_equal(const Lattice& a, const Lattice& b) {
    return contains(a, b) && contains(b, a);
}

inline long long quotient_dim(const Lattice& outer, const Lattice& inner) {
    require(contains(outer, inner), "quotient of non-nested lattices");
    return valuation(inner) - valuation(outer);
}

// A chain L_1 > L_2 > ... > L_n > t L_1 with one-dimensional steps.
struct LatticeChain {
    std::vector<Lattice> links;
};

inline LatticeChain validate_chain(const std::vector<Lattice>& links) {
    require(!links.empty(), "empty lattice chain");
    const int n = static_cast<int>(links.size());
    for (const auto& l : links) require(l.rank() == n, "chain needs n lattices of rank n");
    for (int i = 0; i + 1 < n; ++i)
        require(contains(links[static_cast<size_t>(i)], links[static_cast<size_t>(i + 1)]) &&
                    quotient_dim(links[static_cast<size_t>(i)], links[static_cast<size_t>(i + 1)]) == 1,
                "chain step is not one-dimensional");
    const Lattice tail = scale_lattice(links.front(), 1);
    require(contains(links.back(), tail) && quotient_dim(links.back(), tail) == 1,
            "chain does not close onto t times its head");
    return LatticeChain{links};
}

// The image of L in the finite window t^b O^n / t^a O^n (requires
// t^a O^n < L < t^b O^n and a >= b), as a row-reduced rational subspace.
// Coordinates: block (e - b) holds the t^e coefficients of the n entries.
inline Subspace truncated_subspace(const Lattice& lat, long long a, long long b) {
    const int n = lat.rank();
    require(a >= b, "empty truncation window");
    const Lattice floor_lat = scale_lattice(standard_lattice(n), a);
    const Lattice ceil_lat = scale_lattice(standard_lattice(n), b);
    require(contains(lat, floor_lat), "window violation: t^a O^n is not inside the lattice");
    require(contains(ceil_lat, lat), "window violation: the lattice is not inside t^b O^n");

    const int width = static_cast<int>(a - b);
    const int ambient = n * width;
    // Spanning vectors: t^s * (basis column j) for 0 <= s < width; higher
    // shifts land in t^a O^n.
    RatMatrix rows(n * width, ambient);
    int out = 0;
    for (int j = 0; j < n; ++j)
        for (int s = 0; s < width; ++s, ++out)
            for (int i = 0; i < n; ++i)
                for (const auto& [e, c] : lat.basis.at(i, j).coefficients()) {
                    long long shifted = e + s;
                    internal_check(shifted >= b, "entry below the truncation window");
                    if (shifted < a) rows.at(out, static_cast<int>(shifted - b) * n + i) = c;
                }
    return subspace_from_rows(ambient, rows);
}

namespace detail {

// Window subspace of t^i O^n inside t^b O^n / t^a O^n.
inline Subspace power_window_subspace(int n, long long i, long long a, long long b) {
    const int width = static_cast<int>(a - b);
    const int ambient = n * width;
    RatMatrix rows(static_cast<int>(a > i ? (a - i) * n : 0), ambient);
    int out = 0;
    for (long long e = i; e < a; ++e)
        for (int k = 0; k < n; ++k, ++out) rows.at(out, static_cast<int>(e - b) * n + k) = 1;
    return subspace_from_rows(ambient, rows);
}

// Expected dimension of (L cap t^i O^n) / t^{lambda_1 + 1} O^n on the orbit
// of lambda: sum over j in [i, lambda_1] of #{k : lambda_k <= j}.
inline long long orbit_window_dim(const Coweight& lambda, long long i) {
    long long total = 0;
    for (long long j = i; j <= lambda[0]; ++j)
        for (int k = 0; k < lambda.rank(); ++k)
            if (lambda[k] <= j) ++total;
    return total;
}

enum class MembershipKind { orbit, closure };

inline bool schubert_membership(const Lattice& lat, const Coweight& lambda, MembershipKind kind) {
    require(is_dominant(lambda), "membership test needs a dominant coweight");
    require(lat.rank() == lambda.rank(), "lattice/coweight rank mismatch");
    const int n = lat.rank();
    if (valuation(lat) != size(lambda)) return false;
    const long long hi = lambda[0], lo = lambda[n - 1];
    const Lattice inner = scale_lattice(standard_lattice(n), hi);
    const Lattice outer = scale_lattice(standard_lattice(n), lo);
    if (!contains(lat, inner) || !contains(outer, lat)) return false;

    const long long a = hi + 1, b = lo;
    const Subspace image = truncated_subspace(lat, a, b);
    for (long long i = lo; i <= hi; ++i) {
        const Subspace window = detail::power_window_subspace(n, i, a, b);
        const long long got = intersection_dim(image, window);
        const long long want = orbit_window_dim(lambda, i);
        if (kind == MembershipKind::orbit ? got != want : got < want) return false;
    }
    return true;
}

}  // namespace detail

// The lattice H + t O^n determined by a subspace H of Q^n under the
// identification O^n / t O^n = C^n (here over Q). Basis: constant lifts of a
// basis of H, completed by t e_j over the non-pivot coordinates.
inline Lattice lattice_from_subspace(const Subspace& h) {
    const int n = h.ambient;
    std::vector<bool> pivot(static_cast<size_t>(n), false);
    for (int i = 0; i < h.dim(); ++i)
        for (int j = 0; j < n; ++j)
            if (h.basis.at(i, j) != 0) {
                pivot[static_cast<size_t>(j)] = true;
                break;
            }
    LaurentMatrix m(n, n);
    int col = 0;
    for (int i = 0; i < h.dim(); ++i, ++col)
        for (int j = 0; j < n; ++j) m.at(j, col) = LaurentScalar(Rat(h.basis.at(i, j)));
    for (int j = 0; j < n; ++j)
        if (!pivot[static_cast<size_t>(j)]) {
            m.at(j, col) = LaurentScalar::monomial(1, Rat(1));
            ++col;
        }
    internal_check(col == n, "subspace lift did not fill a square basis");
    return make_lattice(m);
}

// Whether L lies in the closure of the orbit of the diagonal lattice of
// lambda: valuation and sandwich conditions plus the window dimension bounds.
inline bool in_schubert_closure(const Lattice& lat, const Coweight& lambda) {
    return detail::schubert_membership(lat, lambda, detail::MembershipKind::closure);
}

// Orbit membership: the same conditions with the dimension bounds sharpened
// to equalities.
inline bool in_schubert_orbit(const Lattice& lat, const Coweight& lambda) {
    return detail::schubert_membership(lat, lambda, detail::MembershipKind::orbit);
}

}  // namespace schubert
