// Lattice families over a rational base value: the set-level model of the
// global affine Grassmannian, its twisted chains, membership in the global
// Schubert sets, and the point-level convolution witnesses.
#pragma once

#include <string>
#include <vector>

#include "schubert/lattice.hpp"
#include "schubert/order.hpp"

namespace schubert {

// Diagonal twist with i leading entries (t - y) and n - i trailing ones.
// theta(n, 0, y) is the identity. Over power series it is invertible exactly
// when y != 0.
inline LaurentMatrix theta(int n, int i, const Rat& y) {
    require(0 <= i && i <= n, "twist index out of range");
    LaurentMatrix m = LaurentMatrix::identity(n);
    const LaurentScalar t_minus_y =
        LaurentScalar::monomial(1, Rat(1)) + LaurentScalar(Rat(-y));
    for (int k = 0; k < i; ++k) m.at(k, k) = t_minus_y;
    return m;
}

// A base value y plus n lattices of equal valuation whose theta-twists form a
// descending chain ending in (t - y) times the first member.
struct LatticeFamily {
    Rat base;
    std::vector<Lattice> members;

    int rank() const { return static_cast<int>(members.size()); }
    const Lattice& member(int i) const {  // 1-based
        require(1 <= i && i <= rank(), "family member index out of range");
        return members[static_cast<size_t>(i - 1)];
    }
};

inline LaurentScalar t_minus(const Rat& y) {
    return LaurentScalar::monomial(1, Rat(1)) + LaurentScalar(Rat(-y));
}

inline LatticeFamily validate_family(const Rat& y, const std::vector<Lattice>& members) {
    require(!members.empty(), "family needs at least one member");
    const int n = static_cast<int>(members.size());
    for (const auto& l : members) require(l.rank() == n, "family needs n lattices of rank n");
    const long long v0 = valuation(members.front());
    for (int i = 1; i < n; ++i)
        require(valuation(members[static_cast<size_t>(i)]) == v0,
                "family members must share one valuation (member " + std::to_string(i + 1) + ")");
    // chain L_1 > theta_1(y) L_2 > ... > theta_{n-1}(y) L_n > (t - y) L_1
    Lattice prev = members.front();
    for (int i = 2; i <= n; ++i) {
        Lattice twisted = apply_matrix(theta(n, i - 1, y), members[static_cast<size_t>(i - 1)]);
        require(contains(prev, twisted),
                "family chain containment fails at member " + std::to_string(i));
        prev = std::move(twisted);
    }
    Lattice tail = Lattice{members.front().basis.scaled(t_minus(y))};
    require(contains(prev, tail), "family chain does not close onto (t - y) times member 1");
    return LatticeFamily{y, members};
}

// The family over y != 0 whose members all untwist to L. Since t - y is a
// unit in the power-series ring for y != 0, the inverse twist of L is the
// lattice spanned by diag(1,...,1, t-y,...,t-y) . basis(L).
inline LatticeFamily generic_family(const Rat& y, const Lattice& lat) {
    require(y != 0, "generic family needs a nonzero base value");
    const int n = lat.rank();
    std::vector<Lattice> members{lat};
    for (int k = 2; k <= n; ++k) {
        LaurentMatrix d = LaurentMatrix::identity(n);
        for (int j = k - 1; j < n; ++j) d.at(j, j) = t_minus(y);
        members.push_back(apply_matrix(d, lat));
    }
    return validate_family(y, members);
}

// The special-fiber family of an alcove: member i is the diagonal lattice of
// term(i) - w_{i-1}; its theta(0)-twists are exactly the alcove's chain.
inline LatticeFamily special_family_from_alcove(const Alcove& x) {
    const int n = x.rank();
    std::vector<Lattice> members;
    members.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i)
        members.push_back(coweight_lattice(x.term(i) - fundamental(i - 1, n)));
    return validate_family(Rat(0), members);
}

// The twisted chain of the special family, as a lattice chain.
inline LatticeChain chain_of_alcove(const Alcove& x) {
    std::vector<Lattice> links;
    for (int i = 1; i <= x.rank(); ++i) links.push_back(coweight_lattice(x.term(i)));
    return validate_chain(links);
}

// Membership in the global Schubert set of lambda: every member lies in the
// spherical Schubert closure.
inline bool in_global_schubert(const LatticeFamily& fam, const Coweight& lambda) {
    require(is_dominant(lambda), "membership test needs a dominant coweight");
    for (const auto& l : fam.members)
        if (!in_schubert_closure(l, lambda)) return false;
    return true;
}

// Membership of (L, L2) in the twisted product against the fundamental orbit
// of w_k: t L < L2 < L with dim L2 / t L = n - k.
inline bool in_twisted_product(const Lattice& lat, const Lattice& lat2, int k) {
    const int n = lat.rank();
    require(1 <= k && k <= n - 1, "twisted product index out of range");
    require(lat2.rank() == n, "lattice rank mismatch");
    const Lattice scaled = scale_lattice(lat, 1);
    if (!contains(lat, lat2) || !contains(lat2, scaled)) return false;
    return quotient_dim(lat2, scaled) == n - k;
}

// Given x in relative position w_k with respect to y, the alcove
// z^{(i)} = spine(y)^{-1}(x^{(i)} - y^{(i)}) + w_{i-1}; it is w_k-permissible.
// k = 0 (x equal to y, giving the base alcove) and k = n are allowed here;
// witness construction restricts to 1 <= k <= n-1.
inline Alcove convolution_alcove(const Alcove& x, const Alcove& y) {
    const int n = x.rank();
    require(y.rank() == n, "alcove rank mismatch");
    auto pos = relative_position(x, y);
    require(pos.has_value(), "alcoves are not in a single relative position");
    const long long k = size(*pos);
    require(0 <= k && k <= n && *pos == fundamental(static_cast<int>(k), n),
            "relative position is not a fundamental coweight");
    const Permutation pyinv = spine_permutation(y).inverse();
    std::vector<Coweight> terms;
    for (int i = 1; i <= n; ++i)
        terms.push_back(permute(pyinv, x.term(i) - y.term(i)) + fundamental(i - 1, n));
    Alcove z = validate_alcove(terms);
    internal_check(is_permissible(z, fundamental(static_cast<int>(k), n)),
                   "convolution alcove is not w_k-permissible");
    return z;
}

// Frames for the links of an alcove's chain: the i-th matrix maps the
// standard lattice onto the diagonal lattice of term(i) - w_{i-1}. With p the
// spine of y, frame_i = (matrix of p) * t^{p^{-1}(term(i) - w_{i-1})}.
inline std::vector<LaurentMatrix> alcove_frame_matrices(const Alcove& y) {
    const int n = y.rank();
    const Permutation p = spine_permutation(y);
    const LaurentMatrix pm = LaurentMatrix::permutation(p);
    const Permutation pinv = p.inverse();
    std::vector<LaurentMatrix> frames;
    frames.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i)
        frames.push_back(pm * LaurentMatrix::diagonal_power(
                                  permute(pinv, y.term(i) - fundamental(i - 1, n))));
    return frames;
}

struct WitnessCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Point-level data exhibiting the chain of x as the image of a point of the
// twisted product over (mu, w_k): the descended alcove y, the convolution
// alcove z, and frames g with g_i . L^{z_i - w_{i-1}} = L^{x_i - w_{i-1}}.
struct ConvolutionWitness {
    Alcove x, y, z;
    std::vector<LaurentMatrix> frames;
    int k = 0;
    Coweight mu;
    std::vector<WitnessCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Builds and fully re-verifies the witness. The construction is theorem-backed,
// so any failing check signals a bug; strict = true turns that into a throw.
inline ConvolutionWitness build_convolution_witness(const Alcove& x, const Coweight& lambda,
                                                    int k, bool strict = true) {
    const int n = x.rank();
    require(is_dominant(lambda), "witness needs a dominant coweight");
    require(1 <= k && k <= n - 1, "witness direction out of range");
    const Coweight mu = lambda - fundamental(k, n);
    require(is_dominant(mu), "lambda - w_k must be dominant");
    require(is_permissible(x, lambda), "witness needs a lambda-permissible alcove");

    ConvolutionWitness w;
    w.x = x;
    w.k = k;
    w.mu = mu;
    w.y = descend(x, lambda, k);
    w.z = convolution_alcove(x, w.y);
    w.frames = alcove_frame_matrices(w.y);

    w.checks.push_back({"y_mu_permissible", is_permissible(w.y, mu), ""});
    w.checks.push_back({"z_wk_permissible", is_permissible(w.z, fundamental(k, n)), ""});
    for (int i = 1; i <= n; ++i) {
        const Coweight shift = fundamental(i - 1, n);
        const Lattice zi = coweight_lattice(w.z.term(i) - shift);
        const Lattice xi = coweight_lattice(x.term(i) - shift);
        const Lattice yi = coweight_lattice(w.y.term(i) - shift);
        const bool transport =
            lattice_equal(apply_matrix(w.frames[static_cast<size_t>(i - 1)], zi), xi);
        w.checks.push_back({"frame_transport_" + std::to_string(i), transport, ""});
        const bool sandwich = in_twisted_product(yi, xi, k);
        w.checks.push_back({"twisted_pair_" + std::to_string(i), sandwich, ""});
        const bool frame_span = lattice_equal(
            Lattice{w.frames[static_cast<size_t>(i - 1)]}, yi);
        w.checks.push_back({"frame_span_" + std::to_string(i), frame_span, ""});
    }
    if (strict)
        for (const auto& c : w.checks)
            internal_check(c.pass, "convolution witness check failed: " + c.name);
    return w;
}

}  // namespace schubert
