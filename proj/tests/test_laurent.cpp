#include <catch_amalgamated.hpp>

#include <random>

#include "schubert/matrix.hpp"
#include "schubert/subspace.hpp"

using namespace schubert;

namespace {

LaurentScalar t_pow(long long e) { return LaurentScalar::monomial(e, Rat(1)); }

LaurentScalar random_poly(std::mt19937_64& rng, int lo = -2, int hi = 3) {
    LaurentScalar s;
    for (int e = lo; e <= hi; ++e)
        if (rng() % 3 == 0) s.add_term(e, Rat(static_cast<int>(rng() % 5) - 2));
    return s;
}

}  // namespace

TEST_CASE("scalar arithmetic") {
    const LaurentScalar one(1), t = LaurentScalar::variable();
    CHECK((one + t) * (one - t) == one - t * t);
    CHECK((t - t).is_zero());
    LaurentScalar s = t_pow(-2).scaled(Rat(3)) + t_pow(5);
    CHECK(s.val() == -2);
    CHECK(s.max_exp() == 5);
    CHECK(s.coefficient(-2) == Rat(3));
    CHECK(s.coefficient(0) == Rat(0));
    CHECK(s.shifted(2).val() == 0);
    CHECK(s.has_negative_exponent());
    CHECK_FALSE(t.has_negative_exponent());
    CHECK_THROWS_AS(LaurentScalar().val(), std::invalid_argument);
}

TEST_CASE("scalar evaluation") {
    LaurentScalar s = t_pow(-1) + t_pow(2).scaled(Rat(4));
    CHECK(s.evaluate(Rat(1, 2)) == Rat(3));  // 2 + 4 * 1/4
    CHECK_THROWS_AS(s.evaluate(Rat(0)), std::invalid_argument);
    LaurentScalar p = LaurentScalar(7) + t_pow(3);
    CHECK(p.evaluate(Rat(0)) == Rat(7));
    CHECK(p.is_integral());
    CHECK_FALSE(t_pow(1).scaled(Rat(1, 2)).is_integral());
}

TEST_CASE("scalar printing") {
    LaurentScalar s = t_pow(2).scaled(Rat(-1)) + LaurentScalar(3);
    CHECK(s.to_string() == "3 - t^2");
    CHECK(LaurentScalar().to_string() == "0");
    CHECK(t_pow(-1).to_string("u") == "u^-1");
}

TEST_CASE("determinants and adjugates") {
    CHECK(LaurentMatrix::diagonal_power(Coweight{2, -1, 3}).determinant() == t_pow(4));
    CHECK(LaurentMatrix::identity(3).determinant() == LaurentScalar(1));
    // permutation matrices have unit determinant up to sign
    LaurentScalar dp = LaurentMatrix::permutation(Permutation{2, 3, 1}).determinant();
    CHECK((dp == LaurentScalar(1) || dp == LaurentScalar(-1)));

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        LaurentMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = random_poly(rng);
        LaurentScalar det = m.determinant();
        LaurentMatrix prod = m * m.adjugate();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(prod.at(i, j) == (i == j ? det : LaurentScalar()));
    }
}

TEST_CASE("rational row reduction") {
    RatMatrix m(3, 4);
    m.at(0, 0) = 1;
    m.at(0, 2) = 2;
    m.at(1, 0) = 2;
    m.at(1, 2) = 4;  // dependent row
    m.at(2, 1) = Rat(1, 3);
    CHECK(m.rank() == 2);
    std::vector<int> piv = m.rref();
    CHECK(piv == std::vector<int>{0, 1});
    CHECK(m.at(0, 2) == Rat(2));

    RatMatrix id(2, 2);
    id.at(0, 0) = id.at(1, 1) = 1;
    CHECK(id.rank() == 2);
}

TEST_CASE("subspace arithmetic") {
    // two planes in Q^3 meeting in a line
    RatMatrix a(2, 3), b(2, 3);
    a.at(0, 0) = 1;
    a.at(1, 1) = 1;
    b.at(0, 1) = 1;
    b.at(1, 2) = 1;
    Subspace u = subspace_from_rows(3, a), v = subspace_from_rows(3, b);
    CHECK(u.dim() == 2);
    CHECK(subspace_sum(u, v).dim() == 3);
    CHECK(intersection_dim(u, v) == 1);
    CHECK(subspace_contains(u, u));
    CHECK_FALSE(subspace_contains(u, v));
    CHECK(subspace_equal(u, subspace_from_rows(3, a)));

    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = Rat(static_cast<int>(rng() % 7) - 3);
        Subspace s = column_span(m);
        CHECK(s.dim() == m.rank());
        CHECK(intersection_dim(s, s) == s.dim());
    }
}
