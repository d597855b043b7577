#include <catch_amalgamated.hpp>

#include <random>

#include "schubert/coweight.hpp"
#include "schubert/matrix.hpp"

using namespace schubert;

TEST_CASE("size is the coordinate sum") {
    CHECK(size(fundamental(2, 3)) == 2);
    CHECK(size(Coweight{0, 0, 0}) == 0);
    CHECK(size(Coweight{3, -1, 2}) == 4);
}

TEST_CASE("dom sorts decreasingly and is idempotent") {
    CHECK(dom(Coweight{0, 1, 0}) == Coweight{1, 0, 0});
    CHECK(dom(Coweight{2, -1, 3}) == Coweight{3, 2, -1});
    Coweight d{5, 2, 2, -1};
    CHECK(dom(d) == d);
    CHECK(dom(dom(Coweight{0, 7, -3})) == dom(Coweight{0, 7, -3}));
}

TEST_CASE("dominance order") {
    CHECK(leq_dominance(Coweight{1, 1, 0}, Coweight{2, 0, 0}));
    CHECK_FALSE(leq_dominance(Coweight{1, 1, 1}, Coweight{2, 0, 0}));  // sizes 3 vs 2
    Coweight lam{2, 1, 0};
    CHECK(leq_dominance(lam, lam));
    CHECK_THROWS_AS(leq_dominance(Coweight{1, 0}, Coweight{1, 0, 0}), std::invalid_argument);
}

TEST_CASE("coordinatewise order") {
    CHECK(leq_coordinatewise(Coweight{0, 0}, Coweight{1, 0}));
    CHECK_FALSE(leq_coordinatewise(Coweight{1, 0}, Coweight{0, 1}));
    for (int i = 0; i < 4; ++i) CHECK(leq_coordinatewise(fundamental(i, 4), fundamental(i + 1, 4)));
}

TEST_CASE("fundamental coweights") {
    CHECK(fundamental(0, 3) == Coweight{0, 0, 0});
    CHECK(fundamental(2, 4) == Coweight{1, 1, 0, 0});
    CHECK(fundamental(3, 3) == Coweight{1, 1, 1});
    CHECK_THROWS_AS(fundamental(5, 3), std::invalid_argument);
}

TEST_CASE("permutation action") {
    Permutation id = Permutation::identity(3);
    Coweight a{4, -1, 2};
    CHECK(permute(id, a) == a);
    Permutation swap2{2, 1};
    CHECK(permute(swap2, Coweight{0, 1}) == Coweight{1, 0});

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        std::vector<int> img(static_cast<size_t>(n));
        std::iota(img.begin(), img.end(), 1);
        std::shuffle(img.begin(), img.end(), rng);
        Permutation s{std::move(img)};
        std::vector<int> entries(static_cast<size_t>(n));
        for (auto& e : entries) e = static_cast<int>(rng() % 7) - 3;
        Coweight c{std::move(entries)};
        CHECK(dom(permute(s, c)) == dom(c));
        CHECK(permute(s.inverse(), permute(s, c)) == c);
    }
}

TEST_CASE("extended Weyl multiplication matches the matrix realization") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        auto random_elem = [&]() {
            std::vector<int> img(static_cast<size_t>(n));
            std::iota(img.begin(), img.end(), 1);
            std::shuffle(img.begin(), img.end(), rng);
            std::vector<int> tr(static_cast<size_t>(n));
            for (auto& e : tr) e = static_cast<int>(rng() % 5) - 2;
            return ExtendedWeylElement(Permutation(std::move(img)), Coweight(std::move(tr)));
        };
        auto matrix_of = [](const ExtendedWeylElement& w) {
            return LaurentMatrix::permutation(w.perm) *
                   LaurentMatrix::diagonal_power(w.translation);
        };
        ExtendedWeylElement w1 = random_elem(), w2 = random_elem();
        CHECK(matrix_of(w1 * w2) == matrix_of(w1) * matrix_of(w2));
        ExtendedWeylElement e = w1 * w1.inverse();
        CHECK(e == ExtendedWeylElement::identity(n));
    }
}

namespace {

// Independent oracle: every dominant mu of the right size with entries in the
// box, filtered by the raw partial-sum comparison.
std::vector<Coweight> dominated_brute(const Coweight& lambda) {
    const int n = lambda.rank();
    const int lo = lambda[n - 1], hi = lambda[0];
    std::vector<Coweight> out;
    std::vector<int> cur(static_cast<size_t>(n), lo);
    while (true) {
        Coweight mu{std::vector<int>(cur)};
        if (is_dominant(mu) && leq_dominance(mu, lambda)) out.push_back(mu);
        int pos = n - 1;
        while (pos >= 0 && cur[static_cast<size_t>(pos)] == hi) {
            cur[static_cast<size_t>(pos)] = lo;
            --pos;
        }
        if (pos < 0) break;
        ++cur[static_cast<size_t>(pos)];
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("dominated_set examples and brute-force agreement") {
    CHECK(dominated_set(Coweight{1, 0}) == std::vector<Coweight>{Coweight{1, 0}});
    // all dominant mu with 0 <= mu_i <= 2 and |mu| = 2 below (2,0)
    std::vector<Coweight> expect{Coweight{1, 1}, Coweight{2, 0}};
    std::sort(expect.begin(), expect.end());
    CHECK(dominated_set(Coweight{2, 0}) == expect);
    CHECK(dominated_set(Coweight{2, 2, 2}) == std::vector<Coweight>{Coweight{2, 2, 2}});
    CHECK_THROWS_AS(dominated_set(Coweight{0, 1}), std::invalid_argument);

    for (const Coweight& lam : {Coweight{2, 1, 0}, Coweight{3, 1}, Coweight{2, 1, 1, 0}})
        CHECK(dominated_set(lam) == dominated_brute(lam));
}

TEST_CASE("dominated sets are monotone in the order") {
    const Coweight lam{2, 1, 0};
    const std::vector<Coweight> all = dominated_set(lam);
    for (const Coweight& mu : all) {
        const std::vector<Coweight> sub = dominated_set(mu);
        for (const Coweight& nu : sub)
            CHECK(std::find(all.begin(), all.end(), nu) != all.end());
    }
}
