#include <doctest.h>

#include <random>

#include "seqconv/errors.hpp"
#include "seqconv/ratfun.hpp"

using namespace seqconv;

namespace {

Poly from_longs(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return Poly(std::move(v));
}

Rat rand_rat(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 9);
    return Rat(num(rng), den(rng));
}

} // namespace

TEST_CASE("rational arithmetic stays canonical") {
    Rat a(6, 4);
    CHECK(a.to_string() == "3/2");
    CHECK(Rat(-4, -8) == Rat(1, 2));
    CHECK(Rat(0, 5).to_string() == "0");
    CHECK(Rat(3, -9).to_string() == "-1/3");
    CHECK((Rat(1, 2) + Rat(1, 3)) == Rat(5, 6));
    CHECK((Rat(1, 2) * Rat(2, 3)) == Rat(1, 3));
    CHECK(Rat("22/7") == Rat(22, 7));
    CHECK(Rat(7, 3).pow(-2) == Rat(9, 49));
    CHECK_THROWS_AS(Rat(1, 2) / Rat(0), Error);
}

TEST_CASE("rational field axioms hold on random triples") {
    std::mt19937 rng(42);
    for (int i = 0; i < 300; ++i) {
        Rat a = rand_rat(rng), b = rand_rat(rng), c = rand_rat(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rat(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == Rat(1));
    }
}

TEST_CASE("falling powers") {
    CHECK(falling_power(Rat(5), 3) == Rat(60));
    CHECK(falling_power(Rat(7, 2), 0) == Rat(1));
    CHECK(falling_power(Rat(2), 4) == Rat(0));
    CHECK(falling_power(Rat(1, 2), 2) == Rat(-1, 4));
}

TEST_CASE("polynomial division reconstructs the dividend") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        std::vector<Rat> ac, bc;
        std::uniform_int_distribution<int> deg(0, 5);
        int da = deg(rng), db = deg(rng);
        for (int k = 0; k <= da; ++k) ac.push_back(rand_rat(rng));
        for (int k = 0; k <= db; ++k) bc.push_back(rand_rat(rng));
        Poly a(ac), b(bc);
        if (b.is_zero()) continue;
        auto [q, r] = poly_divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("rational roots with multiplicities") {
    // (n-2)^2 (n+1)
    Poly p = from_longs({-2, 1}) * from_longs({-2, 1}) * from_longs({1, 1});
    auto roots = rational_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].first == Rat(-1));
    CHECK(roots[0].second == 1);
    CHECK(roots[1].first == Rat(2));
    CHECK(roots[1].second == 2);

    CHECK(rational_roots(Poly(Rat(1))).empty());
    CHECK(rational_roots(from_longs({1, 0, 1})).empty()); // n^2 + 1
    CHECK_THROWS_AS(rational_roots(Poly()), ZeroPolynomial);

    // x^3 * (2x - 3)
    Poly q = Poly::monomial(Rat(1), 3) * from_longs({-3, 2});
    auto qr = rational_roots(q);
    REQUIRE(qr.size() == 2);
    CHECK(qr[0] == std::pair<Rat, int>(Rat(0), 3));
    CHECK(qr[1] == std::pair<Rat, int>(Rat(3, 2), 1));
}

TEST_CASE("rational function canonical form") {
    // (x^2 - 1)/(2x - 2) reduces to (x+1)/2 with monic denominator
    RatFun r(from_longs({-1, 0, 1}), from_longs({-2, 2}));
    CHECK(r.is_polynomial());
    CHECK(r.num() == from_longs({1, 1}).scaled(Rat(1, 2)));
    CHECK(RatFun(from_longs({0, 2}), from_longs({0, 0, 4})) ==
          RatFun(Poly(Rat(1)), from_longs({0, 2})));
}

TEST_CASE("partial fractions of 1/(x + 1/2)") {
    RatFun r(Poly(Rat(1)), Poly(std::vector<Rat>{Rat(1, 2), Rat(1)}));
    auto pf = partial_fractions(r);
    CHECK(pf.poly_part.is_zero());
    REQUIRE(pf.pole_terms.size() == 1);
    CHECK(pf.pole_terms[0].beta == Rat(-1, 2));
    CHECK(pf.pole_terms[0].order == 1);
    CHECK(pf.pole_terms[0].coeff == Rat(1));
}

TEST_CASE("partial fractions of a polynomial is the polynomial") {
    RatFun r(Poly::monomial(Rat(1), 2), Poly(Rat(1)));
    auto pf = partial_fractions(r);
    CHECK(pf.poly_part == Poly::monomial(Rat(1), 2));
    CHECK(pf.pole_terms.empty());
}

TEST_CASE("partial fractions of (2x+3)/((x+1)(x+2))") {
    RatFun r(from_longs({3, 2}), from_longs({1, 1}) * from_longs({2, 1}));
    auto pf = partial_fractions(r);
    CHECK(pf.poly_part.is_zero());
    REQUIRE(pf.pole_terms.size() == 2);
    CHECK(pf.pole_terms[0].beta == Rat(-2));
    CHECK(pf.pole_terms[0].coeff == Rat(1));
    CHECK(pf.pole_terms[1].beta == Rat(-1));
    CHECK(pf.pole_terms[1].coeff == Rat(1));
    CHECK(recombine(pf) == r);
}

TEST_CASE("partial fractions rejects irrational poles") {
    RatFun r(Poly(Rat(1)), from_longs({1, 0, 1})); // 1/(x^2+1)
    CHECK_THROWS_AS(partial_fractions(r), IrreducibleDenominator);
}

TEST_CASE("partial fractions recombines exactly on random inputs") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> small(-4, 4);
    std::uniform_int_distribution<int> nroots(1, 3);
    std::uniform_int_distribution<int> mult(1, 2);
    for (int i = 0; i < 120; ++i) {
        Poly den(Rat(1));
        int k = nroots(rng);
        for (int t = 0; t < k; ++t) {
            Rat root(small(rng), 1 + (i % 3));
            den = den * Poly(std::vector<Rat>{-root, Rat(1)}).pow(
                            static_cast<unsigned long>(mult(rng)));
        }
        std::vector<Rat> nc;
        for (int t = 0; t <= den.degree(); ++t) nc.push_back(rand_rat(rng));
        Poly num(nc);
        if (num.is_zero()) continue;
        RatFun r(num, den);
        CHECK(recombine(partial_fractions(r)) == r);
    }
}
