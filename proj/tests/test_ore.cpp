#include <doctest.h>

#include <vector>

#include "seqconv/errors.hpp"
#include "seqconv/ore_maps.hpp"

using namespace seqconv;

namespace {

Poly npoly(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return Poly(std::move(v));
}

// (n+3)E^3 - (n^2+6n+10)E^2 + (2n+5)E - 1, the annihilator of the
// factorial/inverse-factorial convolution.
ShiftOp mixed_factorial_op() {
    ShiftOp l;
    l.set(3, RatFun(npoly({3, 1})));
    l.set(2, RatFun(-npoly({10, 6, 1})));
    l.set(1, RatFun(npoly({5, 2})));
    l.set(0, RatFun(Poly(Rat(-1))));
    return l;
}

std::vector<Rat> factorials(int n) {
    std::vector<Rat> f{Rat(1)};
    for (int k = 1; k <= n; ++k) f.push_back(f.back() * Rat(k));
    return f;
}

} // namespace

TEST_CASE("operator composition follows the commutation rule") {
    // (E+1)(E-(n+1)) = E^2 - (n+1)E - (n+1)
    ShiftOp a = ShiftOp::shift() + ShiftOp::identity();
    ShiftOp b = ShiftOp::shift() - ShiftOp(RatFun(npoly({1, 1})));
    ShiftOp prod = a * b;
    ShiftOp expect;
    expect.set(2, RatFun(1));
    expect.set(1, RatFun(-npoly({1, 1})));
    expect.set(0, RatFun(-npoly({1, 1})));
    CHECK(prod == expect);
    CHECK(ShiftOp::identity() * prod == prod);
    CHECK(prod * ShiftOp::identity() == prod);
}

TEST_CASE("derangement annihilator vanishes termwise") {
    ShiftOp a = ShiftOp::shift() + ShiftOp::identity();
    ShiftOp b = ShiftOp::shift() - ShiftOp(RatFun(npoly({1, 1})));
    ShiftOp l = a * b;
    // d_0 = 1, d_1 = 0, d_n = (n-1)(d_{n-1} + d_{n-2})
    std::vector<Rat> d{Rat(1), Rat(0)};
    for (long n = 2; n <= 25; ++n) d.push_back(Rat(n - 1) * (d[n - 1] + d[n - 2]));
    TermOracle oracle = [&](long n) { return n < 0 ? Rat(0) : d[static_cast<std::size_t>(n)]; };
    for (long n = 0; n <= 20; ++n) CHECK(l.apply_at(oracle, n) == Rat(0));
}

TEST_CASE("padded convolution of factorial with inverse factorial is annihilated on Z") {
    ShiftOp l = mixed_factorial_op();
    auto fact = factorials(30);
    std::vector<Rat> y;
    for (int n = 0; n <= 25; ++n) {
        Rat s(0);
        for (int k = 0; k <= n; ++k) s += fact[k] / fact[n - k];
        y.push_back(s);
    }
    CHECK(y[0] == Rat(1));
    CHECK(y[1] == Rat(2));
    CHECK(y[2] == Rat(7, 2));
    TermOracle oracle = [&](long n) { return n < 0 ? Rat(0) : y[static_cast<std::size_t>(n)]; };
    for (long n = -3; n <= 20; ++n) CHECK(l.apply_at(oracle, n) == Rat(0));
}

TEST_CASE("apply handles trivial and padded cases") {
    ShiftOp em1 = ShiftOp::shift() - ShiftOp::identity();
    TermOracle one = [](long) { return Rat(1); };
    for (long n = -5; n <= 10; ++n) CHECK(em1.apply_at(one, n) == Rat(0));

    TermOracle padded = [](long n) { return n < 0 ? Rat(0) : Rat(n + 1); };
    CHECK(ShiftOp::shift(-1).apply_at(padded, 0) == Rat(0));

    ShiftOp bad = ShiftOp(RatFun(Poly(Rat(1)), npoly({-2, 1}))); // 1/(n-2)
    CHECK_THROWS_AS(bad.apply_at(one, 2), PoleAtIndex);
}

TEST_CASE("right division reconstructs") {
    ShiftOp a = mixed_factorial_op();
    ShiftOp b = ShiftOp::first_order(npoly({0, 1}), npoly({4, 3}));
    auto [q, r] = right_divmod(a, b);
    CHECK(q * b + r == a);
    CHECK((r.is_zero() || r.max_exp() < 1));
}

TEST_CASE("lclm of first-order and factored second-order matches the known factored form") {
    // lclm(E - (2n+3)/(2n+5), (E - (2n+4))(E - 1))
    ShiftOp l1 = ShiftOp::shift() - ShiftOp(RatFun(npoly({3, 2}), npoly({5, 2})));
    ShiftOp f2 = ShiftOp::shift() - ShiftOp(RatFun(npoly({4, 2})));
    ShiftOp f3 = ShiftOp::shift() - ShiftOp::identity();
    ShiftOp l2 = f2 * f3;
    auto res = lclm_with_cofactors(l1, l2);
    CHECK(res.lclm.order() == 3);
    CHECK(right_divides(l1, res.lclm));
    CHECK(right_divides(l2, res.lclm));
    CHECK((res.cof1 * l1).equal_up_to_unit(res.cof2 * l2));

    // (E - (2n+3)(2n+7)^2/((2n+5)^2(2n+9))) (E - (2n+4)) (E - 1)
    RatFun ratio(npoly({3, 2}) * npoly({7, 2}) * npoly({7, 2}),
                 npoly({5, 2}) * npoly({5, 2}) * npoly({9, 2}));
    ShiftOp expected = (ShiftOp::shift() - ShiftOp(ratio)) * f2 * f3;
    CHECK(res.lclm.equal_up_to_unit(expected));
}

TEST_CASE("lclm degenerate and termwise cases") {
    ShiftOp l = ShiftOp::first_order(npoly({0, 1}), npoly({1, 1}));
    CHECK(lclm(l, l).equal_up_to_unit(l));

    ShiftOp e1 = ShiftOp::shift() - ShiftOp::identity();
    ShiftOp e2 = ShiftOp::shift() - ShiftOp(RatFun(2));
    ShiftOp m = lclm(e1, e2);
    Rat pow(1);
    std::vector<Rat> ones, twos;
    for (int n = 0; n <= 35; ++n) {
        ones.emplace_back(1);
        twos.push_back(pow);
        pow *= Rat(2);
    }
    TermOracle o1 = [&](long n) { return ones[static_cast<std::size_t>(n)]; };
    TermOracle o2 = [&](long n) { return twos[static_cast<std::size_t>(n)]; };
    for (long n = 0; n <= 30; ++n) {
        CHECK(m.apply_at(o1, n) == Rat(0));
        CHECK(m.apply_at(o2, n) == Rat(0));
    }
}

TEST_CASE("canonical form is invariant under left units") {
    ShiftOp l = mixed_factorial_op();
    ShiftOp scaled = l.scaled(RatFun(npoly({1, 2}), npoly({3, 1})));
    CHECK(scaled.equal_up_to_unit(l));
    ShiftOp shifted = ShiftOp::shift(2) * l;
    CHECK(shifted.equal_up_to_unit(l));
    CHECK(l.canonical() == l); // already canonical
}

TEST_CASE("symmetric product of first-order operators") {
    DiffOp d = DiffOp::d();
    DiffOp dm1 = d - DiffOp::identity();
    DiffOp dm2 = d - DiffOp(LaurentPoly(Rat(2)));
    CHECK(symmetric_product(dm1, dm1).equal_up_to_unit(dm2));
    // constants times solutions of M stay solutions of M
    CHECK(symmetric_product(d, dm1).equal_up_to_unit(dm1));
}

TEST_CASE("inverse factorial squared via series operators") {
    // (n+1)E - 1 annihilates 1/n!; its series image is D - 1.
    ShiftOp l = ShiftOp::first_order(npoly({1, 1}), Poly(Rat(1)));
    DiffOp m = to_diff_op(l);
    CHECK(m.equal_up_to_unit(DiffOp::d() - DiffOp::identity()));
    DiffOp sym = symmetric_product(m, m);
    CHECK(sym.equal_up_to_unit(DiffOp::d() - DiffOp(LaurentPoly(Rat(2)))));
    ShiftOp back = to_shift_op(sym);
    // (n+1)E - 2 annihilates 2^n/n!
    ShiftOp expect = ShiftOp::first_order(npoly({1, 1}), Poly(Rat(2)));
    CHECK(back.equal_up_to_unit(expect));
}

TEST_CASE("shift-to-differential map on the mixed factorial annihilator") {
    DiffOp m = to_diff_op(mixed_factorial_op());
    // -x^-2 (x^2 D^2 - (x-1)(2x-1) D + (x-2)(x-1))
    Poly p1 = npoly({-1, 1}) * npoly({-1, 2});
    Poly p0 = npoly({-2, 1}) * npoly({-1, 1});
    DiffOp expect;
    expect.set(2, LaurentPoly(Rat(-1)));
    LaurentPoly c1;
    for (long k = 0; k <= p1.degree(); ++k)
        c1.set(k - 2, p1.coeff(static_cast<std::size_t>(k)));
    expect.set(1, c1);
    LaurentPoly c0;
    for (long k = 0; k <= p0.degree(); ++k)
        c0.set(k - 2, -p0.coeff(static_cast<std::size_t>(k)));
    expect.set(0, c0);
    CHECK(m.equal_up_to_unit(expect));

    CHECK(to_diff_op(ShiftOp(RatFun(npoly({0, 1})))) ==
          DiffOp::term(LaurentPoly::monomial(Rat(1), 1), 1)); // n -> xD
    CHECK(to_diff_op(ShiftOp::shift(-1)) ==
          DiffOp(LaurentPoly::monomial(Rat(1), 1))); // E^-1 -> x
}

TEST_CASE("differential-to-shift map") {
    // -x^-2 (x^2 D^2 + (3x-1) D + 1) maps to (n+3)E^3 - (n+3)^2 E^2 exactly.
    DiffOp m;
    m.set(2, LaurentPoly(Rat(-1)));
    LaurentPoly c1;
    c1.set(-1, Rat(-3));
    c1.set(-2, Rat(1));
    m.set(1, c1);
    m.set(0, LaurentPoly::monomial(Rat(-1), -2));
    ShiftOp l = to_shift_op(m);
    ShiftOp expect;
    expect.set(3, RatFun(npoly({3, 1})));
    expect.set(2, RatFun(-(npoly({3, 1}) * npoly({3, 1}))));
    CHECK(l == expect);

    CHECK(to_shift_op(DiffOp::term(LaurentPoly::monomial(Rat(1), 1), 1)) ==
          ShiftOp(RatFun(npoly({0, 1})))); // xD -> n
    CHECK(to_shift_op(DiffOp::d()) ==
          ShiftOp::term(RatFun(npoly({1, 1})), 1)); // D -> (n+1)E
}

TEST_CASE("round trip through the isomorphism") {
    ShiftOp l = mixed_factorial_op();
    CHECK(to_shift_op(to_diff_op(l)) == l);
    ShiftOp e = ShiftOp::shift();
    CHECK(to_shift_op(to_diff_op(e)) == e);
}

TEST_CASE("gauge transform by a constant rate") {
    DiffOp m = to_diff_op(mixed_factorial_op());
    DiffOp mp = gauge_transform(m, RatFun(1));
    DiffOp expect;
    expect.set(2, LaurentPoly(Poly::monomial(Rat(1), 2)));
    expect.set(1, LaurentPoly(npoly({-1, 3})));
    expect.set(0, LaurentPoly(Rat(1)));
    CHECK(mp.equal_up_to_unit(expect));

    CHECK(gauge_transform(m, RatFun(0)).equal_up_to_unit(m));

    // D becomes D + r up to a unit
    RatFun r(npoly({1}), npoly({1, -1}));
    DiffOp dg = gauge_transform(DiffOp::d(), r);
    DiffOp expect2 = DiffOp::term(LaurentPoly(r.den()), 1) + DiffOp(LaurentPoly(r.num()));
    CHECK(dg.equal_up_to_unit(expect2));
}
