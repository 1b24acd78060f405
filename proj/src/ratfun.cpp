#include "seqconv/ratfun.hpp"

#include <algorithm>
#include <ostream>

#include "seqconv/errors.hpp"
#include "seqconv/linsolve.hpp"

namespace seqconv {

RatFun::RatFun(Poly num, Poly den) {
    if (den.is_zero()) throw Error("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly(Rat(1));
        return;
    }
    Poly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = poly_divmod(num, g).first;
        den = poly_divmod(den, g).first;
    }
    Rat lead = den.leading();
    num_ = num.scaled(lead.inverse());
    den_ = den.monic();
}

Rat RatFun::operator()(const Rat& x) const {
    Rat d = den_(x);
    if (d.is_zero()) throw PoleAtIndex("pole at " + x.to_string());
    return num_(x) / d;
}

RatFun RatFun::operator-() const {
    RatFun r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    return a + (-b);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw Error("division by zero rational function");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw Error("inverse of zero rational function");
    return RatFun(den_, num_);
}

RatFun RatFun::derivative() const {
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFun RatFun::compose_linear(const Rat& a, const Rat& b) const {
    return RatFun(num_.compose_linear(a, b), den_.compose_linear(a, b));
}

std::string RatFun::to_string(const std::string& var) const {
    if (is_polynomial()) return num_.to_string(var);
    std::string n = num_.is_constant() ? num_.to_string(var) : "(" + num_.to_string(var) + ")";
    return n + "/(" + den_.to_string(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFun& r) {
    return os << r.to_string("x");
}

PartialFractionForm partial_fractions(const RatFun& r) {
    PartialFractionForm out;
    auto [quot, rem] = poly_divmod(r.num(), r.den());
    out.poly_part = quot;
    if (rem.is_zero()) return out;

    const Poly& den = r.den();
    auto roots = rational_roots(den);
    long root_degree = 0;
    for (const auto& [root, mult] : roots) {
        (void)root;
        root_degree += mult;
    }
    if (root_degree != den.degree())
        throw IrreducibleDenominator("denominator has a non-rational root: " +
                                     den.to_string("x"));

    // rem(x) = sum c_{beta,j} * den(x)/(x-beta)^j. The basis polynomials have
    // degree < deg den and are independent, so evaluating the identity at
    // deg den distinct points gives an invertible exact system.
    struct Basis {
        Rat beta;
        int order;
        Poly poly;
    };
    std::vector<Basis> basis;
    for (const auto& [root, mult] : roots) {
        Poly lin(std::vector<Rat>{-root, Rat(1)});
        Poly reduced = den;
        for (int j = 1; j <= mult; ++j) {
            reduced = poly_divmod(reduced, lin).first;
            basis.push_back({root, j, reduced});
        }
    }

    std::size_t dim = basis.size();
    std::vector<Rat> samples;
    for (long t = 0; samples.size() < dim; ++t) {
        Rat x(t);
        if (!den(x).is_zero()) samples.push_back(x);
    }
    Matrix<Rat> a(dim, std::vector<Rat>(dim));
    std::vector<Rat> b(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) a[i][j] = basis[j].poly(samples[i]);
        b[i] = rem(samples[i]);
    }
    auto sol = solve_linear(a, b);
    if (!sol) throw Error("partial fraction system inconsistent"); // unreachable
    for (std::size_t j = 0; j < dim; ++j) {
        if ((*sol)[j].is_zero()) continue;
        out.pole_terms.push_back({basis[j].beta, basis[j].order, (*sol)[j]});
    }
    std::sort(out.pole_terms.begin(), out.pole_terms.end(),
              [](const PoleTerm& x, const PoleTerm& y) {
                  return x.beta < y.beta || (x.beta == y.beta && x.order < y.order);
              });
    return out;
}

RatFun recombine(const PartialFractionForm& pf) {
    RatFun acc(pf.poly_part);
    for (const auto& term : pf.pole_terms) {
        Poly lin(std::vector<Rat>{-term.beta, Rat(1)});
        acc += RatFun(Poly(term.coeff), lin.pow(static_cast<unsigned long>(term.order)));
    }
    return acc;
}

} // namespace seqconv
