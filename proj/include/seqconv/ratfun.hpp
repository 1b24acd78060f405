#ifndef SEQCONV_RATFUN_HPP
#define SEQCONV_RATFUN_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "seqconv/poly.hpp"

namespace seqconv {

// Rational function over Q in one variable. Canonical: gcd(num, den) = 1 and
// den monic; zero is 0/1. Canonical form makes equality structural.
class RatFun {
public:
    RatFun() : num_(), den_(Rat(1)) {}
    RatFun(const Rat& c) : num_(c), den_(Rat(1)) {} // NOLINT
    RatFun(long c) : num_(Rat(c)), den_(Rat(1)) {}  // NOLINT
    RatFun(const Poly& p) : num_(p), den_(Rat(1)) {} // NOLINT
    RatFun(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    // Evaluation; throws PoleAtIndex if den(x) = 0.
    Rat operator()(const Rat& x) const;
    bool has_pole_at(const Rat& x) const { return den_(x).is_zero(); }

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun& operator+=(const RatFun& o) { *this = *this + o; return *this; }
    RatFun& operator-=(const RatFun& o) { *this = *this - o; return *this; }
    RatFun& operator*=(const RatFun& o) { *this = *this * o; return *this; }
    RatFun& operator/=(const RatFun& o) { *this = *this / o; return *this; }
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    RatFun inverse() const;
    RatFun derivative() const;
    RatFun compose_linear(const Rat& a, const Rat& b) const;
    RatFun shifted(const Rat& k) const { return compose_linear(Rat(1), k); }

    std::string to_string(const std::string& var) const;

private:
    Poly num_, den_;
};

std::ostream& operator<<(std::ostream& os, const RatFun& r);

// polyPart + sum of c/(x-beta)^j terms, recombining exactly to the input.
struct PoleTerm {
    Rat beta;
    int order = 1; // j >= 1
    Rat coeff;
};

struct PartialFractionForm {
    Poly poly_part;
    std::vector<PoleTerm> pole_terms; // sorted by (beta, order), coeffs nonzero
};

// Requires every denominator root to be rational; otherwise throws
// IrreducibleDenominator.
PartialFractionForm partial_fractions(const RatFun& r);

RatFun recombine(const PartialFractionForm& pf);

} // namespace seqconv

#endif
