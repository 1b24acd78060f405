#ifndef SEQCONV_DIFF_OP_HPP
#define SEQCONV_DIFF_OP_HPP

#include <iosfwd>
#include <map>
#include <string>

#include "seqconv/ratfun.hpp"

namespace seqconv {

// Laurent polynomial over Q in x: finitely many terms c * x^k, k in Z.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rat& c) { set(0, c); } // NOLINT
    LaurentPoly(long c) { set(0, Rat(c)); }  // NOLINT
    explicit LaurentPoly(const Poly& p);
    static LaurentPoly monomial(const Rat& c, long k);

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, Rat>& terms() const { return terms_; }
    Rat coeff(long k) const;
    void set(long k, const Rat& c);
    long min_exp() const;
    long max_exp() const;

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator+=(const LaurentPoly& o) { *this = *this + o; return *this; }
    LaurentPoly& operator-=(const LaurentPoly& o) { *this = *this - o; return *this; }
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }

    LaurentPoly derivative() const; // d/dx, including negative powers

    // x^(-min_exp) * this as an ordinary polynomial (for gcd/content work).
    Poly poly_part_shifted() const;
    // As a rational function num/x^k.
    RatFun to_ratfun() const;

    std::string to_string() const;

private:
    std::map<long, Rat> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

// Operator in K[x, x^-1]<D> with D * f(x) = f(x) * D + f'(x).
class DiffOp {
public:
    DiffOp() = default;
    explicit DiffOp(const LaurentPoly& c) { set(0, c); }

    static DiffOp identity() { return DiffOp(LaurentPoly(Rat(1))); }
    static DiffOp d(); // the derivation D
    static DiffOp term(const LaurentPoly& c, long dpow);

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, LaurentPoly>& terms() const { return terms_; }
    LaurentPoly coeff(long dpow) const;
    void set(long dpow, const LaurentPoly& c);
    long order() const; // max D-power; throws on zero

    DiffOp operator-() const;
    friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
    friend DiffOp operator-(const DiffOp& a, const DiffOp& b);
    friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
    DiffOp& operator+=(const DiffOp& o) { *this = *this + o; return *this; }
    DiffOp& operator-=(const DiffOp& o) { *this = *this - o; return *this; }
    DiffOp& operator*=(const DiffOp& o) { *this = *this * o; return *this; }
    friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

    // Canonical form: multiply by the unit c*x^k that makes the lowest x-power
    // zero and all coefficients together integer-primitive with positive
    // leading coefficient of the top D-term.
    DiffOp canonical() const;
    bool equal_up_to_unit(const DiffOp& o) const;

    std::string to_string() const;

private:
    std::map<long, LaurentPoly> terms_;
};

std::ostream& operator<<(std::ostream& os, const DiffOp& op);

} // namespace seqconv

#endif
