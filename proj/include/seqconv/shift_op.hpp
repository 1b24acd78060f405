#ifndef SEQCONV_SHIFT_OP_HPP
#define SEQCONV_SHIFT_OP_HPP

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "seqconv/ratfun.hpp"

namespace seqconv {

// Term oracle for a two-way sequence (index may be negative).
using TermOracle = std::function<Rat(long)>;

// Skew operator in the shift variable E over Q(n), with Laurent E-support.
// Multiplication follows E * f(n) = f(n+1) * E (and E^-1 * f = f(n-1) * E^-1).
// No zero coefficients are stored.
class ShiftOp {
public:
    ShiftOp() = default;
    explicit ShiftOp(const RatFun& c) { set(0, c); }

    static ShiftOp zero() { return ShiftOp(); }
    static ShiftOp identity() { return ShiftOp(RatFun(1)); }
    // c(n) * E^k
    static ShiftOp term(const RatFun& c, long k);
    static ShiftOp shift(long k = 1) { return term(RatFun(1), k); }
    // q(n)*E - p(n)
    static ShiftOp first_order(const Poly& q, const Poly& p);

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, RatFun>& terms() const { return terms_; }
    RatFun coeff(long k) const;
    void set(long k, const RatFun& c);

    long max_exp() const; // throws on zero operator
    long min_exp() const;
    // E-span (max - min); the classical order for operators with min_exp 0.
    long order() const { return max_exp() - min_exp(); }

    ShiftOp operator-() const;
    friend ShiftOp operator+(const ShiftOp& a, const ShiftOp& b);
    friend ShiftOp operator-(const ShiftOp& a, const ShiftOp& b);
    friend ShiftOp operator*(const ShiftOp& a, const ShiftOp& b); // composition
    ShiftOp& operator+=(const ShiftOp& o) { *this = *this + o; return *this; }
    ShiftOp& operator-=(const ShiftOp& o) { *this = *this - o; return *this; }
    ShiftOp& operator*=(const ShiftOp& o) { *this = *this * o; return *this; }
    friend bool operator==(const ShiftOp& a, const ShiftOp& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ShiftOp& a, const ShiftOp& b) { return !(a == b); }

    ShiftOp scaled(const RatFun& c) const; // c(n) * L (left multiple)
    // Coefficients substituted n -> n + k (conjugation by E^k).
    ShiftOp with_shifted_coeffs(long k) const;

    // Sum of coeff_k(n) * y(n + k); PoleAtIndex if a coefficient has a pole at n.
    Rat apply_at(const TermOracle& y, long n) const;

    // Canonical form: extract E^min from the left so the minimum exponent is
    // zero, clear denominators, divide by content, positive leading
    // coefficient. Two operators are equal up to a left unit c(n)*E^k exactly
    // when their canonical forms coincide.
    ShiftOp canonical() const;
    bool equal_up_to_unit(const ShiftOp& o) const;

    bool has_polynomial_coeffs() const;

    std::string to_string() const;

private:
    std::map<long, RatFun> terms_;
};

std::ostream& operator<<(std::ostream& os, const ShiftOp& op);

// Right division over Q(n): a = q * b + r with E-degree of r below that of b.
// Both inputs must have nonnegative E-support.
std::pair<ShiftOp, ShiftOp> right_divmod(const ShiftOp& a, const ShiftOp& b);
bool right_divides(const ShiftOp& divisor, const ShiftOp& of);

struct LclmResult {
    ShiftOp lclm;      // canonical
    ShiftOp cof1;      // raw cofactors: cof1 * l1 = cof2 * l2 = common multiple
    ShiftOp cof2;
};

// Least common left multiple of two nonzero operators with nonnegative
// E-support, of minimal order, found by solving for cofactor coefficients
// with an ascending order bound.
LclmResult lclm_with_cofactors(const ShiftOp& l1, const ShiftOp& l2);
ShiftOp lclm(const ShiftOp& l1, const ShiftOp& l2);

} // namespace seqconv

#endif
