#ifndef SEQCONV_RAT_HPP
#define SEQCONV_RAT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace seqconv {

// Exact rational number. Always canonical: gcd(|num|, den) = 1, den >= 1,
// zero is 0/1. Backed by GMP.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(static_cast<long>(n)) {} // NOLINT: implicit on purpose
    Rat(long num, long den);
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rat(const std::string& text); // "p", "-p", "p/q"

    static Rat of(long num, long den) { return Rat(num, den); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Valid only when is_integer() and the value fits in a long.
    long to_long() const;

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat inverse() const;
    Rat abs() const { return v_ < 0 ? -*this : *this; }

    // Integer power; e may be negative (then *this must be nonzero).
    Rat pow(long e) const;

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    std::string to_string() const;

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

// Product (x - 0)(x - 1)...(x - (n-1)); the empty product is 1.
Rat falling_power(const Rat& x, unsigned long n);

Rat binomial(unsigned long n, unsigned long k);

} // namespace seqconv

#endif
