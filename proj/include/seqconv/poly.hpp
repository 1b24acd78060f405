#ifndef SEQCONV_POLY_HPP
#define SEQCONV_POLY_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "seqconv/rat.hpp"

namespace seqconv {

// Dense univariate polynomial over Q, coefficients by ascending power.
// The zero polynomial is the empty coefficient list; otherwise the leading
// coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    Poly(const Rat& c) { if (!c.is_zero()) coeffs_.push_back(c); } // NOLINT
    Poly(long c) : Poly(Rat(c)) {}                                 // NOLINT
    explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly variable() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }
    static Poly monomial(const Rat& c, std::size_t deg);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }
    Rat leading() const;
    bool is_constant() const { return coeffs_.size() <= 1; }

    Rat operator()(const Rat& x) const; // evaluation

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const Rat& c) const;
    Poly pow(unsigned long e) const;
    Poly derivative() const;

    // p(a*x + b) for rational a, b.
    Poly compose_linear(const Rat& a, const Rat& b) const;
    // p(x + k), the common case.
    Poly shifted(const Rat& k) const { return compose_linear(Rat(1), k); }

    Poly monic() const;
    // Integer-primitive form: integer coefficients with content 1 and
    // positive leading coefficient. Unique representative up to nothing.
    Poly primitive() const;

    std::string to_string(const std::string& var) const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

// Exact division with remainder: a = q*b + r, deg r < deg b. b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

// Monic gcd over Q.
Poly poly_gcd(Poly a, Poly b);

// All rational roots with multiplicities, sorted by root value.
// Throws ZeroPolynomial if p = 0.
std::vector<std::pair<Rat, int>> rational_roots(const Poly& p);

// Nonnegative integer roots only (as longs), ascending.
std::vector<long> nonneg_integer_roots(const Poly& p);

} // namespace seqconv

#endif
