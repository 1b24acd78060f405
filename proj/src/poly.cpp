#include "seqconv/poly.hpp"

#include <algorithm>
#include <ostream>

#include "seqconv/errors.hpp"

namespace seqconv {

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::monomial(const Rat& c, std::size_t deg) {
    if (c.is_zero()) return Poly();
    std::vector<Rat> v(deg + 1, Rat(0));
    v[deg] = c;
    return Poly(std::move(v));
}

Rat Poly::leading() const {
    if (is_zero()) throw Error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rat Poly::operator()(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator-() const {
    std::vector<Rat> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(-c);
    return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    return a + (-b);
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(v));
}

Poly Poly::scaled(const Rat& c) const {
    if (c.is_zero()) return Poly();
    std::vector<Rat> v;
    v.reserve(coeffs_.size());
    for (const auto& x : coeffs_) v.push_back(x * c);
    return Poly(std::move(v));
}

Poly Poly::pow(unsigned long e) const {
    Poly result(Rat(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Rat> v;
    v.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        v.push_back(coeffs_[i] * Rat(static_cast<long>(i)));
    return Poly(std::move(v));
}

Poly Poly::compose_linear(const Rat& a, const Rat& b) const {
    // Horner in the polynomial ring: p(ax+b).
    Poly arg(std::vector<Rat>{b, a});
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * arg + Poly(*it);
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

Poly Poly::primitive() const {
    if (is_zero()) return *this;
    // lcm of denominators, then gcd of numerators.
    mpz_class den_lcm = 1;
    for (const auto& c : coeffs_) {
        if (c.is_zero()) continue;
        mpz_class d = c.denominator();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    mpz_class num_gcd = 0;
    for (const auto& c : coeffs_) {
        if (c.is_zero()) continue;
        mpz_class scaled_num = c.numerator() * (den_lcm / c.denominator());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
    }
    Rat factor(mpq_class(den_lcm, num_gcd));
    Poly result = scaled(factor);
    if (result.leading().sign() < 0) result = -result;
    return result;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        Rat c = coeff(static_cast<std::size_t>(k));
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        Rat ac = c.abs();
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (k == 0) {
            out += ac.to_string();
        } else {
            if (!ac.is_one()) out += ac.to_string() + "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.to_string("x");
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    Poly rem = a;
    std::vector<Rat> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0, Rat(0));
    Rat lead_inv = b.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        long shift = rem.degree() - b.degree();
        Rat factor = rem.leading() * lead_inv;
        q[static_cast<std::size_t>(shift)] = factor;
        rem -= Poly::monomial(factor, static_cast<std::size_t>(shift)) * b;
    }
    return {Poly(std::move(q)), rem};
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

// Divisors of |n| by trial division. The polynomials we meet come from
// recurrence coefficients, so the numbers stay small.
std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

std::vector<std::pair<Rat, int>> rational_roots(const Poly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    std::vector<std::pair<Rat, int>> roots;
    Poly work = p.primitive();

    // Factor out x^k first.
    int zero_mult = 0;
    while (!work.is_zero() && work.coeff(0).is_zero()) {
        std::vector<Rat> shifted(work.coeffs().begin() + 1, work.coeffs().end());
        work = Poly(std::move(shifted));
        ++zero_mult;
    }
    if (zero_mult > 0) roots.emplace_back(Rat(0), zero_mult);
    if (work.is_constant()) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }

    mpz_class a0 = work.coeff(0).numerator();
    mpz_class ad = work.leading().numerator();
    for (const auto& p_div : divisors(a0)) {
        for (const auto& q_div : divisors(ad)) {
            for (int sign : {1, -1}) {
                Rat cand(mpq_class(sign * p_div, q_div));
                if (!work(cand).is_zero()) continue;
                int mult = 0;
                Poly lin(std::vector<Rat>{-cand, Rat(1)});
                while (true) {
                    auto [q, r] = poly_divmod(work, lin);
                    if (!r.is_zero()) break;
                    work = q;
                    ++mult;
                }
                roots.emplace_back(cand, mult);
            }
        }
        if (work.is_constant()) break;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<long> nonneg_integer_roots(const Poly& p) {
    std::vector<long> out;
    for (const auto& [root, mult] : rational_roots(p)) {
        (void)mult;
        if (root.is_integer() && root.sign() >= 0) out.push_back(root.to_long());
    }
    return out;
}

} // namespace seqconv
