#include "seqconv/rat.hpp"

#include <ostream>
#include <stdexcept>

#include "seqconv/errors.hpp"

namespace seqconv {

Rat::Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
}

Rat::Rat(const std::string& text) : v_(0) {
    if (v_.set_str(text, 10) != 0) throw Error("bad rational literal: " + text);
    if (v_.get_den() == 0) throw Error("rational with zero denominator: " + text);
    v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw Error("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rat Rat::inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    return Rat(mpq_class(1) / v_);
}

long Rat::to_long() const {
    if (!is_integer()) throw Error("not an integer: " + to_string());
    if (!v_.get_num().fits_slong_p()) throw Error("integer out of range: " + to_string());
    return v_.get_num().get_si();
}

Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    Rat base = e > 0 ? *this : inverse();
    unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.v_.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.v_.get_den().get_mpz_t(), k);
    return Rat(mpq_class(num, den));
}

std::string Rat::to_string() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.to_string();
}

Rat falling_power(const Rat& x, unsigned long n) {
    Rat result(1);
    for (unsigned long j = 0; j < n; ++j) result *= x - Rat(static_cast<long>(j));
    return result;
}

Rat binomial(unsigned long n, unsigned long k) {
    if (k > n) return Rat(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rat(mpq_class(b));
}

} // namespace seqconv
