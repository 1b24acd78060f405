#include "seqconv/diff_op.hpp"

#include <ostream>

#include "seqconv/errors.hpp"

namespace seqconv {

LaurentPoly::LaurentPoly(const Poly& p) {
    for (long k = 0; k <= p.degree(); ++k) set(k, p.coeff(static_cast<std::size_t>(k)));
}

LaurentPoly LaurentPoly::monomial(const Rat& c, long k) {
    LaurentPoly p;
    p.set(k, c);
    return p;
}

Rat LaurentPoly::coeff(long k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentPoly::set(long k, const Rat& c) {
    if (c.is_zero())
        terms_.erase(k);
    else
        terms_[k] = c;
}

long LaurentPoly::min_exp() const {
    if (is_zero()) throw Error("exponent range of zero Laurent polynomial");
    return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (is_zero()) throw Error("exponent range of zero Laurent polynomial");
    return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [k, c] : b.terms_) r.set(k, r.coeff(k) + c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return a + (-b);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [i, c] : a.terms_)
        for (const auto& [j, d] : b.terms_) r.set(i + j, r.coeff(i + j) + c * d);
    return r;
}

LaurentPoly LaurentPoly::derivative() const {
    LaurentPoly r;
    for (const auto& [k, c] : terms_) {
        if (k == 0) continue;
        r.set(k - 1, c * Rat(k));
    }
    return r;
}

Poly LaurentPoly::poly_part_shifted() const {
    if (is_zero()) return Poly();
    long lo = min_exp();
    std::vector<Rat> v(static_cast<std::size_t>(max_exp() - lo + 1), Rat(0));
    for (const auto& [k, c] : terms_) v[static_cast<std::size_t>(k - lo)] = c;
    return Poly(std::move(v));
}

RatFun LaurentPoly::to_ratfun() const {
    if (is_zero()) return RatFun();
    long lo = min_exp();
    Poly p = poly_part_shifted();
    if (lo >= 0) return RatFun(p * Poly::variable().pow(static_cast<unsigned long>(lo)));
    return RatFun(p, Poly::variable().pow(static_cast<unsigned long>(-lo)));
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        long k = it->first;
        Rat c = it->second;
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
            out += k == 1 ? "x" : "x^" + std::to_string(k);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    return os << p.to_string();
}

DiffOp DiffOp::d() {
    return term(LaurentPoly(Rat(1)), 1);
}

DiffOp DiffOp::term(const LaurentPoly& c, long dpow) {
    DiffOp op;
    op.set(dpow, c);
    return op;
}

LaurentPoly DiffOp::coeff(long dpow) const {
    auto it = terms_.find(dpow);
    return it == terms_.end() ? LaurentPoly() : it->second;
}

void DiffOp::set(long dpow, const LaurentPoly& c) {
    if (dpow < 0) throw Error("negative derivative power");
    if (c.is_zero())
        terms_.erase(dpow);
    else
        terms_[dpow] = c;
}

long DiffOp::order() const {
    if (is_zero()) throw Error("order of zero operator");
    return terms_.rbegin()->first;
}

DiffOp DiffOp::operator-() const {
    DiffOp r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
    DiffOp r = a;
    for (const auto& [k, c] : b.terms_) r.set(k, r.coeff(k) + c);
    return r;
}

DiffOp operator-(const DiffOp& a, const DiffOp& b) {
    return a + (-b);
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
    // D^i g = sum_t binom(i, t) g^(t) D^(i-t)  (Leibniz)
    DiffOp r;
    for (const auto& [i, f] : a.terms_) {
        for (const auto& [j, g] : b.terms_) {
            LaurentPoly gt = g;
            for (long t = 0; t <= i; ++t) {
                Rat bin = binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(t));
                LaurentPoly c = f * gt;
                long dpow = i - t + j;
                LaurentPoly scaled;
                for (const auto& [k, cc] : c.terms()) scaled.set(k, cc * bin);
                r.set(dpow, r.coeff(dpow) + scaled);
                gt = gt.derivative();
                if (gt.is_zero()) break;
            }
        }
    }
    return r;
}

DiffOp DiffOp::canonical() const {
    if (is_zero()) return *this;
    long min_x = 0;
    bool have = false;
    for (const auto& [k, c] : terms_) {
        (void)k;
        long m = c.min_exp();
        if (!have || m < min_x) {
            min_x = m;
            have = true;
        }
    }
    // Shift all coefficients by x^(-min_x), then divide by integer content of
    // the whole coefficient set and sign-normalize the leading D-term.
    Poly all;
    for (const auto& [k, c] : terms_) {
        (void)k;
        // Aggregate into one polynomial gcd to get the common content.
        LaurentPoly shifted;
        for (const auto& [e, cc] : c.terms()) shifted.set(e - min_x, cc);
        all = poly_gcd(all, shifted.poly_part_shifted() *
                                Poly::variable().pow(static_cast<unsigned long>(
                                    shifted.min_exp())));
    }
    DiffOp r;
    for (const auto& [k, c] : terms_) {
        LaurentPoly shifted;
        for (const auto& [e, cc] : c.terms()) shifted.set(e - min_x, cc);
        Poly p = shifted.poly_part_shifted() *
                 Poly::variable().pow(static_cast<unsigned long>(shifted.min_exp()));
        Poly q = poly_divmod(p, all).first;
        r.set(k, LaurentPoly(q));
    }
    // Make the top D coefficient integer-primitive with positive leading sign.
    Poly lead = r.terms_.rbegin()->second.poly_part_shifted();
    Poly prim = lead.primitive();
    Rat unit = lead.leading() / prim.leading();
    DiffOp out;
    for (const auto& [k, c] : r.terms_) {
        LaurentPoly scaled;
        for (const auto& [e, cc] : c.terms()) scaled.set(e, cc / unit);
        out.set(k, scaled);
    }
    return out;
}

bool DiffOp::equal_up_to_unit(const DiffOp& o) const {
    if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
    return canonical() == o.canonical();
}

std::string DiffOp::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        long k = it->first;
        const LaurentPoly& c = it->second;
        std::string cs = c.to_string();
        bool neg = false;
        if (cs.size() > 1 && cs[0] == '-' && cs.find(" - ") == std::string::npos &&
            cs.find(" + ") == std::string::npos) {
            neg = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        bool need_parens = cs.find(' ') != std::string::npos;
        if (k == 0) {
            out += need_parens ? "(" + cs + ")" : cs;
            continue;
        }
        std::string dpart = k == 1 ? "D" : "D^" + std::to_string(k);
        if (cs == "1") {
            out += dpart;
        } else {
            out += (need_parens ? "(" + cs + ")" : cs) + "*" + dpart;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const DiffOp& op) {
    return os << op.to_string();
}

} // namespace seqconv
