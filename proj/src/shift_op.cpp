#include "seqconv/shift_op.hpp"

#include <ostream>

#include "seqconv/errors.hpp"
#include "seqconv/linsolve.hpp"

namespace seqconv {

ShiftOp ShiftOp::term(const RatFun& c, long k) {
    ShiftOp op;
    op.set(k, c);
    return op;
}

ShiftOp ShiftOp::first_order(const Poly& q, const Poly& p) {
    ShiftOp op;
    op.set(1, RatFun(q));
    op.set(0, RatFun(-p));
    return op;
}

RatFun ShiftOp::coeff(long k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? RatFun() : it->second;
}

void ShiftOp::set(long k, const RatFun& c) {
    if (c.is_zero())
        terms_.erase(k);
    else
        terms_[k] = c;
}

long ShiftOp::max_exp() const {
    if (is_zero()) throw Error("exponent range of zero operator");
    return terms_.rbegin()->first;
}

long ShiftOp::min_exp() const {
    if (is_zero()) throw Error("exponent range of zero operator");
    return terms_.begin()->first;
}

ShiftOp ShiftOp::operator-() const {
    ShiftOp r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

ShiftOp operator+(const ShiftOp& a, const ShiftOp& b) {
    ShiftOp r = a;
    for (const auto& [k, c] : b.terms_) r.set(k, r.coeff(k) + c);
    return r;
}

ShiftOp operator-(const ShiftOp& a, const ShiftOp& b) {
    return a + (-b);
}

ShiftOp operator*(const ShiftOp& a, const ShiftOp& b) {
    // (f E^i)(g E^j) = f * g(n+i) E^(i+j)
    ShiftOp r;
    for (const auto& [i, f] : a.terms_) {
        for (const auto& [j, g] : b.terms_) {
            RatFun c = f * g.shifted(Rat(i));
            r.set(i + j, r.coeff(i + j) + c);
        }
    }
    return r;
}

ShiftOp ShiftOp::scaled(const RatFun& c) const {
    if (c.is_zero()) return ShiftOp();
    ShiftOp r;
    for (const auto& [k, f] : terms_) r.set(k, f * c);
    return r;
}

ShiftOp ShiftOp::with_shifted_coeffs(long k) const {
    ShiftOp r;
    for (const auto& [e, f] : terms_) r.set(e, f.shifted(Rat(k)));
    return r;
}

Rat ShiftOp::apply_at(const TermOracle& y, long n) const {
    Rat acc(0);
    for (const auto& [k, c] : terms_) {
        if (c.has_pole_at(Rat(n)))
            throw PoleAtIndex("operator coefficient has a pole at n = " + std::to_string(n));
        acc += c(Rat(n)) * y(n + k);
    }
    return acc;
}

ShiftOp ShiftOp::canonical() const {
    if (is_zero()) return *this;
    long shift = min_exp();
    // Extract E^shift from the left: L = E^shift * L' with the coefficients of
    // L' substituted n -> n - shift.
    std::map<long, RatFun> moved;
    for (const auto& [k, c] : terms_) moved[k - shift] = c.shifted(Rat(-shift));

    // Clear denominators and content.
    Poly den_lcm(Rat(1));
    for (const auto& [k, c] : moved) {
        (void)k;
        Poly g = poly_gcd(den_lcm, c.den());
        den_lcm = den_lcm * poly_divmod(c.den(), g).first;
    }
    std::map<long, Poly> polys;
    for (const auto& [k, c] : moved) {
        RatFun cleared = c * RatFun(den_lcm);
        polys[k] = cleared.num().scaled(cleared.den().leading().inverse());
    }
    Poly content;
    for (const auto& [k, p] : polys) {
        (void)k;
        content = poly_gcd(content, p);
    }
    ShiftOp r;
    for (const auto& [k, p] : polys) r.set(k, RatFun(poly_divmod(p, content).first));
    // Normalize to an integer-primitive leading term with positive sign.
    Poly lead = r.terms_.rbegin()->second.num();
    Poly prim = lead.primitive();
    Rat unit = lead.leading() / prim.leading();
    for (auto& [k, c] : r.terms_) c = c * RatFun(unit.inverse());
    return r;
}

bool ShiftOp::equal_up_to_unit(const ShiftOp& o) const {
    if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
    return canonical() == o.canonical();
}

bool ShiftOp::has_polynomial_coeffs() const {
    for (const auto& [k, c] : terms_) {
        (void)k;
        if (!c.is_polynomial()) return false;
    }
    return true;
}

std::string ShiftOp::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        long k = it->first;
        const RatFun& c = it->second;
        bool neg = false;
        RatFun ac = c;
        // Pull the sign off polynomial coefficients for readable output.
        if (c.is_polynomial() && c.num().leading().sign() < 0) {
            neg = true;
            ac = -c;
        }
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string cs;
        bool need_parens = false;
        if (ac.is_polynomial()) {
            const Poly& p = ac.num();
            cs = p.to_string("n");
            need_parens = p.degree() > 0 && cs.find(' ') != std::string::npos;
        } else {
            cs = ac.to_string("n");
            need_parens = true;
        }
        if (k == 0) {
            out += need_parens ? "(" + cs + ")" : cs;
            continue;
        }
        std::string epart = k == 1 ? "E" : "E^" + std::to_string(k);
        if (ac == RatFun(1)) {
            out += epart;
        } else {
            out += (need_parens ? "(" + cs + ")" : cs) + "*" + epart;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const ShiftOp& op) {
    return os << op.to_string();
}

std::pair<ShiftOp, ShiftOp> right_divmod(const ShiftOp& a, const ShiftOp& b) {
    if (b.is_zero()) throw Error("right division by zero operator");
    if (!a.is_zero() && (a.min_exp() < 0 || b.min_exp() < 0))
        throw Error("right division requires nonnegative E-support");
    ShiftOp rem = a;
    ShiftOp quot;
    long db = b.max_exp();
    RatFun lead_b = b.coeff(db);
    while (!rem.is_zero() && rem.max_exp() >= db) {
        long k = rem.max_exp() - db;
        RatFun f = rem.coeff(rem.max_exp()) / lead_b.shifted(Rat(k));
        ShiftOp t = ShiftOp::term(f, k);
        quot += t;
        rem -= t * b;
    }
    return {quot, rem};
}

bool right_divides(const ShiftOp& divisor, const ShiftOp& of) {
    return right_divmod(of, divisor).second.is_zero();
}

LclmResult lclm_with_cofactors(const ShiftOp& l1, const ShiftOp& l2) {
    if (l1.is_zero() || l2.is_zero()) throw Error("lclm of zero operator");
    if (l1.min_exp() < 0 || l2.min_exp() < 0)
        throw Error("lclm requires nonnegative E-support");
    long d1 = l1.max_exp();
    long d2 = l2.max_exp();
    for (long m = std::max(d1, d2); m <= d1 + d2; ++m) {
        // Unknowns: cofactor coefficients u_0..u_{m-d1} and v_0..v_{m-d2} with
        // sum_i u_i E^i l1 - sum_j v_j E^j l2 = 0.
        long n1 = m - d1 + 1;
        long n2 = m - d2 + 1;
        std::size_t cols = static_cast<std::size_t>(n1 + n2);
        Matrix<RatFun> mat(static_cast<std::size_t>(m + 1), std::vector<RatFun>(cols));
        for (long i = 0; i < n1; ++i)
            for (const auto& [k, c] : l1.terms())
                mat[static_cast<std::size_t>(k + i)][static_cast<std::size_t>(i)] +=
                    c.shifted(Rat(i));
        for (long j = 0; j < n2; ++j)
            for (const auto& [k, c] : l2.terms())
                mat[static_cast<std::size_t>(k + j)][static_cast<std::size_t>(n1 + j)] -=
                    c.shifted(Rat(j));
        auto ker = kernel_vector(mat);
        if (!ker) continue;
        ShiftOp cof1, cof2;
        for (long i = 0; i < n1; ++i) cof1.set(i, (*ker)[static_cast<std::size_t>(i)]);
        for (long j = 0; j < n2; ++j) cof2.set(j, (*ker)[static_cast<std::size_t>(n1 + j)]);
        if (cof1.is_zero() || cof2.is_zero()) continue; // would mean a zero multiple
        LclmResult res;
        res.cof1 = cof1;
        res.cof2 = cof2;
        res.lclm = (cof1 * l1).canonical();
        return res;
    }
    throw Error("lclm search failed"); // unreachable: m = d1 + d2 always solves
}

ShiftOp lclm(const ShiftOp& l1, const ShiftOp& l2) {
    return lclm_with_cofactors(l1, l2).lclm;
}

} // namespace seqconv
