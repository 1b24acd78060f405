#include "seqconv/ore_maps.hpp"

#include <map>
#include <vector>

#include "seqconv/errors.hpp"
#include "seqconv/linsolve.hpp"

namespace seqconv {

namespace {

// Differential operator with rational-function coefficients; only what the
// gauge transform and symmetric product need internally.
using RatDiffOp = std::map<long, RatFun>;

RatDiffOp rd_mul(const RatDiffOp& a, const RatDiffOp& b) {
    RatDiffOp r;
    for (const auto& [i, f] : a) {
        for (const auto& [j, g] : b) {
            RatFun gt = g;
            for (long t = 0; t <= i; ++t) {
                Rat bin = binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(t));
                RatFun add = f * gt * RatFun(bin);
                if (!add.is_zero()) {
                    auto& slot = r[i - t + j];
                    slot += add;
                    if (slot.is_zero()) r.erase(i - t + j);
                }
                gt = gt.derivative();
                if (gt.is_zero()) break;
            }
        }
    }
    return r;
}

DiffOp rd_clear(const RatDiffOp& m) {
    // Left-multiply by the lcm of coefficient denominators; an order-zero
    // factor just scales every coefficient.
    Poly den_lcm(Rat(1));
    for (const auto& [k, c] : m) {
        (void)k;
        if (c.is_zero()) continue;
        Poly g = poly_gcd(den_lcm, c.den());
        den_lcm = den_lcm * poly_divmod(c.den(), g).first;
    }
    DiffOp out;
    for (const auto& [k, c] : m) {
        RatFun cleared = c * RatFun(den_lcm);
        if (!cleared.is_polynomial()) throw Error("denominator clearing failed");
        out.set(k, LaurentPoly(cleared.num().scaled(cleared.den().leading().inverse())));
    }
    return out;
}

} // namespace

DiffOp to_diff_op(const ShiftOp& l, bool clear) {
    ShiftOp work = l;
    if (!work.has_polynomial_coeffs()) {
        if (!clear) throw Error("operator has non-polynomial coefficients");
        work = work.canonical();
    }
    DiffOp xd = DiffOp::term(LaurentPoly::monomial(Rat(1), 1), 1); // x*D
    DiffOp result;
    for (const auto& [k, c] : work.terms()) {
        // p(n) E^k maps to p(xD) * x^(-k).
        const Poly& p = c.num();
        DiffOp acc;
        for (long j = p.degree(); j >= 0; --j) {
            acc = acc * xd;
            acc += DiffOp(LaurentPoly(p.coeff(static_cast<std::size_t>(j))));
        }
        result += acc * DiffOp(LaurentPoly::monomial(Rat(1), -k));
    }
    return result;
}

ShiftOp to_shift_op(const DiffOp& m) {
    // Cache powers of (n+1)E.
    ShiftOp ne = ShiftOp::term(RatFun(Poly(std::vector<Rat>{Rat(1), Rat(1)})), 1);
    std::vector<ShiftOp> ne_pow{ShiftOp::identity()};
    ShiftOp result;
    for (const auto& [dpow, c] : m.terms()) {
        while (static_cast<long>(ne_pow.size()) <= dpow) ne_pow.push_back(ne_pow.back() * ne);
        for (const auto& [xpow, coeff] : c.terms()) {
            // c x^m D^i  ->  c E^(-m) ((n+1)E)^i
            ShiftOp piece = ShiftOp::shift(-xpow) * ne_pow[static_cast<std::size_t>(dpow)];
            result += piece.scaled(RatFun(coeff));
        }
    }
    return result;
}

DiffOp gauge_transform(const DiffOp& m, const RatFun& r) {
    if (m.is_zero()) throw Error("gauge transform of zero operator");
    RatDiffOp shifted_d{{1, RatFun(1)}, {0, r}}; // D + r
    if (r.is_zero()) shifted_d.erase(0);
    RatDiffOp result;
    RatDiffOp power{{0, RatFun(1)}}; // (D+r)^0
    long max_order = m.order();
    for (long i = 0; i <= max_order; ++i) {
        LaurentPoly f = m.coeff(i);
        if (!f.is_zero()) {
            RatFun fr = f.to_ratfun();
            for (const auto& [k, c] : power) {
                auto& slot = result[k];
                slot += fr * c;
                if (slot.is_zero()) result.erase(k);
            }
        }
        if (i < max_order) power = rd_mul(shifted_d, power);
    }
    return rd_clear(result).canonical();
}

DiffOp symmetric_product(const DiffOp& m1, const DiffOp& m2) {
    if (m1.is_zero() || m2.is_zero()) throw Error("symmetric product of zero operator");
    const long d1 = m1.order();
    const long d2 = m2.order();
    if (d1 == 0 || d2 == 0) return DiffOp::identity(); // only the zero solution
    auto idx = [d2](long i, long j) { return static_cast<std::size_t>(i * d2 + j); };
    const std::size_t dim = static_cast<std::size_t>(d1 * d2);

    // Reduction rows: u^(d1) = sum_i red1[i] u^(i), same for v.
    RatFun lead1 = m1.coeff(d1).to_ratfun();
    RatFun lead2 = m2.coeff(d2).to_ratfun();
    std::vector<RatFun> red1(static_cast<std::size_t>(d1)), red2(static_cast<std::size_t>(d2));
    for (long i = 0; i < d1; ++i) red1[static_cast<std::size_t>(i)] = -(m1.coeff(i).to_ratfun() / lead1);
    for (long j = 0; j < d2; ++j) red2[static_cast<std::size_t>(j)] = -(m2.coeff(j).to_ratfun() / lead2);

    auto differentiate = [&](const std::vector<RatFun>& w) {
        std::vector<RatFun> out(dim);
        for (std::size_t t = 0; t < dim; ++t) out[t] = w[t].derivative();
        for (long i = 0; i < d1; ++i) {
            for (long j = 0; j < d2; ++j) {
                const RatFun& c = w[idx(i, j)];
                if (c.is_zero()) continue;
                // u^(i+1) v^(j)
                if (i + 1 < d1) {
                    out[idx(i + 1, j)] += c;
                } else {
                    for (long t = 0; t < d1; ++t)
                        out[idx(t, j)] += c * red1[static_cast<std::size_t>(t)];
                }
                // u^(i) v^(j+1)
                if (j + 1 < d2) {
                    out[idx(i, j + 1)] += c;
                } else {
                    for (long t = 0; t < d2; ++t)
                        out[idx(i, t)] += c * red2[static_cast<std::size_t>(t)];
                }
            }
        }
        return out;
    };

    std::vector<std::vector<RatFun>> derivs;
    derivs.emplace_back(dim);
    derivs[0][idx(0, 0)] = RatFun(1); // w = u*v
    for (long m = 1; m <= d1 * d2; ++m) {
        derivs.push_back(differentiate(derivs.back()));
        // Is w^(m) a combination of w^(0..m-1)?
        Matrix<RatFun> a(dim, std::vector<RatFun>(static_cast<std::size_t>(m)));
        std::vector<RatFun> b(dim);
        for (std::size_t row = 0; row < dim; ++row) {
            for (long k = 0; k < m; ++k) a[row][static_cast<std::size_t>(k)] = derivs[static_cast<std::size_t>(k)][row];
            b[row] = derivs[static_cast<std::size_t>(m)][row];
        }
        auto sol = solve_linear(a, b);
        if (!sol) continue;
        RatDiffOp op;
        op[m] = RatFun(1);
        for (long k = 0; k < m; ++k) {
            if (!(*sol)[static_cast<std::size_t>(k)].is_zero())
                op[k] = -(*sol)[static_cast<std::size_t>(k)];
        }
        return rd_clear(op).canonical();
    }
    throw Error("symmetric product search failed"); // unreachable: dim bound
}

} // namespace seqconv
