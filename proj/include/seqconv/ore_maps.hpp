#ifndef SEQCONV_ORE_MAPS_HPP
#define SEQCONV_ORE_MAPS_HPP

#include "seqconv/diff_op.hpp"
#include "seqconv/shift_op.hpp"

namespace seqconv {

// Algebra isomorphism between shift operators acting on zero-padded two-way
// sequences and differential operators acting on their generating series:
// n -> x*D, E -> x^-1, E^-1 -> x. An operator annihilates the padded sequence
// exactly when its image annihilates the series.
//
// Input coefficients must be polynomial; pass clear=true (default) to replace
// a rational-coefficient operator by its canonical polynomial form first.
DiffOp to_diff_op(const ShiftOp& l, bool clear = true);

// Inverse map: x -> E^-1, x^-1 -> E, D -> (n+1)*E.
ShiftOp to_shift_op(const DiffOp& m);

// Substitutes D -> D + r(x) throughout, clears denominators to Laurent
// coefficients and removes content. The result annihilates v exactly when the
// input annihilates u*v, for any series u with u' = r*u.
DiffOp gauge_transform(const DiffOp& m, const RatFun& r);

// Operator annihilating u*v (as formal power series) whenever m1(u) = 0 and
// m2(v) = 0; exact linear algebra over Q(x) on derivatives of the product.
DiffOp symmetric_product(const DiffOp& m1, const DiffOp& m2);

} // namespace seqconv

#endif
