/*
   Copyright 2026 the twobridge authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TWOBRIDGE_OBSTRUCTIONS_HPP
#define TWOBRIDGE_OBSTRUCTIONS_HPP

#include "twobridge/conway.hpp"
#include "twobridge/verdict.hpp"
#include "twobridge/zpoly.hpp"

namespace twobridge {

/// Mod-2 Fibonacci index of a Conway form: with e_0 = D_0 = 1,
/// e_{i+1} = -(-1)^{b_{i+1}} e_i and D_{i+1} = D_i + e_{i+1}, returns
/// D = |D_m|. Guarantees conway_poly(form) = f_D mod 2. Depends only on
/// the parities of the b_i (identical for literal entries and recursion
/// parameters).
long long mod2_index(const TwoBridgeForm& form);

/// Murasugi-type mod-2 congruence: a two-bridge Conway polynomial is
/// congruent to a Fibonacci polynomial f_D mod 2. D is forced by the
/// degree of p mod 2 (f_D has degree D-1 mod 2; D = 0 covers p even
/// everywhere). Pass carries D; Fail carries the lowest mismatching
/// exponent. NotApplicable for zero, mixed parity, or an even-parity p
/// with even constant term.
Verdict mod2_fib_test(const ZPoly& p);

/// Coefficient bound |c_{m-2k}| <= C(m-k, k) |c_m| together with the
/// rigidity clause: equality for some 0 < k < floor(m/2) forces equality
/// for every k (only torus-like forms attain it). NotApplicable for zero
/// or mixed parity.
Verdict nak1_test(const ZPoly& p);
Int nak1_bound(std::size_t m, std::size_t k, const Int& cm_abs);

/// Largest prime dividing |n|; 1 when |n| = 1. Trial division. Rejects 0.
Int greatest_prime_divisor(const Int& n);

/// Refined coefficient bound
/// |c_{m-2k}| <= (C(m-k-1, k) + (1/g)(C(m-k-1, k-1) - 1)) |c_m| + 1
/// for k >= 1, where g is the greatest prime divisor of c_m. Evaluated in
/// integers after clearing g; the bound is sharp (attained by the forms
/// b = (g, 1, ..., 1)), so no rounding slack is tolerable.
Verdict nak3_test(const ZPoly& p);
Rat nak3_bound(std::size_t m, std::size_t k, const Int& g, const Int& cm_abs);

/// Fibonacci-basis positivity: all alpha_i >= 0, and once some alpha_i
/// vanishes (i > 0) every later alpha_j vanishes too.
Verdict alpha_test(const ZPoly& p);

/// Conjectural trapezoid shape of the alpha sequence: nonnegative and
/// unimodal (weakly rises, then weakly falls).
Verdict trapezoid_conjecture_test(const ZPoly& p);

/// Runs every applicable Conway-level test in fixed order: mod2_fib,
/// nak1, nak3, alpha, trapezoid (conjectural). For an even-parity input
/// whose constant term is not +-1 all tests report NotApplicable: the
/// underlying results presuppose an actual knot Conway polynomial, which
/// has constant term 1. Throws std::invalid_argument on the zero
/// polynomial.
SieveReport sieve(const ZPoly& p);

}  // namespace twobridge

#endif
