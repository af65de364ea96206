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

#ifndef TWOBRIDGE_FIB_BASIS_HPP
#define TWOBRIDGE_FIB_BASIS_HPP

#include <cstddef>
#include <vector>

#include "twobridge/zpoly.hpp"

namespace twobridge {

/// A pure-parity polynomial written in the Fibonacci basis:
///
///     p = c_m * sum_{i=0}^{floor(m/2)} (-1)^i alpha_i f_{m+1-2i}
///
/// with alpha_0 = 1. The basis is unimodular-triangular over the
/// monomials, so c_m * alpha_i is an integer for every i; the alpha_i
/// themselves are stored as exact rationals because the positivity and
/// trapezoid tests are stated on them directly.
struct FibBasisRep {
    std::size_t m = 0;        // degree of the polynomial
    Int c_m;                  // leading coefficient, nonzero
    std::vector<Rat> alpha;   // alpha_0..alpha_{floor(m/2)}
};

/// Greedy elimination of the leading term against f_{m+1-2i} (which is
/// monic). Rejects the zero polynomial and mixed parity.
FibBasisRep to_fib_basis(const ZPoly& p);

/// Exact expansion; inverse of to_fib_basis. Rejects reps with
/// non-integral c_m * alpha_i, alpha_0 != 1, c_m = 0 or a coefficient
/// count that does not match m.
ZPoly from_fib_basis(const FibBasisRep& rep);

}  // namespace twobridge

#endif
