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

#ifndef TWOBRIDGE_FIBONACCI_HPP
#define TWOBRIDGE_FIBONACCI_HPP

#include <vector>

#include "twobridge/zpoly.hpp"

namespace twobridge {

/// Fibonacci polynomial f_n: f_0 = 0, f_1 = 1, f_{n+2} = z f_{n+1} + f_n.
/// Negative indices follow the same recursion run backward, which gives
/// the reflection f_{-n} = (-1)^{n+1} f_n. deg f_n = n - 1 for n >= 1 and
/// the leading coefficient is 1, so {f_{m+1}, f_{m-1}, ...} is a
/// triangular basis of the pure-parity polynomials of degree <= m.
ZPoly fib(long long n);

/// Coefficient list [C(m-k, k)] for k = 0..floor(m/2): the coefficients
/// of f_{m+1} read off the diagonals of Pascal's triangle. Serves as an
/// independent oracle for fib(m+1).
std::vector<Int> fib_coeffs_binomial(unsigned m);

}  // namespace twobridge

#endif
