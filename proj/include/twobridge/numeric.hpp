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

#ifndef TWOBRIDGE_NUMERIC_HPP
#define TWOBRIDGE_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace twobridge {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(n, k), with C(n, k) = 0 whenever k < 0, n < 0
/// or k > n. The out-of-range convention matters: several coefficient
/// bounds are evaluated at indices where the upper argument drops below
/// the lower one.
Int binom(long long n, long long k);

/// Nonnegative residue of a modulo m (m > 0).
Int mod_floor(const Int& a, const Int& m);

/// Inverse of a modulo m; requires gcd(a, m) = 1.
Int mod_inverse(const Int& a, const Int& m);

}  // namespace twobridge

#endif
