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

#ifndef TWOBRIDGE_ALEXANDER_HPP
#define TWOBRIDGE_ALEXANDER_HPP

#include <cstddef>
#include <vector>

#include "twobridge/verdict.hpp"
#include "twobridge/zpoly.hpp"

namespace twobridge {

/// Symmetric Alexander polynomial under the alternating-sign convention
///
///     P(t) = a_0 - a_1 (t + 1/t) + a_2 (t^2 + 1/t^2) - ...
///            + (-1)^n a_n (t^n + 1/t^n),
///
/// multiplied by (t^{1/2} - t^{-1/2}) when link_factor is set (the
/// 2-component link case; the a_i then describe the Hosokawa part).
/// Only the a_k are stored; the raw coefficient of t^k is derivable but
/// never kept, which removes a class of sign bugs. a_n != 0 always.
class AlexPoly {
   public:
    explicit AlexPoly(std::vector<Int> a, bool link_factor = false);

    std::size_t n() const noexcept { return a_.size() - 1; }
    const std::vector<Int>& a() const noexcept { return a_; }
    bool link_factor() const noexcept { return link_factor_; }
    bool normalized() const noexcept { return a_.back() > 0; }

    /// The same polynomial multiplied by -1.
    AlexPoly negated() const;

    friend bool operator==(const AlexPoly&, const AlexPoly&) = default;

   private:
    std::vector<Int> a_;
    bool link_factor_;
};

/// Conversion result; eps records the sign applied by normalization
/// (Alexander polynomials are only defined up to sign, and pinning
/// a_n > 0 is the usual choice).
struct AlexConversion {
    AlexPoly poly;
    int eps = 1;
};

/// Substitute z = t^{1/2} - t^{-1/2} into an even-parity Conway
/// polynomial, via the closed formula
/// a_{n-j} = sum_{k=0}^{j} (-1)^{n-k} c_{n-k} C(2n-2k, j-k) on the even
/// coefficients c_k. Rejects odd or mixed parity (links go through
/// link_conway_to_hosokawa).
AlexConversion conway_to_alexander(const ZPoly& p, bool normalize = true);

/// Inverse substitution through the Fibonacci basis:
/// P = sum_k (-1)^k (a_k - a_{k+1}) f_{2k+1}(z), with a_{n+1} = 0.
/// Exact and value-preserving, so it round-trips conway_to_alexander up
/// to the recorded sign eps. Rejects link_factor.
ZPoly alexander_to_conway(const AlexPoly& a);

/// Direct inversion formula for the even Conway coefficients in terms of
/// the a_k, evaluated in exact rational arithmetic with an integrality
/// check. Used only as an independent cross-check of
/// alexander_to_conway; it never feeds downstream computation.
/// Returns c_0..c_n ascending. Rejects link_factor.
std::vector<Int> fukuhara_inverse(const AlexPoly& a);

/// Factor an odd-parity Conway polynomial as
/// p(t^{1/2} - t^{-1/2}) = (t^{1/2} - t^{-1/2}) * (Hosokawa part), by
/// expanding p in the odd Fibonacci basis {f_{2k}} and substituting
///     f_{4k}   -> u_1 + u_3 + ... + u_{2k-1}
///     f_{4k+2} -> 1 + u_2 + ... + u_{2k}
/// where u_j = t^j + t^{-j}. Rejects even or mixed parity.
AlexConversion link_conway_to_hosokawa(const ZPoly& p, bool normalize = true);

/// Murasugi's parity pattern for two-bridge knots: a_0..a_k odd,
/// a_{k+1}..a_n even, for some k (a_0 always odd).
Verdict murasugi_mod2_test(const AlexPoly& a);

/// Parity pattern of the Hosokawa part of a two-bridge link: either all
/// a_i even, or the odd entries are exactly a_k, a_{k-2}, a_{k-4}, ...
/// down to index 0 or 1.
Verdict hosokawa_mod2_test(const AlexPoly& a);

/// Hartley's trapezoid for two-bridge knots: a constant plateau followed
/// by strictly decreasing positive values,
/// a_0 = ... = a_k > a_{k+1} > ... > a_n > 0. Requires a_n > 0
/// (NotApplicable when normalization was declined).
Verdict hartley_test(const AlexPoly& a);

/// Nakanishi-Suketa bounds:
///   |a_{n-j}| <= a_n sum_{k<=j} C(2n-2k, j-k) C(2n-k, k)  for 1 <= j <= n
///   2 a_n - 1 <= |a_{n-1}| <= (4n-2) a_n + 1               for n >= 1.
Verdict ns_bounds_test(const AlexPoly& a);
Int ns_bound(std::size_t n, std::size_t j, const Int& an);

/// Sharpened second-coefficient bound, applicable when a_n != 1:
///   |a_{n-2}| <= (8n^2 - 16n + 10 + 2(n-2)/g) a_n + 2n - 1
/// with g the greatest prime divisor of a_n (this reduces to
/// (8n^2 - 15n + 8) a_n + 2n - 1 when g = 2), plus the analogous third
/// coefficient bound for n >= 3. Exact rational arithmetic; attained by
/// the knots C(4, 2, ..., 2).
Verdict nakss_test(const AlexPoly& a);
Rat nakss_bound(std::size_t n, const Int& g, const Int& an);
Rat nakss_bound_j3(std::size_t n, const Int& g, const Int& an);

/// Conjectural shape: some split index k makes (a_0..a_k) convex and
/// (a_k..a_n) concave, with weak second-difference inequalities.
Verdict convexity_test(const AlexPoly& a);

/// Runs the Alexander-level tests in fixed order, dispatching on
/// link_factor: knots get murasugi, hartley, ns_bounds, nakss and the
/// conjectural convexity test; links get hosokawa.
SieveReport alexander_sieve(const AlexPoly& a);

}  // namespace twobridge

#endif
