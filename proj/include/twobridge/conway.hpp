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

#ifndef TWOBRIDGE_CONWAY_HPP
#define TWOBRIDGE_CONWAY_HPP

#include <cstddef>
#include <vector>

#include "twobridge/zpoly.hpp"

namespace twobridge {

/// Conway form of a two-bridge link, stored as the Siebenmann recursion
/// parameters b_1..b_m (every b_i nonzero, m >= 1). The literal diagram
/// notation C(2a_1, ..., 2a_m) relates to the parameters by
/// a_i = (-1)^{i+1} b_i; conversion both ways is exact and involutive.
/// m even gives a knot, m odd a 2-component link.
class TwoBridgeForm {
   public:
    explicit TwoBridgeForm(std::vector<Int> params);

    /// Build from the literal diagram entries 2a_1, ..., 2a_m.
    /// Rejects odd or zero entries.
    static TwoBridgeForm from_literal(const std::vector<Int>& entries);
    std::vector<Int> to_literal() const;

    const std::vector<Int>& params() const noexcept { return b_; }
    std::size_t length() const noexcept { return b_.size(); }

    friend bool operator==(const TwoBridgeForm&, const TwoBridgeForm&) = default;

   private:
    std::vector<Int> b_;
};

/// Conway polynomial by the Siebenmann recursion
/// nabla_{-1} = 0, nabla_0 = 1, nabla_i = b_i z nabla_{i-1} + nabla_{i-2}.
/// The result has degree m, leading coefficient b_1...b_m and pure parity
/// matching m.
ZPoly conway_poly(const TwoBridgeForm& form);

/// Coefficient c_{m-2k} of conway_poly(form). Rejects k > floor(m/2).
Int coefficient(const TwoBridgeForm& form, std::size_t k);

/// The monomials of c_{m-2k} as a combinatorial family: all k-element
/// sets {i_1 < ... < i_k} of pairwise non-adjacent indices in {1..m-1},
/// where index i stands for deleting the adjacent pair b_i b_{i+1} from
/// the full product b_1...b_m. Returned in lexicographic order; the
/// family has exactly C(m-k, k) members. Rejects m < 2k.
std::vector<std::vector<std::size_t>> monomial_set(std::size_t m, std::size_t k);

/// Sum of the monomials of monomial_set(m, k) evaluated at the form's
/// parameters. Computed by direct enumeration of the deletion sets, so it
/// is an oracle for coefficient() that never runs the recursion.
/// Rejects k > floor(m/2).
Int monomial_sum(const TwoBridgeForm& form, std::size_t k);

}  // namespace twobridge

#endif
