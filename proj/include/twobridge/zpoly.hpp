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

#ifndef TWOBRIDGE_ZPOLY_HPP
#define TWOBRIDGE_ZPOLY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "twobridge/numeric.hpp"

namespace twobridge {

enum class Parity { even, odd, mixed };

/// Univariate polynomial in z with arbitrary-precision integer
/// coefficients, stored densely from exponent 0 up to the degree.
///
/// The zero polynomial is canonicalized to an empty coefficient list; its
/// degree is undefined and degree() / leading_coeff() throw on it. Conway
/// polynomials of knots are even with constant term 1, those of
/// 2-component links are odd.
///
/// Value type; all operations are pure.
class ZPoly {
   public:
    ZPoly() = default;
    explicit ZPoly(std::vector<Int> coeffs);

    static ZPoly constant(Int c);
    static ZPoly monomial(Int c, std::size_t exponent);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::size_t degree() const;           // throws std::domain_error on zero
    const Int& leading_coeff() const;     // throws std::domain_error on zero
    const Int& coeff(std::size_t exponent) const noexcept;  // 0 beyond degree
    const std::vector<Int>& coeffs() const noexcept { return coeffs_; }

    Parity parity() const noexcept;
    bool has_pure_parity() const noexcept { return parity() != Parity::mixed; }

    Int eval(const Int& x) const;

    /// this * z^k
    ZPoly shifted(std::size_t k) const;

    ZPoly& operator+=(const ZPoly& rhs);
    ZPoly& operator-=(const ZPoly& rhs);
    ZPoly& operator*=(const Int& s);

    /// coeffs += s * p.coeffs, in place
    void add_scaled(const Int& s, const ZPoly& p);

    friend bool operator==(const ZPoly&, const ZPoly&) = default;

   private:
    std::vector<Int> coeffs_;
    void prune();
};

ZPoly operator+(ZPoly lhs, const ZPoly& rhs);
ZPoly operator-(ZPoly lhs, const ZPoly& rhs);
ZPoly operator-(const ZPoly& p);
ZPoly operator*(const ZPoly& lhs, const ZPoly& rhs);
ZPoly operator*(const Int& s, ZPoly p);

/// true iff every coefficient of p - q is even.
bool mod2_equal(const ZPoly& p, const ZPoly& q);

/// Lowest exponent at which p and q differ mod 2, if any.
std::optional<std::size_t> first_mod2_mismatch(const ZPoly& p, const ZPoly& q);

/// Determinant of a link with Conway polynomial p: |p| evaluated at
/// z^2 = -4, magnitude taken over the Gaussian integers. For even p this
/// is |sum_k c_{2k} (-4)^k|, for odd p it is 2|sum_k c_{2k+1} (-4)^k|.
/// Rejects mixed parity.
Int determinant(const ZPoly& p);

}  // namespace twobridge

#endif
