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

#include "twobridge/fib_basis.hpp"

#include <stdexcept>

#include "twobridge/fibonacci.hpp"

namespace twobridge {

FibBasisRep to_fib_basis(const ZPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("to_fib_basis: zero polynomial");
    if (!p.has_pure_parity())
        throw std::invalid_argument("to_fib_basis: mixed parity does not lie in one Fibonacci-parity span");

    const std::size_t m = p.degree();
    FibBasisRep rep;
    rep.m = m;
    rep.c_m = p.leading_coeff();
    rep.alpha.reserve(m / 2 + 1);

    // p = sum_i d_i f_{m+1-2i} by monic leading-term elimination, then
    // alpha_i = (-1)^i d_i / c_m.
    ZPoly r = p;
    for (std::size_t i = 0; i <= m / 2; ++i) {
        const std::size_t e = m - 2 * i;
        Int d = r.coeff(e);
        if (d != 0) r.add_scaled(-d, fib(static_cast<long long>(m + 1 - 2 * i)));
        Rat a(std::move(d), rep.c_m);
        if (i % 2 == 1) a = -a;
        rep.alpha.push_back(std::move(a));
    }
    // the basis spans the parity component, so nothing can remain
    if (!r.is_zero()) throw std::logic_error("to_fib_basis: elimination left a remainder");
    return rep;
}

ZPoly from_fib_basis(const FibBasisRep& rep) {
    if (rep.c_m == 0) throw std::invalid_argument("from_fib_basis: c_m must be nonzero");
    if (rep.alpha.size() != rep.m / 2 + 1)
        throw std::invalid_argument("from_fib_basis: alpha must have floor(m/2)+1 entries");
    if (rep.alpha.front() != 1) throw std::invalid_argument("from_fib_basis: alpha_0 must be 1");

    ZPoly p;
    for (std::size_t i = 0; i < rep.alpha.size(); ++i) {
        Rat term = rep.c_m * rep.alpha[i];
        if (denominator(term) != 1)
            throw std::invalid_argument("from_fib_basis: c_m * alpha_i is not an integer");
        Int d = numerator(term);
        if (i % 2 == 1) d = -d;
        p.add_scaled(d, fib(static_cast<long long>(rep.m + 1 - 2 * i)));
    }
    return p;
}

}  // namespace twobridge
