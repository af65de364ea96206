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

#include "twobridge/fibonacci.hpp"

namespace twobridge {

ZPoly fib(long long n) {
    if (n < 0) {
        // reflection: f_{-n} = (-1)^{n+1} f_n
        ZPoly f = fib(-n);
        if ((-n) % 2 == 0) f *= Int(-1);
        return f;
    }
    ZPoly prev;                        // f_0
    ZPoly cur = ZPoly::constant(1);    // f_1
    if (n == 0) return prev;
    for (long long i = 1; i < n; ++i) {
        ZPoly next = cur.shifted(1);
        next += prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<Int> fib_coeffs_binomial(unsigned m) {
    std::vector<Int> c;
    c.reserve(m / 2 + 1);
    for (unsigned k = 0; k <= m / 2; ++k) c.push_back(binom(m - k, k));
    return c;
}

}  // namespace twobridge
