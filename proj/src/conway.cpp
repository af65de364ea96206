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

#include "twobridge/conway.hpp"

#include <stdexcept>

namespace twobridge {

TwoBridgeForm::TwoBridgeForm(std::vector<Int> params) : b_(std::move(params)) {
    if (b_.empty()) throw std::invalid_argument("a Conway form needs at least one parameter");
    for (const Int& bi : b_)
        if (bi == 0) throw std::invalid_argument("Conway form parameters must be nonzero");
}

TwoBridgeForm TwoBridgeForm::from_literal(const std::vector<Int>& entries) {
    std::vector<Int> b;
    b.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] == 0 || entries[i] % 2 != 0)
            throw std::invalid_argument("literal Conway entries must be even and nonzero");
        Int bi = entries[i] / 2;
        if (i % 2 == 1) bi = -bi;
        b.push_back(std::move(bi));
    }
    return TwoBridgeForm(std::move(b));
}

std::vector<Int> TwoBridgeForm::to_literal() const {
    std::vector<Int> entries;
    entries.reserve(b_.size());
    for (std::size_t i = 0; i < b_.size(); ++i) {
        Int e = 2 * b_[i];
        if (i % 2 == 1) e = -e;
        entries.push_back(std::move(e));
    }
    return entries;
}

ZPoly conway_poly(const TwoBridgeForm& form) {
    ZPoly prev;                      // nabla_{-1}
    ZPoly cur = ZPoly::constant(1);  // nabla_0
    for (const Int& bi : form.params()) {
        ZPoly next = cur.shifted(1);
        next *= bi;
        next += prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Int coefficient(const TwoBridgeForm& form, std::size_t k) {
    const std::size_t m = form.length();
    if (k > m / 2) throw std::out_of_range("coefficient: k exceeds floor(m/2)");
    return conway_poly(form).coeff(m - 2 * k);
}

namespace {

void collect_deletion_sets(std::size_t m, std::size_t k, std::size_t next,
                           std::vector<std::size_t>& current,
                           std::vector<std::vector<std::size_t>>& out) {
    if (current.size() == k) {
        out.push_back(current);
        return;
    }
    // indices run over 1..m-1; consecutive choices must not be adjacent
    for (std::size_t i = next; i + 1 <= m; ++i) {
        current.push_back(i);
        collect_deletion_sets(m, k, i + 2, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<std::vector<std::size_t>> monomial_set(std::size_t m, std::size_t k) {
    if (m < 2 * k) throw std::invalid_argument("monomial_set: requires m >= 2k");
    if (m == 0) throw std::invalid_argument("monomial_set: requires m >= 1");
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current;
    collect_deletion_sets(m, k, 1, current, out);
    return out;
}

Int monomial_sum(const TwoBridgeForm& form, std::size_t k) {
    const std::size_t m = form.length();
    if (k > m / 2) throw std::out_of_range("monomial_sum: k exceeds floor(m/2)");
    const auto& b = form.params();

    // suffix[i] = b_{i+1} * ... * b_m (1-based), suffix[m] = 1
    std::vector<Int> suffix(m + 1);
    suffix[m] = 1;
    for (std::size_t i = m; i-- > 0;) suffix[i] = b[i] * suffix[i + 1];

    Int total = 0;
    // walk deletion positions left to right, keeping the product of the
    // surviving parameters seen so far
    auto rec = [&](auto&& self, std::size_t pos, std::size_t remaining, const Int& prod) -> void {
        if (remaining == 0) {
            total += prod * suffix[pos - 1];
            return;
        }
        if (pos > m - 1) return;
        // pos survives
        self(self, pos + 1, remaining, Int(prod * b[pos - 1]));
        // delete the pair (b_pos, b_{pos+1})
        self(self, pos + 2, remaining - 1, prod);
    };
    rec(rec, 1, k, Int(1));
    return total;
}

}  // namespace twobridge
