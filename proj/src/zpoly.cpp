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

#include "twobridge/zpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace twobridge {

namespace {
const Int kZero = 0;
}

ZPoly::ZPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { prune(); }

void ZPoly::prune() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ZPoly ZPoly::constant(Int c) {
    ZPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

ZPoly ZPoly::monomial(Int c, std::size_t exponent) {
    ZPoly p;
    if (c != 0) {
        p.coeffs_.assign(exponent + 1, 0);
        p.coeffs_.back() = std::move(c);
    }
    return p;
}

std::size_t ZPoly::degree() const {
    if (is_zero()) throw std::domain_error("degree of the zero polynomial is undefined");
    return coeffs_.size() - 1;
}

const Int& ZPoly::leading_coeff() const {
    if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial is undefined");
    return coeffs_.back();
}

const Int& ZPoly::coeff(std::size_t exponent) const noexcept {
    return exponent < coeffs_.size() ? coeffs_[exponent] : kZero;
}

Parity ZPoly::parity() const noexcept {
    bool even_seen = false, odd_seen = false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        (i % 2 == 0 ? even_seen : odd_seen) = true;
    }
    if (even_seen && odd_seen) return Parity::mixed;
    return odd_seen ? Parity::odd : Parity::even;
}

Int ZPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

ZPoly ZPoly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    ZPoly r;
    r.coeffs_.assign(k, 0);
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
}

ZPoly& ZPoly::operator+=(const ZPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    prune();
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    prune();
    return *this;
}

ZPoly& ZPoly::operator*=(const Int& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

void ZPoly::add_scaled(const Int& s, const ZPoly& p) {
    if (s == 0 || p.is_zero()) return;
    if (coeffs_.size() < p.coeffs_.size()) coeffs_.resize(p.coeffs_.size(), 0);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) coeffs_[i] += s * p.coeffs_[i];
    prune();
}

ZPoly operator+(ZPoly lhs, const ZPoly& rhs) { return lhs += rhs; }
ZPoly operator-(ZPoly lhs, const ZPoly& rhs) { return lhs -= rhs; }

ZPoly operator-(const ZPoly& p) {
    ZPoly r = p;
    r *= Int(-1);
    return r;
}

ZPoly operator*(const ZPoly& lhs, const ZPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    const auto& a = lhs.coeffs();
    const auto& b = rhs.coeffs();
    std::vector<Int> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return ZPoly(std::move(c));
}

ZPoly operator*(const Int& s, ZPoly p) { return p *= s; }

bool mod2_equal(const ZPoly& p, const ZPoly& q) {
    return !first_mod2_mismatch(p, q).has_value();
}

std::optional<std::size_t> first_mod2_mismatch(const ZPoly& p, const ZPoly& q) {
    const std::size_t n = std::max(p.coeffs().size(), q.coeffs().size());
    for (std::size_t i = 0; i < n; ++i)
        if ((p.coeff(i) - q.coeff(i)) % 2 != 0) return i;
    return std::nullopt;
}

Int determinant(const ZPoly& p) {
    const Parity par = p.parity();
    if (par == Parity::mixed) throw std::invalid_argument("determinant requires pure parity");
    const std::size_t start = par == Parity::odd ? 1 : 0;
    Int sum = 0, pow = 1;
    for (std::size_t e = start; e < p.coeffs().size(); e += 2) {
        sum += p.coeff(e) * pow;
        pow *= -4;
    }
    Int d = abs(sum);
    return par == Parity::odd ? Int(2 * d) : d;
}

}  // namespace twobridge
