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

#include "twobridge/obstructions.hpp"

#include <optional>
#include <stdexcept>

#include "twobridge/fib_basis.hpp"
#include "twobridge/fibonacci.hpp"

namespace twobridge {

namespace {

// Shared precondition for the coefficient tests. Returns an NA verdict,
// or nullopt when the test applies.
std::optional<Verdict> pure_parity_gate(const std::string& name, const ZPoly& p) {
    if (p.is_zero()) return Verdict::not_applicable(name, "zero polynomial");
    if (!p.has_pure_parity()) return Verdict::not_applicable(name, "mixed parity");
    return std::nullopt;
}

// |c_{m-2k}| for k = 0..floor(m/2)
std::vector<Int> abs_coeffs_by_k(const ZPoly& p) {
    const std::size_t m = p.degree();
    std::vector<Int> c;
    c.reserve(m / 2 + 1);
    for (std::size_t k = 0; k <= m / 2; ++k) c.push_back(abs(p.coeff(m - 2 * k)));
    return c;
}

}  // namespace

long long mod2_index(const TwoBridgeForm& form) {
    int e = 1;
    long long d = 1;
    for (const Int& bi : form.params()) {
        if (bi % 2 == 0) e = -e;  // e_{i+1} = -(-1)^{b_{i+1}} e_i
        d += e;
    }
    return d < 0 ? -d : d;
}

Verdict mod2_fib_test(const ZPoly& p) {
    const std::string name = "mod2_fib";
    if (auto na = pure_parity_gate(name, p)) return *na;
    if (p.parity() == Parity::even && p.coeff(0) % 2 == 0)
        return Verdict::not_applicable(name, "even-parity polynomial with even constant term");

    // D is forced: mod 2, f_D has degree D-1, so D = deg(p mod 2) + 1,
    // with D = 0 (f_0 = 0) when every coefficient is even.
    long long d = 0;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        if (p.coeff(i) % 2 != 0) {
            d = static_cast<long long>(i) + 1;
            break;
        }
    }
    Verdict v = Verdict::pass(name);
    v.d = d;
    if (auto mismatch = first_mod2_mismatch(p, fib(d))) {
        v.outcome = Outcome::fail;
        v.witness_k = static_cast<long long>(*mismatch);
        v.note = "differs from f_D mod 2 at z^" + std::to_string(*mismatch);
    }
    return v;
}

Int nak1_bound(std::size_t m, std::size_t k, const Int& cm_abs) {
    return binom(static_cast<long long>(m - k), static_cast<long long>(k)) * cm_abs;
}

Verdict nak1_test(const ZPoly& p) {
    const std::string name = "nak1";
    if (auto na = pure_parity_gate(name, p)) return *na;

    const std::size_t m = p.degree();
    const Int cm = abs(p.leading_coeff());
    const auto c = abs_coeffs_by_k(p);

    auto fail_at = [&](std::size_t k, std::string note) {
        Verdict v{name};
        v.outcome = Outcome::fail;
        v.witness_k = static_cast<long long>(k);
        v.bound = Rat(nak1_bound(m, k, cm));
        v.actual = Rat(c[k]);
        v.note = std::move(note);
        return v;
    };

    for (std::size_t k = 0; k <= m / 2; ++k)
        if (c[k] > nak1_bound(m, k, cm)) return fail_at(k, "coefficient bound exceeded");

    // equality at an interior k (0 < k < floor(m/2)) is rigid: it must
    // then hold everywhere
    std::optional<std::size_t> interior_eq;
    for (std::size_t k = 1; k < m / 2 && !interior_eq; ++k)
        if (c[k] == nak1_bound(m, k, cm)) interior_eq = k;
    if (interior_eq) {
        for (std::size_t k = 0; k <= m / 2; ++k)
            if (c[k] != nak1_bound(m, k, cm))
                return fail_at(k, "equality at k=" + std::to_string(*interior_eq) +
                                      " must propagate to every k");
    }
    return Verdict::pass(name);
}

Int greatest_prime_divisor(const Int& n) {
    if (n == 0) throw std::invalid_argument("greatest_prime_divisor: 0 has no prime divisors");
    Int rest = abs(n);
    Int g = 1;
    for (Int d = 2; d * d <= rest; ++d) {
        if (rest % d == 0) {
            g = d;
            while (rest % d == 0) rest /= d;
        }
    }
    if (rest > 1) g = rest;
    return g;
}

Rat nak3_bound(std::size_t m, std::size_t k, const Int& g, const Int& cm_abs) {
    const Int b1 = binom(static_cast<long long>(m) - static_cast<long long>(k) - 1,
                         static_cast<long long>(k));
    const Int b2 = binom(static_cast<long long>(m) - static_cast<long long>(k) - 1,
                         static_cast<long long>(k) - 1);
    return Rat(b1) * cm_abs + Rat(b2 - 1, g) * cm_abs + 1;
}

Verdict nak3_test(const ZPoly& p) {
    const std::string name = "nak3";
    if (auto na = pure_parity_gate(name, p)) return *na;

    const std::size_t m = p.degree();
    const Int cm = abs(p.leading_coeff());
    const Int g = greatest_prime_divisor(cm);
    const auto c = abs_coeffs_by_k(p);

    for (std::size_t k = 1; k <= m / 2; ++k) {
        // multiply through by g to stay in integers
        const Int b1 = binom(static_cast<long long>(m - k) - 1, static_cast<long long>(k));
        const Int b2 = binom(static_cast<long long>(m - k) - 1, static_cast<long long>(k) - 1);
        if (g * c[k] > (g * b1 + b2 - 1) * cm + g) {
            Verdict v{name};
            v.outcome = Outcome::fail;
            v.witness_k = static_cast<long long>(k);
            v.bound = nak3_bound(m, k, g, cm);
            v.actual = Rat(c[k]);
            v.note = "refined coefficient bound exceeded (g=" + g.str() + ")";
            return v;
        }
    }
    return Verdict::pass(name);
}

namespace {

Verdict alpha_based_test(const std::string& name, const ZPoly& p, bool require_unimodal) {
    if (auto na = pure_parity_gate(name, p)) return *na;
    const FibBasisRep rep = to_fib_basis(p);

    auto fail_at = (
        [&](std::size_t i, std::string note) {
            Verdict v{name};
            v.outcome = Outcome::fail;
            v.witness_k = static_cast<long long>(i);
            v.actual = rep.alpha[i];
            v.note = std::move(note);
            return v;
        });

    std::optional<std::size_t> first_zero;
    for (std::size_t i = 0; i < rep.alpha.size(); ++i) {
        if (rep.alpha[i] < 0) return fail_at(i, "negative Fibonacci-basis coefficient");
        if (first_zero && rep.alpha[i] != 0)
            return fail_at(i, "alpha must stay zero after alpha_" + std::to_string(*first_zero));
        if (!first_zero && i > 0 && rep.alpha[i] == 0) first_zero = i;
    }

    if (require_unimodal) {
        std::size_t i = 0;
        const auto& a = rep.alpha;
        while (i + 1 < a.size() && a[i] <= a[i + 1]) ++i;
        while (i + 1 < a.size() && a[i] >= a[i + 1]) ++i;
        if (i + 1 < a.size()) return fail_at(i + 1, "alpha sequence is not unimodal");
    }
    return Verdict::pass(name);
}

}  // namespace

Verdict alpha_test(const ZPoly& p) { return alpha_based_test("alpha", p, false); }

Verdict trapezoid_conjecture_test(const ZPoly& p) {
    Verdict v = alpha_based_test("trapezoid", p, true);
    v.conjectural = true;
    return v;
}

SieveReport sieve(const ZPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("sieve: the zero polynomial is not a Conway polynomial");

    SieveReport report;
    if (p.parity() == Parity::even && p.coeff(0) != 1 && p.coeff(0) != -1) {
        for (const char* name : {"mod2_fib", "nak1", "nak3", "alpha", "trapezoid"}) {
            Verdict v = Verdict::not_applicable(name, "not a knot Conway polynomial (constant term is not +-1)");
            v.conjectural = (std::string(name) == "trapezoid");
            report.absorb(std::move(v));
        }
        return report;
    }

    report.absorb(mod2_fib_test(p));
    report.absorb(nak1_test(p));
    report.absorb(nak3_test(p));
    report.absorb(alpha_test(p));
    report.absorb(trapezoid_conjecture_test(p));
    return report;
}

}  // namespace twobridge
