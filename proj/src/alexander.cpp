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

#include "twobridge/alexander.hpp"

#include <optional>
#include <stdexcept>

#include "twobridge/fibonacci.hpp"
#include "twobridge/obstructions.hpp"

namespace twobridge {

AlexPoly::AlexPoly(std::vector<Int> a, bool link_factor)
    : a_(std::move(a)), link_factor_(link_factor) {
    while (a_.size() > 1 && a_.back() == 0) a_.pop_back();
    if (a_.empty() || a_.back() == 0)
        throw std::invalid_argument("AlexPoly: coefficients must not be identically zero");
}

AlexPoly AlexPoly::negated() const {
    std::vector<Int> neg;
    neg.reserve(a_.size());
    for (const Int& x : a_) neg.push_back(-x);
    return AlexPoly(std::move(neg), link_factor_);
}

AlexConversion conway_to_alexander(const ZPoly& p, bool normalize) {
    if (p.is_zero() || p.parity() != Parity::even)
        throw std::invalid_argument("conway_to_alexander: requires an even-parity polynomial");

    const std::size_t n = p.degree() / 2;
    std::vector<Int> a(n + 1, 0);
    for (std::size_t j = 0; j <= n; ++j) {
        Int sum = 0;
        for (std::size_t k = 0; k <= j; ++k) {
            Int term = p.coeff(2 * (n - k)) *
                       binom(2 * static_cast<long long>(n - k), static_cast<long long>(j - k));
            if ((n - k) % 2 == 1) term = -term;
            sum += term;
        }
        a[n - j] = std::move(sum);
    }

    int eps = 1;
    if (normalize && a[n] < 0) {
        for (Int& x : a) x = -x;
        eps = -1;
    }
    return {AlexPoly(std::move(a), false), eps};
}

ZPoly alexander_to_conway(const AlexPoly& alex) {
    if (alex.link_factor())
        throw std::invalid_argument("alexander_to_conway: defined for knots (no link factor)");

    const auto& a = alex.a();
    const std::size_t n = alex.n();
    ZPoly p;
    for (std::size_t k = 0; k <= n; ++k) {
        Int d = a[k] - (k + 1 <= n ? a[k + 1] : Int(0));
        if (k % 2 == 1) d = -d;
        p.add_scaled(d, fib(2 * static_cast<long long>(k) + 1));
    }
    return p;
}

std::vector<Int> fukuhara_inverse(const AlexPoly& alex) {
    if (alex.link_factor())
        throw std::invalid_argument("fukuhara_inverse: defined for knots (no link factor)");

    const auto& a = alex.a();
    const long long n = static_cast<long long>(alex.n());
    std::vector<Int> c(n + 1);
    for (long long j = 0; j <= n; ++j) {
        Rat sum = 0;
        for (long long k = 0; k <= j; ++k) {
            // the k = j = n term has weight (0/0)*C(0,0); consistency with
            // the forward substitution forces it to 1
            Rat w = (j == n && k == n)
                        ? Rat(1)
                        : Rat(2 * n - 2 * k, 2 * n - j - k) * binom(2 * n - j - k, 2 * n - 2 * j);
            Rat term = w * a[n - k];
            if ((n - k) % 2 == 1) term = -term;
            sum += term;
        }
        if (denominator(sum) != 1)
            throw std::domain_error("fukuhara_inverse: non-integral coefficient, input is not a symmetric Alexander polynomial");
        c[n - j] = numerator(sum);
    }
    return c;
}

AlexConversion link_conway_to_hosokawa(const ZPoly& p, bool normalize) {
    if (p.is_zero() || p.parity() != Parity::odd)
        throw std::invalid_argument("link_conway_to_hosokawa: requires an odd-parity polynomial");

    // expand p = sum_k d_k f_{2k} by monic elimination in the odd basis
    const std::size_t m = p.degree();  // odd
    const std::size_t kmax = (m + 1) / 2;
    ZPoly r = p;
    std::vector<Int> d(kmax + 1, 0);  // d[k] multiplies f_{2k}
    for (std::size_t k = kmax; k >= 1; --k) {
        Int dk = r.coeff(2 * k - 1);
        if (dk != 0) {
            r.add_scaled(-dk, fib(2 * static_cast<long long>(k)));
            d[k] = std::move(dk);
        }
    }
    if (!r.is_zero()) throw std::logic_error("link_conway_to_hosokawa: elimination left a remainder");

    // substitute: f_{4j} -> u_1 + u_3 + ... + u_{2j-1},
    //             f_{4j+2} -> 1 + u_2 + ... + u_{2j}
    std::vector<Int> h(kmax, 0);  // coefficient of u_i (u_0 counted once)
    for (std::size_t k = 1; k <= kmax; ++k) {
        if (d[k] == 0) continue;
        if (k % 2 == 0)
            for (std::size_t i = 1; i <= k - 1; i += 2) h[i] += d[k];
        else
            for (std::size_t i = 0; i <= k - 1; i += 2) h[i] += d[k];
    }

    // alternating-sign storage: value = sum (-1)^i a_i u_i
    std::vector<Int> a(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) a[i] = (i % 2 == 1) ? Int(-h[i]) : h[i];

    AlexPoly hoso(std::move(a), true);
    int eps = 1;
    if (normalize && !hoso.normalized()) {
        hoso = hoso.negated();
        eps = -1;
    }
    return {std::move(hoso), eps};
}

namespace {

std::optional<Verdict> knot_gate(const std::string& name, const AlexPoly& a) {
    if (a.link_factor())
        return Verdict::not_applicable(name, "knot test applied to a link Alexander polynomial");
    return std::nullopt;
}

std::optional<Verdict> normalized_gate(const std::string& name, const AlexPoly& a) {
    if (auto na = knot_gate(name, a)) return na;
    if (a.a().back() < 0)
        return Verdict::not_applicable(name, "a_n < 0 and normalization was declined");
    return std::nullopt;
}

Verdict fail_j(const std::string& name, std::size_t j, Rat bound, Rat actual, std::string note) {
    Verdict v{name};
    v.outcome = Outcome::fail;
    v.witness_k = static_cast<long long>(j);
    v.bound = std::move(bound);
    v.actual = std::move(actual);
    v.note = std::move(note);
    return v;
}

}  // namespace

Verdict murasugi_mod2_test(const AlexPoly& alex) {
    const std::string name = "murasugi";
    if (auto na = knot_gate(name, alex)) return *na;

    const auto& a = alex.a();
    if (a[0] % 2 == 0)
        return fail_j(name, 0, Rat(1), Rat(0), "a_0 must be odd");
    std::size_t k = 0;
    while (k + 1 < a.size() && a[k + 1] % 2 != 0) ++k;
    for (std::size_t i = k + 1; i < a.size(); ++i)
        if (a[i] % 2 != 0)
            return fail_j(name, i, Rat(0), Rat(1),
                          "odd coefficient after the even suffix started at a_" + std::to_string(k + 1));
    Verdict v = Verdict::pass(name);
    v.witness_k = static_cast<long long>(k);
    return v;
}

Verdict hosokawa_mod2_test(const AlexPoly& alex) {
    const std::string name = "hosokawa";
    if (!alex.link_factor())
        return Verdict::not_applicable(name, "link test applied to a knot Alexander polynomial");

    const auto& a = alex.a();
    std::optional<std::size_t> top_odd;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] % 2 != 0) {
            top_odd = i;
            break;
        }
    if (!top_odd) return Verdict::pass(name);  // all even

    // odd entries must be exactly k, k-2, k-4, ... down to 0 or 1
    const std::size_t k = *top_odd;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const bool should_be_odd = i <= k && (k - i) % 2 == 0;
        if ((a[i] % 2 != 0) != should_be_odd)
            return fail_j(name, i, Rat(should_be_odd ? 1 : 0), Rat(abs(a[i] % 2)),
                          "parity breaks the alternating pattern from a_" + std::to_string(k));
    }
    Verdict v = Verdict::pass(name);
    v.witness_k = static_cast<long long>(k);
    return v;
}

Verdict hartley_test(const AlexPoly& alex) {
    const std::string name = "hartley";
    if (auto na = normalized_gate(name, alex)) return *na;

    const auto& a = alex.a();
    const std::size_t n = alex.n();
    std::size_t k = 0;
    while (k + 1 <= n && a[k + 1] == a[k]) ++k;
    for (std::size_t i = k; i + 1 <= n; ++i)
        if (a[i] <= a[i + 1])
            return fail_j(name, i + 1, Rat(a[i]), Rat(a[i + 1]),
                          "sequence must strictly decrease after the initial plateau");
    if (a[n] <= 0) return fail_j(name, n, Rat(1), Rat(a[n]), "a_n must be positive");
    Verdict v = Verdict::pass(name);
    v.witness_k = static_cast<long long>(k);
    return v;
}

Int ns_bound(std::size_t n, std::size_t j, const Int& an) {
    Int sum = 0;
    for (std::size_t k = 0; k <= j; ++k)
        sum += binom(2 * static_cast<long long>(n - k), static_cast<long long>(j - k)) *
               binom(2 * static_cast<long long>(n) - static_cast<long long>(k),
                     static_cast<long long>(k));
    return sum * an;
}

Verdict ns_bounds_test(const AlexPoly& alex) {
    const std::string name = "ns_bounds";
    if (auto na = normalized_gate(name, alex)) return *na;

    const auto& a = alex.a();
    const std::size_t n = alex.n();
    const Int& an = a[n];

    for (std::size_t j = 1; j <= n; ++j) {
        const Int bound = ns_bound(n, j, an);
        if (abs(a[n - j]) > bound)
            return fail_j(name, j, Rat(bound), Rat(abs(a[n - j])), "general coefficient bound exceeded");
    }
    if (n >= 1) {
        const Int upper = (4 * static_cast<long long>(n) - 2) * an + 1;
        const Int lower = 2 * an - 1;
        if (abs(a[n - 1]) > upper)
            return fail_j(name, 1, Rat(upper), Rat(abs(a[n - 1])), "a_{n-1} above (4n-2) a_n + 1");
        if (abs(a[n - 1]) < lower)
            return fail_j(name, 1, Rat(lower), Rat(abs(a[n - 1])), "a_{n-1} below 2 a_n - 1");
    }
    return Verdict::pass(name);
}

Rat nakss_bound(std::size_t n, const Int& g, const Int& an) {
    const long long nn = static_cast<long long>(n);
    return (Rat(8 * nn * nn - 16 * nn + 10) + Rat(2 * (nn - 2), g)) * an + (2 * nn - 1);
}

Rat nakss_bound_j3(std::size_t n, const Int& g, const Int& an) {
    const long long nn = static_cast<long long>(n);
    return Rat(2 * (2 * nn - 3) * (8 * nn * nn - 24 * nn + 25), 3) * an +
           Rat((3 * nn - 5) * (2 * nn - 5), g) * an + nn * (2 * nn - 3);
}

Verdict nakss_test(const AlexPoly& alex) {
    const std::string name = "nakss";
    if (auto na = normalized_gate(name, alex)) return *na;

    const std::size_t n = alex.n();
    if (n < 2) return Verdict::not_applicable(name, "needs degree n >= 2");
    const auto& a = alex.a();
    const Int& an = a[n];
    if (an == 1) return Verdict::not_applicable(name, "a_n = 1");

    const Int g = greatest_prime_divisor(an);
    const Rat b2 = nakss_bound(n, g, an);
    if (Rat(abs(a[n - 2])) > b2)
        return fail_j(name, 2, b2, Rat(abs(a[n - 2])), "a_{n-2} bound exceeded (g=" + g.str() + ")");
    if (n >= 3) {
        const Rat b3 = nakss_bound_j3(n, g, an);
        if (Rat(abs(a[n - 3])) > b3)
            return fail_j(name, 3, b3, Rat(abs(a[n - 3])), "a_{n-3} bound exceeded (g=" + g.str() + ")");
    }
    return Verdict::pass(name);
}

Verdict convexity_test(const AlexPoly& alex) {
    const std::string name = "convexity";
    Verdict na_or_pass{name};
    na_or_pass.conjectural = true;
    if (alex.link_factor()) {
        Verdict v = Verdict::not_applicable(name, "knot test applied to a link Alexander polynomial");
        v.conjectural = true;
        return v;
    }

    const auto& a = alex.a();
    const std::size_t n = alex.n();
    // second differences at interior points 1..n-1
    std::vector<Int> d2;
    for (std::size_t i = 1; i + 1 <= n; ++i) d2.push_back(a[i - 1] - 2 * a[i] + a[i + 1]);

    for (std::size_t k = 0; k <= n; ++k) {
        bool ok = true;
        for (std::size_t i = 1; ok && i + 1 <= k; ++i) ok = d2[i - 1] >= 0;        // prefix convex
        for (std::size_t i = k + 1; ok && i + 1 <= n; ++i) ok = d2[i - 1] <= 0;    // suffix concave
        if (ok) {
            Verdict v = Verdict::pass(name);
            v.conjectural = true;
            v.witness_k = static_cast<long long>(k);
            return v;
        }
    }
    Verdict v{name};
    v.conjectural = true;
    v.outcome = Outcome::fail;
    v.note = "no split makes the prefix convex and the suffix concave";
    return v;
}

SieveReport alexander_sieve(const AlexPoly& a) {
    SieveReport report;
    if (a.link_factor()) {
        report.absorb(hosokawa_mod2_test(a));
        return report;
    }
    report.absorb(murasugi_mod2_test(a));
    report.absorb(hartley_test(a));
    report.absorb(ns_bounds_test(a));
    report.absorb(nakss_test(a));
    report.absorb(convexity_test(a));
    return report;
}

}  // namespace twobridge
