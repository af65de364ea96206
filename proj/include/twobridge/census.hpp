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

#ifndef TWOBRIDGE_CENSUS_HPP
#define TWOBRIDGE_CENSUS_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "twobridge/conway.hpp"

namespace twobridge {

/// Reduced two-bridge fraction, p >= 0 and gcd(p, q) = 1. For every valid
/// form p equals the link determinant, which gives a cross-module check
/// against determinant(conway_poly(form)).
struct Fraction {
    Int p;
    Int q;
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// Continued-fraction value 2a_1 + 1/(2a_2 + 1/(... + 1/(2a_m))) of the
/// literal entries, computed with the integer convergent (continuant)
/// recursion and reduced, with the sign moved into q.
Fraction fraction_of(const TwoBridgeForm& form);

/// Dedup key for the census. Forms related by the classical q <-> q^{-1}
/// equivalence share a key; mirror images (q <-> -q) never do. The
/// residues are taken mod p for knots (p odd) and mod 2p for 2-component
/// links (p even), where the orientation of the components matters.
struct CanonicalKey {
    Int p;
    Int residue;  // min(q, q^{-1}) mod p resp. 2p
    int mirror;   // sign of q
    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

/// Rejects fractions with gcd(p, q) != 1 or p < 1.
CanonicalKey canonical_key(const Fraction& f);

/// Streams every parameter vector b = (b_1..b_m), m >= 1, b_i != 0, with
/// crossing count sum 2|b_i| <= budget, in deterministic lexicographic
/// order (element order 1, -1, 2, -2, ...; each prefix before its
/// extensions). There are exactly 3^{budget/2} - 1 such forms. The
/// visitor returns false to stop early. Rejects budgets that are odd or
/// < 2.
void forms_up_to(long long budget, const std::function<bool(const TwoBridgeForm&)>& visit);

enum class DedupMode { none, fraction };

struct CensusFailure {
    std::vector<Int> params;  // the offending form's b_i
    std::string test;
    std::string witness;
};

struct CensusOptions {
    unsigned jobs = 1;
    DedupMode dedup = DedupMode::fraction;
    // Resource cap: stop after this many generated forms and mark the
    // report partial.
    unsigned long long form_cap = 10'000'000ULL;
};

/// Aggregate result of one census run. Any verdict_failures entry is a
/// counterexample to a theorem and therefore a build-breaking event;
/// conjecture failures are collected separately.
struct CensusReport {
    long long budget = 0;
    unsigned long long forms_generated = 0;
    unsigned long long classes = 0;
    std::vector<CensusFailure> verdict_failures;
    std::vector<CensusFailure> conjecture_failures;
    bool partial = false;

    unsigned long long conjecture_failures_named(const std::string& test) const;
};

/// Runs the full battery over every form within the budget: the Conway
/// sieve, the Alexander sieve after the parity-appropriate transform, the
/// mod-2 index consistency check and the fraction/determinant
/// cross-check, deduplicating class counts by canonical key. Work may be
/// partitioned by leading parameter over `jobs` worker threads; the
/// report merge is order-independent, so the result does not depend on
/// the worker count.
CensusReport census(long long budget, const CensusOptions& options = {});

}  // namespace twobridge

#endif
