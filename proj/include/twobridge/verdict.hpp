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

#ifndef TWOBRIDGE_VERDICT_HPP
#define TWOBRIDGE_VERDICT_HPP

#include <optional>
#include <string>
#include <vector>

#include "twobridge/numeric.hpp"

namespace twobridge {

enum class Outcome { pass, fail, not_applicable };

/// Outcome of one obstruction test. A Fail always carries enough of a
/// witness (index, bound, actual value, or mod-2 index) to recheck the
/// violated condition by hand; NotApplicable is used only when a
/// precondition of the underlying theorem is unmet, with the reason in
/// `note`.
struct Verdict {
    std::string test;
    Outcome outcome = Outcome::pass;
    bool conjectural = false;  // conjecture-backed tests are reported separately

    std::optional<long long> witness_k;
    std::optional<Rat> bound;
    std::optional<Rat> actual;
    std::optional<long long> d;  // mod-2 Fibonacci index witness
    std::string note;

    bool passed() const noexcept { return outcome == Outcome::pass; }
    bool failed() const noexcept { return outcome == Outcome::fail; }

    static Verdict pass(std::string test) { return {std::move(test)}; }
    static Verdict not_applicable(std::string test, std::string reason) {
        Verdict v{std::move(test)};
        v.outcome = Outcome::not_applicable;
        v.note = std::move(reason);
        return v;
    }
};

/// Aggregated result of a test battery. `obstructed` is set iff some
/// theorem-backed test failed: that alone proves the input cannot come
/// from a two-bridge link. Conjecture failures are tracked separately and
/// prove nothing.
struct SieveReport {
    std::vector<Verdict> verdicts;
    bool obstructed = false;
    bool conjectural_obstruction = false;

    void absorb(Verdict v) {
        if (v.failed()) (v.conjectural ? conjectural_obstruction : obstructed) = true;
        verdicts.push_back(std::move(v));
    }
};

}  // namespace twobridge

#endif
