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

#ifndef TWOBRIDGE_REPORT_HPP
#define TWOBRIDGE_REPORT_HPP

#include <string>

#include <json.hpp>

#include "twobridge/census.hpp"
#include "twobridge/verdict.hpp"

namespace twobridge {

/// {test, outcome, witness_k, bound, actual, D, note}; absent fields are
/// null. Exact big values are serialized as decimal strings.
nlohmann::json to_json(const Verdict& v);

nlohmann::json to_json(const SieveReport& report, const std::string& input,
                       const std::string& sieve_kind);

nlohmann::json to_json(const CensusReport& report);

/// One line per failure: kind,form,test,witness (header included).
std::string census_failures_csv(const CensusReport& report);

}  // namespace twobridge

#endif
