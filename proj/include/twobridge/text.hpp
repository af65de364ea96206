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

#ifndef TWOBRIDGE_TEXT_HPP
#define TWOBRIDGE_TEXT_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twobridge/conway.hpp"
#include "twobridge/zpoly.hpp"

namespace twobridge {

/// Syntax error with enough position information for a caret diagnostic.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& message, std::string input, std::size_t pos)
        : std::runtime_error(message), input_(std::move(input)), pos_(pos) {}

    const std::string& input() const noexcept { return input_; }
    std::size_t pos() const noexcept { return pos_; }

    /// "error: <msg>\n  <input>\n  ...^"
    std::string diagnostic() const;

   private:
    std::string input_;
    std::size_t pos_;
};

/// Parses either the comma-separated ascending coefficient list
/// ("1,0,-1" is 1 - z^2, zeros included) or the human-readable form
/// ("1 - z^2 - 3z^4 - z^6"; whitespace-insensitive, '^' exponent,
/// implicit coefficient 1).
ZPoly parse_zpoly(std::string_view s);

/// Human-readable form, descending exponents: "-z^6+3z^4+8z^2+1".
std::string format_zpoly(const ZPoly& p);

/// Ascending coefficient list including zeros: "1,0,-1".
std::string format_zpoly_csv(const ZPoly& p);

/// Parses "C(4,-2,2)" (literal entries) or "b=2,1,1" (recursion
/// parameters).
TwoBridgeForm parse_form(std::string_view s);

/// "b=2,1,1"
std::string format_form(const TwoBridgeForm& form);

/// Parses "23,19,9,1" (used for Alexander coefficient input, a_0 first).
std::vector<Int> parse_int_csv(std::string_view s);

std::string format_int_csv(const std::vector<Int>& v);

/// "3", "-3" or "7/2".
std::string format_rat(const Rat& r);

}  // namespace twobridge

#endif
