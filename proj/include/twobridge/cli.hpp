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

#ifndef TWOBRIDGE_CLI_HPP
#define TWOBRIDGE_CLI_HPP

#include <iosfwd>

namespace twobridge {

/// Command-line front end. Thin adapter over the library: every
/// subcommand parses, calls one library entry point and prints.
/// Exit status: 0 = pass / not obstructed, 1 = obstructed (a
/// theorem-backed test failed; conjecture failures count only under
/// --conjectures-strict), 2 = usage or parse error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace twobridge

#endif
