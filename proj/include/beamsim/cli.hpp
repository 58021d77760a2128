// SPDX-License-Identifier: Apache-2.0
//
// beamsim: reconfigurable-antenna beamspace MIMO simulation library
// Copyright (C) 2026 The beamsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef BEAMSIM_CLI_HPP
#define BEAMSIM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace beamsim
{
    inline constexpr int exit_ok = 0;
    inline constexpr int exit_runtime_error = 1;
    inline constexpr int exit_config_error = 2;

    // Runs one command line (args[0] is the program name). Output goes to
    // out, diagnostics to err. Returns the process exit code.
    int parse_and_dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
}

#endif
