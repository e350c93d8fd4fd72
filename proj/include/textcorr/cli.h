// Copyright 2026 The textcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TEXTCORR_CLI_H_
#define TEXTCORR_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace textcorr::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;  // configuration, parse, missing resource
inline constexpr int kIo = 3;
inline constexpr int kAlignment = 4;

// `args` excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

int Main(int argc, char** argv);

}  // namespace textcorr::cli

#endif  // TEXTCORR_CLI_H_
