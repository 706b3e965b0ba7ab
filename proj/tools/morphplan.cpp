// Copyright 2026 The morphplan Authors
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

#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "morphplan/cli.hpp"

int main(int argc, char** argv) {
  morphplan::cli::Environment env;
  env.no_color = std::getenv("MORPHPLAN_NO_COLOR") != nullptr;
  env.stdout_is_terminal = isatty(STDOUT_FILENO) != 0;
  const std::vector<std::string> args(argv + 1, argv + argc);
  return morphplan::cli::run(args, std::cout, std::cerr, env);
}
