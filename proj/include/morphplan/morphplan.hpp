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

#ifndef MORPHPLAN_MORPHPLAN_HPP
#define MORPHPLAN_MORPHPLAN_HPP

#include "morphplan/changeops.hpp"
#include "morphplan/datasets.hpp"
#include "morphplan/decimal.hpp"
#include "morphplan/errors.hpp"
#include "morphplan/interchange.hpp"
#include "morphplan/mckp.hpp"
#include "morphplan/morphology.hpp"
#include "morphplan/planner.hpp"
#include "morphplan/report.hpp"

#endif  // MORPHPLAN_MORPHPLAN_HPP
