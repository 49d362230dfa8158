// Copyright 2026 The ttp-exact Authors
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

// Umbrella header.

#pragma once

#include "ttp/bench.hpp"
#include "ttp/bnb.hpp"
#include "ttp/brute_force.hpp"
#include "ttp/cp_model.hpp"
#include "ttp/exact_dp.hpp"
#include "ttp/heuristics.hpp"
#include "ttp/instance.hpp"
#include "ttp/instance_gen.hpp"
#include "ttp/instance_io.hpp"
#include "ttp/report.hpp"
#include "ttp/rng.hpp"
#include "ttp/solution.hpp"
#include "ttp/tsp.hpp"
#include "ttp/weight_profile.hpp"
