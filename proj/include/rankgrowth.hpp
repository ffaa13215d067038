// Copyright 2026 The rankgrowth Authors.
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

#ifndef RANKGROWTH_RANKGROWTH_HPP
#define RANKGROWTH_RANKGROWTH_HPP

#include "rankgrowth/axioms.hpp"
#include "rankgrowth/backends/chain.hpp"
#include "rankgrowth/backends/circuit.hpp"
#include "rankgrowth/backends/graphic.hpp"
#include "rankgrowth/backends/ideal_count.hpp"
#include "rankgrowth/backends/linear.hpp"
#include "rankgrowth/backends/trivial.hpp"
#include "rankgrowth/engine.hpp"
#include "rankgrowth/errors.hpp"
#include "rankgrowth/matroid.hpp"
#include "rankgrowth/multi_index.hpp"
#include "rankgrowth/operators.hpp"
#include "rankgrowth/polynomial.hpp"
#include "rankgrowth/rational.hpp"
#include "rankgrowth/staircase.hpp"

#endif  // RANKGROWTH_RANKGROWTH_HPP
