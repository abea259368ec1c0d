// Copyright 2026 The lcq Authors
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

#ifndef LCQ_LCQ_HPP
#define LCQ_LCQ_HPP

#include "lcq/analysis.hpp"
#include "lcq/domain.hpp"
#include "lcq/dynamics.hpp"
#include "lcq/error.hpp"
#include "lcq/format.hpp"
#include "lcq/funceq.hpp"
#include "lcq/generator.hpp"
#include "lcq/means.hpp"
#include "lcq/properties.hpp"
#include "lcq/quotient.hpp"
#include "lcq/rng.hpp"
#include "lcq/sampling.hpp"

#endif  // LCQ_LCQ_HPP
