// Copyright 2026 The sepscope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEPSCOPE_SEPSCOPE_HPP
#define SEPSCOPE_SEPSCOPE_HPP

#include "sepscope/bloch.hpp"
#include "sepscope/continuum.hpp"
#include "sepscope/density_matrix.hpp"
#include "sepscope/discrete.hpp"
#include "sepscope/error.hpp"
#include "sepscope/frontier.hpp"
#include "sepscope/pauli.hpp"
#include "sepscope/states.hpp"
#include "sepscope/tetrahedral.hpp"

#endif  // SEPSCOPE_SEPSCOPE_HPP
