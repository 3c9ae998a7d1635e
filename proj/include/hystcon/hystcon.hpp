// Copyright 2026 The hystcon Authors
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


#ifndef HYSTCON_HYSTCON_HPP_
#define HYSTCON_HYSTCON_HPP_

#include "hystcon/bipartite_matching.hpp"
#include "hystcon/errors.hpp"
#include "hystcon/generators.hpp"
#include "hystcon/guided_sorting.hpp"
#include "hystcon/lehman_ron.hpp"
#include "hystcon/oracle.hpp"
#include "hystcon/permutation.hpp"
#include "hystcon/solver.hpp"
#include "hystcon/vertex_set.hpp"

#endif  // HYSTCON_HYSTCON_HPP_
