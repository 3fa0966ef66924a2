// Copyright 2026 The spinchain Authors
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

#ifndef SPINCHAIN_SPINCHAIN_HPP
#define SPINCHAIN_SPINCHAIN_HPP

#include "spinchain/catalog.hpp"
#include "spinchain/density_matrix.hpp"
#include "spinchain/entanglement.hpp"
#include "spinchain/environment.hpp"
#include "spinchain/errors.hpp"
#include "spinchain/evolve.hpp"
#include "spinchain/lindblad.hpp"
#include "spinchain/matrix.hpp"
#include "spinchain/spin_register.hpp"

#endif  // SPINCHAIN_SPINCHAIN_HPP
