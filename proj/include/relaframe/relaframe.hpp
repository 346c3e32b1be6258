// Copyright 2026 The Relaframe Authors
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

#ifndef RELAFRAME_RELAFRAME_HPP_
#define RELAFRAME_RELAFRAME_HPP_

#include "relaframe/coherence.hpp"
#include "relaframe/config.hpp"
#include "relaframe/errors.hpp"
#include "relaframe/experiments.hpp"
#include "relaframe/hilbert.hpp"
#include "relaframe/povm.hpp"
#include "relaframe/random.hpp"
#include "relaframe/relativise.hpp"
#include "relaframe/superoperator.hpp"
#include "relaframe/symmetry.hpp"
#include "relaframe/table.hpp"
#include "relaframe/version.hpp"

#endif  // RELAFRAME_RELAFRAME_HPP_
