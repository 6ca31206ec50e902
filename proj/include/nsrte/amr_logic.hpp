// Copyright 2026 The nsrte Authors.
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

#pragma once

#include <string>
#include <string_view>

#include "nsrte/logic.hpp"
#include "nsrte/penman.hpp"

namespace nsrte {

/// `want-01` -> `want`, `lean-over` -> `lean_over`.
std::string concept_predicate(std::string_view concept_name);

/// Grounded lowering of an AMR graph. Every node contributes
/// `concept(var)`, every edge `role(source, target)`, joined by conjunction
/// in PENMAN source order. A negated node contributes a negated conjunction
/// of its incoming edge atom, its own atom and its subtree's atoms.
///
/// Inverse roles are normalized first. Throws UnsupportedGraph when a
/// negated node has more than one incoming edge.
AmrFormula translate(const AmrGraph& graph);

}  // namespace nsrte
