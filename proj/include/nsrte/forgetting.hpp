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

#include <set>

#include "nsrte/logic.hpp"

namespace nsrte {

using ForgetSet = std::set<PropLetter>;

/// Letters of `phi` that do not occur in `alpha`.
ForgetSet forgettable_atoms(const AbstractFormula& phi, const AbstractFormula& alpha);

/// Substitutes True for every letter in `gamma`, then simplifies.
AbstractFormula forget(const AbstractFormula& f, const ForgetSet& gamma);

/// Keeps the lowest-indexed ceil(fraction * |gamma|) letters. Fraction 1
/// forgets everything; 0 forgets nothing.
ForgetSet limit_forget_set(const ForgetSet& gamma, double fraction);

}  // namespace nsrte
