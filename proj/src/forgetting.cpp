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

#include "nsrte/forgetting.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

namespace nsrte {

ForgetSet forgettable_atoms(const AbstractFormula& phi, const AbstractFormula& alpha) {
  const auto in_phi = atoms(phi);
  const auto in_alpha = atoms(alpha);
  ForgetSet out;
  std::set_difference(in_phi.begin(), in_phi.end(), in_alpha.begin(), in_alpha.end(),
                      std::inserter(out, out.end()));
  return out;
}

AbstractFormula forget(const AbstractFormula& f, const ForgetSet& gamma) {
  if (gamma.empty()) return f;
  return simplify_true(substitute_true(f, gamma));
}

ForgetSet limit_forget_set(const ForgetSet& gamma, double fraction) {
  fraction = std::clamp(fraction, 0.0, 1.0);
  const auto keep = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(gamma.size())));
  ForgetSet out;
  for (const auto& l : gamma) {
    if (out.size() == keep) break;
    out.insert(l);
  }
  return out;
}

}  // namespace nsrte
