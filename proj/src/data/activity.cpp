// Copyright 2026 The qmkl-qsar Authors.
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

#include "qsar/data/activity.hpp"

#include <cmath>

#include "qsar/core/error.hpp"
#include "qsar/core/format.hpp"

namespace qsar::data {

double pic50_from_nM(double ic50_nM) {
  if (!(ic50_nM > 0.0) || !std::isfinite(ic50_nM)) {
    throw Error(ErrorCode::NonPositiveActivity, "IC50 must be positive and finite, got " + format_double(ic50_nM));
  }
  return 9.0 - std::log10(ic50_nM);
}

int label_from_activity(const ActivityRecord& rec) {
  return pic50_from_nM(rec.ic50_nM) >= kActiveThresholdPIC50 ? 1 : 0;
}

}  // namespace qsar::data
