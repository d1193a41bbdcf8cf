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

#pragma once

#include <string>

namespace qsar::data {

struct ActivityRecord {
  std::string id;
  double ic50_nM = 0.0;
};

/// Activity cutoff on the pIC50 scale (IC50 <= 1 uM is active).
inline constexpr double kActiveThresholdPIC50 = 6.0;

/// pIC50 = 9 − log10(IC50 in nM). Throws NonPositiveActivity for IC50 <= 0.
double pic50_from_nM(double ic50_nM);

/// 1 when pIC50 >= 6.0, else 0.
int label_from_activity(const ActivityRecord& rec);

}  // namespace qsar::data
