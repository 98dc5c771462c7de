// Copyright 2026 The Orient Authors
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

#include "orient/p2p.hpp"

namespace orient {

P2PSolution<Reward> solve_p2p(const P2PInstance& instance,
                              const MinExcessSolver<Reward>& solver) {
  instance.validate();
  return solve_p2p<Reward>(instance.space, instance.rewards, instance.start,
                           instance.end, instance.budget, solver);
}

P2PSolution<Reward> solve_p2p(const P2PInstance& instance) {
  return solve_p2p(instance, ExactMinExcess<Reward>());
}

}  // namespace orient
