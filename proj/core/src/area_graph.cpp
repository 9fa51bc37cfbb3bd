// Copyright 2026 The AreaMatch Authors.
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

#include "areamatch/area_graph.hpp"

#include <algorithm>

namespace areamatch {

const Area* AreaGraph::find(int id) const {
  for (const Area& a : areas) {
    if (a.id == id) return &a;
  }
  return nullptr;
}

std::vector<Point2> passages_of(const Area& a) {
  std::vector<Point2> out = a.passages;
  std::sort(out.begin(), out.end(), [](Point2 p, Point2 q) {
    if (p.x != q.x) return p.x < q.x;
    return p.y < q.y;
  });
  return out;
}

}  // namespace areamatch
