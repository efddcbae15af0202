// Copyright 2026 The gsroute Authors
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

#pragma once

#include <cstdint>
#include <random>

#include "gsr/graph.h"
#include "gsr/pathfind.h"

namespace gsr::fixtures {

/// 3x3 cluster, rows 1-2-3 / 4-5-6 / 7-8-9.
LabeledGraph grid3x3();
/// Six-vertex two-pair graph with edges 13 15 23 26 34 45 46 and terminal pairs {1,6}, {2,5}.
LabeledGraph butterfly();
/// 3x4 cluster whose perimeter minus vertex 8 is the line 1,6,7,2,3,4,11,12,5.
LabeledGraph cluster12();
VertexPath cluster12_line();

LabeledGraph path(int n, Vertex first = 1);
LabeledGraph cycle(int n, Vertex first = 1);
LabeledGraph star(int leaves, Vertex center = 1);
LabeledGraph complete(int n, Vertex first = 1);
/// Rectangular cluster, row-major labels starting at 1.
LabeledGraph grid(int rows, int cols);

/// G(n, p) on labels 1..n.
LabeledGraph random_graph(int n, double p, std::mt19937_64 &rng);
/// Random graph conditioned on being connected (resampled; a spanning path is added after 100 tries).
LabeledGraph random_connected_graph(int n, double p, std::mt19937_64 &rng);

}  // namespace gsr::fixtures
