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

#include "gsr/fixtures.h"

#include <vector>

namespace gsr::fixtures {

namespace {

std::vector<Vertex> range(int n, Vertex first) {
    std::vector<Vertex> out;
    for (int i = 0; i < n; i++) out.push_back(first + i);
    return out;
}

}  // namespace

LabeledGraph grid3x3() { return grid(3, 3); }

LabeledGraph butterfly() {
    return LabeledGraph(range(6, 1), {make_edge(1, 3), make_edge(1, 5), make_edge(2, 3), make_edge(2, 6),
                                      make_edge(3, 4), make_edge(4, 5), make_edge(4, 6)});
}

LabeledGraph cluster12() {
    // Grid positions, row by row.
    const int label[3][4] = {{1, 6, 7, 2}, {8, 9, 10, 3}, {5, 12, 11, 4}};
    std::vector<Edge> edges;
    for (int r = 0; r < 3; r++) {
        for (int c = 0; c < 4; c++) {
            if (c + 1 < 4) edges.push_back(make_edge(label[r][c], label[r][c + 1]));
            if (r + 1 < 3) edges.push_back(make_edge(label[r][c], label[r + 1][c]));
        }
    }
    return LabeledGraph(range(12, 1), edges);
}

VertexPath cluster12_line() { return VertexPath{{1, 6, 7, 2, 3, 4, 11, 12, 5}}; }

LabeledGraph path(int n, Vertex first) { return path_graph(range(n, first)); }

LabeledGraph cycle(int n, Vertex first) {
    LabeledGraph g = path(n, first);
    return n > 2 ? g.with_edge(first, first + n - 1, true) : g;
}

LabeledGraph star(int leaves, Vertex center) {
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; i++) edges.push_back(make_edge(center, center + i));
    return LabeledGraph(range(leaves + 1, center), edges);
}

LabeledGraph complete(int n, Vertex first) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; i++) {
        for (int j = i + 1; j < n; j++) edges.push_back(make_edge(first + i, first + j));
    }
    return LabeledGraph(range(n, first), edges);
}

LabeledGraph grid(int rows, int cols) {
    std::vector<Edge> edges;
    auto id = [cols](int r, int c) { return r * cols + c + 1; };
    for (int r = 0; r < rows; r++) {
        for (int c = 0; c < cols; c++) {
            if (c + 1 < cols) edges.push_back(make_edge(id(r, c), id(r, c + 1)));
            if (r + 1 < rows) edges.push_back(make_edge(id(r, c), id(r + 1, c)));
        }
    }
    return LabeledGraph(range(rows * cols, 1), edges);
}

LabeledGraph random_graph(int n, double p, std::mt19937_64 &rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int i = 1; i <= n; i++) {
        for (int j = i + 1; j <= n; j++) {
            if (coin(rng)) edges.push_back(make_edge(i, j));
        }
    }
    return LabeledGraph(range(n, 1), edges);
}

LabeledGraph random_connected_graph(int n, double p, std::mt19937_64 &rng) {
    for (int attempt = 0; attempt < 100; attempt++) {
        LabeledGraph g = random_graph(n, p, rng);
        if (is_connected(g)) return g;
    }
    LabeledGraph g = random_graph(n, p, rng);
    for (int i = 1; i < n; i++) g = g.with_edge(i, i + 1, true);
    return g;
}

}  // namespace gsr::fixtures
