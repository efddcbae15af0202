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

// Fixed-size adjacency used by the exhaustive searches. Not part of the public API.

#include <array>
#include <bit>
#include <cstdint>
#include <functional>

#include "gsr/errors.h"
#include "gsr/graph.h"

namespace gsr::detail {

inline constexpr size_t kSmallMax = 16;

/// Upper triangle in graph6 column order, most significant bit first. Same words as GraphKey.
struct PackedKey {
    std::array<uint64_t, 2> w{};
    bool operator==(const PackedKey &) const = default;
    auto operator<=>(const PackedKey &) const = default;
};

struct PackedKeyHash {
    size_t operator()(const PackedKey &k) const noexcept {
        uint64_t h = k.w[0] * 0x9E3779B97F4A7C15ull;
        h ^= (k.w[1] + 0x7F4A7C159E3779B9ull) * 0xC2B2AE3D27D4EB4Full;
        return static_cast<size_t>(h ^ (h >> 31));
    }
};

struct SmallGraph {
    uint32_t n = 0;
    std::array<uint32_t, kSmallMax> rows{};

    static SmallGraph from(const LabeledGraph &g) {
        if (g.size() > kSmallMax) {
            throw SizeBoundError("graph has " + std::to_string(g.size()) + " vertices; limit is " +
                                 std::to_string(kSmallMax));
        }
        SmallGraph s;
        s.n = static_cast<uint32_t>(g.size());
        for (size_t i = 0; i < g.size(); i++) {
            for (size_t j = 0; j < g.size(); j++) {
                if (g.bit(i, j)) s.rows[i] |= 1u << j;
            }
        }
        return s;
    }

    static SmallGraph from_key(uint32_t n, const PackedKey &k) {
        SmallGraph s;
        s.n = n;
        size_t idx = 0;
        for (uint32_t j = 1; j < n; j++) {
            for (uint32_t i = 0; i < j; i++, idx++) {
                if ((k.w[idx / 64] >> (63 - idx % 64)) & 1) {
                    s.rows[i] |= 1u << j;
                    s.rows[j] |= 1u << i;
                }
            }
        }
        return s;
    }

    LabeledGraph to_graph(const std::vector<Vertex> &labels) const {
        LabeledGraph g(labels);
        for (uint32_t i = 0; i < n; i++) {
            for (uint32_t j = i + 1; j < n; j++) {
                if ((rows[i] >> j) & 1) g.set_bit(i, j, true);
            }
        }
        return g;
    }

    bool adjacent(uint32_t i, uint32_t j) const { return (rows[i] >> j) & 1; }

    void lc(uint32_t a) {
        uint32_t m = rows[a];
        for (uint32_t r = m; r; r &= r - 1) {
            uint32_t i = std::countr_zero(r);
            rows[i] ^= m & ~(1u << i);
        }
    }

    /// Deletes vertex v and shifts the higher indices down by one.
    SmallGraph removed(uint32_t v) const {
        SmallGraph s;
        s.n = n - 1;
        uint32_t low = (1u << v) - 1;
        for (uint32_t i = 0, k = 0; i < n; i++) {
            if (i == v) continue;
            uint32_t r = rows[i];
            s.rows[k++] = (r & low) | ((r >> 1) & ~low);
        }
        return s;
    }

    PackedKey key() const {
        PackedKey k;
        size_t idx = 0;
        for (uint32_t j = 1; j < n; j++) {
            uint32_t col = rows[j] & ((1u << j) - 1);
            for (uint32_t i = 0; i < j; i++, idx++) {
                if ((col >> i) & 1) k.w[idx / 64] |= uint64_t{1} << (63 - idx % 64);
            }
        }
        return k;
    }
};

inline GraphKey to_graph_key(const PackedKey &k, uint32_t n) {
    size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
    GraphKey out;
    out.words.assign(k.w.begin(), k.w.begin() + std::max<size_t>(1, (nbits + 63) / 64));
    return out;
}

inline PackedKey from_graph_key(const GraphKey &k) {
    PackedKey out;
    for (size_t i = 0; i < k.words.size() && i < 2; i++) out.w[i] = k.words[i];
    return out;
}

}  // namespace gsr::detail
