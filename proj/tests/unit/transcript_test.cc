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

#include "gsr/transcript.h"

#include <gtest/gtest.h>

#include <atomic>
#include <stdexcept>

#include "gsr/errors.h"
#include "gsr/fixtures.h"
#include "gsr/parallel.h"
#include "test_util.h"

using namespace gsr;
using namespace gsr::tsupport;

TEST(Step, Formatting) {
    EXPECT_EQ(to_string(Step::lc(2)), "LC(2)");
    EXPECT_EQ(to_string(Step::measure(8, Basis::Z)), "Z(8)");
    EXPECT_EQ(to_string(Step::measure(6, Basis::X, 1)), "X(6;1)");
    EXPECT_EQ(to_string(Step::measure(3, Basis::Y)), "Y(3)");
}

TEST(Step, ReplayAndCounts) {
    LabeledGraph g = fixtures::path(4);
    std::vector<Step> steps{Step::lc(2), Step::measure(2, Basis::Z), Step::measure(3, Basis::X, 4)};
    LabeledGraph want = measure_x(measure_z(local_complement(g, 2), 2), 3, 4);
    EXPECT_EQ(replay(g, steps), want);
    StepCounts c = count_steps(steps);
    EXPECT_EQ(c.measurements, 2u);
    EXPECT_EQ(c.local_complements, 1u);
    EXPECT_EQ(c.x, 1u);
    EXPECT_EQ(c.z, 1u);
    EXPECT_EQ(c.y, 0u);
}

TEST(Transcript, BuilderAndValidate) {
    TranscriptBuilder b("demo", fixtures::path(3), {1, 3});
    b.measure(2, Basis::X, 1);
    b.note("done");
    ProtocolTranscript t = b.finish(true);
    EXPECT_TRUE(validate(t));
    EXPECT_EQ(t.final_graph, graph({1, 3}, {{1, 3}}));
    ASSERT_EQ(t.snapshots.size(), 1u);
    EXPECT_EQ(t.measurement_count(), 1u);

    ProtocolTranscript bad = t;
    bad.final_graph = graph({1, 3}, {});
    EXPECT_FALSE(validate(bad));
}

TEST(Transcript, JsonRoundTrip) {
    TranscriptBuilder b("demo", fixtures::grid(2, 3), {1, 6});
    b.lc(2);
    b.measure(5, Basis::Y);
    b.measure(2, Basis::X, *b.current().neighborhood(2).begin());
    ProtocolTranscript t = b.finish(false);
    for (bool snaps : {true, false}) {
        nlohmann::json j = transcript_to_json(t, snaps);
        ProtocolTranscript back = transcript_from_json(nlohmann::json::parse(j.dump()));
        EXPECT_EQ(back.steps, t.steps);
        EXPECT_EQ(back.initial, t.initial);
        EXPECT_EQ(back.final_graph, t.final_graph);
        EXPECT_EQ(back.targets, t.targets);
        EXPECT_EQ(back.success, t.success);
        EXPECT_EQ(back.snapshots.size(), snaps ? t.snapshots.size() : 0u);
        EXPECT_EQ(transcript_to_json(back, snaps).dump(), j.dump());
    }
    EXPECT_THROW(step_from_json(nlohmann::json{{"type", "swap"}, {"vertex", 1}}), DomainError);
}

TEST(Parallel, CoversRangeOnce) {
    for (size_t workers : {1u, 2u, 5u}) {
        std::vector<std::atomic<int>> hits(103);
        parallel_for(hits.size(), workers, [&](size_t b, size_t e, size_t) {
            for (size_t i = b; i < e; i++) hits[i]++;
        });
        for (auto &h : hits) ASSERT_EQ(h.load(), 1);
    }
    parallel_for(0, 3, [](size_t, size_t, size_t) {});
    EXPECT_THROW(parallel_for(10, 2, [](size_t b, size_t, size_t) {
                     if (b == 0) throw std::runtime_error("boom");
                 }),
                 std::runtime_error);
    EXPECT_GE(worker_count(), 1u);
}
