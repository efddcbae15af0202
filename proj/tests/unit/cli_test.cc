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

#include "cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gsr/graph_io.h"
#include "gsr/transcript.h"

using namespace gsr;

namespace {

const std::string kFixtures = std::string(GSR_SOURCE_DIR) + "/fixtures/";

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "gsr");
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string &name, const std::string &text) {
    auto dir = std::filesystem::temp_directory_path() / "gsr_cli_test";
    std::filesystem::create_directories(dir);
    std::string path = (dir / name).string();
    write_text_file(path, text);
    return path;
}

}  // namespace

TEST(Cli, EprNineCluster) {
    CliRun x = run({"epr", kFixtures + "grid3x3.txt", "1", "9"});
    ASSERT_EQ(x.code, 0) << x.err;
    auto j = nlohmann::json::parse(x.out);
    EXPECT_EQ(j["transcript"]["counts"]["measurements"], 3);
    EXPECT_EQ(j["residual"]["vertices"], nlohmann::json::array({3, 4, 7, 8}));
    EXPECT_TRUE(validate(transcript_from_json(j["transcript"])));

    CliRun r = run({"epr", kFixtures + "grid3x3.txt", "1", "9", "--method", "repeater"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["transcript"]["counts"]["measurements"], 6);

    CliRun e = run({"epr", temp_file("edge.txt", "1 2\n"), "1", "2"});
    EXPECT_EQ(nlohmann::json::parse(e.out)["transcript"]["counts"]["measurements"], 0);
}

TEST(Cli, EprFrames) {
    auto dir = std::filesystem::temp_directory_path() / "gsr_cli_test" / "frames";
    std::filesystem::remove_all(dir);
    CliRun x = run({"epr", kFixtures + "grid3x3.txt", "1", "9", "--frames", dir.string()});
    ASSERT_EQ(x.code, 0);
    EXPECT_TRUE(std::filesystem::exists(dir / "frame_000.dot"));
    EXPECT_TRUE(std::filesystem::exists(dir / "frame_003.dot"));
    EXPECT_FALSE(std::filesystem::exists(dir / "frame_004.dot"));
}

TEST(Cli, GhzTwelveClusterAndUnmet) {
    CliRun g = run({"ghz", kFixtures + "cluster12.txt", "1,2,4,5"});
    ASSERT_EQ(g.code, 0) << g.err;
    auto j = nlohmann::json::parse(g.out);
    EXPECT_EQ(j["transcript"]["counts"]["measurements"], 8);
    EXPECT_EQ(j["success"], true);

    CliRun three = run({"ghz", kFixtures + "grid3x3.txt", "1,5,9"});
    EXPECT_EQ(three.code, 0);

    CliRun star = run({"ghz", temp_file("star.txt", "1 2\n1 3\n1 4\n1 5\n"), "2,3,4,5"});
    EXPECT_EQ(star.code, 2);
    EXPECT_TRUE(nlohmann::json::parse(star.out).contains("hypothesis_unmet"));
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"epr", temp_file("two.txt", "1 2\n4 5\n"), "1", "5"}).code, 2);
    EXPECT_EQ(run({"epr", kFixtures + "nope.txt", "1", "2"}).code, 2);
    EXPECT_EQ(run({"scan", "--n", "9"}).code, 3);
    EXPECT_EQ(run({"orbit", temp_file("p12.txt", "1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n8 9\n9 10\n10 11\n")}).code, 3);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"epr", "--method", "teleport"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ScanIsReproducible) {
    CliRun a = run({"scan", "--n", "6", "--pairs", "1:6,2:5", "--workers", "1"});
    CliRun b = run({"scan", "--n", "6", "--pairs", "2:5,1:6", "--workers", "2"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(nlohmann::json::parse(a.out)["total_hits"], 4);
    EXPECT_EQ(nlohmann::json::parse(run({"scan", "--n", "5"}).out)["total_hits"], 0);
}

TEST(Cli, OrbitVminorConvertVerify) {
    CliRun o = run({"orbit", kFixtures + "butterfly.txt"});
    ASSERT_EQ(o.code, 0);
    auto j = nlohmann::json::parse(o.out);
    EXPECT_EQ(j["members"].size(), j["size"].get<size_t>());

    std::string target = temp_file("pairs.txt", "1 6\n2 5\n");
    CliRun v = run({"vminor", kFixtures + "butterfly.txt", target});
    EXPECT_EQ(v.code, 0);
    EXPECT_EQ(nlohmann::json::parse(v.out)["found"], true);
    CliRun no = run({"vminor", kFixtures + "butterfly.txt", temp_file("bad.txt", "1 2\n5 6\n")});
    EXPECT_EQ(no.code, 2);

    CliRun c = run({"convert", kFixtures + "butterfly.txt", "--to", "graph6"});
    EXPECT_EQ(c.out, "EXdO\n");
    std::string g6 = temp_file("b.g6", c.out);
    EXPECT_EQ(run({"convert", g6}).out, write_edge_list(read_graph_file(kFixtures + "butterfly.txt")));

    CliRun q = run({"verify", "--max-n", "3"});
    EXPECT_EQ(q.code, 0);
    EXPECT_EQ(nlohmann::json::parse(q.out)["ok"], true);
}
