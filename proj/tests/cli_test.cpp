// Copyright 2026 The minhom Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.


#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct Result {
    int code = -1;
    std::string out;
};

std::string sample(const std::string& name) { return std::string(MINHOM_SAMPLES_DIR) + "/" + name; }

// Runs the CLI with stderr discarded.
Result run(const std::string& args) {
    const std::string cmd = std::string(MINHOM_CLI_PATH) + " " + args + " 2>/dev/null";
    Result r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

TEST(Cli, ClassifyText) {
    const auto c4 = run("classify " + sample("c4.txt"));
    EXPECT_EQ(c4.code, 0);
    EXPECT_TRUE(contains(c4.out, "polynomial"));
    EXPECT_TRUE(contains(c4.out, "k=4"));
    const auto hard = run("classify " + sample("c4prime.txt"));
    EXPECT_EQ(hard.code, 0);
    EXPECT_TRUE(contains(hard.out, "np-hard"));
    EXPECT_TRUE(contains(hard.out, "witness"));
}

TEST(Cli, ClassifyJson) {
    const auto r = run("classify " + sample("c4prime.txt") + " --format json");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["verdict"], "np-hard");
    EXPECT_FALSE(j["witness"].is_null());
    const auto c3 = run("classify " + sample("c3.txt") + " --multipartite " + sample("three_singletons.parts") +
                        " --format json");
    ASSERT_EQ(c3.code, 0);
    const auto jc = nlohmann::json::parse(c3.out);
    EXPECT_EQ(jc["verdict"], "polynomial");
    EXPECT_EQ(jc["k"], 3);
}

TEST(Cli, Order) {
    const auto r = run("order " + sample("c4.txt") + " --json");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["k"], 4);
    EXPECT_EQ(j["L"], nlohmann::json::parse("[[0],[0],[0],[0]]"));
    EXPECT_EQ(j["R"], nlohmann::json::parse("[[2],[2],[2],[2]]"));
    EXPECT_EQ(run("order " + sample("c4prime.txt")).code, 3);
    const auto ns = run("order " + sample("nonstrong.txt") + " --json");
    ASSERT_EQ(ns.code, 0);
    EXPECT_TRUE(nlohmann::json::parse(ns.out)["L"].is_null());
}

nlohmann::json json_of(const std::string& args) {
    const auto r = run(args + " --json");
    EXPECT_TRUE(r.code == 0 || r.code == 2) << args;
    return nlohmann::json::parse(r.out);
}

TEST(Cli, SolveMatchesOracle) {
    for (const auto& [h, d, c] : {std::tuple{"c4.txt", "path3.txt", "path3_c4_costs.txt"},
                                  std::tuple{"nonstrong.txt", "path3.txt", "path3_nonstrong_costs.txt"},
                                  std::tuple{"two_cycle.txt", "path3.txt", "path3_c4_costs.txt"}}) {
        const std::string files = sample(h) + " " + sample(d) + " " + sample(c);
        if (std::string(h) == "two_cycle.txt") {
            EXPECT_EQ(run("solve " + files).code, 3);  // cost table has the wrong width
            continue;
        }
        const auto s = json_of("solve " + files);
        const auto o = json_of("oracle " + files);
        EXPECT_EQ(s["cost"], o["cost"]) << h;
        EXPECT_TRUE(s["homomorphism"].get<bool>());
    }
    const auto s = json_of("solve " + sample("c4.txt") + " " + sample("path3.txt") + " " + sample("path3_c4_costs.txt"));
    EXPECT_EQ(s["cost"], 3);
    EXPECT_EQ(s["assignment"], nlohmann::json::parse("[1,2,3]"));
}

TEST(Cli, SolveExitCodes) {
    const auto none = run("solve " + sample("c4.txt") + " " + sample("c3.txt") + " " + sample("path3_c4_costs.txt"));
    EXPECT_EQ(none.code, 2);
    EXPECT_TRUE(contains(none.out, "no homomorphism"));
    EXPECT_EQ(run("solve " + sample("c4prime.txt") + " " + sample("path3.txt") + " " + sample("path3_c4_costs.txt")).code, 3);
    EXPECT_EQ(run("solve " + sample("tt3.txt") + " " + sample("c3.txt") + " " + sample("triangle_c3_costs.txt") +
                  " --multipartite " + sample("three_singletons.parts"))
                  .code,
              3);
    const auto c3 = run("solve " + sample("c3.txt") + " " + sample("c3.txt") + " " + sample("triangle_c3_costs.txt") +
                        " --multipartite " + sample("three_singletons.parts"));
    EXPECT_EQ(c3.code, 0);
    // Best rotation is 0->1, 1->2, 2->0: 1 + 0 + 1.
    EXPECT_TRUE(contains(c3.out, "cost 2\n"));
    const auto o = run("oracle " + sample("c3.txt") + " " + sample("c3.txt") + " " + sample("triangle_c3_costs.txt"));
    EXPECT_EQ(c3.out.substr(0, c3.out.find('\n')), o.out.substr(0, o.out.find('\n')));
}

TEST(Cli, Reduce) {
    const auto dir = std::filesystem::temp_directory_path() / "minhom_cli_reduce";
    std::filesystem::remove_all(dir);
    const auto r = run("reduce --gadget c4p " + sample("path3.txt") + " -o " + dir.string());
    ASSERT_EQ(r.code, 0);
    std::ifstream mf(dir / "manifest.json");
    const auto manifest = nlohmann::json::parse(mf);
    EXPECT_EQ(manifest["gadget"], "c4p");
    EXPECT_EQ(manifest["dprime_vertices"], 3 + 3 * 2);
    // Path on 3 vertices has alpha = 2, so the optimum is 1.
    const auto o = json_of("oracle " + (dir / "target.txt").string() + " " + (dir / "dprime.txt").string() + " " +
                           (dir / "costs.txt").string());
    EXPECT_EQ(o["cost"], 1);
    const auto cls = run("classify " + (dir / "target.txt").string());
    EXPECT_TRUE(contains(cls.out, "np-hard"));
    std::filesystem::remove_all(dir);
}

TEST(Cli, InputErrors) {
    EXPECT_EQ(run("").code, 3);
    EXPECT_EQ(run("--help").code, 0);
    EXPECT_EQ(run("classify /nonexistent/h.txt").code, 3);
    EXPECT_EQ(run("classify " + sample("c4.txt") + " --format xml").code, 3);
    EXPECT_EQ(run("reduce --gadget c5 " + sample("path3.txt") + " -o /tmp/x").code, 3);
    EXPECT_EQ(run("classify " + sample("path3_c4_costs.txt")).code, 3);
    EXPECT_EQ(run("oracle " + sample("c4.txt") + " " + sample("path3.txt") + " " + sample("path3_c4_costs.txt") +
                  " --budget 1")
                  .code,
              3);
}

}  // namespace
