//
// Copyright © 2026 The ucca-sim authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = fs::temp_directory_path() / "ucca-cli-test";
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    put("benign.s", R"(
        .org 0xC000
        .ivt 2, isr
start:  MOV #3, R4
        CALL #f
        HALT
isr:    RETI
        .org 0xC100
f:      ADD R4, R4
f_end:  RET
)");
    put("smash.s", R"(
        .org 0xC000
start:  PUSH #1
        CALL #f
        HALT
        .org 0xC100
f:      MOV R4, &0x09FE
f_end:  RET
)");
    put("vector.s", R"(
        .org 0xC000
start:  CALL #f
        HALT
        .org 0xC100
f:      MOV R4, &0xFFE6
f_end:  RET
)");
    put("broken.s", "start: FROB R4\n");
    put("config.json", R"({"uccs":[{"min":"0xC100","max":"0xC104"}]})");
    put("overlap.json",
        R"({"uccs":[{"min":"0xC100","max":"0xC104"},{"min":"0xC102","max":"0xC200"}]})");
    put("bad.json", "{ not json");
    put("schedule.json", R"([{"step":3,"irq":2}])");
  }

  static void put(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name) << text;
  }
  static std::string path(const std::string& name) {
    return (dir_ / name).string();
  }

  // Exit status of ucca-sim with `args`; output goes to out.txt.
  static int sim(const std::string& args) {
    const std::string cmd = std::string(UCCA_SIM_PATH) + " " + args + " > " +
                            path("out.txt") + " 2>&1";
    const int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  }
  static std::string output() {
    std::ifstream in(path("out.txt"));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  static fs::path dir_;
};

fs::path Cli::dir_;

TEST_F(Cli, UsageAndHelp) {
  EXPECT_EQ(sim(""), 1);
  EXPECT_EQ(sim("--help"), 0);
  EXPECT_EQ(sim("frobnicate"), 1);
  EXPECT_EQ(sim("verify --depth notanumber"), 1);
}

TEST_F(Cli, Assemble) {
  EXPECT_EQ(sim("asm " + path("benign.s") + " -o " + path("benign.bin") +
                " --labels " + path("labels.json") + " --listing"),
            0);
  EXPECT_TRUE(fs::exists(path("benign.bin")));
  EXPECT_NE(output().find("CALL #0xC100"), std::string::npos);
  EXPECT_EQ(sim("asm " + path("broken.s") + " -o " + path("x.bin")), 1);
  EXPECT_NE(output().find("line 1"), std::string::npos);
  EXPECT_EQ(sim("asm " + path("missing.s") + " -o " + path("x.bin")), 2);
}

TEST_F(Cli, RunAndCheck) {
  ASSERT_EQ(sim("asm " + path("benign.s") + " -o " + path("benign.bin")), 0);
  EXPECT_EQ(sim("run " + path("benign.bin") + " --config " + path("config.json") +
                " --trace " + path("benign.jsonl")),
            0);
  EXPECT_EQ(sim("check " + path("benign.jsonl") + " --spec all"), 0);
  EXPECT_EQ(sim("check " + path("benign.jsonl") + " --formula 'G(!w_en)'"), 20);
  EXPECT_EQ(sim("check " + path("benign.jsonl") + " --formula 'G(!w_en'"), 1);
  EXPECT_EQ(sim("check " + path("benign.jsonl") + " --spec 99"), 1);

  EXPECT_EQ(sim("run " + path("smash.s") + " --config " + path("config.json") +
                " --trace " + path("smash.jsonl")),
            10);
  EXPECT_NE(output().find("stack-integrity(0)"), std::string::npos);
  // The monitor reset discharges every spec.
  EXPECT_EQ(sim("check " + path("smash.jsonl")), 0);
  EXPECT_EQ(sim("check " + path("smash.jsonl") + " --formula 'G(!reset)'"), 20);

  EXPECT_EQ(sim("run " + path("smash.s") + " --config " + path("config.json") +
                " --mode continuous --max-steps 50"),
            10);
  EXPECT_EQ(sim("run " + path("benign.s") + " --config " + path("config.json") +
                " --schedule " + path("schedule.json")),
            0);
  EXPECT_EQ(sim("run " + path("vector.s") + " --config " + path("config.json")),
            10);
  // The flipped comparator misses a write far above the frame.
  EXPECT_EQ(sim("run " + path("vector.s") + " --config " + path("config.json") +
                " --mutant flip-stack-comparator"),
            0);
}

TEST_F(Cli, RunErrors) {
  EXPECT_EQ(sim("run " + path("benign.s") + " --config " + path("overlap.json")),
            1);
  EXPECT_NE(output().find("config-invalid"), std::string::npos);
  EXPECT_EQ(sim("run " + path("benign.s") + " --config " + path("bad.json")), 1);
  EXPECT_EQ(sim("run " + path("benign.s") + " --config " + path("none.json")), 2);
  EXPECT_EQ(sim("run " + path("benign.s") + " --config " + path("config.json") +
                " --mutant nonsense"),
            1);
  EXPECT_EQ(sim("check " + path("bad.json")), 1);
  EXPECT_EQ(sim("check " + path("none.jsonl")), 2);
}

TEST_F(Cli, Verify) {
  EXPECT_EQ(sim("verify --depth 1 --report " + path("report.json")), 0);
  EXPECT_TRUE(fs::exists(path("report.json")));
  EXPECT_EQ(sim("verify --depth 2 --mutant flip-stack-comparator"), 20);
  EXPECT_EQ(sim("verify --random 2000 --length 10 --seed 0x1234"), 0);
  EXPECT_EQ(sim("verify --depth 2 --max-traces 10"), 1);
  EXPECT_EQ(sim("verify --config " + path("config.json") + " --depth 1"), 0);
}

TEST_F(Cli, Scenarios) {
  EXPECT_EQ(sim("scenarios"), 0);
  EXPECT_NE(output().find("benign-call"), std::string::npos);
  EXPECT_EQ(sim("scenarios --filter 'benign-*'"), 0);
  EXPECT_EQ(output().find("ret-hijack"), std::string::npos);
  EXPECT_EQ(sim("scenarios --mutant drop-cr-check"), 20);
  EXPECT_EQ(sim("scenarios --export " + path("corpus")), 0);
  EXPECT_TRUE(fs::exists(dir_ / "corpus" / "ret-hijack.json"));
  EXPECT_EQ(sim("scenarios --dir " + path("corpus") + " --report " +
                path("matrix.json")),
            0);
}

TEST_F(Cli, SpecsAndCost) {
  EXPECT_EQ(sim("specs"), 0);
  EXPECT_NE(output().find("cr-immutable"), std::string::npos);
  EXPECT_EQ(sim("specs --n-ucc 2 --json"), 0);
  EXPECT_EQ(sim("specs --n-ucc 0"), 1);
  EXPECT_EQ(sim("cost"), 0);
  EXPECT_NE(output().find("331"), std::string::npos);
}

}  // namespace
