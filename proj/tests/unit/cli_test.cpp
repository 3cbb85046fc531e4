#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

#include "fixture.hpp"

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is folded into the captured output.
Run run_cli(const std::string& args, const std::string& stdin_file = "") {
  std::string cmd = std::string(VOCP_CLI_PATH) + " " + args + " 2>&1";
  if (!stdin_file.empty()) cmd += " < " + stdin_file;
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  std::string base() const {
    return "--data-dir " + (dir_.path() / "data").string() + " --fixed-time " + testing_support::kFixedTime;
  }
  void load_fixture() {
    auto r = run_cli(base() + " ingest " + testing_support::fixture_corpus_path().string() + " --corpus-id fx");
    ASSERT_EQ(r.exit_code, 0) << r.out;
    r = run_cli(base() + " derive fx");
    ASSERT_EQ(r.exit_code, 0) << r.out;
  }

  testing_support::TempDir dir_;
};

TEST_F(Cli, IngestMissingFile) {
  const auto r = run_cli(base() + " ingest " + (dir_.path() / "missing.jsonl").string());
  EXPECT_NE(r.exit_code, 0);
  EXPECT_NE(r.out.find("file not found"), std::string::npos) << r.out;
}

TEST_F(Cli, CardMarkdown) {
  load_fixture();
  const auto r = run_cli(base() + " card fx-p01 --format md");
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("## Data Provenance"), std::string::npos);
  const auto out = dir_.path() / "card.json";
  EXPECT_EQ(run_cli(base() + " card fx-p01 --format json --out " + out.string()).exit_code, 0);
  EXPECT_EQ(nlohmann::json::parse(testing_support::read_file(out))["persona_id"], "fx-p01");
}

TEST_F(Cli, UnknownPersonaFails) {
  load_fixture();
  const auto r = run_cli(base() + " card fx-p42");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("unknown_persona"), std::string::npos) << r.out;
}

TEST_F(Cli, InterviewThenAuditPasses) {
  load_fixture();
  const auto input = dir_.path() / "questions.txt";
  std::ofstream(input) << "Why does search miss my tagged notes?\nWhat about screen readers?\n";
  const auto r = run_cli(base() + " interview fx-p02", input.string());
  ASSERT_EQ(r.exit_code, 0) << r.out;
  const auto pos = r.out.find("vocp: transcript ");
  ASSERT_NE(pos, std::string::npos) << r.out;
  const auto end = r.out.find('\n', pos);
  const std::string transcript = r.out.substr(pos + 17, end - pos - 17);
  const auto audit = run_cli(base() + " audit " + transcript);
  EXPECT_EQ(audit.exit_code, 0) << audit.out;
  EXPECT_NE(audit.out.find("overall: pass"), std::string::npos);
}

TEST_F(Cli, AuditFlagsMutatedTranscript) {
  load_fixture();
  const auto r = run_cli(base() + " audit " + (testing_support::fixture_dir() / "mutated_session.jsonl").string() +
                         " --corpus fx");
  EXPECT_NE(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("UNGROUNDED"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("overall: fail"), std::string::npos);
}

TEST_F(Cli, ExportRoundTrip) {
  load_fixture();
  const auto out = dir_.path() / "export.jsonl";
  ASSERT_EQ(run_cli(base() + " export fx --out " + out.string()).exit_code, 0);
  const auto again = run_cli(base() + " ingest " + out.string() + " --corpus-id fx2");
  EXPECT_EQ(again.exit_code, 0) << again.out;
  EXPECT_EQ(testing_support::read_file(out), run_cli(base() + " export fx2").out);
}

}  // namespace
