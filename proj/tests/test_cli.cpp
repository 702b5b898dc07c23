#include "photoseal/cli.hpp"
#include "photoseal/imageio.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <map>
#include <random>
#include <sstream>

using namespace photoseal;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;

  std::map<std::string, std::string> fields() const {
    std::map<std::string, std::string> kv;
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);) {
      const auto eq = line.find('=');
      EXPECT_NE(eq, std::string::npos) << line;
      kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return kv;
  }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("photoseal_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    std::mt19937_64 rng(42);
    std::vector<std::uint8_t> px(256 * 256);
    for (auto& p : px) p = static_cast<std::uint8_t>(rng());
    write_file(path("cover.pgm"), write_pgm(GrayImage(256, 256, std::move(px))));
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, SealVerifyExample) {
  const Result s = run({"seal", "--in", path("cover.pgm"), "--out", path("s.pgm"), "--message",
                        "I'm so proud to be Egyptian", "--key", "16"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(s.fields().at("status"), "SEALED");

  const Result v = run({"verify", "--in", path("s.pgm")});
  EXPECT_EQ(v.code, 0);
  const auto f = v.fields();
  EXPECT_EQ(f.at("verdict"), "VERIFIED");
  EXPECT_EQ(f.at("message"), "I'm so proud to be Egyptian");
  EXPECT_EQ(f.at("key"), "16");
  EXPECT_EQ(f.at("cipher"), "caesar");
  EXPECT_EQ(f.at("mode"), "overwrite");

  EXPECT_EQ(run({"verify", "--in", path("s.pgm"), "--key", "16"}).code, 0);
  const Result wrong = run({"verify", "--in", path("s.pgm"), "--key", "15"});
  EXPECT_EQ(wrong.code, 1);
  EXPECT_EQ(wrong.fields().at("verdict"), "TAMPERED");
}

TEST_F(CliTest, LsbHillAndDigestOptions) {
  ASSERT_EQ(run({"seal", "--in", path("cover.pgm"), "--out", path("h.pgm"), "--message", "ATTACKATDAWN", "--key",
                 "6,24,1,13,16,10,20,17,15", "--cipher", "hill", "--mode", "lsb1", "--digest", "sha256"})
                .code,
            0);
  const Result v = run({"verify", "--in", path("h.pgm")});
  EXPECT_EQ(v.code, 0) << v.out;
  const auto f = v.fields();
  EXPECT_EQ(f.at("mode"), "lsb1");
  EXPECT_EQ(f.at("cipher"), "hill");
  EXPECT_EQ(f.at("digest_algorithm"), "sha256");
  EXPECT_EQ(f.at("message"), "ATTACKATDAWN");
}

TEST_F(CliTest, CoverIsUndecodable) {
  const Result v = run({"verify", "--in", path("cover.pgm")});
  EXPECT_EQ(v.code, 2);
  EXPECT_EQ(v.fields().at("verdict"), "UNDECODABLE");
  EXPECT_EQ(run({"inspect", "--in", path("cover.pgm")}).code, 2);
}

TEST_F(CliTest, TamperThenVerify) {
  ASSERT_EQ(run({"seal", "--in", path("cover.pgm"), "--out", path("s.pgm"), "--message", "hello", "--key", "3"}).code,
            0);
  ASSERT_EQ(run({"tamper", "--in", path("s.pgm"), "--out", path("t.pgm"), "--pixel", "40", "--bit", "2"}).code, 0);
  const Result v = run({"verify", "--in", path("t.pgm"), "--mode", "overwrite"});
  EXPECT_NE(v.code, 0);
  EXPECT_NE(v.fields().at("verdict"), "VERIFIED");
  ASSERT_EQ(run({"tamper", "--in", path("t.pgm"), "--out", path("u.pgm"), "--pixel", "40", "--bit", "2"}).code, 0);
  EXPECT_EQ(read_file(path("u.pgm")), read_file(path("s.pgm")));
  EXPECT_EQ(run({"tamper", "--in", path("s.pgm"), "--out", path("x.pgm"), "--pixel", "65536", "--bit", "0"}).code,
            64);
}

TEST_F(CliTest, InspectFields) {
  ASSERT_EQ(run({"seal", "--in", path("cover.pgm"), "--out", path("s.pgm"), "--message", "hello", "--key", "3"}).code,
            0);
  const Result r = run({"inspect", "--in", path("s.pgm")});
  ASSERT_EQ(r.code, 0);
  const auto f = r.fields();
  EXPECT_EQ(f.at("magic"), "0x48");
  EXPECT_EQ(f.at("symbol_count"), "384");
  EXPECT_EQ(f.at("block_elements"), "384");
  EXPECT_EQ(f.at("compressed_elements"), f.at("stream_bytes"));
  EXPECT_TRUE(f.contains("ratio"));
}

TEST_F(CliTest, ExitCodes) {
  const Result missing = run({"seal", "--in", path("cover.pgm"), "--out", path("s.pgm"), "--key", "16"});
  EXPECT_EQ(missing.code, 64);
  EXPECT_NE(missing.err.find("--message"), std::string::npos);
  EXPECT_EQ(run({}).code, 64);
  EXPECT_EQ(run({"frobnicate"}).code, 64);
  EXPECT_EQ(run({"verify", "--in", path("cover.pgm"), "--bogus"}).code, 64);
  EXPECT_EQ(run({"seal", "--in", path("cover.pgm"), "--out", path("s.pgm"), "--message", "m", "--key", "40"}).code,
            64);
  EXPECT_EQ(run({"verify", "--in", path("nope.pgm")}).code, 66);

  write_file(path("bad.pgm"), std::vector<std::uint8_t>{'P', '2', '\n'});
  EXPECT_EQ(run({"verify", "--in", path("bad.pgm")}).code, 65);
  EXPECT_EQ(run({"seal", "--in", path("cover.pgm"), "--out", path("no/such/dir/s.pgm"), "--message", "m", "--key",
                 "1"})
                .code,
            73);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(EscapeValue, KeepsOneLine) {
  EXPECT_EQ(cli::escape_value("a\nb\\c\t"), "a\\nb\\\\c\\t");
  EXPECT_EQ(cli::escape_value(std::string("\x01\xff", 2)), "\\x01\\xff");
  EXPECT_EQ(cli::escape_value("plain text"), "plain text");
}
