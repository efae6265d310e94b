#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "starcong/cli.hpp"
#include "starcong/json_io.hpp"
#include "starcong/random_case.hpp"
#include "test_helpers.hpp"

using namespace starcong;
using namespace starcong::testing;
using starcong::cli::CommandConfig;

namespace {

const Complex kI(0, 1);

class TempDir {
 public:
  TempDir() {
    dir_ = std::filesystem::temp_directory_path() /
           ("starcong_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  ~TempDir() { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream out(path);
    out << text;
    return path.string();
  }

 private:
  std::filesystem::path dir_;
};

int run_cli(const CommandConfig& cfg, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  const int code = starcong::cli::run(cfg, out, err);
  if (out_text) *out_text = out.str();
  return code;
}

}  // namespace

TEST_CASE("matrix json round trip is exact") {
  RandomSource rng(71);
  const Matrix a = random_matrix(rng, 3, 2);
  const Matrix b = matrix_from_json(to_json(a));
  CHECK(diff(a, b) == 0.0);
}

TEST_CASE("spec json parses the documented shape") {
  const std::string text =
      R"({"blocks":[{"kind":"H","size":1,"lambda":{"re":2.0,"im":0.0}},)"
      R"({"kind":"Delta","size":2,"mu":{"re":0.0,"im":1.0}},)"
      R"({"kind":"Jordan","size":3}]})";
  const CanonicalSpec spec = spec_from_json(parse_json_text(text, "inline"));
  REQUIRE(spec.blocks.size() == 3);
  CHECK(spec.blocks[0].kind == BlockKind::H);
  CHECK(spec.blocks[1].kind == BlockKind::Delta);
  CHECK(std::abs(spec.blocks[1].mu - kI) <= 1e-12);
  CHECK(spec.blocks[2].size == 3);
  CHECK(spec.total_dim() == 7);
}

TEST_CASE("parse and precondition failures are distinguished") {
  CHECK_THROWS_AS(parse_json_text("{\"blocks\": [", "inline"), ParseError);
  CHECK_THROWS_WITH_AS(parse_json_text("nope", "inline"),
                       doctest::Contains("parse error at line"), ParseError);

  const Json bad_kind = parse_json_text(R"({"blocks":[{"kind":"X","size":1}]})", "inline");
  CHECK_THROWS_AS(spec_from_json(bad_kind), ParseError);

  const Json bad_rows = parse_json_text(R"({"rows":2,"cols":1,"data":[[{"re":1,"im":0}]]})", "inline");
  CHECK_THROWS_AS(matrix_from_json(bad_rows), ParseError);

  // well-formed but violating a block invariant
  const Json unit_lambda = parse_json_text(
      R"({"blocks":[{"kind":"H","size":1,"lambda":{"re":1.0,"im":0.0}}]})", "inline");
  CHECK_THROWS_AS(spec_from_json(unit_lambda), RejectedInput);
}

TEST_CASE("pattern renderings") {
  const Pattern p = assemble_pattern(CanonicalSpec::of({CanonicalBlock::delta(3, kI)}));
  const Json j = to_json(p);
  CHECK(j["rows"] == 3);
  CHECK(j["entries"][0][0] == "star");
  CHECK(j["entries"][1][1] == "circle");
  CHECK(j["entries"][2][2] == "zero");

  const Json g = to_json(greedy_miniversal(assemble_canonical(CanonicalSpec::of(
                                               {CanonicalBlock::jordan(1)})),
                                           1e-9));
  CHECK(g["tangent_rank"] == 0);
  CHECK(g["entries"][0][0] == "star");
}

TEST_CASE("report json carries the documented keys") {
  const CanonicalSpec spec = CanonicalSpec::of({CanonicalBlock::jordan(2)});
  const Json j = to_json(verify_direct_sum(assemble_canonical(spec),
                                           assemble_pattern(spec), 1e-9));
  for (const char* key : {"n", "tangent_rank", "pattern_params", "combined_rank",
                          "passed", "tolerance", "sigma_min_kept", "sigma_max_dropped"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["passed"] == true);
}

TEST_CASE("cli verify and codim") {
  TempDir tmp;
  const std::string spec_path =
      tmp.write("j2.json", R"({"blocks":[{"kind":"Jordan","size":2}]})");

  CommandConfig cfg;
  cfg.command = CommandConfig::Command::Verify;
  cfg.spec_path = spec_path;
  cfg.format = CommandConfig::Format::Json;
  std::string out;
  CHECK(run_cli(cfg, &out) == 0);
  const Json report = Json::parse(out);
  CHECK(report["passed"] == true);
  CHECK(report["tangent_rank"] == 6);

  cfg.command = CommandConfig::Command::Codim;
  CHECK(run_cli(cfg, &out) == 0);
  const Json codim_report = Json::parse(out);
  CHECK(codim_report["pattern_codim"] == 2);
  CHECK(codim_report["kernel_codim"] == 2);
  CHECK(codim_report["agree"] == true);

  cfg.spec_path = tmp.write(
      "d3.json", R"({"blocks":[{"kind":"Delta","size":3,"mu":{"re":0.0,"im":1.0}}]})");
  CHECK(run_cli(cfg, &out) == 0);
  const Json d3_report = Json::parse(out);
  CHECK(d3_report["pattern_codim"] == 3);
  CHECK(d3_report["kernel_codim"] == 3);
}

TEST_CASE("cli pattern ascii output") {
  TempDir tmp;
  const std::string spec_path = tmp.write(
      "d3.json", R"({"blocks":[{"kind":"Delta","size":3,"mu":{"re":0.0,"im":1.0}}]})");
  CommandConfig cfg;
  cfg.command = CommandConfig::Command::Pattern;
  cfg.spec_path = spec_path;
  std::string out;
  CHECK(run_cli(cfg, &out) == 0);
  CHECK(out == "*..\n.o.\n...\n");
}

TEST_CASE("cli exit codes") {
  TempDir tmp;
  CommandConfig cfg;
  cfg.command = CommandConfig::Command::Verify;

  cfg.spec_path = tmp.write("broken.json", "{\"blocks\": [");
  CHECK(run_cli(cfg) == 1);

  cfg.spec_path = tmp.write(
      "unit.json", R"({"blocks":[{"kind":"H","size":1,"lambda":{"re":1.0,"im":0.0}}]})");
  CHECK(run_cli(cfg) == 2);

  // reduce that cannot converge: a far-away perturbation
  cfg.command = CommandConfig::Command::Reduce;
  cfg.spec_path = tmp.write("d1.json",
                            R"({"blocks":[{"kind":"Delta","size":1,"mu":{"re":1.0,"im":0.0}}]})");
  cfg.matrix_path =
      tmp.write("beyond.json", R"({"rows":1,"cols":1,"data":[[{"re":10.0,"im":0.0}]]})");
  CHECK(run_cli(cfg) == 4);

  cfg.matrix_path = tmp.write("eps.json",
                              R"({"rows":1,"cols":1,"data":[[{"re":0.0,"im":0.001}]]})");
  CHECK(run_cli(cfg) == 0);
}

TEST_CASE("cli split") {
  TempDir tmp;
  CommandConfig cfg;
  cfg.command = CommandConfig::Command::Split;
  cfg.format = CommandConfig::Format::Json;
  cfg.matrix_path =
      tmp.write("m.json", R"({"rows":1,"cols":1,"data":[[{"re":0.0,"im":1.0}]]})");
  std::string out;
  CHECK(run_cli(cfg, &out) == 0);
  const Json j = Json::parse(out);
  CHECK(j["h"]["data"][0][0]["re"] == 0.0);
  CHECK(j["k"]["data"][0][0]["re"] == 1.0);
}

TEST_CASE("suite streams json lines deterministically") {
  CommandConfig cfg;
  cfg.command = CommandConfig::Command::Suite;
  cfg.max_n = 2;
  cfg.trials = 2;
  cfg.seed = 7;
  cfg.format = CommandConfig::Format::Json;

  std::string first, second;
  CHECK(run_cli(cfg, &first) == 0);
  CHECK(run_cli(cfg, &second) == 0);
  CHECK(first == second);
  CHECK(!first.empty());

  // every line is a self-contained json object with an ok flag
  std::istringstream lines(first);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const Json j = Json::parse(line);
    CHECK(j["ok"] == true);
    ++count;
  }
  CHECK(count > 10);
}

TEST_CASE("random_case is deterministic and valid") {
  const auto [spec_a, e_a] = random_case(99, 5);
  const auto [spec_b, e_b] = random_case(99, 5);
  CHECK(to_json(spec_a) == to_json(spec_b));
  CHECK(diff(e_a, e_b) == 0.0);
  CHECK(spec_a.total_dim() <= 5);
  CHECK(spec_a.total_dim() >= 1);

  const Matrix a = assemble_canonical(spec_a);
  CHECK(std::abs(e_a.norm() - 1e-3 * a.norm()) <= 1e-12 * a.norm());

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto [spec, e] = random_case(derive_seed(4242, seed), 4);
    const DecompositionReport report = verify_direct_sum(
        assemble_canonical(spec), assemble_pattern(spec), 1e-8);
    CHECK(report.passed);
  }
}
