#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lrcolor/commands.hpp"
#include "lrcolor/error.hpp"
#include "lrcolor/report.hpp"
#include "lrcolor/returns.hpp"
#include "lrcolor/spec_file.hpp"

using namespace lrcolor;
using nlohmann::json;

namespace {

  std::filesystem::path data(char const* name) {
    return std::filesystem::path(LRCOLOR_TEST_DATA) / name;
  }

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run(RunConfig config) {
    std::ostringstream out, err;
    int const          code = run_command(config, out, err);
    return {code, out.str(), err.str()};
  }

  RunConfig config(std::string command, char const* spec) {
    RunConfig c;
    c.command   = std::move(command);
    c.spec_path = data(spec);
    return c;
  }

}  // namespace

TEST_CASE("gen") {
  auto c = config("gen", "fibonacci.yaml");
  c.n    = 13;
  auto r = run(c);
  CHECK(r.code == kExitOk);
  CHECK(r.out == "alphabet: a b\nabaababaabaab\n");

  c.n = 0;
  r   = run(c);
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());

  c.format = ReportFormat::Machine;
  r        = run(c);
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());

  auto tm = config("gen", "thue_morse.yaml");
  tm.n    = 8;
  CHECK(run(tm).out == "alphabet: a b\nabbabaab\n");

  auto ep = config("gen", "prefixed_periodic.yaml");
  ep.n    = 6;
  CHECK(run(ep).out.find("cababa") != std::string::npos);
}

TEST_CASE("spec errors") {
  auto c = config("gen", "missing_images.yaml");
  auto r = run(c);
  CHECK(r.code == kExitError);
  CHECK(r.err.find("images") != std::string::npos);

  auto lit = config("gen", "short_literal.yaml");
  lit.n    = 40;
  r        = run(lit);
  CHECK(r.code == kExitError);
  CHECK(r.err.find("LiteralExhausted") != std::string::npos);

  CHECK_THROWS_AS((void) parse_word_spec("kind: sturmian\nalphabet: [a, b]\n", "x"), Error);
  CHECK_THROWS_AS((void) parse_word_spec("kind: nonsense\n", "x"), Error);
  CHECK_THROWS_AS((void) parse_word_spec("kind: [", "x"), Error);
}

TEST_CASE("returns") {
  auto c = config("returns", "fibonacci.yaml");
  c.n    = 2;
  auto r = run(c);
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("0: aba, 1: ab") != std::string::npos);
  CHECK(r.out.find("derived: 0 1 0 0 1") != std::string::npos);

  auto periodic = config("returns", "periodic_ab.yaml");
  periodic.n    = 2;
  periodic.format = ReportFormat::Machine;
  r             = run(periodic);
  CHECK(r.code == kExitOk);
  CHECK(json::parse(r.out)["returns"] == json::array({"ab"}));

  auto narrow   = config("returns", "fibonacci.yaml");
  narrow.n      = 2;
  narrow.window = 3;
  r             = run(narrow);
  CHECK(r.code == kExitError);
  CHECK(r.err.find("WindowTooSmall") != std::string::npos);
}

TEST_CASE("verify exit codes") {
  auto c = config("verify", "fibonacci.yaml");
  c.n    = 200;
  CHECK(run(c).code == kExitOk);

  auto neg     = config("verify", "fibonacci.yaml");
  neg.n        = 10;
  neg.h        = 2;
  neg.coloring = ColoringChoice::Constant;
  auto r       = run(neg);
  CHECK(r.code == kExitNegative);
  CHECK(r.out.find("COUNTEREXAMPLE") != std::string::npos);

  auto small   = config("verify", "fibonacci.yaml");
  small.n      = 200;
  small.window = 100;
  r            = run(small);
  CHECK(r.code == kExitError);
  CHECK(r.err.find("BufferTooShort") != std::string::npos);

  auto periodic = config("verify", "periodic_ab.yaml");
  periodic.n    = 50;
  periodic.format = ReportFormat::Machine;
  r             = run(periodic);
  CHECK(r.code == kExitNegative);
  auto doc = json::parse(r.out);
  CHECK(doc["aperiodicity_screen"]["detected_period"] == 2);
  CHECK(doc["lemma_audit"]["power_free"] == false);

  auto fib_short   = config("verify", "fibonacci.yaml");
  fib_short.n      = 10;
  fib_short.format = ReportFormat::Machine;
  doc              = json::parse(run(fib_short).out);
  CHECK(doc["aperiodicity_screen"]["detected_period"].is_null());
}

TEST_CASE("ramsey") {
  auto c     = config("ramsey", "fibonacci.yaml");
  c.n        = 400;
  c.coloring = ColoringChoice::FirstLetter;
  auto r     = run(c);
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("verified") != std::string::npos);

  auto constant     = config("ramsey", "fibonacci.yaml");
  constant.n        = 30;
  constant.t        = 5;
  constant.coloring = ColoringChoice::Constant;
  constant.format   = ReportFormat::Machine;
  r                 = run(constant);
  CHECK(r.code == kExitOk);
  auto const doc = json::parse(r.out);
  CHECK(doc["tail"]["start"] == 0);
  CHECK(doc["tail"]["parts"] == json::array({1, 1, 1, 1, 1}));

  c.n = 20;
  c.t = 30;
  r   = run(c);
  CHECK(r.code == kExitNegative);
  CHECK(r.out.find("horizon insufficient") != std::string::npos);
}

TEST_CASE("machine reports validate") {
  std::vector<RunConfig> configs;
  for (auto command : {"gen", "returns", "estimate-k", "color", "verify", "ramsey"}) {
    auto c   = config(command, "fibonacci.yaml");
    c.format = ReportFormat::Machine;
    if (std::string(command) == "ramsey") {
      c.n = 300;
    }
    configs.push_back(c);
  }
  auto neg     = config("verify", "fibonacci.yaml");
  neg.format   = ReportFormat::Machine;
  neg.n        = 10;
  neg.h        = 2;
  neg.coloring = ColoringChoice::Constant;
  configs.push_back(neg);
  auto tm   = config("verify", "thue_morse.yaml");
  tm.format = ReportFormat::Machine;
  configs.push_back(tm);

  for (auto const& c : configs) {
    CAPTURE(c.command);
    auto const r = run(c);
    CHECK(r.code != kExitError);
    auto const doc = json::parse(r.out);
    CHECK(doc["command"] == c.command);
    CHECK(validate_machine_report(doc).empty());
  }

  CHECK_FALSE(validate_machine_report(json::array()).empty());
  CHECK_FALSE(validate_machine_report(json{{"command", "verify"}}).empty());
  auto bad = json::parse(run(configs[4]).out);
  bad["status"] = "counterexample";
  CHECK_FALSE(validate_machine_report(bad).empty());
}

TEST_CASE("verify is deterministic apart from timing") {
  auto c   = config("verify", "thue_morse.yaml");
  c.format = ReportFormat::Machine;
  auto a   = run(c).out;
  auto b   = run(c).out;
  CHECK(strip_timing(a) == strip_timing(b));
  CHECK(strip_timing(a).find("timing") == std::string::npos);

  c.parallel = true;
  CHECK(strip_timing(run(c).out) == strip_timing(a));
}

TEST_CASE("--out writes the report to a file") {
  auto const path = std::filesystem::temp_directory_path() / "lrcolor_cli_out.txt";
  auto       c    = config("gen", "fibonacci.yaml");
  c.n             = 5;
  c.out           = path;
  auto r          = run(c);
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string   text((std::istreambuf_iterator<char>(in)), {});
  CHECK(text == "alphabet: a b\nabaab\n");
  std::filesystem::remove(path);
}

TEST_CASE("gen output round-trips through a literal spec") {
  auto c   = config("gen", "sturmian_sqrt2.yaml");
  c.n      = 3000;
  c.format = ReportFormat::Machine;
  auto doc = json::parse(run(c).out);

  auto const original = load_word_spec(data("sturmian_sqrt2.yaml"));
  auto const alpha    = alphabet_of(original.source);
  auto const copy     = parse_word_spec(
      literal_spec_text("copy", alpha, doc["prefix"].get<std::string>()), "copy");

  auto const x = prefix(original.source, 3000);
  auto const y = prefix(copy.source, 3000);
  CHECK(x.data() == y.data());
  for (std::size_t len : {1, 2, 5, 12, 29}) {
    auto const sx = return_system(x, len, x.size());
    auto const sy = return_system(y, len, y.size());
    CHECK(sx.returns == sy.returns);
    CHECK(sx.derived == sy.derived);
  }
}
