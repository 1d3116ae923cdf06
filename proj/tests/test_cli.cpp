// End-to-end tests of the bhhl command line tool: exit codes, content checks
// against library values, and byte-exact golden files for representative
// invocations of every subcommand. Set BHHL_UPDATE_GOLDEN=1 to regenerate the
// goldens from the current binary (inspect the diff before committing).
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "bhhl/tensor.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

namespace {

using nlohmann::json;

std::string shortest(double v) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

struct Cli {
  std::string dir;
  Cli() : dir(testsupport::make_temp_dir("bhhl_cli")) {}

  testsupport::CliResult run(const std::string& args) const {
    return testsupport::run_cli(BHHL_CLI_PATH, args, dir);
  }

  // Writes the 2x2 sign-matrix fixture; returns the cwd-relative name.
  std::string write_t2() const {
    bhhl::CoefficientTensor::real_tensor(2, 2, {1.0, 1.0, 1.0, -1.0})
        .save(dir + "/t2.json");
    return "t2.json";
  }

  std::string write_zero() const {
    bhhl::CoefficientTensor::real_tensor(2, 2, {0.0, 0.0, 0.0, 0.0})
        .save(dir + "/zero.json");
    return "zero.json";
  }

  std::string write_wide() const {
    bhhl::CoefficientTensor::real_tensor(2, 25,
                                         std::vector<double>(625, 1.0))
        .save(dir + "/wide.json");
    return "wide.json";
  }
};

void golden_check(const std::string& name, const testsupport::CliResult& r) {
  REQUIRE(r.exit_code == 0);
  const std::string path = std::string(BHHL_GOLDEN_DIR) + "/" + name;
  if (std::getenv("BHHL_UPDATE_GOLDEN") != nullptr) {
    std::ofstream out(path, std::ios::binary);
    out << r.out;
    MESSAGE("updated golden ", path);
    return;
  }
  const std::string want = testsupport::read_file(path);
  REQUIRE_MESSAGE(!want.empty(), "missing golden file ", path,
                  " (run with BHHL_UPDATE_GOLDEN=1 to create)");
  CHECK_MESSAGE(r.out == want, "golden mismatch: ", name, "\n--- got ---\n",
                r.out, "--- want ---\n", want);
}

}  // namespace

TEST_CASE("exit code 2: argument and domain errors") {
  Cli cli;
  CHECK(cli.run("bh-const --m 1").exit_code == 2);
  CHECK(cli.run("bh-const").exit_code == 2);           // missing required --m
  CHECK(cli.run("no-such-command").exit_code == 2);
  CHECK(cli.run("").exit_code == 2);                   // subcommand required
  const auto hl = cli.run("hl-const --m 2 --p 3");
  CHECK(hl.exit_code == 2);
  CHECK(hl.err.find("p must be >= 2m") != std::string::npos);
  CHECK(cli.run("hl-const --m 2 --p abc").exit_code == 2);
  CHECK(cli.run("hl-const --m 2 --p -5").exit_code == 2);
  CHECK(cli.run("bh-const --m 2 --field quaternion").exit_code == 2);
  CHECK(cli.run("bh-const --m 2 --format bogus").exit_code == 2);
  CHECK(cli.run("bh-const --m 2 --cap 29").exit_code == 2);
  CHECK(cli.run("bh-const --m 2 --cap 0").exit_code == 2);
  CHECK(cli.run("scan --m 2 --p-min 3 --p-max 10 --step 1").exit_code == 2);
  CHECK(cli.run("scan --m 2 --p-min 8 --p-max 4 --step 1").exit_code == 2);
  CHECK(cli.run("scan --m 2 --p-min 4 --p-max 8 --step 0").exit_code == 2);
  CHECK(cli.run("gen-const --q 4x3 --p inf").exit_code == 2);
  CHECK(cli.run("gen-const --q 4/0 --p inf").exit_code == 2);
}

TEST_CASE("exit code 0 for help") {
  Cli cli;
  CHECK(cli.run("--help").exit_code == 0);
  CHECK(cli.run("bh-const --help").exit_code == 0);
}

TEST_CASE("exit code 3: admissibility violations") {
  Cli cli;
  const auto sum = cli.run("gen-const --q 1.0,1.0 --p 8");
  CHECK(sum.exit_code == 3);
  CHECK(sum.err.find("exponent sum") != std::string::npos);
  CHECK(cli.run("gen-const --q 0.5,2.0 --p inf").exit_code == 3);
  const auto s_low = cli.run("interpolate --q 4/3,4/3 --p inf --s 1.3");
  CHECK(s_low.exit_code == 3);
  CHECK(s_low.err.find("s must exceed max q") != std::string::npos);
  CHECK(cli.run("interpolate --q 4/3,4/3 --p inf --s 2.2").exit_code == 3);
  // p = 2m is outside the equality-mode admissible set.
  CHECK(cli.run("gen-const --q 2.0,2.0 --p 4").exit_code == 3);
}

TEST_CASE("exit code 4: input-data errors") {
  Cli cli;
  const std::string zero = cli.write_zero();
  const auto z = cli.run("verify --tensor " + zero + " --q 4/3,4/3 --p inf");
  CHECK(z.exit_code == 4);
  CHECK(z.err.find("identically zero") != std::string::npos);

  const std::string t2 = cli.write_t2();
  const auto mis = cli.run("verify --tensor " + t2 + " --q 4/3 --p inf");
  CHECK(mis.exit_code == 4);
  CHECK(mis.err.find("dimension mismatch") != std::string::npos);

  const auto missing = cli.run("verify --tensor nope.json --q 4/3,4/3 --p inf");
  CHECK(missing.exit_code == 4);
  CHECK(missing.err.find("cannot open") != std::string::npos);

  std::ofstream(cli.dir + "/garbage.json") << "{not json";
  CHECK(cli.run("verify --tensor garbage.json --q 4/3,4/3 --p inf").exit_code ==
        4);
}

TEST_CASE("exit code 5: enumeration cap") {
  Cli cli;
  const std::string wide = cli.write_wide();
  const auto v = cli.run("verify --tensor " + wide + " --q 4/3,4/3 --p inf");
  CHECK(v.exit_code == 5);
  CHECK(v.err.find("cap") != std::string::npos);
  CHECK(cli.run("search --m 2 --n 25 --p inf --q 4/3,4/3 --iters 10")
            .exit_code == 5);
  // Raising the cap within the hard limit clears the verify case.
  CHECK(cli.run("verify --tensor " + wide + " --q 4/3,4/3 --p inf --cap 25")
            .exit_code == 0);
}

TEST_CASE("bh-const table output carries the known bilinear values") {
  Cli cli;
  const auto r = cli.run("bh-const --m 2");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find(shortest(std::sqrt(2.0))) != std::string::npos);
  CHECK(r.out.find("1.6740355907069187") != std::string::npos);  // envelope
  CHECK(r.out.find("BH_PRODUCT") != std::string::npos);
  CHECK(r.out.find("BH_LOWER") != std::string::npos);  // real field default
  const auto c = cli.run("bh-const --m 2 --field complex");
  REQUIRE(c.exit_code == 0);
  // 2/sqrt(pi) to 16 significant digits; the last digit is ulp-sensitive.
  CHECK(c.out.find("1.128379167095512") != std::string::npos);
  CHECK(c.out.find("BH_LOWER") == std::string::npos);  // complex: no lower bound
}

TEST_CASE("table and json formats agree on the numbers") {
  Cli cli;
  const auto j = cli.run("bh-const --m 5 --field complex --format json");
  REQUIRE(j.exit_code == 0);
  const json doc = json::parse(j.out);
  CHECK(doc.at("command") == "bh-const");
  CHECK(doc.at("m") == 5);
  const double upper = doc.at("bounds")[0].at("value").get<double>();
  const auto t = cli.run("bh-const --m 5 --field complex");
  REQUIRE(t.exit_code == 0);
  CHECK(t.out.find(shortest(upper)) != std::string::npos);
}

TEST_CASE("hl-const picks the p-free bound only above the threshold") {
  Cli cli;
  const auto below = cli.run("hl-const --m 3 --p 24 --field complex --format json");
  REQUIRE(below.exit_code == 0);
  const json db = json::parse(below.out);
  CHECK(db.at("threshold") == 24);
  CHECK(db.at("above_threshold") == false);
  CHECK(db.at("best").at("value").get<double>() ==
        doctest::Approx(1.2318657506978554).epsilon(1e-12));
  // p-free row is present (p > 2m) but flagged invalid at p = threshold.
  bool saw_invalid_p_free = false;
  for (const auto& b : db.at("bounds")) {
    if (b.at("id") == "HL_P_FREE") {
      saw_invalid_p_free = !b.at("valid").get<bool>();
    }
  }
  CHECK(saw_invalid_p_free);

  const auto above = cli.run("hl-const --m 3 --p 25 --field complex --format json");
  REQUIRE(above.exit_code == 0);
  const json da = json::parse(above.out);
  CHECK(da.at("above_threshold") == true);
  CHECK(da.at("best").at("value").get<double>() ==
        doctest::Approx(1.218375437007419).epsilon(1e-12));
  CHECK(da.at("best").at("note").get<std::string>().find("p_free") !=
        std::string::npos);
}

TEST_CASE("hl-const at p = inf omits the lower bound and keeps p-free valid") {
  Cli cli;
  const auto r = cli.run("hl-const --m 2 --p inf --format json");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("lower").is_null());
  CHECK(doc.at("p") == "inf");
  REQUIRE(doc.at("bounds").size() == 3);
  for (const auto& b : doc.at("bounds")) {
    CHECK(b.at("valid") == true);
  }
}

TEST_CASE("gen-const reports the prior only for complex case (i)") {
  Cli cli;
  const auto ci = cli.run("gen-const --q 4/3,4/3 --p inf --field complex --format json");
  REQUIRE(ci.exit_code == 0);
  const json dc = json::parse(ci.out);
  CHECK(dc.at("case") == "i");
  CHECK(dc.at("bound").at("value").get<double>() ==
        doctest::Approx(1.1283791670955126).epsilon(1e-12));
  REQUIRE(!dc.at("prior").is_null());
  CHECK(dc.at("prior").at("value").get<double>() ==
        doctest::Approx(1.1283791670955126).epsilon(1e-12));

  const auto real_run = cli.run("gen-const --q 4/3,4/3 --p inf --field real --format json");
  REQUIRE(real_run.exit_code == 0);
  CHECK(json::parse(real_run.out).at("prior").is_null());

  const auto cii = cli.run("gen-const --q 8/5,8/5,4/3 --p inf --field complex --format json");
  REQUIRE(cii.exit_code == 0);
  const json d2 = json::parse(cii.out);
  CHECK(d2.at("case") == "ii");
  CHECK(d2.at("prior").is_null());
  CHECK(d2.at("bound").at("value").get<double>() ==
        doctest::Approx(1.2318657506978559).epsilon(1e-12));
}

TEST_CASE("interpolate defaults s to the midpoint and reports residuals") {
  Cli cli;
  const auto r = cli.run("interpolate --q 4/3,4/3 --p inf --format json");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("s").get<double>() == doctest::Approx(5.0 / 3.0).epsilon(1e-14));
  CHECK(doc.at("s_source") == "default");
  CHECK(doc.at("lambda").get<double>() ==
        doctest::Approx(10.0 / 9.0).epsilon(1e-13));
  CHECK(std::abs(doc.at("theta_sum").get<double>() - 1.0) <= 1e-12);
  CHECK(doc.at("max_residual").get<double>() <= 1e-10);

  const auto given = cli.run("interpolate --q 4/3,4/3 --p inf --s 1.8 --format json");
  REQUIRE(given.exit_code == 0);
  const json dg = json::parse(given.out);
  CHECK(dg.at("s_source") == "given");
  CHECK(dg.at("s").get<double>() == doctest::Approx(1.8).epsilon(1e-14));
}

TEST_CASE("verify passes the 2x2 sign matrix at the critical exponents") {
  Cli cli;
  const std::string t2 = cli.write_t2();
  const auto r = cli.run("verify --tensor " + t2 + " --q 4/3,4/3 --p inf");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  // sqrt(2) up to ulp noise in the last printed digit.
  CHECK(r.out.find("1.414213562373095") != std::string::npos);

  const auto j = cli.run("verify --tensor " + t2 + " --q 4/3,4/3 --p inf --format json");
  REQUIRE(j.exit_code == 0);
  const json doc = json::parse(j.out);
  CHECK(doc.at("pass") == true);
  CHECK(doc.at("ratio").get<double>() ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
  CHECK(doc.at("bound").at("value").get<double>() ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
  CHECK(doc.at("denominator").at("kind") == "EXACT");

  // Finite p goes through the Hoelder denominator.
  const auto f = cli.run("verify --tensor " + t2 + " --q 1.6,1.6 --p 8 --format json");
  REQUIRE(f.exit_code == 0);
  CHECK(json::parse(f.out).at("denominator").at("kind") == "UPPER_BOUND");
}

TEST_CASE("scan emits csv by default with p_free populated past the threshold") {
  Cli cli;
  const auto r = cli.run("scan --m 3 --p-min 7 --p-max 30 --step 1");
  REQUIRE(r.exit_code == 0);
  std::istringstream in(r.out);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "m,p,legacy,p_dependent,p_free,best,lower,above_threshold");
  int rows = 0;
  while (std::getline(in, line)) {
    REQUIRE(!line.empty());
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      cells.push_back(cell);
    }
    // A trailing empty p_free cell still yields 8 fields.
    REQUIRE(cells.size() == 8);
    CHECK(cells[0] == "3");
    const double p = std::strtod(cells[1].c_str(), nullptr);
    const bool above = p > 24.0;
    CHECK(cells[7] == (above ? "1" : "0"));
    CHECK(cells[4].empty() == !above);
    if (above) {
      const double pf = std::strtod(cells[4].c_str(), nullptr);
      CHECK(pf == doctest::Approx(1.6817928305074292).epsilon(1e-12));
    }
    ++rows;
  }
  CHECK(rows == 24);  // p = 7..30 inclusive
}

TEST_CASE("scan format switches") {
  Cli cli;
  const auto t = cli.run("scan --m 2 --p-min 4 --p-max 6 --step 1 --format table");
  REQUIRE(t.exit_code == 0);
  CHECK(t.out.find("p_dependent") != std::string::npos);
  CHECK(t.out.find(',') == std::string::npos);  // aligned columns, no csv
  const auto j = cli.run("scan --m 2 --p-min 4 --p-max 6 --step 1 --format json");
  REQUIRE(j.exit_code == 0);
  const json doc = json::parse(j.out);
  CHECK(doc.at("rows").size() == 3);
  CHECK(doc.at("rows")[0].at("p_free").is_null());  // p = 4 = 2m
  CHECK(doc.at("threshold").get<double>() == 4.0);
  CHECK(doc.at("rows")[1].at("p_free").is_null() == false);  // p = 5 > 4
}

TEST_CASE("search reaches sqrt(2) on the bilinear sign problem") {
  Cli cli;
  const auto r = cli.run(
      "search --m 2 --n 2 --p inf --q 4/3,4/3 --iters 10000 --seed 7 --format json");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("ratio").get<double>() >= 1.4142135623730951 - 1e-7);
  REQUIRE(!doc.at("bound").is_null());
  CHECK(doc.at("gap").get<double>() >= -1e-9);
  CHECK(doc.at("seed") == 7);
  CHECK(doc.at("evaluations").get<std::int64_t>() >= 10000);
  CHECK(doc.at("tensor").at("m") == 2);
  CHECK(doc.at("tensor").at("n") == 2);
}

TEST_CASE("search output is deterministic per seed") {
  Cli cli;
  const std::string cmd =
      "search --m 2 --n 2 --p inf --q 4/3,4/3 --iters 1500 --seed 11";
  const auto a = cli.run(cmd);
  const auto b = cli.run(cmd);
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(a.out == b.out);
  const auto c = cli.run(
      "search --m 2 --n 2 --p inf --q 4/3,4/3 --iters 1500 --seed 12");
  REQUIRE(c.exit_code == 0);  // different seed still succeeds
}

TEST_CASE("--out writes the same bytes that stdout would carry") {
  Cli cli;
  const auto direct = cli.run("bh-const --m 3 --format json");
  REQUIRE(direct.exit_code == 0);
  const auto filed = cli.run("bh-const --m 3 --format json --out result.json");
  REQUIRE(filed.exit_code == 0);
  CHECK(filed.out.empty());
  CHECK(testsupport::read_file(cli.dir + "/result.json") == direct.out);
}

TEST_CASE("golden outputs") {
  Cli cli;
  const std::string t2 = cli.write_t2();
  golden_check("bh_const_table.txt", cli.run("bh-const --m 3"));
  golden_check("bh_const_json.txt", cli.run("bh-const --m 3 --format json"));
  golden_check("bh_const_csv.txt", cli.run("bh-const --m 3 --format csv"));
  golden_check("hl_const_table.txt",
               cli.run("hl-const --m 3 --p 24 --field complex"));
  golden_check("gen_const_table.txt",
               cli.run("gen-const --q 8/5,8/5,4/3 --p inf --field complex"));
  golden_check("interpolate_table.txt",
               cli.run("interpolate --q 4/3,4/3 --p inf"));
  golden_check("verify_table.txt",
               cli.run("verify --tensor " + t2 + " --q 4/3,4/3 --p inf"));
  golden_check("scan_csv.txt",
               cli.run("scan --m 2 --p-min 4 --p-max 8 --step 2"));
  golden_check(
      "search_json.txt",
      cli.run("search --m 2 --n 2 --p inf --q 4/3,4/3 --iters 2000 --seed 7 "
              "--format json"));
}
