#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "hankelcert/cli.hpp"
#include "hankelcert/io.hpp"

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;

  hankelcert::io::json doc() const { return hankelcert::io::json::parse(out); }
};

CliResult run_cli(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"hankel"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  CliResult r;
  r.code = hankelcert::cli::run(static_cast<int>(argv.size()), argv.data(),
                                out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("cli: usage errors exit 1 and report on stderr") {
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"bogus"}).code == 1);
  CHECK(run_cli({"norm", "--nonsense"}).code == 1);

  const CliResult no_op = run_cli({"norm"});
  CHECK(no_op.code == 1);
  CHECK(no_op.err.find("error:") != std::string::npos);

  // Conflicting operator descriptions.
  CHECK(run_cli({"norm", "--set", "0,1", "--v", "1,1", "--a-list", "1"}).code == 1);
  CHECK(run_cli({"norm", "--set", "0,1", "--set-rule", "2^j", "--terms", "2",
                 "--v", "1,1"}).code == 1);
  CHECK(run_cli({"certify", "--set", "0,1", "--c", "0.5,0.5", "--v", "1,1"})
            .code == 1);

  // Sizes outside the materializable or dense-oracle range.
  CHECK(run_cli({"norm", "--a-list", "1", "--n", "99999999"}).code == 1);
  CHECK(run_cli({"norm", "--a-list", "1", "--n", "3000", "--method", "oracle"})
            .code == 1);

  // Missing symbol file.
  CHECK(run_cli({"norm", "--a", "no_such_file_77.txt"}).code == 1);
}

TEST_CASE("cli: help exits 0") {
  const CliResult r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("certify") != std::string::npos);
  CHECK(r.out.find("sharpness") != std::string::npos);
}

TEST_CASE("cli: norm on a sparse operator reports bounds") {
  const CliResult r =
      run_cli({"norm", "--set", "0,1,3,7", "--v", "1,1,1,1"});
  REQUIRE(r.code == 0);
  const auto doc = r.doc();
  CHECK(doc["schema"] == 1);
  CHECK(doc["command"] == "norm");
  CHECK(doc["n"] == 8);
  CHECK(doc["norm"].get<double>() == doctest::Approx(2.4959).epsilon(1e-3));
  CHECK(doc["l2"].get<double>() == 2.0);
  CHECK(doc["row_bound"].get<double>() == 6.0);
  CHECK(doc["two_l2_bound"].get<double>() == 4.0);
  CHECK(doc["ok"] == true);
  CHECK(doc["power"]["converged"] == true);
  CHECK(doc["agreement"].get<double>() < 1e-8);
}

TEST_CASE("cli: norm on a dense symbol") {
  const CliResult r = run_cli({"norm", "--a-list", "1"});
  REQUIRE(r.code == 0);
  const auto doc = r.doc();
  CHECK(doc["n"] == 1);
  CHECK(doc["norm"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(doc.contains("row_bound"));  // no sparse description given
}

TEST_CASE("cli: certify from contraction parameters") {
  const CliResult r =
      run_cli({"certify", "--set", "0,1,3,7", "--c", "0.5,0.5,0.5,0.5"});
  REQUIRE(r.code == 0);
  const auto doc = r.doc();
  CHECK(doc["command"] == "certify");
  CHECK(doc["method"] == "fold");
  CHECK(doc["ok"] == true);
  const auto& cert = doc["certificate"];
  CHECK(cert["T"].get<double>() == 1.0);
  CHECK(cert["N"] == 8);
  CHECK(cert["ok"] == true);
  REQUIRE(cert["u"].size() == 8);
  const std::vector<double> v = doc["v"].get<std::vector<double>>();
  REQUIRE(v.size() == 4);
  CHECK(v[0] == doctest::Approx(0.2109375).epsilon(1e-14));
  CHECK(v[1] == doctest::Approx(0.28125).epsilon(1e-14));
  CHECK(v[2] == doctest::Approx(0.375).epsilon(1e-14));
  CHECK(v[3] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("cli: certify from weights rescales to the certified constant") {
  const CliResult r =
      run_cli({"certify", "--set", "0,1,3", "--v", "0.3,0.4,0.5"});
  REQUIRE(r.code == 0);
  const auto doc = r.doc();
  CHECK(doc["ok"] == true);
  // |v|_2 = sqrt(0.5), so the certificate holds at sqrt(2) |v|_2 = 1.
  CHECK(doc["l2"].get<double>() ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(doc["certificate"]["T"].get<double>() ==
        doctest::Approx(1.0).epsilon(1e-12));
  const std::vector<double> v = doc["v"].get<std::vector<double>>();
  CHECK(v[0] == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(v[2] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("cli: certify via the series constructions") {
  // The operator for {0,1} with unit weights has norm (1+sqrt(5))/2.
  const CliResult ok = run_cli({"certify", "--set", "0,1", "--v", "1,1",
                                "--method", "geometric", "--T", "3"});
  CHECK(ok.code == 0);
  CHECK(ok.doc()["ok"] == true);

  const CliResult tight = run_cli({"certify", "--set", "0,1", "--v", "1,1",
                                   "--method", "asymmetric", "--T", "2"});
  CHECK(tight.code == 0);
  const auto doc = tight.doc();
  CHECK(doc["ok"] == true);
  CHECK(doc["certificate"]["u"] == doc["certificate"]["w"]);

  const CliResult fail = run_cli({"certify", "--set", "0,1", "--v", "1,1",
                                  "--method", "geometric", "--T", "1.2"});
  CHECK(fail.code == 2);
  CHECK(fail.err.find("certification failed") != std::string::npos);

  CHECK(run_cli({"certify", "--set", "0,1", "--v", "1,1",
                 "--method", "geometric"}).code == 1);  // --T missing
}

TEST_CASE("cli: fold emits the profile and cross-checks it") {
  const CliResult r = run_cli({"fold", "--set", "0,1,5", "--v", "1,0.5,0.25",
                               "--gap", "constant", "--gap-value", "0.8"});
  REQUIRE(r.code == 0);
  const auto doc = r.doc();
  CHECK(doc["command"] == "fold");
  CHECK(doc["gap_strategy"] == "constant");
  const std::vector<double> u = doc["u"].get<std::vector<double>>();
  const std::vector<double> expected{1.0, 0.5, 0.8, 0.8, 0.125, 0.25};
  REQUIRE(u.size() == expected.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    CHECK(u[i] == doctest::Approx(expected[i]).epsilon(1e-14));
  CHECK(doc["representable"] == 4);
  CHECK(doc["ok"] == true);

  CHECK(run_cli({"fold", "--set", "0,1,5", "--v", "1,0.5,0.25",
                 "--gap", "diagonal"}).code == 1);
}

TEST_CASE("cli: refold emits the trigonometric pair") {
  const CliResult r = run_cli({"refold", "--set", "0,1,3", "--v", "1,0.6,0.8"});
  REQUIRE(r.code == 0);
  const auto doc = r.doc();
  CHECK(doc["command"] == "refold");
  CHECK(doc["levels"] == 2);
  CHECK(doc["even"].size() == 2);
  CHECK(doc["odd"].size() == 2);
  REQUIRE(doc["f"].size() == 4);
  // f is sorted by frequency: coefficients 1, 0.6, 0.48, 0.8 at 0..3.
  CHECK(doc["f"][2][0] == 2);
  CHECK(doc["f"][2][1].get<double>() == doctest::Approx(0.48).epsilon(1e-12));
  CHECK(doc["check"]["ok"] == true);
  CHECK(doc["check"]["matched"] == 4);

  const CliResult minus = run_cli(
      {"refold", "--set", "0,1,3", "--v", "1,1,1", "--sign", "minus"});
  REQUIRE(minus.code == 0);
  CHECK_FALSE(minus.doc().contains("check"));

  const CliResult one_level =
      run_cli({"refold", "--set", "0,1,3", "--v", "1,0.6,0.8",
               "--levels", "1"});
  REQUIRE(one_level.code == 0);
  CHECK(one_level.doc()["even"].size() == 1);
  CHECK(one_level.doc()["odd"].size() == 1);
}

TEST_CASE("cli: multiplier conditions with optional verification") {
  const CliResult r =
      run_cli({"multiplier", "--a-list", "1,0.5,0.25,0.125"});
  REQUIRE(r.code == 0);
  const auto doc = r.doc();
  CHECK(doc["supsum2"].get<double>() == 0.25);
  CHECK(doc["sumsquaresum"].get<double>() == 0.390625);
  CHECK(doc["supdouble"].get<double>() == 0.328125);
  CHECK(doc["kothe_row_bound"].get<double>() ==
        doctest::Approx(3.074318057161611).epsilon(1e-14));

  const CliResult v = run_cli(
      {"multiplier", "--a-list", "1,0.5,0.25,0.125", "--verify", "--n", "4"});
  REQUIRE(v.code == 0);
  const auto vdoc = v.doc();
  CHECK(vdoc["factorization"]["ok"] == true);
  CHECK(vdoc["norm_leq_bound"] == true);
  CHECK(vdoc["ok"] == true);
}

TEST_CASE("cli: decompose splits into strongly lacunary parts") {
  const CliResult r = run_cli({"decompose", "--set-rule", "2^j", "--terms", "4"});
  REQUIRE(r.code == 0);
  const auto doc = r.doc();
  CHECK(doc["strongly_lacunary"] == false);
  CHECK(doc["hadamard_eps"].get<double>() == 1.0);
  CHECK(doc["dyadic_count_bound"] == 1);
  CHECK(doc["part_count"] == 2);
  CHECK(doc["parts"][0] == hankelcert::io::json::parse("[1, 4]"));
  CHECK(doc["parts"][1] == hankelcert::io::json::parse("[2, 8]"));
}

TEST_CASE("cli: sharpness table") {
  const CliResult r = run_cli({"sharpness", "--jmax", "3"});
  REQUIRE(r.code == 0);
  const auto doc = r.doc();
  REQUIRE(doc["rows"].size() == 4);
  CHECK(doc["rows"][1]["ratio"].get<double>() ==
        doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-9));
  CHECK(doc["rows"][3]["ratio"].get<double>() ==
        doctest::Approx(std::sqrt(1.6)).epsilon(1e-9));

  CHECK(run_cli({"sharpness"}).code == 1);  // --jmax is required
}

TEST_CASE("cli: csv to stdout replaces the json document") {
  const CliResult r = run_cli({"sharpness", "--jmax", "2", "--csv", "-"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "J,l2,norm,ratio,verified");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 3);
  CHECK(r.out.find("schema") == std::string::npos);

  const CliResult n = run_cli({"norm", "--a-list", "1", "--csv", "-"});
  REQUIRE(n.code == 0);
  CHECK(n.out.substr(0, n.out.find('\n')) == "n,norm,ok");
}

TEST_CASE("cli: csv to a file keeps the json document on stdout") {
  const std::string path = "cli_test_fold.csv";
  const CliResult r = run_cli({"fold", "--set", "0,1,3", "--v", "1,0.5,0.25",
                               "--csv", path.c_str()});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["schema"] == 1);  // stdout still carries the document
  std::ifstream file(path);
  REQUIRE(file.good());
  std::string header;
  std::getline(file, header);
  CHECK(header == "m,u");
  file.close();
  std::remove(path.c_str());

  CHECK(run_cli({"fold", "--set", "0,1", "--v", "1,1",
                 "--csv", "no_such_dir_x9/f.csv"}).code == 1);
}
