#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + BILLINGSLEY_CLI + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("billingsley_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("documented outputs") {
  auto r = cli("rho --u 2.0");
  CHECK(r.code == 0);
  CHECK(r.out == "0.306853\n");
  r = cli("psi --x 10 --y 2 --method brute");
  CHECK(r.code == 0);
  CHECK(r.out == "4\n");
  CHECK(cli("psi --x 10 --y 3").out == "7\n");
  CHECK(cli("rho --u 2.0 --digits 10").out == "0.3068528194\n");
  CHECK(cli("mertens --range 2 10").out == "1.176190\n");
}

TEST_CASE("exit codes") {
  CHECK(cli("").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("rho").code == 2);
  CHECK(cli("suite --name bogus").code == 2);
  CHECK(cli("mertens --x 10 --range 2 10").code == 2);
  CHECK(cli("psi --x 1e7.5 --y 2").code == 2);
  CHECK(cli("box --n 100 --box 0.5").code == 2);
  CHECK(cli("rho --u 25").code == 1);
  CHECK(cli("rho --u -1").code == 1);
  CHECK(cli("pd-box --box 1.2,0.1").code == 1);
  CHECK(cli("verify --box 0.2,0.3 --ladder 1000").code == 1);
  CHECK(cli("--help").code == 0);
}

TEST_CASE("output formats") {
  CHECK(cli("rho --u 2 --format csv").out == "u,rho\n2,0.3068528194400547\n");
  const auto j = nlohmann::json::parse(cli("rho --u 2 --format json").out);
  CHECK(j["command"] == "rho");
  CHECK(j.contains("version"));
  CHECK(j["config"]["u"] == 2.0);
  CHECK(j["results"]["rho"].get<double>() == doctest::Approx(0.3068528194400547));
}

TEST_CASE("box counts as JSON") {
  auto j = nlohmann::json::parse(cli("box --n 100 --box 0.5,0.4").out);
  CHECK(j["count"] == 47);
  CHECK(j["total"] == 100);
  CHECK_FALSE(j.contains("std_err"));
  j = nlohmann::json::parse(cli("box --n 1000 --box 0.5,0.3 --method psi").out);
  CHECK(j["count"] == 398);
  j = nlohmann::json::parse(cli("box --n 1e5 --box 0.5,0.1 --method mc --samples 1000").out);
  CHECK(j["total"] == 1000);
  CHECK(j.contains("std_err"));
}

TEST_CASE("seeded commands are byte-deterministic") {
  for (const std::string args :
       {"box --n 1e5 --box '0.45,0.1;0.15,0.1' --method mc --samples 20000 --seed 7",
        "sample-factors --n 1e5 --count 200 --k 3 --seed 3",
        "pd-sample --count 200 --k 4 --seed 5"}) {
    CAPTURE(args);
    const auto a = cli(args);
    CHECK(a.code == 0);
    CHECK(!a.out.empty());
    CHECK(cli(args).out == a.out);
    CHECK(cli(args + " --threads 3").out == a.out);
  }
  CHECK(cli("pd-sample --count 20 --seed 6").out != cli("pd-sample --count 20 --seed 5").out);
}

TEST_CASE("--out mirrors standard output") {
  const auto file = scratch("factors.csv");
  const auto r = cli("sample-factors --n 1e4 --count 20 --k 2 --seed 1 --out " + file.string());
  CHECK(r.code == 0);
  CHECK(r.out.rfind("N,p1,p2,L1,L2\n", 0) == 0);
  CHECK(slurp(file) == r.out);

  const auto ladder = scratch("ladder.csv");
  const auto l = cli("psi-ladder --t 2 --nmax 1e6 --out " + ladder.string());
  CHECK(l.out.rfind("n,psi,psi_over_n,rho,abs_err\n100,", 0) == 0);
  CHECK(l.out.find("\n1000000,344299,") != std::string::npos);
  CHECK(slurp(ladder) == l.out);
  fs::remove_all(file.parent_path());
}

TEST_CASE("tables, densities and the criterion") {
  const auto t = cli("rho-table --umax 2 --step 0.01");
  CHECK(t.out.rfind("u,rho\n0,1\n", 0) == 0);
  CHECK(cli("pd-density --point 0.6").out == "1.666667\n");
  CHECK(cli("pd-density --point 0.2,0.3").out == "0.000000\n");
  CHECK(cli("pd-box --box 0.5,0.1").out == "0.182322\n");

  const auto report = scratch("verify.json");
  const auto v = cli("verify --box 0.5,0.1 --ladder 1e4,1e5 --report " + report.string());
  CHECK(v.code == 0);
  const auto j = nlohmann::json::parse(slurp(report));
  CHECK(j["command"] == "verify");
  CHECK(j["results"]["admissible"] == true);
  CHECK(j["results"]["R"] == 2.0);
  CHECK(j["results"]["entries"].size() == 2);
  CHECK(j["results"]["entries"][0]["method"] == "exact");
  CHECK(v.out == slurp(report));
  fs::remove_all(report.parent_path());
}

TEST_CASE("cache directory") {
  const auto dir = scratch("cache");
  CHECK(cli("rho --u 3 --umax 4 --cache-dir " + dir.string()).out == "0.048608\n");
  CHECK(fs::exists(dir / "rho_table.csv"));
  CHECK(cli("rho --u 3 --umax 4 --cache-dir " + dir.string()).out == "0.048608\n");
  fs::remove(dir / "rho_table.csv");
  CHECK(cli("rho --u 3.5 --umax 4", "BILLINGSLEY_CACHE=" + dir.string()).out == "0.016230\n");
  CHECK(fs::exists(dir / "rho_table.csv"));
  fs::remove_all(dir.parent_path());
}
