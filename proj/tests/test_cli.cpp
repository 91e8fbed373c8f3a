#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const char* cli = std::getenv("RELGAS_CLI");
  REQUIRE_MESSAGE(cli != nullptr, "RELGAS_CLI must point at the relgas executable");
  const std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream l(line);
    for (std::string c; std::getline(l, c, ',');) cells.push_back(c);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

const std::string kHeader = "T,mu,mass,stat,method,lambda,nu,P,n,rho_sc,s,eps,err_est,flags";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("eval") {
    const Run a = run("eval --T 200 --mu 0 --mass 0 --stat fermion --format json");
    CHECK(a.code == 0);
    const nlohmann::json j = nlohmann::json::parse(a.out);
    CHECK(j["P_T4"].get<double>() == doctest::Approx(0.095954487232813204).epsilon(1e-15));

    const Run b = run("eval --T 1 --mu 0 --mass 100 --stat boson --method bessel --format json");
    const Run q = run("eval --T 1 --mu 0 --mass 100 --stat boson --method quadrature --format json");
    REQUIRE(b.code == 0);
    REQUIRE(q.code == 0);
    const double pb = nlohmann::json::parse(b.out)["P"].get<double>();
    const double pq = nlohmann::json::parse(q.out)["P"].get<double>();
    CHECK(std::abs(pb - pq) <= 1e-9 * std::abs(pq));

    const Run e = run("eval --T 1 --mu 2 --mass 1 --stat boson --format json");
    CHECK(e.code == 2);
    CHECK(nlohmann::json::parse(e.out)["error"].get<std::string>() == "mu exceeds mass for boson");
  }

  TEST_CASE("table") {
    const Run t = run("table --mass 1.5 --stat fermion --T-min 0.5 --T-max 2 --T-count 3 --mu-min -1 --mu-max 1 "
                      "--mu-count 3");
    REQUIRE(t.code == 0);
    const auto rows = csv(t.out);
    REQUIRE(rows.size() == 10);
    CHECK(t.out.substr(0, kHeader.size()) == kHeader);
    CHECK(std::stod(rows[1][0]) == 0.5);
    CHECK(std::stod(rows[1][1]) == -1.0);
    CHECK(std::stod(rows[2][1]) == 0.0);

    const Run one = run("table --mass 1 --T-min 1 --T-max 1 --T-count 1 --mu-min 0.3 --mu-max 0.3 --mu-count 1");
    const Run ev = run("eval --T 1 --mu 0.3 --mass 1 --format csv");
    CHECK(one.out == ev.out);

    const Run js = run("table --mass 1.5 --stat fermion --T-min 0.5 --T-max 2 --T-count 3 --mu-min -1 --mu-max 1 "
                       "--mu-count 3 --format json");
    const nlohmann::json j = nlohmann::json::parse(js.out);
    REQUIRE(j.size() == 9);
    for (std::size_t i = 0; i < 9; ++i) {
      CHECK(j[i]["P"].get<double>() == std::stod(rows[i + 1][7]));
      CHECK(j[i]["eps"].get<double>() == std::stod(rows[i + 1][11]));
      CHECK(j[i]["method"].get<std::string>() == rows[i + 1][4]);
    }

    const Run bos = run("table --mass 1 --stat boson --T-min 1 --T-max 1 --T-count 1 --mu-min 0 --mu-max 2 "
                        "--mu-count 3");
    CHECK(bos.code == 0);
    const auto br = csv(bos.out);
    REQUIRE(br.size() == 4);
    CHECK(br[3].back().find("mu exceeds mass") != std::string::npos);
  }

  TEST_CASE("verify exit codes") {
    CHECK(run("verify --suite parity --quiet").code == 0);
    CHECK(run("verify --suite nosuch").code != 0);
  }
}
