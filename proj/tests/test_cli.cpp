#include <doctest.h>

#include <cli.hpp>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

auto run(std::vector<std::string> args) -> Result {
  args.insert(args.begin(), "orbit-census");
  std::ostringstream out, err;
  const int code = orbitcensus::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

auto slurp(const fs::path& p) -> std::string {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("orbit-census-test-" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  [[nodiscard]] auto str() const -> std::string { return path_.string(); }
  [[nodiscard]] auto operator/(const std::string& name) const -> fs::path { return path_ / name; }

 private:
  fs::path path_;
};

auto drop_engine(const std::string& csv) -> std::string {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.rfind("# engine=", 0) == 0) continue;
    for (const char* e : {",brute,", ",best,"}) {
      if (const auto pos = line.find(e); pos != std::string::npos) line.replace(pos, std::strlen(e), ",*,");
    }
    out += line + '\n';
  }
  return out;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("census writes a file and a summary") {
    TempDir dir;
    const auto r = run({"census", "--n", "3", "--p", "2", "--out", dir.str()});
    CHECK(r.code == 0);
    CHECK(r.out.find("clusters=4 max_cluster=3 Z_2=20") != std::string::npos);
    CHECK(fs::exists(dir / "census_n3_p2.csv"));
  }

  TEST_CASE("engines agree byte for byte apart from the engine field") {
    TempDir a, b;
    REQUIRE(run({"census", "--n", "12", "--p", "3", "--engine", "brute", "--out", a.str()}).code == 0);
    REQUIRE(run({"census", "--n", "12", "--p", "3", "--engine", "best", "--out", b.str()}).code == 0);
    const auto x = slurp(a / "census_n12_p3.csv");
    const auto y = slurp(b / "census_n12_p3.csv");
    CHECK(x != y);
    CHECK(drop_engine(x) == drop_engine(y));
  }

  TEST_CASE("output does not depend on the worker count") {
    TempDir a, b;
    REQUIRE(run({"census", "--n", "20", "--p", "3", "--workers", "1", "--out", a.str()}).code == 0);
    REQUIRE(run({"census", "--n", "20", "--p", "3", "--workers", "4", "--out", b.str()}).code == 0);
    CHECK(slurp(a / "census_n20_p3.csv") == slurp(b / "census_n20_p3.csv"));
  }

  TEST_CASE("json output") {
    TempDir dir;
    REQUIRE(run({"moments", "--n", "13", "--p", "2", "--k", "2,3", "--level", "necklace", "--format", "json",
                 "--out", dir.str()})
                .code == 0);
    const auto j = nlohmann::json::parse(slurp(dir / "moments_n13_p2.json"));
    CHECK(j["rows"].size() == 2);
    CHECK(j["rows"][0]["k"] == 2);
  }

  TEST_CASE("other subcommands") {
    TempDir dir;
    CHECK(run({"distribution", "--n", "16", "--bins", "10", "--out", dir.str()}).code == 0);
    CHECK(run({"anisotropy", "--n", "16", "--thresholds", "0.1,1", "--out", dir.str()}).code == 0);
    CHECK(run({"anisotropy", "--n", "16", "--k", "1,2", "--out", dir.str()}).code == 0);
    const auto m = run({"max-cluster", "--n", "16", "--out", dir.str()});
    CHECK(m.code == 0);
    CHECK(m.out.find("vector=2:2:2:2:2:2:2:2") != std::string::npos);
    CHECK(run({"count-clusters", "--n", "3", "--p", "2", "--out", dir.str()}).out.find("clusters=4") !=
          std::string::npos);
    const auto f = run({"fourier", "--n", "6", "--p", "2", "--out", dir.str()});
    CHECK(f.code == 0);
    CHECK(f.out.find("match=yes") != std::string::npos);
    CHECK(run({"fourier", "--n", "8", "--p", "3", "--k", "2", "--out", dir.str()}).code == 0);
  }

  TEST_CASE("failing checks exit with the validation code") {
    TempDir dir;
    const auto v = run({"validate", "--p", "2", "--out", dir.str()});
    CHECK(v.code == 3);
    CHECK(v.out.find("FAIL det_B=2^-2^p") != std::string::npos);
    CHECK(fs::exists(dir / "validate_p2.json"));
    const auto b = run({"baker-check", "--n", "6", "--p", "3", "--out", dir.str()});
    CHECK(b.code == 3);
    CHECK(b.out.find("close_pairs=1 failures=1 failures_half_window=0") != std::string::npos);
    CHECK(run({"baker-check", "--n", "5", "--p", "2", "--out", dir.str()}).code == 0);
  }

  TEST_CASE("usage and capacity errors") {
    TempDir dir;
    CHECK(run({}).code == 1);
    CHECK(run({"census"}).code == 1);
    CHECK(run({"census", "--n", "5", "--p", "1"}).code == 1);
    CHECK(run({"census", "--n", "5", "--format", "xml"}).code == 1);
    const auto big = run({"census", "--n", "40", "--engine", "brute", "--out", dir.str()});
    CHECK(big.code == 2);
    CHECK(big.err.find("error:") != std::string::npos);
    CHECK(run({"moments", "--n", "30", "--level", "necklace", "--out", dir.str()}).code == 2);
    CHECK(run({"census", "--help"}).code == 0);
  }
}
