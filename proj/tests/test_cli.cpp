#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const char* kCli = CRACKECON_CLI_PATH;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("crackecon-test-" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::string& args) {
  const std::string cmd = std::string(kCli) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

}  // namespace

TEST_CASE("threshold json reproduces the printed value") {
  TempDir dir;
  const std::string out = dir.file("t.json");
  REQUIRE(run("threshold --y 0.0211 --r 0.2166 --a 1 -o " + out) == 0);
  const json j = json::parse(slurp(out));
  CHECK(std::abs(j["T"].get<double>() - 2.25e7) / 2.25e7 < 0.005);
  CHECK(j["meta"]["version"].is_string());
  CHECK(j["meta"]["config"]["y"] == 0.0211);
}

TEST_CASE("missing input file exits with the data error code") {
  TempDir dir;
  CHECK(run("fit --method cdf-lls " + dir.file("missing.txt")) == 2);
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run("fit") == 1);            // missing required arguments
  CHECK(run("no-such-command") == 1);
}

TEST_CASE("attack below the first marginal crossing reports t_star 0") {
  TempDir dir;
  const std::string out = dir.file("a.json");
  REQUIRE(run("attack --dist cdf_zipf:0.0211,0.2166 --v 1 --k 1 --a 1 -o " + out) == 0);
  const json j = json::parse(slurp(out));
  CHECK(j["t_star"] == 0);
  CHECK(j["fraction_cracked"] == 0.0);
  CHECK(j["utility"] == 0.0);
}

TEST_CASE("seeded commands are byte-identical across runs") {
  TempDir dir;
  const std::string corpus = dir.file("corpus.txt");
  REQUIRE(run("sample --dist cdf_zipf:0.2,0.4 --n 20000 --seed 9 -o " + corpus) == 0);

  const std::string again = dir.file("corpus2.txt");
  REQUIRE(run("sample --dist cdf_zipf:0.2,0.4 --n 20000 --seed 9 -o " + again) == 0);
  CHECK(slurp(corpus) == slurp(again));

  const std::string p1 = dir.file("p1.txt");
  const std::string p2 = dir.file("p2.txt");
  REQUIRE(run("perturb " + corpus + " --epsilon 0.25 --seed 4 -o " + p1) == 0);
  REQUIRE(run("perturb " + corpus + " --epsilon 0.25 --seed 4 -o " + p2) == 0);
  CHECK(slurp(p1) == slurp(p2));
  CHECK(slurp(p1) != slurp(corpus));
}

TEST_CASE("sampled artifacts reload as valid corpora") {
  TempDir dir;
  const std::string corpus = dir.file("corpus.txt");
  REQUIRE(run("sample --dist cdf_zipf:0.3,0.5 --n 5000 --seed 1 -o " + corpus) == 0);
  const std::string fitted = dir.file("fit.json");
  REQUIRE(run("fit --method cdf-lls " + corpus + " -o " + fitted) == 0);
  const json j = json::parse(slurp(fitted));
  CHECK(j["meta"]["corpus"]["N"] == 5000);
  CHECK(j["y"].is_number());
  CHECK(j.contains("ks"));
}

TEST_CASE("bounds emits the documented csv columns") {
  TempDir dir;
  const std::string corpus = dir.file("corpus.txt");
  write_file(corpus, "5\n1\n1\n1\n1\n1\n");
  const std::string out = dir.file("bounds.csv");
  REQUIRE(run("bounds " + corpus + " --j 2 --L 10 --dataset demo --t 1 -o " + out) == 0);
  const std::string text = slurp(out);
  CHECK(text.find("dataset,N,M,j,L,V_over_k,lower_pct,upper_pct,mu,failure_prob") !=
        std::string::npos);
  CHECK(text.find("demo,10,6,2,10,100,40,") != std::string::npos);
  CHECK(text.find("# crackecon") != std::string::npos);
}

TEST_CASE("threshold table reproduces the published layout") {
  TempDir dir;
  const std::string table = dir.file("rows.csv");
  write_file(table, "Yahoo!,0.0211,0.2166\n");
  const std::string out = dir.file("table.csv");
  REQUIRE(run("threshold --table " + table + " -o " + out) == 0);
  const std::string text = slurp(out);
  CHECK(text.find("dataset,y,r,T_a1,T_a08") != std::string::npos);
  CHECK(text.find("Yahoo!,0.0211,0.2166,2254346") != std::string::npos);
  CHECK(text.find(",2686769") != std::string::npos);
}

TEST_CASE("config file merges under explicit flags") {
  TempDir dir;
  const std::string config = dir.file("config.json");
  write_file(config, R"({"y": 0.5, "r": 0.5, "a": 1.0})");

  const std::string out = dir.file("t.json");
  REQUIRE(run("threshold --config " + config + " -o " + out) == 0);
  json j = json::parse(slurp(out));
  CHECK(j["meta"]["config"]["y"] == 0.5);

  // An explicit flag wins over the config value.
  REQUIRE(run("threshold --config " + config + " --y 0.25 -o " + out) == 0);
  j = json::parse(slurp(out));
  CHECK(j["meta"]["config"]["y"] == 0.25);
}

TEST_CASE("unknown config keys are rejected as usage errors") {
  TempDir dir;
  const std::string config = dir.file("config.json");
  write_file(config, R"({"y": 0.5, "bogus_knob": 1})");
  CHECK(run("threshold --config " + config) == 1);
}

TEST_CASE("cost conversion and curve modes") {
  TempDir dir;
  const std::string out = dir.file("v.json");
  REQUIRE(run("cost --price 4.00 --q 0.01 --a 0.8 -o " + out) == 0);
  const json j = json::parse(slurp(out));
  CHECK(std::abs(j["v_dollars"].get<double>() - 1.59) <= 0.01);

  const std::string csv = dir.file("curve.csv");
  REQUIRE(run("cost --dist cdf_zipf:0.5,0.5 --v-dollars 1e-10 --family mhf "
              "--log2-min 2 --log2-max 8 -o " + csv) == 0);
  const std::string text = slurp(csv);
  CHECK(text.find("tau,log2_tau,k_units,k_dollars,pct_cracked") != std::string::npos);
}

TEST_CASE("dp-study reports per-parameter statistics deterministically") {
  TempDir dir;
  const std::string corpus = dir.file("corpus.txt");
  REQUIRE(run("sample --dist cdf_zipf:0.1,0.3 --n 50000 --seed 2 -o " + corpus) == 0);
  const std::string s1 = dir.file("s1.json");
  const std::string s2 = dir.file("s2.json");
  REQUIRE(run("dp-study " + corpus + " --epsilon 0.5 --trials 5 --seed 3 -o " + s1) == 0);
  REQUIRE(run("dp-study " + corpus + " --epsilon 0.5 --trials 5 --seed 3 -o " + s2) == 0);
  CHECK(slurp(s1) == slurp(s2));
  const json j = json::parse(slurp(s1));
  CHECK(j["n_trials"] == 5);
  CHECK(j["mechanism"] == "geometric-v1");
  CHECK(j["params"]["y"].contains("mean"));
  CHECK(j["params"]["r"].contains("std"));
}

TEST_CASE("stability emits one row per size plus the full corpus") {
  TempDir dir;
  const std::string corpus = dir.file("corpus.txt");
  REQUIRE(run("sample --dist cdf_zipf:0.1,0.3 --n 40000 --seed 6 -o " + corpus) == 0);
  const std::string out = dir.file("stab.csv");
  REQUIRE(run("stability " + corpus + " --sizes 10000,20000 --seed 5 -o " + out) == 0);
  std::istringstream in(slurp(out));
  std::string line;
  int data_rows = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.rfind("size,y,r,r_squared,ks", 0) == 0) header_seen = true;
    if (!line.empty() && line[0] != '#' && std::isdigit(line[0])) ++data_rows;
  }
  CHECK(header_seen);
  CHECK(data_rows == 3);
}
