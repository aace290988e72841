#include "symfam/io.hpp"
#include "symfam/json.hpp"

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace symfam;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string command = std::string("\"") + SYMFAM_CLI_PATH + "\" " + args + " 2>/dev/null";
  Run run;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  while (const std::size_t got = std::fread(buffer.data(), 1, buffer.size(), pipe)) run.out.append(buffer.data(), got);
  const int status = pclose(pipe);
  run.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

std::string data(const std::string& name) { return std::string("\"") + SYMFAM_TEST_DATA + "/" + name + "\""; }

Json json_of(const Run& run) { return Json::parse(run.out); }

}  // namespace

TEST_CASE("construct") {
  const auto run = cli("construct block --k 3");
  CHECK(run.code == 0);
  const auto j = json_of(run);
  CHECK(j["exact_count"] == "37");
  CHECK(j["n"] == 9);
  CHECK(json_of(cli("construct tree --k 3 --r 4"))["exact_count"] == "3997");
  CHECK(json_of(cli("construct projective --q 2 --r 2"))["n"] == 7);
  CHECK(cli("construct block --k 4").code == 2);
  CHECK(cli("construct projective --q 2 --r 5").code == 3);
  CHECK(cli("construct").code == 2);
}

TEST_CASE("construct emits an explicit family") {
  const auto path = std::filesystem::temp_directory_path() / "symfam_cli_block.txt";
  CHECK(cli("construct block --k 3 --emit-family \"" + path.string() + "\"").code == 0);
  CHECK(load_family(path).size() == 37);
  std::filesystem::remove(path);
  CHECK(cli("construct block --k 5 --emit-family /dev/null").code == 3);
}

TEST_CASE("verify") {
  auto run = cli("verify --construct \"block(k=3)\" --r 3");
  CHECK(run.code == 0);
  auto j = json_of(run);
  CHECK(j["r_wise"] == "yes");
  CHECK(j["symmetric"] == "yes");
  CHECK(j["mu_half_exact"] == "37/512");

  run = cli("verify --family " + data("majority3.txt") + " --r 3");
  CHECK(run.code == 1);
  CHECK(json_of(run)["r_wise"] == "no");
  run = cli("verify --family " + data("majority3.txt") + " --r 2");
  CHECK(run.code == 0);
  CHECK(json_of(run)["symmetric"] == "yes");

  run = cli("verify --family " + data("star3.txt") + " --r 3");
  CHECK(run.code == 1);
  CHECK(json_of(run)["symmetric"] == "no");

  CHECK(cli("verify --family " + data("unsorted.txt")).code == 2);
  CHECK(cli("verify --family " + data("nothing.txt")).code == 2);
  CHECK(cli("verify").code == 2);
  CHECK(cli("verify --family " + data("star3.txt") + " --construct \"block(k=3)\"").code == 2);
  CHECK(json_of(cli("verify --construct \"tree(k=3,r=4)\" --r 4 --seed 5"))["seed"] == 5);
}

TEST_CASE("measure and threshold") {
  auto j = json_of(cli("measure --construct \"block(k=3)\" --p 0.5"));
  CHECK(j["mu"] == doctest::Approx(37.0 / 512));
  j = json_of(cli("measure --family " + data("star3.txt") + " --p 0.25"));
  CHECK(j["exact"] == "1/4");
  const auto csv = cli("measure --construct \"majority(n=3)\" --points 3 --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out == "p,mu\n0,0\n0.5,0.5\n1,1\n");
  CHECK(json_of(cli("measure --construct \"majority(n=3)\" --points 5")).size() == 5);
  CHECK(cli("measure --construct \"majority(n=3)\" --p 2").code == 2);
  j = json_of(cli("threshold --construct \"majority(n=5)\" --eps 0.1"));
  CHECK(j["p_lo"].get<double>() + j["p_hi"].get<double>() == doctest::Approx(1.0));
  CHECK(cli("threshold --construct \"majority(n=5)\" --eps 0.7").code == 2);
}

TEST_CASE("search") {
  auto run = cli("search --n 4 --r 3");
  CHECK(run.code == 0);
  auto j = json_of(run);
  CHECK(j["size"] == 5);
  CHECK(j["exact"] == false);
  CHECK(j.contains("elapsed_ms"));
  j = json_of(cli("search --n 3 --r 3"));
  CHECK(j["size"] == 1);
  CHECK(j["exact"] == true);
  CHECK(json_of(cli("search --n 4 --r 3 --complete"))["exact"] == true);
  CHECK(json_of(cli("search --n 3 --r 2 --groups " + data("c3.txt")))["size"] == 4);
  CHECK(cli("search --n 17 --r 3").code == 3);
  CHECK(cli("search --n 5 --r 7").code == 2);
  CHECK(cli("search --n 5 --r 3 --threads 0").code == 2);
}

TEST_CASE("search output is thread independent") {
  auto strip = [](Json j) {
    j.erase("elapsed_ms");
    return j.dump();
  };
  const auto one = strip(json_of(cli("search --n 9 --r 3 --threads 1")));
  CHECK(strip(json_of(cli("search --n 9 --r 3 --threads 2"))) == one);
  CHECK(strip(json_of(cli("search --n 9 --r 3 --threads 4"))) == one);
}

TEST_CASE("lemmas") {
  auto run = cli("lemmas cross --a " + data("star3.txt") + " --b " + data("star3.txt") + " --p 0.25");
  CHECK(run.code == 0);
  CHECK(json_of(run)["holds"] == true);
  CHECK(cli("lemmas cross --a " + data("left.txt") + " --b " + data("right.txt") + " --p 0.5").code == 2);
  run = cli("lemmas int --family " + data("majority3.txt"));
  CHECK(run.code == 0);
  CHECK(json_of(run)["holds"] == true);
  CHECK(cli("lemmas chain --family " + data("majority3.txt")).code == 2);
  const auto path = std::filesystem::temp_directory_path() / "symfam_cli_top.txt";
  {
    std::ofstream out(path);
    out << "n=4\n1,2,3,4\n";
  }
  run = cli("lemmas chain --family \"" + path.string() + "\"");
  CHECK(run.code == 0);
  CHECK(json_of(run)["delta"] == "1/16");
  std::filesystem::remove(path);
}

TEST_CASE("output file and help") {
  const auto path = std::filesystem::temp_directory_path() / "symfam_cli_out.json";
  CHECK(cli("construct majority --n 5 --out \"" + path.string() + "\"").code == 0);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(Json::parse(text.str())["exact_count"] == "16");
  std::filesystem::remove(path);
  CHECK(cli("--help").code == 0);
}
