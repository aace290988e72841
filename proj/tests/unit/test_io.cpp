#include "oracles.hpp"
#include "symfam/constructions.hpp"
#include "symfam/errors.hpp"
#include "symfam/io.hpp"
#include "symfam/json.hpp"
#include "symfam/search.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace symfam;

namespace {

SetFamily parse(const std::string& text) {
  std::istringstream in(text);
  return read_family(in);
}

std::size_t error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("family files round trip") {
  std::mt19937_64 rng(31);
  for (int n : {1, 3, 7, 12}) {
    const auto f = SetFamily::from_masks(n, oracle::random_family(n, 0.3, rng));
    std::ostringstream out;
    write_family(out, f);
    CHECK(parse(out.str()) == f);
    std::ostringstream again;
    write_family(again, parse(out.str()));
    CHECK(again.str() == out.str());
  }
  std::ostringstream out;
  write_family(out, SetFamily::from_masks(3, {0, 0b101}));
  CHECK(out.str() == "n=3\n-\n1,3\n");
}

TEST_CASE("family file tolerance") {
  CHECK(parse("n=3\r\n\r\n 1, 2 \r\n\t3\n") == SetFamily::from_masks(3, {0b011, 0b100}));
  CHECK(parse("n=4\n").empty());
  CHECK(error_line("n = 4\n") == 1);
  CHECK(format_set(0) == "-");
  CHECK(format_set(0b1011) == "1,2,4");
}

TEST_CASE("family parse errors carry line numbers") {
  CHECK(error_line("") == 1);
  CHECK(error_line("m=3\n") == 1);
  CHECK(error_line("n=3\n1\nx\n") == 3);
  CHECK(error_line("n=3\n1\n\n4\n") == 4);
  CHECK(error_line("n=3\n2,1\n") == 2);
  CHECK(error_line("n=3\n1,1\n") == 2);
  CHECK(error_line("n=3\n1,2\n1,2\n") == 3);
  CHECK(error_line("n=3\n0\n") == 2);
  CHECK(error_line("n=3\n1,,2\n") == 2);
  CHECK(error_line("n=25\n") == 1);
}

TEST_CASE("group files") {
  std::istringstream two("n=4\n2 3 4 1\n\nn=4\n2 1 3 4\n3 4 1 2\n");
  const auto groups = read_groups(two, "g");
  REQUIRE(groups.size() == 2);
  CHECK(groups[0].label() == "g#1");
  CHECK(groups[1].generators().size() == 2);
  std::istringstream identity("n=3\n");
  CHECK(read_groups(identity, "id").front().generators().front().is_identity());
  std::ostringstream out;
  write_group(out, PermGroup::cyclic(5));
  std::istringstream back(out.str());
  const auto cyclic = read_groups(back, "c").front();
  CHECK(cyclic.label() == "c");
  CHECK(cyclic.generators().front() == Permutation::cycle(5));

  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      read_groups(in, "x");
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("n=3\n1 2\n") == 2);
  CHECK(line_of("n=3\n1 1 2\n") == 2);
  CHECK(line_of("n=3\n1 2 4\n") == 2);
  CHECK(line_of("2 3 1\n") == 1);
}

TEST_CASE("files on disk") {
  const auto dir = std::filesystem::temp_directory_path() / "symfam_io_test";
  std::filesystem::create_directories(dir);
  const auto family = block_family(3).to_explicit();
  save_family(dir / "block.txt", family);
  CHECK(load_family(dir / "block.txt") == family);
  {
    std::ofstream out(dir / "cyc.txt");
    write_group(out, PermGroup::cyclic(6));
  }
  CHECK(load_group(dir / "cyc.txt").label() == "cyc");
  CHECK(load_groups(dir / "cyc.txt").size() == 1);
  CHECK_THROWS_AS(load_family(dir / "missing.txt"), DomainError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("json reports") {
  const auto report = to_json(size_report(block_family(3)));
  CHECK(report["descriptor"] == "block(k=3)");
  CHECK(report["exact_count"] == "37");
  CHECK(report.dump().find("\"n\":9") != std::string::npos);
  const auto c4 = orbit_decomposition(PermGroup::cyclic(4));
  const auto found = to_json(max_union(c4, 3, bad_tuples(c4, 3)), false);
  CHECK(found["size"] == 5);
  CHECK(found["orbit_reps"].dump() == "[[1,2,3],[1,2,3,4]]");
  CHECK(exact_string(Dyadic(BigInt(74), 10)) == "37/512");
}
