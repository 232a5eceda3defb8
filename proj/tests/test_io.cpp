#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "oracles.hpp"
#include "pcm/io.hpp"
#include "pcm/random.hpp"

using namespace pcm;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("pcm_io_test_" + name);
}

}  // namespace

TEST_CASE("matrix csv parsing") {
  const auto a = parse_matrix_csv("1,2,5\n0.5,1,2\n0.2,0.5,1\n");
  CHECK(a == fixtures::perm_example());

  // trailing newline optional, CRLF tolerated
  CHECK(parse_matrix_csv("1,2,5\r\n0.5,1,2\r\n0.2,0.5,1") == a);

  CHECK_THROWS_WITH_AS(parse_matrix_csv("1,2,5\n0.5,1,2\n0.2,0,1\n"), doctest::Contains("NonPositiveEntry"),
                       Error);
  CHECK_THROWS_WITH_AS(parse_matrix_csv("1,2\n0.5,1\n"), doctest::Contains("OrderTooSmall"), Error);
  CHECK_THROWS_WITH_AS(parse_matrix_csv("1,2,x\n0.5,1,2\n0.2,0.5,1\n"),
                       doctest::Contains("ParseError"), Error);
  CHECK_THROWS_AS(parse_matrix_csv(""), Error);
}

TEST_CASE("matrix csv round trip through a file") {
  const auto path = temp_file("roundtrip.csv");
  for (RngSeed seed : {5ULL, 6ULL, 7ULL}) {
    const auto a = random_pcm(5, 9.0, seed);
    write_matrix_csv(a, path.string());
    const auto back = read_matrix_csv(path.string());
    REQUIRE(back.order() == a.order());
    for (std::size_t i = 0; i < a.upper().size(); ++i) {
      CHECK(back.upper()[i] == doctest::Approx(a.upper()[i]).epsilon(1e-9));
    }
  }
  std::filesystem::remove(path);

  CHECK_THROWS_WITH_AS(read_matrix_csv("/nonexistent/pcm.csv"), doctest::Contains("ParseError"),
                       Error);
}

TEST_CASE("written matrices carry full precision") {
  const auto a = random_pcm(4, 9.0, 12345);
  const std::string text = matrix_to_csv(a);
  const auto back = parse_matrix_csv(text);
  CHECK(back == a);  // 17 significant digits round-trip doubles exactly
}

TEST_CASE("random index table format") {
  RandomIndexTable table;
  table.source = RandomIndexTable::Source::monte_carlo;
  table.seed = 1;
  table.samples = 1000;
  table.set(3, 0.525);
  table.set(4, 0.881);

  const std::string text = ri_table_to_csv(table);
  CHECK(text == "3,0.52500000000000002\n4,0.88100000000000001\nprovenance,monte-carlo,1,1000\n");

  const auto parsed = parse_ri_table(text);
  CHECK(parsed.at(3) == 0.525);
  CHECK(parsed.at(4) == 0.881);
  CHECK(parsed.source == RandomIndexTable::Source::monte_carlo);
  CHECK(parsed.seed == 1);
  CHECK(parsed.samples == 1000);

  const auto user = parse_ri_table("3,0.58\n4,0.9\n");
  CHECK(user.source == RandomIndexTable::Source::user_supplied);

  CHECK_THROWS_WITH_AS(parse_ri_table("3,0.58,extra\n"), doctest::Contains("ParseError"), Error);
  CHECK_THROWS_WITH_AS(parse_ri_table("x,0.58\n"), doctest::Contains("ParseError"), Error);
  CHECK_THROWS_AS(parse_ri_table("3,-0.5\n"), Error);
}
