#include <sstream>

#include "doctest.h"

#include "art/csv.hpp"

using namespace art;

TEST_CASE("two numeric columns") {
  std::istringstream in("a,b\n1,2\n3,4\n5,6\n7,8\n9,10\n");
  const Table t = ingest_csv(in);
  REQUIRE(t.width() == 2);
  CHECK(t.rows() == 5);
  CHECK(t.names[0] == "a");
  CHECK(t.column("b")[4] == 10.0);
}

TEST_CASE("blank cells trigger pairwise deletion") {
  std::istringstream in("A,B,C\n1,1,1\n2,,2\n3,3,3\n4,4,4\n5,5,5\n");
  const Table t = ingest_csv(in);
  CHECK(t.pair(0, 1).size() == 4);  // row with blank B dropped for (A,B)
  CHECK(t.pair(0, 2).size() == 5);
}

TEST_CASE("header-only stream is an error") {
  std::istringstream in("a,b\n");
  CHECK_THROWS_AS(ingest_csv(in), DataError);
}

TEST_CASE("missing column name") {
  std::istringstream in("a,b\n1,2\n");
  CHECK_THROWS_AS(ingest_csv(in, {"c"}), DataError);
}

TEST_CASE("selection by index string") {
  std::istringstream in("a,b,c\n1,2,3\n4,5,6\n");
  const Table t = ingest_csv(in, {"2", "a"});
  REQUIRE(t.width() == 2);
  CHECK(t.names[0] == "c");
  CHECK(t.cols[0][1] == 6.0);
  CHECK(t.names[1] == "a");
}

TEST_CASE("unparseable cell is a data error") {
  std::istringstream in("a,b\n1,fish\n");
  CHECK_THROWS_AS(ingest_csv(in), DataError);
}

TEST_CASE("sample round-trips through CSV text") {
  SamplePair s;
  s.add(0.25, -1.5);
  s.add(3.0, 0.125);
  std::ostringstream out;
  write_csv(out, s);
  std::istringstream in(out.str());
  const Table t = ingest_csv(in);
  const SamplePair back = t.pair(0, 1);
  REQUIRE(back.size() == 2);
  CHECK(back.x == s.x);
  CHECK(back.y == s.y);
}
