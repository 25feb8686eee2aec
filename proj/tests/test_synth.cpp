#include <cmath>

#include "doctest.h"

#include "art/synth.hpp"

using namespace art;

TEST_CASE("kind names round trip") {
  for (const RelKind kind : {RelKind::Independent, RelKind::Linear, RelKind::Sine5Pi,
                             RelKind::Parabola, RelKind::Circle, RelKind::LocalRandom}) {
    CHECK(rel_kind_from_name(rel_kind_name(kind)) == kind);
  }
  CHECK_THROWS_AS(rel_kind_from_name("spiral"), ConfigError);
}

TEST_CASE("generation is deterministic per seed") {
  const RelationshipSpec spec{RelKind::Circle, 300, 0.2, 4, 99};
  const SamplePair a = generate(spec);
  const SamplePair b = generate(spec);
  REQUIRE(a.size() == 300);
  CHECK(a.x == b.x);
  CHECK(a.y == b.y);

  RelationshipSpec other = spec;
  other.seed = 100;
  CHECK(generate(other).x != a.x);
}

TEST_CASE("noiseless linear sample is the identity on a grid") {
  const SamplePair s = generate({RelKind::Linear, 11, 0.0, 1, 0});
  REQUIRE(s.size() == 11);
  CHECK(s.x.front() == 0.0);
  CHECK(s.x.back() == 1.0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s.y[i] == s.x[i]);
    if (i > 0) CHECK(s.x[i] > s.x[i - 1]);
  }
}

TEST_CASE("noise stays inside the stated amplitude") {
  const double p = 0.25;
  const SamplePair s = generate({RelKind::Parabola, 2000, p, 1, 5});
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double t = 2.0 * s.x[i] - 1.0;
    CHECK(std::fabs(s.y[i] - t * t) <= p);
  }
}

TEST_CASE("sine sample follows its curve") {
  const SamplePair s = generate({RelKind::Sine5Pi, 500, 0.0, 1, 1});
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s.y[i] == doctest::Approx(0.5 * (1.0 + std::sin(5.0 * 3.14159265358979323846 * s.x[i])))
                        .epsilon(1e-12));
  }
}

TEST_CASE("noiseless circle stays on the circle") {
  const SamplePair s = generate({RelKind::Circle, 360, 0.0, 1, 2});
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double dx = s.x[i] - 0.5;
    const double dy = s.y[i] - 0.5;
    CHECK(std::sqrt(dx * dx + dy * dy) == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("local-random scatter is confined to its block") {
  const int blocks = 5;
  const SamplePair s = generate({RelKind::LocalRandom, 1000, 0.0, blocks, 3});
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int block = std::min(blocks - 1, static_cast<int>(s.x[i] * blocks));
    CHECK(s.y[i] >= static_cast<double>(block) / blocks);
    CHECK(s.y[i] <= static_cast<double>(block + 1) / blocks);
  }
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(generate({RelKind::Linear, 1, 0.0, 1, 0}), ConfigError);
  CHECK_THROWS_AS(generate({RelKind::Linear, 100, -0.1, 1, 0}), ConfigError);
  CHECK_THROWS_AS(generate({RelKind::LocalRandom, 100, 0.0, 0, 0}), ConfigError);
}
