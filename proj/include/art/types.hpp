#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace art {

// Error taxonomy; the CLI maps these to exit codes (config=1, data=2, internal=3).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Bivariate sample as parallel coordinate arrays. Point order carries no meaning.
struct SamplePair {
  std::vector<double> x;
  std::vector<double> y;

  std::size_t size() const { return x.size(); }

  void add(double xi, double yi) {
    x.push_back(xi);
    y.push_back(yi);
  }
};

// Drops rows where either coordinate is non-finite.
inline SamplePair drop_nonfinite(const SamplePair& s) {
  SamplePair out;
  out.x.reserve(s.size());
  out.y.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (std::isfinite(s.x[i]) && std::isfinite(s.y[i])) out.add(s.x[i], s.y[i]);
  }
  return out;
}

}  // namespace art
