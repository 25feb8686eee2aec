#include "art/normalize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace art {

SamplePair canonical_linear_sample(int m) {
  if (m < 2) throw ConfigError("canonical linear sample needs m >= 2");
  SamplePair s;
  s.x.reserve(m);
  s.y.reserve(m);
  for (int i = 0; i < m; ++i) {
    const double v = static_cast<double>(i) / (m - 1);
    s.add(v, v);
  }
  return s;
}

namespace {

std::string mode_name(RasterMode mode) {
  return mode == RasterMode::EqualWidth ? "equal-width" : "equal-frequency";
}

RasterMode mode_from_name(const std::string& name) {
  if (name == "equal-width") return RasterMode::EqualWidth;
  if (name == "equal-frequency") return RasterMode::EqualFrequency;
  throw ConfigError("unknown rasterization mode: " + name);
}

}  // namespace

UpperLimitTable::UpperLimitTable(LimitConfig cfg) : cfg_(cfg) {
  entries_[{0, 0, 0}] = 0.0;
  entries_[{1, 0, 0}] = 0.0;
}

void UpperLimitTable::ensure(int max_total_depth) {
  if (max_total_depth <= max_depth_) return;
  const EmpiricalGrid grid = build_grid(canonical_linear_sample(cfg_.m), cfg_.mode, cfg_.g);
  PartitionSolver solver(grid);
  for (int r = 0; r <= max_total_depth; ++r) {
    for (int c = 0; r + c <= max_total_depth; ++c) {
      entries_[{0, r, c}] = solver.value({Orientation::RowFirst, r, c});
      entries_[{1, r, c}] = solver.value({Orientation::ColumnFirst, r, c});
    }
  }
  max_depth_ = max_total_depth;
}

double UpperLimitTable::get(Orientation o, int r, int c) const {
  const auto it = entries_.find({o == Orientation::RowFirst ? 0 : 1, r, c});
  if (it == entries_.end()) {
    throw ConfigError("upper limit (" + std::to_string(r) + "," + std::to_string(c) +
                      ") not computed; increase the depth budget");
  }
  return it->second;
}

std::string UpperLimitTable::to_json_text() const {
  nlohmann::ordered_json doc;
  doc["format"] = "art-upper-limits";
  doc["version"] = kFormatVersion;
  doc["m"] = cfg_.m;
  doc["g"] = cfg_.g;
  doc["mode"] = mode_name(cfg_.mode);
  doc["max_depth"] = max_depth_;
  auto entries = nlohmann::ordered_json::array();
  for (const auto& [key, value] : entries_) {
    const auto& [o, r, c] = key;
    entries.push_back({{"orientation", o == 0 ? "row-first" : "column-first"}, {"r", r}, {"c", c}, {"value", value}});
  }
  doc["entries"] = entries;
  return doc.dump(2) + "\n";
}

UpperLimitTable UpperLimitTable::from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("upper-limit cache is not valid JSON: ") + e.what());
  }
  try {
    if (doc.at("format") != "art-upper-limits" || doc.at("version") != kFormatVersion) {
      throw ConfigError("upper-limit cache version mismatch");
    }
    LimitConfig cfg;
    cfg.m = doc.at("m").get<int>();
    cfg.g = doc.at("g").get<int>();
    cfg.mode = mode_from_name(doc.at("mode").get<std::string>());
    UpperLimitTable table(cfg);
    table.max_depth_ = doc.at("max_depth").get<int>();
    for (const auto& e : doc.at("entries")) {
      const int o = e.at("orientation") == "row-first" ? 0 : 1;
      table.entries_[{o, e.at("r").get<int>(), e.at("c").get<int>()}] = e.at("value").get<double>();
    }
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed upper-limit cache: ") + e.what());
  }
}

void UpperLimitTable::save(const std::string& path) const {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw DataError("cannot write '" + tmp + "'");
    out << to_json_text();
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw DataError("cannot rename '" + tmp + "' to '" + path + "'");
  }
}

UpperLimitTable UpperLimitTable::load_or_compute(const std::string& path, const LimitConfig& cfg, int depth) {
  std::ifstream in(path);
  if (in) {
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      UpperLimitTable table = from_json_text(buf.str());
      if (table.cfg_ == cfg && table.max_depth_ >= depth) return table;
    } catch (const ConfigError&) {
      // stale or corrupt cache: fall through and recompute
    }
  }
  UpperLimitTable table(cfg);
  table.ensure(depth);
  table.save(path);
  return table;
}

}  // namespace art
