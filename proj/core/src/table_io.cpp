#include "cfactors/table_io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cfactors/errors.hpp"

namespace cfactors {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void atomic_write(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + tmp.string());
    out << contents;
    if (!out) throw IoError("write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("rename failed: " + path.string() + ": " + ec.message());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

long long to_int64(const Int& value) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (value < lo || value > hi)
    throw IoError("coefficient does not fit a 64-bit JSON number: " + value.str());
  return value.convert_to<long long>();
}

json partition_to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw IoError("partition must be a JSON array");
  std::vector<int> parts;
  for (const auto& v : j) parts.push_back(v.get<int>());
  return Partition(std::move(parts));
}

}  // namespace

void write_table_json(const CoefficientTable& table, const std::filesystem::path& path) {
  ordered_json root;
  root["max_degree"] = table.max_degree();
  root["provenance"] = to_string(table.provenance());
  ordered_json entries = ordered_json::array();
  for (const auto& [key, value] : table.entries()) {
    ordered_json e;
    e["mu"] = partition_to_json(key.first);
    e["lambda"] = partition_to_json(key.second);
    e["c"] = to_int64(value);
    entries.push_back(std::move(e));
  }
  root["entries"] = std::move(entries);
  atomic_write(path, root.dump(1) + "\n");
}

CoefficientTable read_table_json(const std::filesystem::path& path) {
  json root;
  try {
    root = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw IoError("bad JSON in " + path.string() + ": " + e.what());
  }
  try {
    CoefficientTable table(root.at("max_degree").get<int>(),
                           provenance_from_string(root.at("provenance").get<std::string>()));
    for (const auto& e : root.at("entries")) {
      table.set(partition_from_json(e.at("lambda")), partition_from_json(e.at("mu")),
                Int(e.at("c").get<long long>()));
    }
    return table;
  } catch (const json::exception& e) {
    throw IoError("bad table schema in " + path.string() + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw IoError("bad table data in " + path.string() + ": " + e.what());
  }
}

void write_table_csv(const CoefficientTable& table, const std::filesystem::path& path) {
  std::string out;
  out += "# max_degree=" + std::to_string(table.max_degree()) + "\n";
  out += "# provenance=" + to_string(table.provenance()) + "\n";
  for (const auto& [key, value] : table.entries()) {
    out += key.first.to_string();
    out += ';';
    out += key.second.to_string();
    out += ';';
    out += value.str();
    out += '\n';
  }
  atomic_write(path, out);
}

CoefficientTable read_table_csv(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  std::string line;
  int max_degree = -1;
  std::string provenance;
  std::vector<std::array<std::string, 3>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# max_degree=", 0) == 0) {
      max_degree = std::stoi(line.substr(13));
      continue;
    }
    if (line.rfind("# provenance=", 0) == 0) {
      provenance = line.substr(13);
      continue;
    }
    if (line[0] == '#') continue;
    const auto first = line.find(';');
    const auto second = line.find(';', first + 1);
    if (first == std::string::npos || second == std::string::npos)
      throw IoError("bad CSV row in " + path.string() + ": " + line);
    rows.push_back({line.substr(0, first), line.substr(first + 1, second - first - 1),
                    line.substr(second + 1)});
  }
  if (max_degree < 1 || provenance.empty())
    throw IoError("CSV header missing max_degree/provenance: " + path.string());
  try {
    CoefficientTable table(max_degree, provenance_from_string(provenance));
    for (const auto& [mu, lambda, coeff] : rows)
      table.set(Partition::parse(lambda), Partition::parse(mu), Int(coeff));
    return table;
  } catch (const std::invalid_argument& e) {
    throw IoError("bad table data in " + path.string() + ": " + e.what());
  }
}

namespace {

bool has_extension(const std::filesystem::path& path, const char* ext) {
  std::string e = path.extension().string();
  std::transform(e.begin(), e.end(), e.begin(), [](unsigned char c) { return std::tolower(c); });
  return e == ext;
}

}  // namespace

CoefficientTable read_table(const std::filesystem::path& path) {
  if (has_extension(path, ".csv")) return read_table_csv(path);
  if (has_extension(path, ".json")) return read_table_json(path);
  throw IoError("cannot infer table format from extension: " + path.string());
}

void write_table(const CoefficientTable& table, const std::filesystem::path& path) {
  if (has_extension(path, ".csv"))
    write_table_csv(table, path);
  else
    write_table_json(table, path);
}

namespace {

std::string color_for(const Int& value, double max_value) {
  if (value == 0) return "#ffffff";
  const double t = std::min(1.0, value.convert_to<double>() / max_value);
  // light to dark blue, monotone in t
  const int r = static_cast<int>(std::lround(222 + t * (8 - 222)));
  const int g = static_cast<int>(std::lround(235 + t * (48 - 235)));
  const int b = static_cast<int>(std::lround(247 + t * (107 - 247)));
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

}  // namespace

void write_heatmap_svg(const CoefficientTable& table, const std::filesystem::path& path) {
  std::vector<Partition> axis;
  std::vector<int> degree_starts;  // index where each degree block begins
  for (int n = 1; n <= table.max_degree(); ++n) {
    degree_starts.push_back(static_cast<int>(axis.size()));
    for (const Partition& p : partitions_of(n)) axis.push_back(p);
  }
  const int n = static_cast<int>(axis.size());
  const int cell = 10;
  const int margin = 46;
  const int legend_w = 90;
  const int width = margin + n * cell + legend_w + 10;
  const int height = margin + n * cell + 10;

  Int max_value = 1;
  for (const auto& [key, value] : table.entries()) max_value = std::max(max_value, value);
  const double scale = max_value.convert_to<double>();

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + std::to_string(margin) + "\" y=\"14\" font-size=\"12\">c[lambda,mu], " +
         to_string(table.provenance()) + ", degree " + std::to_string(table.max_degree()) +
         " (rows: lambda, columns: mu)</text>\n";

  // one rect per ordered pair; rows are lambda, columns are mu
  for (int i = 0; i < n; ++i) {
    const Partition& lambda = axis[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      const Partition& mu = axis[static_cast<std::size_t>(j)];
      const Int& v = table.value(lambda, mu);
      svg += "<rect x=\"" + std::to_string(margin + j * cell) + "\" y=\"" +
             std::to_string(margin + i * cell) + "\" width=\"" + std::to_string(cell) +
             "\" height=\"" + std::to_string(cell) + "\" fill=\"" + color_for(v, scale) +
             "\"/>\n";
    }
  }

  // degree boundaries with tick labels
  for (std::size_t k = 0; k < degree_starts.size(); ++k) {
    const int at = degree_starts[k];
    const int px = margin + at * cell;
    svg += "<line x1=\"" + std::to_string(px) + "\" y1=\"" + std::to_string(margin) +
           "\" x2=\"" + std::to_string(px) + "\" y2=\"" + std::to_string(margin + n * cell) +
           "\" stroke=\"#555555\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + std::to_string(margin) + "\" y1=\"" + std::to_string(px) +
           "\" x2=\"" + std::to_string(margin + n * cell) + "\" y2=\"" + std::to_string(px) +
           "\" stroke=\"#555555\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + std::to_string(px + 2) + "\" y=\"" + std::to_string(margin - 4) +
           "\" font-size=\"10\">" + std::to_string(k + 1) + "</text>\n";
    svg += "<text x=\"" + std::to_string(margin - 14) + "\" y=\"" + std::to_string(px + 12) +
           "\" font-size=\"10\">" + std::to_string(k + 1) + "</text>\n";
  }
  const int right = margin + n * cell;
  svg += "<line x1=\"" + std::to_string(right) + "\" y1=\"" + std::to_string(margin) +
         "\" x2=\"" + std::to_string(right) + "\" y2=\"" + std::to_string(margin + n * cell) +
         "\" stroke=\"#555555\" stroke-width=\"1\"/>\n";
  svg += "<line x1=\"" + std::to_string(margin) + "\" y1=\"" + std::to_string(right) +
         "\" x2=\"" + std::to_string(right) + "\" y2=\"" + std::to_string(right) +
         "\" stroke=\"#555555\" stroke-width=\"1\"/>\n";

  // legend: 0 plus a ten-step gradient up to the maximum
  const int lx = right + 20;
  svg += "<text x=\"" + std::to_string(lx) + "\" y=\"" + std::to_string(margin - 4) +
         "\" font-size=\"10\">value</text>\n";
  svg += "<rect x=\"" + std::to_string(lx) + "\" y=\"" + std::to_string(margin) +
         "\" width=\"14\" height=\"14\" fill=\"#ffffff\" stroke=\"#555555\"/>\n";
  svg += "<text x=\"" + std::to_string(lx + 18) + "\" y=\"" + std::to_string(margin + 12) +
         "\" font-size=\"10\">0</text>\n";
  for (int step = 1; step <= 10; ++step) {
    const Int sample = max_value * step / 10 > 0 ? max_value * step / 10 : Int(1);
    svg += "<rect x=\"" + std::to_string(lx) + "\" y=\"" +
           std::to_string(margin + step * 16) + "\" width=\"14\" height=\"14\" fill=\"" +
           color_for(sample, scale) + "\" stroke=\"#555555\"/>\n";
    if (step == 10) {
      svg += "<text x=\"" + std::to_string(lx + 18) + "\" y=\"" +
             std::to_string(margin + step * 16 + 12) + "\" font-size=\"10\">" +
             max_value.str() + "</text>\n";
    }
  }
  svg += "</svg>\n";
  atomic_write(path, svg);
}

}  // namespace cfactors
