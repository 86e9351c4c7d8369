#include "thinlayer/cli/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "thinlayer/errors.hpp"

namespace thinlayer::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  return out;
}

// Relative tolerance for regular lattice spacing.
constexpr double kSpacingTol = 1e-6;

}  // namespace

LatticeMap read_lattice_csv(const std::filesystem::path& path, std::string_view column) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read map file '" + path.string() + "'");
  auto error = [&](int line, const std::string& what) {
    std::ostringstream os;
    os << path.string() << ":" << line << ": " << what;
    throw IoError(os.str());
  };

  std::string line;
  int line_no = 0;
  if (!std::getline(in, line)) error(1, "empty file");
  ++line_no;
  const auto header = split(line);
  if (header.size() != 3 || header[0] != "y1" || header[1] != "y2" || header[2] != column) {
    error(1, "expected header 'y1,y2," + std::string(column) + "'");
  }

  std::vector<double> y1;
  std::vector<double> y2;
  std::vector<double> v;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split(line);
    if (cells.size() != 3) error(line_no, "expected 3 columns");
    double x[3];
    for (int c = 0; c < 3; ++c) {
      const std::string_view s = cells[static_cast<std::size_t>(c)];
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x[c]);
      if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(x[c])) {
        error(line_no, "'" + std::string(s) + "' is not a finite number");
      }
    }
    y1.push_back(x[0]);
    y2.push_back(x[1]);
    v.push_back(x[2]);
  }
  if (v.empty()) error(line_no, "no data rows");

  // Row-major with y1 fastest: the first row fixes n1.
  std::size_t n1 = 1;
  while (n1 < y2.size() && y2[n1] == y2[0]) ++n1;
  if (v.size() % n1 != 0) error(line_no, "row count is not a multiple of the first row's length");
  const std::size_t n2 = v.size() / n1;
  if (n1 < 4 || n2 < 4) error(line_no, "lattice needs at least 4 nodes per axis");

  const RectLattice lat{y1[0], y1[n1 - 1], static_cast<int>(n1), y2[0], y2[v.size() - 1], static_cast<int>(n2)};
  if (!(lat.y1_max > lat.y1_min) || !(lat.y2_max > lat.y2_min)) error(2, "coordinates must increase");
  const double s1 = lat.step1();
  const double s2 = lat.step2();
  for (std::size_t r = 0; r < n2; ++r) {
    for (std::size_t c = 0; c < n1; ++c) {
      const std::size_t k = r * n1 + c;
      const int at = static_cast<int>(k) + 2;
      if (std::abs(y1[k] - (lat.y1_min + static_cast<double>(c) * s1)) > kSpacingTol * s1) {
        error(at, "y1 does not follow the uniform lattice of the first row");
      }
      if (std::abs(y2[k] - (lat.y2_min + static_cast<double>(r) * s2)) > kSpacingTol * s2) {
        error(at, "y2 does not follow a uniform row-major lattice");
      }
    }
  }
  return LatticeMap(lat, std::move(v));
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::strtod(format_number(x).c_str(), nullptr);
}

void write_field_csv(const std::filesystem::path& path, const ScalarField& field, std::string_view column) {
  std::ofstream out = open_out(path);
  out << "y1,y2," << column << "\n";
  const DiskGrid& g = field.grid();
  for (int j = 0; j < g.side(); ++j) {
    for (int i = 0; i < g.side(); ++i) {
      if (g.radius2(i, j) > 1.0) continue;
      const Vec2 y = field.point(i, j);
      out << format_number(y.y1) << "," << format_number(y.y2) << "," << format_number(field.at(i, j)) << "\n";
    }
  }
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

void write_lattice_csv(const std::filesystem::path& path, const RectLattice& lattice, std::span<const double> values,
                       std::string_view column) {
  if (values.size() != static_cast<std::size_t>(lattice.n1) * static_cast<std::size_t>(lattice.n2)) {
    throw ShapeError("value count does not match the lattice");
  }
  std::ofstream out = open_out(path);
  out << "y1,y2," << column << "\n";
  for (int r = 0; r < lattice.n2; ++r) {
    const double y2 = r == lattice.n2 - 1 ? lattice.y2_max : lattice.y2_min + r * lattice.step2();
    for (int c = 0; c < lattice.n1; ++c) {
      const double y1 = c == lattice.n1 - 1 ? lattice.y1_max : lattice.y1_min + c * lattice.step1();
      out << format_number(y1) << "," << format_number(y2) << ","
          << format_number(values[static_cast<std::size_t>(r) * static_cast<std::size_t>(lattice.n1) +
                                  static_cast<std::size_t>(c)])
          << "\n";
    }
  }
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

void write_json(const std::filesystem::path& path, const Json& report) {
  std::ofstream out = open_out(path);
  out << report.dump(2) << "\n";
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace thinlayer::cli
