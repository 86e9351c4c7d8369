#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "thinlayer/grid.hpp"

namespace thinlayer::cli {

using Json = nlohmann::ordered_json;

// Reads a map with header `y1,y2,<column>`: a full rectangular lattice with
// uniform spacing, row-major with y1 varying fastest. IoError (with the
// file and line) on anything else.
LatticeMap read_lattice_csv(const std::filesystem::path& path, std::string_view column);

// Writes the nodes of the closed unit disk as `y1,y2,<column>` rows in
// physical coordinates.
void write_field_csv(const std::filesystem::path& path, const ScalarField& field,
                     std::string_view column = "value");

// Writes a full rectangular lattice in the format read_lattice_csv accepts.
void write_lattice_csv(const std::filesystem::path& path, const RectLattice& lattice,
                       std::span<const double> values, std::string_view column);

// 12 significant digits, shortest form.
std::string format_number(double x);
// Rounds to 12 significant digits so the JSON dump is stable.
Json number(double x);

// Pretty-printed with two-space indent and a trailing newline.
void write_json(const std::filesystem::path& path, const Json& report);

}  // namespace thinlayer::cli
