#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "vecsim/grid.hpp"

namespace vecsim {

// PGM (P2/P5) <-> BinaryGrid. Dark pixels (< 128 on a 0..255 scale) are sand.
// Files are stored top-down; grids are bottom-up, so rows flip on both paths.

BinaryGrid decode_pgm(std::string_view bytes);
BinaryGrid read_pgm(const std::filesystem::path& path);

/// P5, maxval 255, sand -> 0, background -> 255.
std::string encode_pgm(const BinaryGrid& grid);
void write_pgm(const BinaryGrid& grid, const std::filesystem::path& path);

/// Grayscale P5 of values in [0, 1], rendered as round(255 * (1 - v)), bottom row last.
std::string encode_gray_pgm(const Grid<double>& values);

// VECF text format:
//   VECF <width> <height>
//   <height lines, bottom row first, of width tokens: radians or ND>

VectorField decode_field(std::string_view text);
VectorField read_field(const std::filesystem::path& path);
std::string encode_field(const VectorField& field);
void write_field(const VectorField& field, const std::filesystem::path& path);

/// Reads a whole file. Throws IoError if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Writes to a temporary sibling and renames it over `path`, so readers never
/// observe a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);

}  // namespace vecsim
