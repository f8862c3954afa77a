#include "vecsim/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "vecsim/direction.hpp"
#include "vecsim/errors.hpp"

namespace vecsim {
namespace {

class PgmHeaderReader {
 public:
  explicit PgmHeaderReader(std::string_view bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  int read_int(const char* what) {
    skip_space_and_comments();
    const std::size_t start = pos_;
    while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) ++pos_;
    if (start == pos_) {
      if (pos_ >= bytes_.size()) throw TruncationError(std::string("unexpected end of file reading ") + what, pos_);
      throw FormatError(std::string("expected integer for ") + what, pos_);
    }
    int v = 0;
    auto [ptr, ec] = std::from_chars(bytes_.data() + start, bytes_.data() + pos_, v);
    if (ec != std::errc{}) throw FormatError(std::string("integer out of range for ") + what, start);
    return v;
  }

  std::size_t& pos() { return pos_; }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

std::uint8_t facies_from_pixel(int value, int maxval) {
  // value / maxval >= 128 / 255, in integers.
  return value * 255 >= 128 * maxval ? 0 : 1;
}

}  // namespace

BinaryGrid decode_pgm(std::string_view bytes) {
  if (bytes.size() < 2) throw TruncationError("file too short for PGM magic", 0);
  if (bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    throw FormatError("bad magic, expected P2 or P5", 0);
  }
  const bool binary = bytes[1] == '5';
  PgmHeaderReader rd(bytes);
  rd.pos() = 2;
  const std::size_t after_magic = rd.pos();
  if (after_magic < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[after_magic])) &&
      bytes[after_magic] != '#') {
    throw FormatError("missing whitespace after magic", after_magic);
  }
  const int width = rd.read_int("width");
  const int height = rd.read_int("height");
  const std::size_t maxval_pos = rd.pos();
  const int maxval = rd.read_int("maxval");
  if (width <= 0 || height <= 0) throw FormatError("dimensions must be positive", maxval_pos);
  if (maxval < 1 || maxval > 255) throw FormatError("maxval must be in [1, 255]", maxval_pos);

  BinaryGrid grid(width, height);
  const std::size_t count = grid.size();
  if (binary) {
    std::size_t pos = rd.pos();
    if (pos >= bytes.size()) throw TruncationError("missing raster", pos);
    if (!std::isspace(static_cast<unsigned char>(bytes[pos]))) {
      throw FormatError("expected single whitespace before raster", pos);
    }
    ++pos;
    if (bytes.size() - pos < count) {
      throw TruncationError("raster has " + std::to_string(bytes.size() - pos) + " of " +
                                std::to_string(count) + " bytes",
                            bytes.size());
    }
    for (std::size_t i = 0; i < count; ++i) {
      const int v = static_cast<unsigned char>(bytes[pos + i]);
      if (v > maxval) throw FormatError("pixel exceeds maxval", pos + i);
      const int file_row = static_cast<int>(i / static_cast<std::size_t>(width));
      const int x = static_cast<int>(i % static_cast<std::size_t>(width));
      grid(x, height - 1 - file_row) = facies_from_pixel(v, maxval);
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t at = rd.pos();
      const int v = rd.read_int("pixel");
      if (v > maxval) throw FormatError("pixel exceeds maxval", at);
      const int file_row = static_cast<int>(i / static_cast<std::size_t>(width));
      const int x = static_cast<int>(i % static_cast<std::size_t>(width));
      grid(x, height - 1 - file_row) = facies_from_pixel(v, maxval);
    }
  }
  return grid;
}

BinaryGrid read_pgm(const std::filesystem::path& path) { return decode_pgm(read_file(path)); }

std::string encode_pgm(const BinaryGrid& grid) {
  std::string out = "P5\n" + std::to_string(grid.width()) + " " + std::to_string(grid.height()) + "\n255\n";
  const std::size_t header = out.size();
  out.resize(header + grid.size());
  std::size_t i = header;
  for (int y = grid.height() - 1; y >= 0; --y) {
    for (int x = 0; x < grid.width(); ++x) out[i++] = grid(x, y) ? '\x00' : '\xff';
  }
  return out;
}

void write_pgm(const BinaryGrid& grid, const std::filesystem::path& path) {
  write_file_atomic(path, encode_pgm(grid));
}

std::string encode_gray_pgm(const Grid<double>& values) {
  std::string out = "P5\n" + std::to_string(values.width()) + " " + std::to_string(values.height()) + "\n255\n";
  for (int y = values.height() - 1; y >= 0; --y) {
    for (int x = 0; x < values.width(); ++x) {
      const double v = std::clamp(values(x, y), 0.0, 1.0);
      out.push_back(static_cast<char>(static_cast<unsigned char>(std::lround(255.0 * (1.0 - v)))));
    }
  }
  return out;
}

VectorField decode_field(std::string_view text) {
  std::size_t line_no = 1;
  std::size_t pos = 0;
  auto next_line = [&]() -> std::optional<std::string_view> {
    if (pos >= text.size()) return std::nullopt;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    return line;
  };

  auto header = next_line();
  if (!header) throw TruncationError("empty field file", 1, true);
  std::istringstream hs{std::string(*header)};
  std::string magic, extra;
  long long width = -1, height = -1;
  if (!(hs >> magic >> width >> height) || magic != "VECF" || (hs >> extra)) {
    throw FormatError("expected header 'VECF <width> <height>'", 1, true);
  }
  if (width <= 0 || height <= 0 || width > 1'000'000 || height > 1'000'000) {
    throw FormatError("field dimensions must be positive", 1, true);
  }
  VectorField field(static_cast<int>(width), static_cast<int>(height));
  for (int y = 0; y < field.height(); ++y) {
    ++line_no;
    auto line = next_line();
    if (!line) throw TruncationError("expected " + std::to_string(height) + " rows", line_no, true);
    int x = 0;
    std::size_t i = 0;
    while (true) {
      while (i < line->size() && std::isspace(static_cast<unsigned char>((*line)[i]))) ++i;
      if (i >= line->size()) break;
      std::size_t j = i;
      while (j < line->size() && !std::isspace(static_cast<unsigned char>((*line)[j]))) ++j;
      const std::string_view tok = line->substr(i, j - i);
      i = j;
      if (x >= field.width()) throw FormatError("too many tokens in row", line_no, true);
      if (tok == "ND") {
        field(x, y) = std::nullopt;
      } else {
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
          throw FormatError("bad token '" + std::string(tok) + "'", line_no, true);
        }
        if (!std::isfinite(v)) throw FormatError("non-finite angle", line_no, true);
        if (v < -kPi || v > kPi) throw FormatError("angle outside [-pi, pi]", line_no, true);
        field(x, y) = v;
      }
      ++x;
    }
    if (x != field.width()) {
      throw FormatError("row has " + std::to_string(x) + " tokens, expected " + std::to_string(width), line_no, true);
    }
  }
  while (auto rest = next_line()) {
    ++line_no;
    for (char c : *rest) {
      if (!std::isspace(static_cast<unsigned char>(c))) throw FormatError("trailing data after last row", line_no, true);
    }
  }
  return field;
}

VectorField read_field(const std::filesystem::path& path) { return decode_field(read_file(path)); }

std::string encode_field(const VectorField& field) {
  std::string out = "VECF " + std::to_string(field.width()) + " " + std::to_string(field.height()) + "\n";
  char buf[32];
  for (int y = 0; y < field.height(); ++y) {
    for (int x = 0; x < field.width(); ++x) {
      if (x) out.push_back(' ');
      if (const Direction& d = field(x, y)) {
        std::snprintf(buf, sizeof buf, "%.9g", *d);
        out += buf;
      } else {
        out += "ND";
      }
    }
    out.push_back('\n');
  }
  return out;
}

void write_field(const VectorField& field, const std::filesystem::path& path) {
  write_file_atomic(path, encode_field(field));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed for '" + path.string() + "'");
  return buf.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view bytes) {
  namespace fs = std::filesystem;
  std::random_device rd;
  char suffix[24];
  std::snprintf(suffix, sizeof suffix, ".tmp%08x", static_cast<unsigned>(rd()));
  fs::path tmp = path;
  tmp += suffix;
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("write failed for '" + path.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot rename into '" + path.string() + "'");
  }
}

}  // namespace vecsim
