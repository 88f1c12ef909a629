#include "seghull/dataio.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "seghull/error.hpp"

namespace seghull {

namespace {

constexpr char kMagic[4] = {'P', 'T', 'S', '2'};

[[noreturn]] void parse_fail(const std::filesystem::path& path, std::size_t line,
                             const std::string& what) {
  throw Error(Errc::ParseError,
              path.string() + ":" + std::to_string(line) + ": " + what);
}

void check_finite(const std::filesystem::path& path, std::size_t line, double v) {
  if (!std::isfinite(v)) {
    throw Error(Errc::NonFiniteInput, path.string() + ":" + std::to_string(line) +
                                          ": non-finite coordinate");
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// Locale-independent double parse; consumes leading blanks, advances `s`.
bool parse_double(std::string_view& s, double& out) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc{}) return false;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return true;
}

std::vector<std::string_view> split_tokens(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) tokens.push_back(s.substr(start, i - start));
  }
  return tokens;
}

std::uint64_t load_u64_le(const unsigned char* b) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

void store_u64_le(std::uint64_t v, unsigned char* b) {
  for (int i = 0; i < 8; ++i) {
    b[i] = static_cast<unsigned char>(v & 0xff);
    v >>= 8;
  }
}

std::ifstream open_input(const std::filesystem::path& path, bool binary) {
  std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
  if (!in) {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) {
      throw Error(Errc::FileNotFound, "no such file: " + path.string());
    }
    throw Error(Errc::IoError, "cannot open " + path.string());
  }
  return in;
}

PointSet read_points_text(const std::filesystem::path& path) {
  std::ifstream in = open_input(path, false);
  PointSet points;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest = trim(line);
    if (rest.empty() || rest.front() == '#') continue;
    double x = 0.0, y = 0.0;
    if (!parse_double(rest, x)) parse_fail(path, line_no, "expected x coordinate");
    if (!parse_double(rest, y)) parse_fail(path, line_no, "expected y coordinate");
    if (!trim(rest).empty()) parse_fail(path, line_no, "trailing characters");
    check_finite(path, line_no, x);
    check_finite(path, line_no, y);
    points.push_back({x, y});
  }
  if (in.bad()) throw Error(Errc::IoError, "read failed: " + path.string());
  return points;
}

PointSet read_points_binary(const std::filesystem::path& path) {
  std::ifstream in = open_input(path, true);
  char magic[4];
  if (!in.read(magic, 4)) {
    throw Error(Errc::ParseError, path.string() + ": truncated header");
  }
  if (std::memcmp(magic, kMagic, 4) != 0) {
    throw Error(Errc::ParseError, path.string() + ": bad magic, expected PTS2");
  }
  unsigned char raw[16];
  if (!in.read(reinterpret_cast<char*>(raw), 8)) {
    throw Error(Errc::ParseError, path.string() + ": truncated count");
  }
  const std::uint64_t count = load_u64_le(raw);

  std::error_code ec;
  const auto file_size = std::filesystem::file_size(path, ec);
  if (!ec && file_size != 12 + 16 * count) {
    throw Error(Errc::ParseError,
                path.string() + ": size does not match declared point count");
  }

  PointSet points;
  points.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    if (!in.read(reinterpret_cast<char*>(raw), 16)) {
      throw Error(Errc::ParseError, path.string() + ": truncated at point " +
                                        std::to_string(i));
    }
    const double x = std::bit_cast<double>(load_u64_le(raw));
    const double y = std::bit_cast<double>(load_u64_le(raw + 8));
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw Error(Errc::NonFiniteInput,
                  path.string() + ": non-finite coordinate at point " +
                      std::to_string(i));
    }
    points.push_back({x, y});
  }
  return points;
}

PointSet read_mesh_obj(const std::filesystem::path& path) {
  std::ifstream in = open_input(path, false);
  PointSet points;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view s = trim(line);
    if (s.size() < 2 || s[0] != 'v' || (s[1] != ' ' && s[1] != '\t')) continue;
    std::string_view rest = s.substr(1);
    double c[3];
    for (double& v : c) {
      if (!parse_double(rest, v)) {
        parse_fail(path, line_no, "vertex needs 3 coordinates");
      }
    }
    check_finite(path, line_no, c[0]);
    check_finite(path, line_no, c[1]);
    points.push_back({c[0], c[1]});  // z (and optional w) dropped
  }
  if (in.bad()) throw Error(Errc::IoError, "read failed: " + path.string());
  return points;
}

PointSet read_mesh_ply(const std::filesystem::path& path) {
  std::ifstream in = open_input(path, false);
  std::string line;
  std::size_t line_no = 0;

  auto next_line = [&](std::string_view what) -> std::string_view {
    if (!std::getline(in, line)) {
      parse_fail(path, line_no, "unexpected end of file, expected " + std::string(what));
    }
    ++line_no;
    return trim(line);
  };

  if (next_line("ply magic") != "ply") {
    throw Error(Errc::ParseError, path.string() + ": not a ply file");
  }

  struct Element {
    std::string name;
    std::uint64_t count = 0;
    std::vector<std::string> properties;
  };
  std::vector<Element> elements;
  bool saw_format = false;

  for (;;) {
    const std::string_view s = next_line("end_header");
    const auto tokens = split_tokens(s);
    if (tokens.empty() || tokens[0] == "comment" || tokens[0] == "obj_info") continue;
    if (tokens[0] == "end_header") break;
    if (tokens[0] == "format") {
      if (tokens.size() < 2) parse_fail(path, line_no, "malformed format line");
      if (tokens[1] != "ascii") {
        throw Error(Errc::UnsupportedFormat,
                    path.string() + ": binary ply is not supported, convert to ascii");
      }
      saw_format = true;
    } else if (tokens[0] == "element") {
      if (tokens.size() < 3) parse_fail(path, line_no, "malformed element line");
      std::uint64_t count = 0;
      const auto [ptr, ec] =
          std::from_chars(tokens[2].data(), tokens[2].data() + tokens[2].size(), count);
      if (ec != std::errc{} || ptr != tokens[2].data() + tokens[2].size()) {
        parse_fail(path, line_no, "malformed element count");
      }
      elements.push_back({std::string(tokens[1]), count, {}});
    } else if (tokens[0] == "property") {
      if (elements.empty()) parse_fail(path, line_no, "property before any element");
      if (tokens.size() >= 2 && tokens[1] == "list") {
        if (elements.back().name == "vertex") {
          throw Error(Errc::UnsupportedFormat,
                      path.string() + ": list property on vertex element");
        }
        elements.back().properties.emplace_back("(list)");
      } else {
        if (tokens.size() < 3) parse_fail(path, line_no, "malformed property line");
        elements.back().properties.emplace_back(tokens.back());
      }
    }
    // anything else in the header is ignored
  }
  if (!saw_format) {
    throw Error(Errc::ParseError, path.string() + ": missing format line");
  }

  const Element* vertex = nullptr;
  for (const Element& e : elements) {
    if (e.name == "vertex") {
      vertex = &e;
      break;
    }
  }
  if (vertex == nullptr) {
    throw Error(Errc::ParseError, path.string() + ": no vertex element");
  }
  std::size_t ix = vertex->properties.size(), iy = vertex->properties.size();
  for (std::size_t i = 0; i < vertex->properties.size(); ++i) {
    if (vertex->properties[i] == "x") ix = i;
    if (vertex->properties[i] == "y") iy = i;
  }
  if (ix == vertex->properties.size() || iy == vertex->properties.size()) {
    throw Error(Errc::ParseError, path.string() + ": vertex element lacks x/y properties");
  }

  PointSet points;
  for (const Element& e : elements) {
    if (&e != vertex) {
      for (std::uint64_t r = 0; r < e.count; ++r) next_line("element row");
      continue;
    }
    points.reserve(e.count);
    for (std::uint64_t r = 0; r < e.count; ++r) {
      const std::string_view s = next_line("vertex row");
      const auto tokens = split_tokens(s);
      if (tokens.size() < vertex->properties.size()) {
        parse_fail(path, line_no, "vertex row has too few values");
      }
      double x = 0.0, y = 0.0;
      std::string_view tx = tokens[ix], ty = tokens[iy];
      if (!parse_double(tx, x) || !parse_double(ty, y)) {
        parse_fail(path, line_no, "malformed vertex coordinate");
      }
      check_finite(path, line_no, x);
      check_finite(path, line_no, y);
      points.push_back({x, y});
    }
  }
  return points;
}

}  // namespace

PointSet gen_uniform(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  PointSet points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = rng.next_double();
    const double y = rng.next_double();
    points.push_back({x, y});
  }
  return points;
}

PointSet gen_circle(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  PointSet points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double angle = 2.0 * std::numbers::pi * rng.next_double();
    points.push_back({std::cos(angle), std::sin(angle)});
  }
  return points;
}

PointSet read_points(const std::filesystem::path& path, PointFormat format) {
  return format == PointFormat::Text ? read_points_text(path)
                                     : read_points_binary(path);
}

void write_points(const PointSet& points, const std::filesystem::path& path,
                  PointFormat format) {
  std::ofstream out(path, format == PointFormat::Binary
                              ? std::ios::binary | std::ios::trunc
                              : std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot open for writing: " + path.string());

  if (format == PointFormat::Text) {
    char buf[80];
    for (std::size_t i = 0; i < points.size(); ++i) {
      const int len =
          std::snprintf(buf, sizeof(buf), "%.17g %.17g\n", points.x[i], points.y[i]);
      out.write(buf, len);
    }
  } else {
    unsigned char raw[16];
    out.write(kMagic, 4);
    store_u64_le(points.size(), raw);
    out.write(reinterpret_cast<const char*>(raw), 8);
    for (std::size_t i = 0; i < points.size(); ++i) {
      store_u64_le(std::bit_cast<std::uint64_t>(points.x[i]), raw);
      store_u64_le(std::bit_cast<std::uint64_t>(points.y[i]), raw + 8);
      out.write(reinterpret_cast<const char*>(raw), 16);
    }
  }
  out.flush();
  if (!out) throw Error(Errc::IoError, "write failed: " + path.string());
}

PointSet read_mesh_vertices(const std::filesystem::path& path) {
  {
    std::ifstream probe = open_input(path, true);
    char magic[3];
    if (probe.read(magic, 3) && std::memcmp(magic, "ply", 3) == 0) {
      return read_mesh_ply(path);
    }
  }
  return read_mesh_obj(path);
}

}  // namespace seghull
