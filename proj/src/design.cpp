#include "weavesym/design.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace weavesym {

Design::Design(int width, int height, std::vector<std::uint8_t> cells)
    : width_(width), height_(height), cells_(std::move(cells)) {
  if (width < 1 || height < 1) throw std::invalid_argument("Design: dimensions must be positive");
  if (cells_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
    throw std::invalid_argument("Design: cell count does not match dimensions");
  for (std::uint8_t v : cells_)
    if (v > 1) throw std::invalid_argument("Design: cells must be 0 or 1");
}

Design Design::filled(int width, int height, std::uint8_t value) {
  return Design(width, height,
                std::vector<std::uint8_t>(static_cast<std::size_t>(width * height), value));
}

Design Design::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) throw std::invalid_argument("Design: no rows");
  const int width = static_cast<int>(rows.front().size());
  std::vector<std::uint8_t> cells;
  for (const std::string& row : rows) {
    if (static_cast<int>(row.size()) != width) throw std::invalid_argument("Design: ragged rows");
    for (char ch : row) {
      if (ch != '#' && ch != '.') throw std::invalid_argument("Design: cells must be '#' or '.'");
      cells.push_back(ch == '#' ? 1 : 0);
    }
  }
  return Design(width, static_cast<int>(rows.size()), std::move(cells));
}

std::vector<std::string> Design::rows() const {
  std::vector<std::string> out;
  for (int j = 0; j < height_; ++j) {
    std::string row;
    for (int i = 0; i < width_; ++i) row.push_back(at(i, j) ? '#' : '.');
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

[[noreturn]] void fail_at(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t") == std::string::npos; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

Design parse_design(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  enum class Stage { header, block, rows } stage = Stage::header;
  int width = 0, height = 0, row_count = 0;
  std::vector<std::uint8_t> cells;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_cr(raw);
    if (line.rfind("//", 0) == 0) continue;
    if (stage == Stage::header) {
      if (blank(line)) continue;
      if (line != "weave-design v1") fail_at(line_no, "missing header 'weave-design v1'");
      stage = Stage::block;
      continue;
    }
    if (stage == Stage::block) {
      if (blank(line)) continue;
      std::istringstream fields(line);
      std::string keyword, extra;
      if (!(fields >> keyword) || keyword != "block" || !(fields >> width >> height) || (fields >> extra))
        fail_at(line_no, "expected 'block W H'");
      if (width < 1 || height < 1) fail_at(line_no, "block dimensions must be positive");
      stage = Stage::rows;
      continue;
    }
    if (blank(line)) {
      if (row_count == height) continue;
      fail_at(line_no, "blank line inside block");
    }
    if (row_count == height) fail_at(line_no, "more than " + std::to_string(height) + " rows");
    ++row_count;
    for (char ch : line)
      if (ch != '#' && ch != '.')
        fail_at(line_no, std::string("invalid character '") + ch + "' (expected '#' or '.')");
    if (static_cast<int>(line.size()) != width)
      fail_at(line_no, "row " + std::to_string(row_count) + " has " + std::to_string(line.size()) +
                           " cells, expected " + std::to_string(width));
    for (char ch : line) cells.push_back(ch == '#' ? 1 : 0);
  }
  if (stage == Stage::header) fail_at(line_no + 1, "missing header 'weave-design v1'");
  if (stage == Stage::block) fail_at(line_no + 1, "missing 'block W H' line");
  if (row_count != height)
    fail_at(line_no + 1, "expected " + std::to_string(height) + " rows, found " + std::to_string(row_count));
  return Design(width, height, std::move(cells));
}

std::string serialize_design(const Design& d) {
  std::string out = "weave-design v1\nblock " + std::to_string(d.width()) + " " +
                    std::to_string(d.height()) + "\n";
  for (const std::string& row : d.rows()) out += row + "\n";
  return out;
}

Design load_design(const std::string& path) { return parse_design(read_file(path)); }

void save_design(const Design& d, const std::string& path) { write_file(path, serialize_design(d)); }

Design complement(const Design& d) {
  std::vector<std::uint8_t> cells(d.cells().begin(), d.cells().end());
  for (auto& v : cells) v ^= 1;
  return Design(d.width(), d.height(), std::move(cells));
}

Design transform(const Design& d, const GridIsometry& g) {
  const bool swaps = direction_sign(g) < 0;
  const int w = swaps ? d.height() : d.width();
  const int h = swaps ? d.width() : d.height();
  const GridIsometry inv = inverse(g);
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(w * h));
  for (int j = 0; j < h; ++j)
    for (int i = 0; i < w; ++i) cells[static_cast<std::size_t>(j * w + i)] = d.at(apply_cell(inv, {i, j}));
  return Design(w, h, std::move(cells));
}

Design tile(const Design& d, int nx, int ny) {
  const int w = d.width() * nx, h = d.height() * ny;
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(w * h));
  for (int j = 0; j < h; ++j)
    for (int i = 0; i < w; ++i) cells[static_cast<std::size_t>(j * w + i)] = d.at(i, j);
  return Design(w, h, std::move(cells));
}

Design mirror_columns(const Design& d) {
  std::vector<std::uint8_t> cells(d.cells().size());
  for (int j = 0; j < d.height(); ++j)
    for (int i = 0; i < d.width(); ++i)
      cells[static_cast<std::size_t>(j * d.width() + i)] = d.at(d.width() - 1 - i, j);
  return Design(d.width(), d.height(), std::move(cells));
}

// ---------------------------------------------------------------------------

StrandFaces parse_faces(std::string_view code) {
  auto color = [&](char ch) {
    if (ch == 'B') return StrandColor::black;
    if (ch == 'W') return StrandColor::white;
    throw ParseError("strand faces must be two characters over {B,W}, got '" + std::string(code) + "'");
  };
  if (code.size() != 2)
    throw ParseError("strand faces must be two characters over {B,W}, got '" + std::string(code) + "'");
  return {color(code[0]), color(code[1])};
}

std::string faces_code(const StrandFaces& f) {
  auto ch = [](StrandColor c) { return c == StrandColor::black ? 'B' : 'W'; };
  return {ch(f.front), ch(f.back)};
}

WeaveStructure parse_structure(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("structure file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("structure file must hold a JSON object");
  for (const char* key : {"overunder", "warp_faces", "weft_faces"})
    if (!j.contains(key) || !j[key].is_array() || j[key].empty())
      throw ParseError(std::string("structure file needs a non-empty array '") + key + "'");

  WeaveStructure w;
  std::vector<std::string> rows;
  for (const auto& row : j["overunder"]) {
    if (!row.is_string()) throw ParseError("'overunder' rows must be strings");
    rows.push_back(row.get<std::string>());
  }
  try {
    w.overunder = Design::from_rows(rows);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("'overunder': ") + e.what());
  }
  for (const char* key : {"warp_faces", "weft_faces"}) {
    auto& out = std::string_view(key) == "warp_faces" ? w.warp_faces : w.weft_faces;
    for (const auto& code : j[key]) {
      if (!code.is_string()) throw ParseError(std::string("'") + key + "' entries must be strings");
      out.push_back(parse_faces(code.get<std::string>()));
    }
  }
  return w;
}

std::string serialize_structure(const WeaveStructure& w) {
  nlohmann::json j;
  j["overunder"] = w.overunder.rows();
  j["warp_faces"] = nlohmann::json::array();
  j["weft_faces"] = nlohmann::json::array();
  for (const auto& f : w.warp_faces) j["warp_faces"].push_back(faces_code(f));
  for (const auto& f : w.weft_faces) j["weft_faces"].push_back(faces_code(f));
  return j.dump(2) + "\n";
}

WeaveStructure load_structure(const std::string& path) { return parse_structure(read_file(path)); }

Design render_visible(const WeaveStructure& w, Side3D side) {
  const int warp_n = static_cast<int>(w.warp_faces.size());
  const int weft_n = static_cast<int>(w.weft_faces.size());
  if (warp_n == 0 || weft_n == 0) throw std::invalid_argument("render_visible: empty strand colouring");
  const int width = std::lcm(w.overunder.width(), warp_n);
  const int height = std::lcm(w.overunder.height(), weft_n);
  auto black = [](StrandColor c) -> std::uint8_t { return c == StrandColor::black ? 1 : 0; };

  std::vector<std::uint8_t> cells(static_cast<std::size_t>(width * height));
  for (int j = 0; j < height; ++j) {
    for (int i = 0; i < width; ++i) {
      const bool weft_over = w.overunder.at(i, j) == 1;
      const StrandFaces& warp = w.warp_faces[static_cast<std::size_t>(i % warp_n)];
      const StrandFaces& weft = w.weft_faces[static_cast<std::size_t>(j % weft_n)];
      if (side == Side3D::front) {
        cells[static_cast<std::size_t>(j * width + i)] = black(weft_over ? weft.front : warp.front);
      } else {
        // From behind, the strand under (seen from the front) is on top and
        // column i appears at width-1-i.
        cells[static_cast<std::size_t>(j * width + (width - 1 - i))] =
            black(weft_over ? warp.back : weft.back);
      }
    }
  }
  return Design(width, height, std::move(cells));
}

}  // namespace weavesym
