#include "qtree/patch_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "qtree/errors.hpp"

namespace qtree {

namespace {

constexpr std::string_view kHeader = "planar-patch v1";

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw InvalidInput("patch line " + std::to_string(line_no) + ": " + what);
}

// Splits on single spaces and rejects anything that would not be written back
// identically (tabs, doubled or trailing spaces).
std::vector<std::string_view> tokens(std::string_view line, std::size_t line_no) {
  std::vector<std::string_view> out;
  if (line.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find(' ', start);
    const auto tok = line.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    if (tok.empty()) fail(line_no, "unexpected spacing");
    out.push_back(tok);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

long long parse_int(std::string_view tok, std::size_t line_no) {
  long long value = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) fail(line_no, "expected an integer, got '" + std::string(tok) + "'");
  if (tok.size() > 1 && (tok[0] == '0' || (tok[0] == '-' && tok[1] == '0'))) {
    fail(line_no, "non-canonical integer '" + std::string(tok) + "'");
  }
  return value;
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++line_no_;
    if (!line.empty() && line.back() == '\r') fail(line_no_, "carriage return not allowed");
    return true;
  }
  std::string require(const char* what) {
    std::string line;
    if (!next(line)) fail(line_no_ + 1, std::string("missing ") + what);
    return line;
  }
  std::size_t line_no() const { return line_no_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

}  // namespace

void write_patch(std::ostream& out, const PlanarPatch& patch) {
  const Graph& g = patch.graph();
  out << kHeader << '\n';
  for (const auto& line : patch.provenance()) out << "# " << line << '\n';
  out << "vertices " << g.vertex_count() << " edges " << g.edge_count() << '\n';
  if (auto d = patch.outer_dart()) {
    out << "outer " << d->tail << ' ' << d->head << '\n';
  } else {
    out << "outer -1 -1\n";
  }
  out << "centers";
  for (Vertex c : patch.centers()) out << ' ' << c;
  out << '\n';
  out << "cert_radius " << patch.cert_radius() << '\n';
  out << "triangulation " << (patch.is_triangulation() ? 1 : 0) << '\n';
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
    out << v << ':';
    for (Vertex w : g.neighbors(v)) out << ' ' << w;
    out << '\n';
  }
}

std::string patch_to_string(const PlanarPatch& patch) {
  std::ostringstream out;
  write_patch(out, patch);
  return out.str();
}

void save_patch(const std::string& path, const PlanarPatch& patch) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot open '" + path + "' for writing");
  write_patch(out, patch);
  if (!out) throw InvalidInput("write to '" + path + "' failed");
}

PlanarPatch read_patch(std::istream& in) {
  LineReader reader(in);
  if (reader.require("header") != kHeader) fail(reader.line_no(), "expected 'planar-patch v1'");

  std::vector<std::string> provenance;
  std::string line = reader.require("vertex count");
  while (line.rfind("# ", 0) == 0) {
    provenance.push_back(line.substr(2));
    line = reader.require("vertex count");
  }

  auto toks = tokens(line, reader.line_no());
  if (toks.size() != 4 || toks[0] != "vertices" || toks[2] != "edges") {
    fail(reader.line_no(), "expected 'vertices N edges M'");
  }
  const long long n = parse_int(toks[1], reader.line_no());
  const long long m = parse_int(toks[3], reader.line_no());
  if (n < 0 || m < 0 || n > (1LL << 30)) fail(reader.line_no(), "bad vertex or edge count");

  line = reader.require("outer dart");
  toks = tokens(line, reader.line_no());
  if (toks.size() != 3 || toks[0] != "outer") fail(reader.line_no(), "expected 'outer U V'");
  const long long ou = parse_int(toks[1], reader.line_no());
  const long long ov = parse_int(toks[2], reader.line_no());
  std::optional<Dart> outer;
  if (!(ou == -1 && ov == -1)) outer = Dart{static_cast<Vertex>(ou), static_cast<Vertex>(ov)};

  line = reader.require("centers");
  toks = tokens(line, reader.line_no());
  if (toks.empty() || toks[0] != "centers") fail(reader.line_no(), "expected 'centers ...'");
  std::vector<Vertex> centers;
  for (std::size_t i = 1; i < toks.size(); ++i) {
    const long long c = parse_int(toks[i], reader.line_no());
    if (c < 0 || c >= n) fail(reader.line_no(), "center out of range");
    centers.push_back(static_cast<Vertex>(c));
  }

  line = reader.require("cert_radius");
  toks = tokens(line, reader.line_no());
  if (toks.size() != 2 || toks[0] != "cert_radius") fail(reader.line_no(), "expected 'cert_radius R'");
  const long long cert = parse_int(toks[1], reader.line_no());
  if (cert < 0 || cert > (1LL << 30)) fail(reader.line_no(), "bad cert_radius");

  line = reader.require("triangulation flag");
  toks = tokens(line, reader.line_no());
  if (toks.size() != 2 || toks[0] != "triangulation" || (toks[1] != "0" && toks[1] != "1")) {
    fail(reader.line_no(), "expected 'triangulation 0|1'");
  }
  const bool triangulation = toks[1] == "1";

  std::vector<std::vector<Vertex>> adjacency(static_cast<std::size_t>(n));
  long long darts = 0;
  for (long long v = 0; v < n; ++v) {
    line = reader.require("rotation line");
    const auto colon = line.find(':');
    if (colon == std::string::npos) fail(reader.line_no(), "expected 'v: ...'");
    if (parse_int(std::string_view(line).substr(0, colon), reader.line_no()) != v) {
      fail(reader.line_no(), "rotation lines must be in vertex order");
    }
    auto rest = std::string_view(line).substr(colon + 1);
    if (!rest.empty()) {
      if (rest[0] != ' ' || rest.size() == 1) fail(reader.line_no(), "unexpected spacing");
      for (auto tok : tokens(rest.substr(1), reader.line_no())) {
        const long long w = parse_int(tok, reader.line_no());
        if (w < 0 || w >= n) fail(reader.line_no(), "neighbor out of range");
        adjacency[v].push_back(static_cast<Vertex>(w));
      }
    }
    darts += static_cast<long long>(adjacency[v].size());
  }
  std::string extra;
  if (reader.next(extra)) fail(reader.line_no(), "trailing content");
  if (darts != 2 * m) fail(reader.line_no(), "edge count does not match rotation lines");

  return PlanarPatch(Graph(adjacency), outer, std::move(centers), static_cast<int>(cert), triangulation,
                     std::move(provenance));
}

PlanarPatch patch_from_string(const std::string& text) {
  std::istringstream in(text);
  return read_patch(in);
}

PlanarPatch load_patch(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  return read_patch(in);
}

}  // namespace qtree
