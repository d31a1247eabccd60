#include "mbb/edge_list.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "mbb/errors.hpp"

namespace mbb {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t to_uint(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return v;
}

std::uint32_t to_label(std::string_view tok, std::size_t line) {
  const auto v = to_uint(tok, line);
  if (v == 0) throw ParseError(line, "labels are 1-based");
  if (v > UINT32_MAX) throw ParseError(line, "label too large");
  return static_cast<std::uint32_t>(v - 1);
}

}  // namespace

BipartiteGraph parse_edge_list(std::string_view text, EdgeListDialect dialect) {
  const bool konect = dialect == EdgeListDialect::Konect;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_line;
  bool seen_data = false;
  bool has_header = false;
  std::uint64_t hl = 0, hr = 0, he = 0;
  std::uint32_t max_l = 0, max_r = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto toks = split_ws(line);
    if (toks.empty() || toks[0].front() == '%') continue;

    if (!seen_data && !konect && toks.size() == 3) {
      hl = to_uint(toks[0], line_no);
      hr = to_uint(toks[1], line_no);
      he = to_uint(toks[2], line_no);
      if (hl > UINT32_MAX || hr > UINT32_MAX) throw ParseError(line_no, "side size too large");
      has_header = true;
      seen_data = true;
      continue;
    }
    seen_data = true;
    if (toks.size() < 2 || (!konect && toks.size() != 2)) {
      throw ParseError(line_no, "expected two labels, got " + std::to_string(toks.size()) + " fields");
    }
    const auto l = to_label(toks[0], line_no);
    const auto r = to_label(toks[1], line_no);
    if (has_header && (l >= hl || r >= hr)) throw ParseError(line_no, "label outside the declared sizes");
    max_l = std::max(max_l, l + 1);
    max_r = std::max(max_r, r + 1);
    edges.push_back({l, r});
    edge_line.push_back(line_no);
  }

  if (konect) {
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
      return a.left != b.left ? a.left < b.left : a.right < b.right;
    });
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [](const Edge& a, const Edge& b) { return a.left == b.left && a.right == b.right; }),
                edges.end());
  } else if (has_header && he != edges.size()) {
    throw ParseError(line_no, "header declares " + std::to_string(he) + " edges, found " + std::to_string(edges.size()));
  }
  const auto lc = has_header ? static_cast<std::uint32_t>(hl) : max_l;
  const auto rc = has_header ? static_cast<std::uint32_t>(hr) : max_r;
  return BipartiteGraph::from_edges(lc, rc, edges);
}

BipartiteGraph read_edge_list(const std::string& path, EdgeListDialect dialect) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_edge_list(ss.str(), dialect);
}

std::string serialize_edge_list(const BipartiteGraph& g) {
  std::ostringstream out;
  out << "% bip unweighted\n" << g.left_count() << ' ' << g.right_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.left + 1 << ' ' << e.right + 1 << '\n';
  return out.str();
}

void write_edge_list(const std::string& path, const BipartiteGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << serialize_edge_list(g);
}

}  // namespace mbb
