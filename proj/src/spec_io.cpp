#include "liftforge/spec_io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "liftforge/errors.hpp"

namespace liftforge {

namespace {

std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    auto end = line.find_last_not_of(" \t\r");
    out.emplace_back(number, line.substr(begin, end - begin + 1));
  }
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

int to_int(int line, const std::string& s) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) fail(line, "bad integer '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    fail(line, "bad integer '" + s + "'");
  }
}

std::map<std::string, std::string> keyvals(int line, const std::vector<std::string>& toks) {
  std::map<std::string, std::string> kv;
  for (size_t i = 1; i < toks.size(); ++i) {
    auto eq = toks[i].find('=');
    if (eq == std::string::npos) fail(line, "expected key=value, got '" + toks[i] + "'");
    kv[toks[i].substr(0, eq)] = toks[i].substr(eq + 1);
  }
  return kv;
}

std::string need(int line, const std::map<std::string, std::string>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) fail(line, "missing " + key + "=");
  return it->second;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

FieldMatrix parse_linear_matrix(int line, const std::map<std::string, std::string>& kv) {
  int p = to_int(line, need(line, kv, "p"));
  int k = to_int(line, need(line, kv, "k"));
  int rows = to_int(line, need(line, kv, "rows"));
  int cols = to_int(line, need(line, kv, "cols"));
  std::vector<int> data;
  for (const auto& part : split_on(need(line, kv, "data"), ',')) {
    data.push_back(to_int(line, part));
  }
  return FieldMatrix(Field::gf(p, k), rows, cols, std::move(data));
}

Matroid parse_definition(int line, const std::string& def) {
  auto toks = split_ws(def);
  if (toks.empty()) fail(line, "empty definition");
  const std::string& kind = toks[0];
  auto kv = keyvals(line, toks);
  if (kind == "uniform") {
    int r = to_int(line, need(line, kv, "r"));
    int n = to_int(line, need(line, kv, "n"));
    if (r > n) fail(line, "r > n");
    return uniform_matroid(r, n);
  }
  if (kind == "free") return free_matroid(to_int(line, need(line, kv, "n")));
  if (kind == "zero") return rank_zero_matroid(to_int(line, need(line, kv, "n")));
  if (kind == "graphic") {
    int n = to_int(line, need(line, kv, "n"));
    std::vector<std::pair<int, int>> edges;
    auto it = kv.find("edges");
    if (it != kv.end() && !it->second.empty()) {
      for (const auto& part : split_on(it->second, ',')) {
        auto dash = part.find('-');
        if (dash == std::string::npos) fail(line, "edge '" + part + "' is not u-v");
        int u = to_int(line, part.substr(0, dash));
        int v = to_int(line, part.substr(dash + 1));
        if (u < 1 || v < 1 || u > n || v > n) fail(line, "edge endpoint out of 1.." + std::to_string(n));
        edges.emplace_back(u - 1, v - 1);
      }
    }
    return graphic_matroid(n, std::move(edges));
  }
  if (kind == "linear") return linear_matroid(parse_linear_matrix(line, kv));
  if (kind == "bases") {
    int r = to_int(line, need(line, kv, "rank"));
    std::string sets = need(line, kv, "sets");
    std::vector<SmallSet> bases;
    int max_elem = -1;
    size_t pos = 0;
    while (pos < sets.size()) {
      if (sets[pos] != '{') fail(line, "expected '{' in sets");
      auto close = sets.find('}', pos);
      if (close == std::string::npos) fail(line, "unbalanced '{' in sets");
      SmallSet b;
      std::string inner = sets.substr(pos + 1, close - pos - 1);
      if (!inner.empty()) {
        for (const auto& part : split_on(inner, ',')) {
          int e = to_int(line, part);
          if (e < 0 || e >= SmallSet::kMaxElements) fail(line, "element out of range: " + part);
          b.set(e);
          max_elem = std::max(max_elem, e);
        }
      }
      if (b.count() != r && !(r == 0 && b.empty())) {
        fail(line, "basis " + b.to_string() + " does not have rank=" + std::to_string(r) +
                       " elements");
      }
      bases.push_back(b);
      pos = close + 1;
      if (pos < sets.size() && sets[pos] == ',') ++pos;
    }
    if (bases.empty()) fail(line, "no bases given");
    // The optional n= covers grounds with loops above the last basis element.
    int n = max_elem + 1;
    if (auto it = kv.find("n"); it != kv.end()) {
      n = to_int(line, it->second);
      if (n < max_elem + 1) fail(line, "n smaller than the largest basis element");
    }
    return basis_matroid(n, std::move(bases));
  }
  fail(line, "unknown matroid kind '" + kind + "'");
}

}  // namespace

NamedMatroid parse_matroid_text(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty matroid spec");
  size_t at = 0;
  std::string name = "matroid";
  auto header = split_ws(lines[0].second);
  if (header.size() == 2 && header[0] == "matroid") {
    name = header[1];
    ++at;
  }
  if (at >= lines.size()) fail(lines[0].first, "missing definition line");
  Matroid m = parse_definition(lines[at].first, lines[at].second);
  if (at + 1 < lines.size()) fail(lines[at + 1].first, "unexpected extra line");
  return NamedMatroid{std::move(name), std::move(m)};
}

NamedMatroid load_matroid(const std::string& path_or_inline) {
  if (std::filesystem::exists(path_or_inline)) {
    std::ifstream in(path_or_inline);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_matroid_text(buf.str());
  }
  if (path_or_inline.find('=') != std::string::npos) {
    return parse_matroid_text(path_or_inline);
  }
  throw ParseError("no such matroid file: " + path_or_inline);
}

Representation load_representation(const std::string& path_or_inline) {
  std::string text;
  if (std::filesystem::exists(path_or_inline)) {
    std::ifstream in(path_or_inline);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else if (path_or_inline.find('=') != std::string::npos) {
    text = path_or_inline;
  } else {
    throw ParseError("no such matroid file: " + path_or_inline);
  }
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty representation spec");
  size_t at = 0;
  auto header = split_ws(lines[0].second);
  if (header.size() == 2 && header[0] == "matroid") ++at;
  if (at >= lines.size()) throw ParseError("missing definition line");
  auto toks = split_ws(lines[at].second);
  if (toks.empty() || toks[0] != "linear") {
    fail(lines[at].first, "a representation needs a 'linear' definition");
  }
  auto kv = keyvals(lines[at].first, toks);
  return make_representation(parse_linear_matrix(lines[at].first, kv));
}

FiniteGroup parse_group_text(const std::string& text) {
  auto lines = content_lines(text);
  size_t at = 0;
  auto expect = [&](const std::string& what) -> std::vector<std::string> {
    if (at >= lines.size()) throw ParseError("unexpected end of group file, wanted " + what);
    auto toks = split_ws(lines[at].second);
    ++at;
    return toks;
  };
  auto header = expect("'group <name>'");
  if (header.size() != 2 || header[0] != "group") {
    throw ParseError("group file must start with 'group <name>'");
  }
  std::string name = header[1];
  auto order_line = expect("'order <m>'");
  if (order_line.size() != 2 || order_line[0] != "order") throw ParseError("expected 'order <m>'");
  int m = to_int(lines[at - 1].first, order_line[1]);
  auto table_line = expect("'table'");
  if (table_line.size() != 1 || table_line[0] != "table") throw ParseError("expected 'table'");
  std::vector<std::vector<int>> table;
  for (int r = 0; r < m; ++r) {
    auto row = expect("table row");
    if (static_cast<int>(row.size()) != m) {
      throw ParseError("table row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(m));
    }
    std::vector<int> vals;
    for (const auto& tok : row) vals.push_back(to_int(lines[at - 1].first, tok));
    table.push_back(std::move(vals));
  }
  if (at != lines.size()) throw ParseError("unexpected content after the table");
  return FiniteGroup::cayley(std::move(table), std::move(name));
}

FiniteGroup load_group(const std::string& name_or_path) {
  if (std::filesystem::exists(name_or_path)) {
    std::ifstream in(name_or_path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_group_text(buf.str());
  }
  return FiniteGroup::named(name_or_path);
}

std::string show_matroid(const NamedMatroid& nm) {
  const Matroid& m = nm.matroid;
  std::ostringstream out;
  out << "matroid " << nm.name << "\n";
  out << "ground " << m.size() << "\n";
  out << "rank " << m.rank() << "\n";
  if (m.size() <= caps::max_full_ground()) {
    const auto& circ = m.circuits();
    out << "circuits " << circ.size() << "\n";
    for (const auto& c : circ) out << "  " << c.to_string() << "\n";
  } else {
    out << "circuits skipped (ground beyond full-enumeration capacity)\n";
  }
  if (m.size() <= 12) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "0x%016llx",
                  static_cast<unsigned long long>(rank_table_hash(m)));
    out << "table-hash " << buf << "\n";
  }
  return out.str();
}

std::string bases_line(const Matroid& m) {
  m.materialize();
  int r = m.rank();
  std::ostringstream out;
  out << "bases rank=" << r << " n=" << m.size() << " sets=";
  bool first = true;
  std::uint64_t total = std::uint64_t{1} << m.size();
  for (std::uint64_t x = 0; x < total; ++x) {
    if (__builtin_popcountll(x) != r) continue;
    SmallSet s = SmallSet::from_index(x);
    if (m.rank(s) != r) continue;
    if (!first) out << ",";
    out << s.to_string();
    first = false;
  }
  return out.str();
}

}  // namespace liftforge
