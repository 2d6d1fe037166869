#include "gp/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

namespace gp {

namespace {

struct Line {
  int number;
  std::string text;
};

[[noreturn]] void fail(const std::string& file, int line, int col,
                       const std::string& message) {
  throw ParseError(file + ":" + std::to_string(line) + ":" +
                   std::to_string(col) + ": " + message);
}

std::string strip_comment(std::string s) {
  const auto pos = s.find('#');
  if (pos != std::string::npos) s.erase(pos);
  return s;
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

std::string trimmed(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

long parse_int(const std::string& file, int line, const std::string& tok) {
  long value = 0;
  const auto res =
      std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
    fail(file, line, 1, "expected an integer, got '" + tok + "'");
  return value;
}

VertexGroupSpec parse_table_block(const std::string& file, int line,
                                  const std::string& body) {
  // body is the text between the braces; keywords: order, generators, mul.
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : body) {
    if (isspace(static_cast<unsigned char>(c)) || c == ';' || c == ',') {
      if (!cur.empty()) tokens.push_back(std::exchange(cur, ""));
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) tokens.push_back(cur);

  long order = -1;
  std::vector<int> generators;
  std::vector<int> entries;
  std::string mode;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::string t = tokens[i];
    if (t == "order:" || t == "generators:" || t == "mul:") {
      mode = t;
      continue;
    }
    if (t.back() == ':') fail(file, line, 1, "unknown table keyword '" + t + "'");
    const long v = parse_int(file, line, t);
    if (mode == "order:")
      order = v;
    else if (mode == "generators:")
      generators.push_back(static_cast<int>(v));
    else if (mode == "mul:")
      entries.push_back(static_cast<int>(v));
    else
      fail(file, line, 1, "table value outside any keyword");
  }
  if (order < 1) fail(file, line, 1, "table block needs 'order: n'");
  if (static_cast<long>(entries.size()) != order * order)
    fail(file, line, 1,
         "table block needs " + std::to_string(order * order) +
             " mul entries, got " + std::to_string(entries.size()));
  std::vector<std::vector<int>> mul(order, std::vector<int>(order));
  for (long r = 0; r < order; ++r)
    for (long c = 0; c < order; ++c) mul[r][c] = entries[r * order + c];
  try {
    return VertexGroupSpec::table(std::move(mul), std::move(generators));
  } catch (const std::invalid_argument& e) {
    fail(file, line, 1, std::string("invalid table group: ") + e.what());
  }
}

VertexGroupSpec parse_spec(const std::string& file, int line,
                           const std::string& text) {
  const std::string t = trimmed(text);
  if (t == "int") return VertexGroupSpec::integers();
  if (t.rfind("cyclic:", 0) == 0) {
    const long n = parse_int(file, line, t.substr(7));
    if (n < 2) fail(file, line, 1, "cyclic order must be at least 2");
    return VertexGroupSpec::cyclic(static_cast<int>(n));
  }
  if (t.rfind("table{", 0) == 0 && t.back() == '}')
    return parse_table_block(file, line, t.substr(6, t.size() - 7));
  fail(file, line, 1, "unknown group spec '" + t + "'");
}

}  // namespace

GraphDefinition parse_graph_definition(const std::string& text,
                                       const std::string& filename) {
  // Join table blocks spanning multiple physical lines first.
  std::vector<Line> lines;
  {
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    int open_depth = 0;
    Line pending{0, ""};
    while (std::getline(in, raw)) {
      ++number;
      const std::string s = strip_comment(raw);
      if (open_depth == 0 && blank(s)) continue;
      if (open_depth == 0) pending = Line{number, s};
      else
        pending.text += " " + s;
      for (char c : s) {
        if (c == '{') ++open_depth;
        if (c == '}') --open_depth;
      }
      if (open_depth < 0) fail(filename, number, 1, "unbalanced '}'");
      if (open_depth == 0) lines.push_back(pending);
    }
    if (open_depth != 0)
      fail(filename, number, 1, "unterminated table block");
  }

  enum class Section { None, Vertices, Edges, Elements };
  Section section = Section::None;
  std::vector<std::string> names;
  std::vector<VertexGroupSpec> specs;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::pair<int, std::pair<std::string, std::string>>> edge_decls;
  std::vector<std::pair<int, std::pair<std::string, std::string>>> elt_decls;

  for (const Line& line : lines) {
    const std::string t = trimmed(line.text);
    if (t == "vertices:") {
      section = Section::Vertices;
      continue;
    }
    if (t == "edges:") {
      section = Section::Edges;
      continue;
    }
    if (t == "elements:") {
      section = Section::Elements;
      continue;
    }
    switch (section) {
      case Section::None:
        fail(filename, line.number, 1,
             "expected a section header (vertices:, edges:, elements:)");
      case Section::Vertices: {
        const auto eq = t.find('=');
        if (eq == std::string::npos)
          fail(filename, line.number, 1, "expected 'name = spec'");
        const std::string name = trimmed(t.substr(0, eq));
        if (name.empty())
          fail(filename, line.number, 1, "empty vertex name");
        for (const auto& n : names)
          if (n == name)
            fail(filename, line.number, 1,
                 "duplicate vertex name '" + name + "'");
        names.push_back(name);
        specs.push_back(parse_spec(filename, line.number, t.substr(eq + 1)));
        break;
      }
      case Section::Edges: {
        const auto dash = t.find('-');
        if (dash == std::string::npos)
          fail(filename, line.number, 1, "expected 'u - v'");
        edge_decls.push_back(
            {line.number,
             {trimmed(t.substr(0, dash)), trimmed(t.substr(dash + 1))}});
        break;
      }
      case Section::Elements: {
        const auto eq = t.find('=');
        if (eq == std::string::npos)
          fail(filename, line.number, 1, "expected 'name = word'");
        elt_decls.push_back(
            {line.number,
             {trimmed(t.substr(0, eq)), trimmed(t.substr(eq + 1))}});
        break;
      }
    }
  }
  if (names.empty())
    fail(filename, 1, 1, "no vertices declared");

  auto vertex_index = [&](int line, const std::string& name) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<VertexId>(i);
    fail(filename, line, 1, "unknown vertex '" + name + "'");
  };
  for (const auto& [line, uv] : edge_decls) {
    const VertexId u = vertex_index(line, uv.first);
    const VertexId v = vertex_index(line, uv.second);
    if (u == v)
      fail(filename, line, 1,
           "self-loop on '" + uv.first + "' is not simplicial");
    for (const auto& e : edges)
      if ((e.first == u && e.second == v) || (e.first == v && e.second == u))
        fail(filename, line, 1,
             "duplicate edge '" + uv.first + " - " + uv.second + "'");
    edges.push_back({u, v});
  }

  GraphDefinition def{DefiningGraph(names, edges, specs), {}};
  for (const auto& [line, kv] : elt_decls) {
    try {
      def.named_elements[kv.first] = parse_word(def.graph, kv.second);
    } catch (const ParseError& e) {
      fail(filename, line, 1, e.what());
    }
  }
  return def;
}

GraphDefinition load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_definition(buf.str(), path);
}

std::vector<VertexElement> parse_word(const DefiningGraph& g,
                                      const std::string& text) {
  std::vector<VertexElement> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    std::string name = tok;
    std::int64_t payload = 1;
    const auto caret = tok.find('^');
    if (caret != std::string::npos) {
      name = tok.substr(0, caret);
      const std::string num = tok.substr(caret + 1);
      const auto res =
          std::from_chars(num.data(), num.data() + num.size(), payload);
      if (res.ec != std::errc{} || res.ptr != num.data() + num.size())
        throw ParseError("bad exponent in token '" + tok + "'");
    }
    const auto v = g.find_vertex(name);
    if (!v) throw ParseError("unknown vertex '" + name + "'");
    const auto& spec = g.spec(*v);
    if (spec.kind() != VertexGroupKind::IntCyclic) {
      const auto n = *spec.order();
      payload = ((payload % n) + n) % n;
    }
    out.push_back({*v, payload});
  }
  return out;
}

NormalForm GraphDefinition::element(const std::string& name_or_word) const {
  const auto it = named_elements.find(name_or_word);
  if (it != named_elements.end())
    return NormalForm::reduce(graph, it->second);
  return NormalForm::reduce(graph, parse_word(graph, name_or_word));
}

}  // namespace gp
