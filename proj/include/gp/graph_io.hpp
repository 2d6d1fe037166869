#pragma once

#include <map>
#include <string>
#include <vector>

#include "gp/word.hpp"

namespace gp {

// Parse failure with file/line/column context.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A loaded graph-definition file: the graph plus optional named elements.
struct GraphDefinition {
  DefiningGraph graph;
  std::map<std::string, std::vector<VertexElement>> named_elements;

  NormalForm element(const std::string& name_or_word) const;
};

// Format: a `vertices:` section with lines `name = cyclic:n | int |
// table{...}`, an `edges:` section with lines `u - v`, and an optional
// `elements:` section with lines `name = word`.
GraphDefinition parse_graph_definition(const std::string& text,
                                       const std::string& filename);
GraphDefinition load_graph_file(const std::string& path);

// Whitespace-separated `vertex^k` tokens; a bare vertex name means the
// generator payload 1.
std::vector<VertexElement> parse_word(const DefiningGraph& g,
                                      const std::string& text);

}  // namespace gp
