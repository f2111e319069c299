#include <fstream>
#include <sstream>

#include "rtlab/graph.hpp"

namespace rtlab {

std::string to_text(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edges();
  out << g.n() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Graph g;
  bool have_header = false, dimacs = false;
  int64_t declared = -1;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    return precondition_error("BadGraphFile", "line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == 'c' || first[0] == '#') continue;
    if (!have_header) {
      int n = 0;
      if (first == "p") {
        std::string kind;
        if (!(ls >> kind >> n >> declared)) throw fail("malformed 'p edge n m' header");
        dimacs = true;
      } else {
        n = std::stoi(first);
        if (!(ls >> declared)) throw fail("expected 'n m' header");
      }
      g = Graph(n);
      have_header = true;
      continue;
    }
    int u = 0, v = 0;
    if (dimacs) {
      if (first != "e" || !(ls >> u >> v)) throw fail("expected 'e u v'");
      --u;
      --v;
    } else {
      u = std::stoi(first);
      if (!(ls >> v)) throw fail("expected 'u v'");
    }
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || u == v) throw fail("edge endpoint out of range");
    g.add_edge(u, v);
  }
  if (!have_header) throw precondition_error("BadGraphFile", "missing header");
  if (declared >= 0 && declared != g.edge_count())
    throw precondition_error("BadGraphFile", "header declares " + std::to_string(declared) + " edges, found " +
                                                 std::to_string(g.edge_count()));
  return g;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw precondition_error("BadGraphFile", "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw precondition_error("BadOutput", "cannot write " + path);
  out << to_text(g);
}

}  // namespace rtlab
