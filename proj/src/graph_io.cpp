#include "confmodel/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace confmodel {

Multigraph read_graph(std::istream& in) {
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw std::runtime_error("graph file: expected header \"n m\"");
  Multigraph g(static_cast<std::size_t>(n));
  for (long long e = 0; e < m; ++e) {
    long long i = 0, j = 0;
    if (!(in >> i >> j)) throw std::runtime_error("graph file: expected " + std::to_string(m) + " edges, got " +
                                                  std::to_string(e));
    if (i < 1 || j < 1 || i > n || j > n)
      throw std::runtime_error("graph file: endpoint out of range on edge " + std::to_string(e + 1));
    g.add_edge(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
  }
  return g;
}

Multigraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Multigraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [i, j] : g.edges()) out << i + 1 << ' ' << j + 1 << '\n';
}

std::string format_graph(const Multigraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace confmodel
