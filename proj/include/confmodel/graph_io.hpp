#pragma once

#include <iosfwd>
#include <string>

#include "confmodel/multigraph.hpp"

namespace confmodel {

// Text format: first line "n m", then m lines "i j" with 1-based endpoints.
// i == j is a loop; repeated lines are parallel edges.
Multigraph read_graph(std::istream& in);
Multigraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Multigraph& g);
std::string format_graph(const Multigraph& g);

}  // namespace confmodel
