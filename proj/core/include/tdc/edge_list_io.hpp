#ifndef TDC_EDGE_LIST_IO_HPP
#define TDC_EDGE_LIST_IO_HPP

#include "tdc/graph.hpp"

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

namespace tdc {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Edge-list text format: first line "n m", then m lines "u v" with 0-based
// ids. Loops, duplicate edges and out-of-range ids are rejected.
Graph read_edge_list(std::istream& in);
Graph load_edge_list(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);
void save_edge_list(const Graph& g, const std::string& path);

// Sidecar role map: one "role vertex-id" pair per line, sorted by id.
void write_role_map(const std::map<std::string, int>& roles, std::ostream& out);
void save_role_map(const std::map<std::string, int>& roles, const std::string& path);

} // namespace tdc

#endif
