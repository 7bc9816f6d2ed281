#include "tdc/edge_list_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace tdc {

namespace {

bool parse_two_ints(const std::string& line, long long& a, long long& b)
{
    std::istringstream ss(line);
    if (!(ss >> a >> b)) return false;
    std::string rest;
    if (ss >> rest) return false;
    return true;
}

bool next_content_line(std::istream& in, std::string& line)
{
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
}

} // namespace

Graph read_edge_list(std::istream& in)
{
    std::string line;
    if (!next_content_line(in, line))
        throw ParseError("edge list: missing header line");
    long long n, m;
    if (!parse_two_ints(line, n, m) || n < 0 || m < 0)
        throw ParseError("edge list: header must be \"n m\"");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_content_line(in, line))
            throw ParseError("edge list: expected " + std::to_string(m)
                             + " edges, got " + std::to_string(i));
        long long u, v;
        if (!parse_two_ints(line, u, v))
            throw ParseError("edge list: bad edge line \"" + line + "\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge list: vertex id out of range in \"" + line + "\"");
        if (u == v)
            throw ParseError("edge list: self-loop in \"" + line + "\"");
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError("edge list: duplicate edge in \"" + line + "\"");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_content_line(in, line))
        throw ParseError("edge list: trailing content \"" + line + "\"");
    return g;
}

Graph load_edge_list(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out)
{
    auto edges = g.edges();
    out << g.vertex_count() << ' ' << edges.size() << '\n';
    for (auto e : edges) out << e.u << ' ' << e.v << '\n';
}

void save_edge_list(const Graph& g, const std::string& path)
{
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open file for writing: " + path);
    write_edge_list(g, out);
}

void write_role_map(const std::map<std::string, int>& roles, std::ostream& out)
{
    std::vector<std::pair<int, std::string>> by_id;
    by_id.reserve(roles.size());
    for (const auto& [role, id] : roles) by_id.emplace_back(id, role);
    std::sort(by_id.begin(), by_id.end());
    for (const auto& [id, role] : by_id) out << role << ' ' << id << '\n';
}

void save_role_map(const std::map<std::string, int>& roles, const std::string& path)
{
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open file for writing: " + path);
    write_role_map(roles, out);
}

} // namespace tdc
