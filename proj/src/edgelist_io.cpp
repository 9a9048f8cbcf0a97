#include "shiftlab/edgelist_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "shiftlab/errors.hpp"

namespace shiftlab {

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n " << g.vertex_count() << "\n";
    char buf[40];
    for (const auto& e : g.edges()) {
        std::snprintf(buf, sizeof(buf), "%.17g", e.w);
        out << e.u << " " << e.v << " " << buf << "\n";
    }
}

namespace {

// Strips comments and surrounding whitespace; returns empty for blank lines.
std::string strip(const std::string& line) {
    std::string s = line.substr(0, line.find('#'));
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<WeightedEdge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string content = strip(line);
        if (content.empty()) continue;
        std::istringstream fields(content);
        if (n < 0) {
            std::string keyword;
            fields >> keyword >> n;
            if (fields.fail() || keyword != "n" || n < 1)
                throw ParseError(line_no, "expected header 'n <vertex-count>'");
            std::string extra;
            if (fields >> extra) throw ParseError(line_no, "trailing tokens after header");
            continue;
        }
        int u = 0, v = 0;
        double w = 0.0;
        fields >> u >> v >> w;
        if (fields.fail()) throw ParseError(line_no, "expected 'u v w'");
        std::string extra;
        if (fields >> extra) throw ParseError(line_no, "trailing tokens after edge");
        if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(line_no, "endpoint out of range [0, " + std::to_string(n) + ")");
        if (w == 0.0) throw ParseError(line_no, "zero edge weight");
        edges.push_back({u, v, w});
    }
    if (n < 0) throw ParseError(line_no, "missing header 'n <vertex-count>'");
    try {
        return Graph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());  // duplicate edges surface here
    }
}

void save_edge_list(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    write_edge_list(out, g);
    if (!out) throw Error("write to '" + path + "' failed");
}

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return read_edge_list(in);
}

}  // namespace shiftlab
