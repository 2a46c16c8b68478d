#include "rgiso/dimacs.hpp"

#include <fstream>
#include <sstream>

namespace rgiso {

namespace {

std::string format_message(const std::string& path, int line, const std::string& message) {
    return path + ":" + std::to_string(line) + ": " + message;
}

} // namespace

DimacsError::DimacsError(const std::string& path, int line, const std::string& message)
    : std::runtime_error(format_message(path, line, message)), path_(path), line_(line) {}

Graph read_dimacs(std::istream& in, const std::string& display_path) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    long long edges_seen = 0;
    GraphBuilder builder(0);

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag))
            continue; // blank line
        if (tag == "c")
            continue;
        if (tag == "p") {
            if (n >= 0)
                throw DimacsError(display_path, lineno, "duplicate problem line");
            std::string kind;
            if (!(ls >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0)
                throw DimacsError(display_path, lineno,
                                  "malformed header, expected 'p edge <n> <m>'");
            std::string extra;
            if (ls >> extra)
                throw DimacsError(display_path, lineno, "trailing tokens after header");
            if (n > 65536)
                throw DimacsError(display_path, lineno, "vertex count exceeds 65536");
            builder = GraphBuilder(static_cast<int>(n));
            continue;
        }
        if (tag == "e") {
            if (n < 0)
                throw DimacsError(display_path, lineno, "edge before problem line");
            long long u = 0, v = 0;
            if (!(ls >> u >> v))
                throw DimacsError(display_path, lineno, "malformed edge line");
            std::string extra;
            if (ls >> extra)
                throw DimacsError(display_path, lineno, "trailing tokens after edge");
            if (u < 1 || u > n || v < 1 || v > n)
                throw DimacsError(display_path, lineno,
                                  "edge endpoint out of range: e " + std::to_string(u) +
                                      " " + std::to_string(v) + " with n=" + std::to_string(n));
            if (u == v)
                throw DimacsError(display_path, lineno, "self-loop rejected");
            if (++edges_seen > m)
                throw DimacsError(display_path, lineno, "more edges than the header declared");
            const int a = static_cast<int>(u - 1), b = static_cast<int>(v - 1);
            if (builder.has_edge(a, b))
                throw DimacsError(display_path, lineno, "duplicate edge");
            builder.add_edge(a, b);
            continue;
        }
        throw DimacsError(display_path, lineno, "unrecognized line type '" + tag + "'");
    }
    if (n < 0)
        throw DimacsError(display_path, lineno, "missing problem line");
    if (edges_seen != m)
        throw DimacsError(display_path, lineno,
                          "header declared " + std::to_string(m) + " edges but file has " +
                              std::to_string(edges_seen));
    return std::move(builder).build();
}

Graph read_dimacs(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw DimacsError(path, 0, "cannot open file");
    return read_dimacs(in, path);
}

void write_dimacs(const Graph& g, std::ostream& out) {
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    const int n = g.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(i, j))
                out << "e " << (i + 1) << " " << (j + 1) << "\n";
}

void write_dimacs(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw DimacsError(path, 0, "cannot open file for writing");
    write_dimacs(g, out);
    out.flush();
    if (!out)
        throw DimacsError(path, 0, "write failed");
}

} // namespace rgiso
