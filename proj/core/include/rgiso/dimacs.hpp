#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "rgiso/graph.hpp"

namespace rgiso {

/// Parse failure with the offending source location. `line` is 1-based;
/// 0 means the file could not be opened at all.
class DimacsError : public std::runtime_error {
public:
    DimacsError(const std::string& path, int line, const std::string& message);
    const std::string& path() const { return path_; }
    int line() const { return line_; }

private:
    std::string path_;
    int line_;
};

/// DIMACS-like text format: optional `c` comment lines, one header
/// `p edge <n> <m>`, then exactly m lines `e <u> <v>` with 1-based endpoints,
/// u != v, each unordered pair at most once. Vertex ids are converted to the
/// library's 0-based convention at this boundary.
Graph read_dimacs(const std::string& path);
Graph read_dimacs(std::istream& in, const std::string& display_path = "<stream>");

void write_dimacs(const Graph& g, const std::string& path);
void write_dimacs(const Graph& g, std::ostream& out);

} // namespace rgiso
