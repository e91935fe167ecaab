#include "matchpoly/io.hpp"

#include <fstream>
#include <sstream>

#include "matchpoly/errors.hpp"

namespace matchpoly {

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::vector<std::pair<int, int>> edges;
    int declared = -1;
    bool first_content_line = true;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ss(line);
        std::string first;
        if (!(ss >> first)) continue; // blank
        if (first_content_line && first == "vertices") {
            if (!(ss >> declared) || declared < 0)
                throw InputError("line " + std::to_string(line_no) + ": bad vertices directive");
            first_content_line = false;
            continue;
        }
        first_content_line = false;
        int u = 0, v = 0;
        try {
            u = std::stoi(first);
        } catch (const std::exception&) {
            throw InputError("line " + std::to_string(line_no) + ": expected an integer endpoint");
        }
        if (!(ss >> v))
            throw InputError("line " + std::to_string(line_no) + ": expected two endpoints");
        std::string extra;
        if (ss >> extra)
            throw InputError("line " + std::to_string(line_no) + ": trailing tokens");
        edges.emplace_back(u, v);
    }
    int n = declared;
    if (n < 0) {
        n = 0;
        for (auto [u, v] : edges) n = std::max({n, u + 1, v + 1});
    }
    return Graph(n, edges); // rejects loops, duplicates, out-of-range endpoints
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "vertices " << g.vertex_count() << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
}

} // namespace matchpoly
