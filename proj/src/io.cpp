#include "euler/io.hpp"

#include <fstream>
#include <sstream>

namespace euler {

namespace {

int parse_id(const std::string& tok, const char* what) {
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size() || v < 0) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw input_error(std::string("bad ") + what + " id '" + tok + "'");
    }
}

}  // namespace

ParsedDigraph read_digraph(std::istream& in) {
    ParsedDigraph pd;
    std::string line;
    int lineno = 0;
    bool saw_root = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw) || kw[0] == '#') continue;
        auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };
        if (kw == "v") {
            std::string id;
            if (!(ls >> id)) throw input_error("v line needs an id" + where());
            pd.graph.add_vertex(Vertex{parse_id(id, "vertex")});
        } else if (kw == "e") {
            std::string id, t, h;
            if (!(ls >> id >> t >> h)) throw input_error("e line needs id, tail, head" + where());
            Vertex tv{parse_id(t, "vertex")}, hv{parse_id(h, "vertex")};
            if (!pd.graph.has_vertex(tv) || !pd.graph.has_vertex(hv))
                throw input_error("edge references unknown vertex" + where());
            pd.graph.add_edge(Edge{parse_id(id, "edge")}, tv, hv);
        } else if (kw == "root") {
            if (saw_root) throw input_error("duplicate root line" + where());
            saw_root = true;
            std::string id;
            while (ls >> id) {
                Edge e{parse_id(id, "edge")};
                if (!pd.graph.has_edge(e)) throw input_error("root references unknown edge" + where());
                for (Edge r : pd.roots)
                    if (r == e) throw input_error("duplicate root edge" + where());
                pd.roots.push_back(e);
            }
        } else {
            throw input_error("unknown directive '" + kw + "'" + where());
        }
    }
    return pd;
}

ParsedDigraph read_digraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    return read_digraph(in);
}

void write_digraph(std::ostream& out, const Digraph& g, const std::vector<Edge>& roots) {
    for (Vertex v : g.vertices()) out << "v " << v.id << "\n";
    for (Edge e : g.edges()) out << "e " << e.id << " " << g.tail(e).id << " " << g.head(e).id << "\n";
    if (!roots.empty()) {
        out << "root";
        for (Edge e : roots) out << " " << e.id;
        out << "\n";
    }
}

void write_digraph_file(const std::string& path, const Digraph& g, const std::vector<Edge>& roots) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open '" + path + "' for writing");
    write_digraph(out, g, roots);
}

}  // namespace euler
