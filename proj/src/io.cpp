#include "rbg/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rbg {

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "# rbgraph edge list, n=" << g.size() << "\n";
    for (Vertex v = 0; v < g.size(); ++v)
        if (!g.is_core(v)) out << "#core " << v << "\n";
    if (g.labels) {
        for (Vertex v = 0; v < g.size(); ++v)
            out << "#label " << v << " " << (*g.labels)[v][0] << " " << (*g.labels)[v][1] << "\n";
    }
    for (Vertex v = 0; v < g.size(); ++v)
        for (Vertex w : g.adj[v])
            if (v < w) out << v << " " << w << "\n";
    return out.str();
}

Graph from_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Edge> edges;
    std::vector<Vertex> non_core;
    std::vector<std::pair<Vertex, VertexLabel>> labels;
    Vertex n = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        if (line[0] == '#') {
            std::string tag;
            ls >> tag;
            if (tag == "#core") {
                Vertex v;
                if (ls >> v) non_core.push_back(v);
            } else if (tag == "#label") {
                Vertex v;
                std::int32_t a, b;
                if (ls >> v >> a >> b) labels.push_back({v, {a, b}});
            }
            continue; // other # lines are comments
        }
        Vertex u, v;
        if (!(ls >> u >> v)) throw error(errc::io_error, "malformed edge line: " + line);
        edges.emplace_back(u, v);
        n = std::max({n, u + 1, v + 1});
    }
    for (Vertex v : non_core) n = std::max(n, v + 1);
    std::vector<std::uint8_t> core(n, 1);
    for (Vertex v : non_core) core[v] = 0;
    Graph g = build_graph(n, edges, std::move(core));
    if (!labels.empty()) {
        std::vector<VertexLabel> lab(n, VertexLabel{-1, -1});
        for (const auto& [v, l] : labels) {
            if (v >= n) throw error(errc::io_error, "label vertex out of range");
            lab[v] = l;
        }
        g.labels = std::move(lab);
    }
    return g;
}

std::string to_json_text(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.size();
    auto& edges = j["edges"] = nlohmann::json::array();
    for (Vertex v = 0; v < g.size(); ++v)
        for (Vertex w : g.adj[v])
            if (v < w) edges.push_back({v, w});
    j["core"] = g.core;
    if (g.labels)
        j["labels"] = *g.labels;
    else
        j["labels"] = nullptr;
    return j.dump();
}

Graph from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::io_error, e.what());
    }
    const Vertex n = j.at("n").get<Vertex>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    std::optional<std::vector<std::uint8_t>> core;
    if (j.contains("core") && !j["core"].is_null()) {
        std::vector<std::uint8_t> mask;
        for (const auto& b : j["core"]) mask.push_back(b.get<bool>() ? 1 : 0);
        core = std::move(mask);
    }
    Graph g = build_graph(n, edges, std::move(core));
    if (j.contains("labels") && !j["labels"].is_null()) {
        std::vector<VertexLabel> lab;
        for (const auto& l : j["labels"])
            lab.push_back({l.at(0).get<std::int32_t>(), l.at(1).get<std::int32_t>()});
        if (lab.size() != n) throw error(errc::io_error, "label list size mismatch");
        g.labels = std::move(lab);
    }
    return g;
}

Graph read_graph(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::io_error, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (path.extension() == ".json") return from_json_text(buf.str());
    return from_edge_list(buf.str());
}

void write_graph(const std::filesystem::path& path, const Graph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error(errc::io_error, "cannot open " + path.string() + " for writing");
    out << (path.extension() == ".json" ? to_json_text(g) : to_edge_list(g));
}

} // namespace rbg
