#include "raag/defining_graph.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace raag {

std::shared_ptr<const DefiningGraph>
DefiningGraph::make(std::vector<std::string> vertices,
                    std::vector<std::pair<std::string, std::string>> edges)
{
    auto g = std::shared_ptr<DefiningGraph>(new DefiningGraph());
    if (vertices.empty()) throw ValidationError("graph has no vertices");
    {
        std::set<std::string> seen;
        for (const auto& v : vertices) {
            if (v.empty()) throw ValidationError("empty vertex name");
            if (!seen.insert(v).second) throw ValidationError("duplicate vertex '" + v + "'");
        }
    }
    g->names_ = std::move(vertices);
    const std::size_t n = g->names_.size();
    g->adj_.assign(n, std::vector<bool>(n, false));

    auto idx = [&](const std::string& name) -> Gen {
        for (std::size_t i = 0; i < n; ++i)
            if (g->names_[i] == name) return static_cast<Gen>(i);
        throw ValidationError("edge references unknown vertex '" + name + "'");
    };

    for (const auto& [a, b] : edges) {
        Gen i = idx(a), j = idx(b);
        if (i == j) throw ValidationError("loop at vertex '" + a + "'");
        if (g->adj_[i][j]) throw ValidationError("duplicate edge {" + a + "," + b + "}");
        g->adj_[i][j] = g->adj_[j][i] = true;
        g->edges_.emplace_back(std::min(i, j), std::max(i, j));
    }
    std::sort(g->edges_.begin(), g->edges_.end());

    g->links_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (g->adj_[i][j]) g->links_[i].push_back(static_cast<Gen>(j));

    // Triangles.
    for (const auto& [i, j] : g->edges_)
        for (std::size_t k = 0; k < n; ++k)
            if (g->adj_[i][k] && g->adj_[j][k])
                throw ValidationError("triangle {" + g->names_[i] + "," + g->names_[j] + "," +
                                      g->names_[k] + "}");

    // Squares. With no triangles present every 4-cycle is induced, so two
    // common neighbours of a non-adjacent pair always witness one.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (g->adj_[i][j]) continue;
            std::vector<std::size_t> common;
            for (std::size_t k = 0; k < n; ++k)
                if (g->adj_[i][k] && g->adj_[j][k]) common.push_back(k);
            if (common.size() >= 2)
                throw ValidationError("square {" + g->names_[i] + "," + g->names_[common[0]] +
                                      "," + g->names_[j] + "," + g->names_[common[1]] + "}");
        }

    for (std::size_t i = 0; i < n; ++i)
        if (g->links_[i].empty())
            throw ValidationError("vertex '" + g->names_[i] + "' is a single-point component");

    return g;
}

std::shared_ptr<const DefiningGraph> DefiningGraph::from_json(const std::string& json_text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        throw ValidationError(std::string("bad graph JSON: ") + e.what());
    }
    if (!j.contains("vertices") || !j.contains("edges"))
        throw ValidationError("graph JSON needs \"vertices\" and \"edges\"");
    std::vector<std::string> verts;
    for (const auto& v : j["vertices"]) verts.push_back(v.get<std::string>());
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw ValidationError("each edge must be a pair of vertex names");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return make(std::move(verts), std::move(edges));
}

std::shared_ptr<const DefiningGraph> DefiningGraph::from_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open graph file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

Gen DefiningGraph::index_of(const std::string& name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<Gen>(i);
    throw ValidationError("unknown generator '" + name + "'");
}

bool DefiningGraph::has_vertex(const std::string& name) const
{
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::vector<Gen> DefiningGraph::star(Gen a) const
{
    std::vector<Gen> s = links_[a];
    s.push_back(a);
    std::sort(s.begin(), s.end());
    return s;
}

bool DefiningGraph::connected() const
{
    std::vector<bool> seen(names_.size(), false);
    std::vector<Gen> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        Gen v = stack.back();
        stack.pop_back();
        for (Gen w : links_[v])
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::string DefiningGraph::experiment_defect() const
{
    if (names_.size() < 3) return "graph has fewer than three vertices";
    if (!connected()) return "graph is not connected";
    return {};
}

std::string DefiningGraph::to_json() const
{
    nlohmann::ordered_json j;
    j["vertices"] = names_;
    auto& e = j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : edges_) e.push_back({names_[a], names_[b]});
    return j.dump();
}

} // namespace raag
