#include "raag/extension_graph.hpp"

#include <json.hpp>

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_map>

namespace raag {

GroupWord ExtVertex::cyclic_direction() const
{
    GroupWord z = GroupWord::from_letters(conjugator.graph(), {{base, 1}});
    return z.conjugated_by(conjugator);
}

std::string ExtVertex::label() const
{
    const std::string name = conjugator.graph()->name(base);
    if (conjugator.is_identity()) return name;
    return name + "^(" + conjugator.to_string() + ")";
}

ExtVertex canonical_vertex(Gen base, const GroupWord& g)
{
    auto star = ParabolicSubset::star_of(g.graph(), base);
    auto [rem, tail] = right_gate_split(g, star);
    (void)tail;
    return ExtVertex{base, rem};
}

ExtVertex translate(const GroupWord& x, const ExtVertex& v)
{
    return canonical_vertex(v.base, x.times(v.conjugator));
}

bool ext_adjacent(const ExtVertex& v, const ExtVertex& w)
{
    if (v == w) throw ValidationError("ext_adjacent: self-loops are not allowed");
    const GroupWord zv = v.cyclic_direction();
    const GroupWord zw = w.cyclic_direction();
    return equals(zv.times(zw), zw.times(zv));
}

std::size_t ExtBall::index_of(const ExtVertex& v) const
{
    auto it = find(v);
    if (!it) throw ValidationError("vertex not in extension ball: " + v.label());
    return *it;
}

std::optional<std::size_t> ExtBall::find(const ExtVertex& v) const
{
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || !(*it == v)) return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
}

ExtBall extension_ball(const ExtVertex& center, std::size_t conj_radius, std::size_t cap)
{
    GraphPtr graph = center.conjugator.graph();
    ExtBall ball;
    ball.graph = graph;
    ball.center = center;
    ball.conj_radius = conj_radius;

    Ball group_ball = ball_enumerate(graph, conj_radius, cap);
    std::set<ExtVertex> verts;
    for (const GroupWord& g : group_ball.flatten())
        for (Gen base = 0; base < graph->vertex_count(); ++base)
            verts.insert(canonical_vertex(base, g));
    ball.vertices.assign(verts.begin(), verts.end());

    const std::size_t n = ball.vertices.size();
    ball.adjacency.neighbors.resize(n);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
#pragma omp parallel
    {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> mine;
#pragma omp for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
            for (std::size_t j = static_cast<std::size_t>(i) + 1; j < n; ++j)
                if (ext_adjacent(ball.vertices[static_cast<std::size_t>(i)], ball.vertices[j]))
                    mine.emplace_back(static_cast<std::uint32_t>(i),
                                      static_cast<std::uint32_t>(j));
#pragma omp critical
        edges.insert(edges.end(), mine.begin(), mine.end());
    }
    for (const auto& [i, j] : edges) ball.adjacency.add_edge(i, j);
    ball.adjacency.neighbors.resize(n);
    ball.adjacency.finish();
    return ball;
}

std::string ExtBall::to_dot() const
{
    std::string out = "graph extension_ball {\n";
    for (std::size_t i = 0; i < vertices.size(); ++i)
        out += "  v" + std::to_string(i) + " [label=\"" + vertices[i].label() + "\", color=\"" +
               graph->name(vertices[i].base) + "\"];\n";
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::uint32_t j : adjacency.neighbors[i])
            if (j > i) out += "  v" + std::to_string(i) + " -- v" + std::to_string(j) + ";\n";
    out += "}\n";
    return out;
}

std::string ExtBall::to_json() const
{
    nlohmann::ordered_json j;
    j["center"] = center.label();
    j["conj_radius"] = conj_radius;
    auto& vs = j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : vertices) {
        nlohmann::ordered_json jv;
        jv["base"] = graph->name(v.base);
        jv["conjugator"] = v.conjugator.to_string();
        vs.push_back(jv);
    }
    auto& es = j["edges"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::uint32_t k : adjacency.neighbors[i])
            if (k > i) es.push_back({i, k});
    auto& cols = j["colors"] = nlohmann::ordered_json::array();
    for (const auto& v : vertices) cols.push_back(graph->name(v.base));
    return j.dump(2);
}

ConedOffContext::ConedOffContext(GraphPtr graph, std::size_t search_radius,
                                 std::vector<ParabolicSubset> cone_families,
                                 std::optional<ParabolicSubset> ambient, std::size_t cap)
    : graph_(std::move(graph)), radius_(search_radius)
{
    auto all = ball_enumerate(graph_, search_radius, cap).flatten();
    if (ambient) {
        for (auto& w : all)
            if (w.supported_on(ambient->gens)) elements_.push_back(std::move(w));
    } else {
        elements_ = std::move(all);
    }

    const std::size_t n = elements_.size();
    for (std::uint32_t i = 0; i < n; ++i) index_[elements_[i].hash()].push_back(i);

    SimpleGraph g;
    g.neighbors.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        for (Gen a = 0; a < graph_->vertex_count(); ++a)
            for (std::int8_t s : {std::int8_t{1}, std::int8_t{-1}}) {
                const auto it = find(elements_[i].times(GroupWord::from_letters(graph_, {{a, s}})));
                if (it && *it > i)
                    g.add_edge(static_cast<std::uint32_t>(i), *it);
            }

    // One node per coset of each cone family, adjacent to its members.
    std::size_t next_node = n;
    std::map<std::pair<std::size_t, GroupWord>, std::size_t> cone_nodes;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t f = 0; f < cone_families.size(); ++f) {
            auto [rep, tail] = right_gate_split(elements_[i], cone_families[f]);
            (void)tail;
            auto [it, fresh] = cone_nodes.emplace(std::make_pair(f, rep), next_node);
            if (fresh) ++next_node;
            g.add_edge(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(it->second));
        }
    g.neighbors.resize(next_node);
    g.finish();

    dist_from_identity_ = bfs_distances(g, 0); // elements_[0] is the identity
    dist_from_identity_.resize(n);             // cone nodes are not query targets
}

std::optional<std::uint32_t> ConedOffContext::find(const GroupWord& w) const
{
    const auto it = index_.find(w.hash());
    if (it == index_.end()) return std::nullopt;
    for (std::uint32_t i : it->second)
        if (elements_[i] == w) return i;
    return std::nullopt;
}

std::optional<int> ConedOffContext::distance_ub(const GroupWord& g, const GroupWord& h) const
{
    if (!g.same_graph(h)) throw ValidationError("coned-off distance needs one graph");
    const GroupWord target = g.inverse().times(h);
    const auto idx = find(target);
    if (!idx) return std::nullopt;
    const int d = dist_from_identity_[*idx];
    if (d == kUnreachable) return std::nullopt;
    return d;
}

ConedOffContext coned_off_cayley(GraphPtr graph, std::size_t search_radius, std::size_t cap)
{
    std::vector<ParabolicSubset> families;
    for (Gen a = 0; a < graph->vertex_count(); ++a)
        families.push_back(ParabolicSubset::star_of(graph, a));
    return ConedOffContext(std::move(graph), search_radius, std::move(families), std::nullopt,
                           cap);
}

std::optional<int> coned_off_distance_ub(const GroupWord& g, const GroupWord& h,
                                         std::size_t search_radius, std::size_t cap)
{
    return coned_off_cayley(g.graph(), search_radius, cap).distance_ub(g, h);
}

ConedOffContext coned_off_parabolic(GraphPtr graph, const ParabolicSubset& ambient,
                                    const std::vector<Gen>& cone_gens,
                                    std::size_t search_radius, std::size_t cap)
{
    std::vector<ParabolicSubset> families;
    for (Gen a : cone_gens) families.push_back(ParabolicSubset{{a}});
    return ConedOffContext(std::move(graph), search_radius, std::move(families), ambient, cap);
}

} // namespace raag
