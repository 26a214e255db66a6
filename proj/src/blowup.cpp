#include "raag/blowup.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace raag {

namespace {

// Bitset helpers over element indices.
using Bits = std::vector<std::uint64_t>;

Bits make_bits(std::size_t n) { return Bits((n + 63) / 64, 0); }
void set_bit(Bits& b, std::size_t i) { b[i / 64] |= (std::uint64_t{1} << (i % 64)); }
bool get_bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1; }

} // namespace

std::string to_string(SimplexClass c)
{
    switch (c) {
    case SimplexClass::Empty: return "empty";
    case SimplexClass::EdgeType: return "edge-type";
    case SimplexClass::TriangleType: return "triangle-type";
    case SimplexClass::Maximal: return "maximal";
    case SimplexClass::BoundedOther: return "bounded-other";
    }
    return "?";
}

BlowupBall::BlowupBall(ExtBall support, const ChartAssignment& charts, Rat coord_window)
    : support_(std::move(support)), charts_(&charts), coord_window_(coord_window)
{
    const std::size_t n = support_.vertices.size();
    squids_.resize(n);
    vert_index_.resize(n);

    for (std::size_t v = 0; v < n; ++v) {
        const ExtVertex& ev = support_.vertices[v];
        const QuasilineChart& chart = charts.chart_for_base(ev.base);
        if (chart.m_of_z() == Rat(0))
            throw ValidationError("chart gives the cyclic direction coordinate 0");
        const long long kmax = rat_floor(coord_window_ / rat_abs(chart.m_of_z()));
        const GroupWord zv = GroupWord::from_letters(support_.graph, {{ev.base, 1}});
        for (long long k = -kmax; k <= kmax; ++k) {
            SquidPoint p;
            p.rep = ev.conjugator.times(zv.power(k));
            p.coord = Rat(k) * chart.m_of_z();
            squids_[v].push_back(std::move(p));
        }
    }

    for (std::size_t v = 0; v < n; ++v) {
        vert_index_[v].resize(squids_[v].size() + 1);
        vert_index_[v][0] = static_cast<std::uint32_t>(verts_.size());
        verts_.push_back({static_cast<std::uint32_t>(v), -1});
        for (std::size_t p = 0; p < squids_[v].size(); ++p) {
            vert_index_[v][p + 1] = static_cast<std::uint32_t>(verts_.size());
            verts_.push_back({static_cast<std::uint32_t>(v), static_cast<std::int32_t>(p)});
        }
    }

    adj_.neighbors.resize(verts_.size());
    // Squid cones: apex adjacent to each of its points.
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t p = 0; p < squids_[v].size(); ++p)
            adj_.add_edge(apex_index(static_cast<std::uint32_t>(v)),
                          point_index(static_cast<std::uint32_t>(v), static_cast<std::int32_t>(p)));
    // Joins over support edges.
    for (std::size_t v = 0; v < n; ++v)
        for (std::uint32_t w : support_.adjacency.neighbors[v]) {
            if (w <= v) continue;
            for (std::uint32_t i = vert_index_[v].front(); i <= vert_index_[v].back(); ++i)
                for (std::uint32_t j = vert_index_[w].front(); j <= vert_index_[w].back(); ++j)
                    adj_.add_edge(i, j);
        }
    adj_.neighbors.resize(verts_.size());
    adj_.finish();
}

std::uint32_t BlowupBall::apex_index(std::uint32_t support) const
{
    return vert_index_[support][0];
}

std::uint32_t BlowupBall::point_index(std::uint32_t support, std::int32_t point) const
{
    return vert_index_[support][static_cast<std::size_t>(point) + 1];
}

std::string BlowupBall::vertex_label(std::uint32_t idx) const
{
    const BlowupVertex& bv = verts_[idx];
    const ExtVertex& ev = support_.vertices[bv.support];
    if (bv.point < 0) return ev.label();
    return ev.label() + ":" + rat_to_string(squids_[bv.support][static_cast<std::size_t>(bv.point)].coord);
}

const std::vector<Simplex>& BlowupBall::simplices() const
{
    if (!simplices_.empty()) return simplices_;
    std::vector<Simplex> all;
    all.push_back({}); // empty simplex
    std::vector<Simplex> layer;
    for (std::uint32_t i = 0; i < verts_.size(); ++i) layer.push_back({i});
    while (!layer.empty()) {
        all.insert(all.end(), layer.begin(), layer.end());
        std::vector<Simplex> next;
        for (const Simplex& s : layer)
            for (std::uint32_t j = s.back() + 1; j < verts_.size(); ++j) {
                bool ok = true;
                for (std::uint32_t v : s)
                    if (!std::binary_search(adj_.neighbors[v].begin(), adj_.neighbors[v].end(), j)) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    Simplex ext = s;
                    ext.push_back(j);
                    next.push_back(std::move(ext));
                }
            }
        layer = std::move(next);
    }
    simplices_ = std::move(all);
    return simplices_;
}

const std::vector<Simplex>& BlowupBall::maximal_simplices() const
{
    if (!maximal_.empty()) return maximal_;
    for (const Simplex& s : simplices())
        if (!s.empty() && link_of(s).empty()) maximal_.push_back(s);
    return maximal_;
}

bool BlowupBall::is_simplex(const Simplex& s) const
{
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= verts_.size()) return false;
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!std::binary_search(adj_.neighbors[s[i]].begin(), adj_.neighbors[s[i]].end(),
                                    s[j]))
                return false;
    }
    return true;
}

std::vector<std::uint32_t> BlowupBall::link_of(const Simplex& s) const
{
    if (!is_simplex(s)) throw ValidationError("not a simplex of the blowup ball");
    std::vector<std::uint32_t> out;
    for (std::uint32_t v = 0; v < verts_.size(); ++v) {
        if (std::find(s.begin(), s.end(), v) != s.end()) continue;
        bool all = true;
        for (std::uint32_t m : s)
            if (!std::binary_search(adj_.neighbors[v].begin(), adj_.neighbors[v].end(), m)) {
                all = false;
                break;
            }
        if (all) out.push_back(v);
    }
    return out;
}

namespace {

struct Parts {
    // support index -> (has apex, squid point indices)
    std::map<std::uint32_t, std::pair<bool, std::vector<std::int32_t>>> by_support;
};

Parts decompose(const BlowupBall& b, const Simplex& s)
{
    Parts p;
    for (std::uint32_t idx : s) {
        const BlowupVertex& bv = b.vertex(idx);
        auto& entry = p.by_support[bv.support];
        if (bv.point < 0)
            entry.first = true;
        else
            entry.second.push_back(bv.point);
    }
    return p;
}

} // namespace

SimplexClass BlowupBall::classify(const Simplex& s) const
{
    if (!is_simplex(s)) throw ValidationError("not a simplex of the blowup ball");
    if (s.empty()) return SimplexClass::Empty;
    const Parts parts = decompose(*this, s);
    const auto edge_part = [](const std::pair<bool, std::vector<std::int32_t>>& e) {
        return e.first && e.second.size() == 1;
    };
    const auto apex_only = [](const std::pair<bool, std::vector<std::int32_t>>& e) {
        return e.first && e.second.empty();
    };
    if (parts.by_support.size() == 1) {
        const auto& e = parts.by_support.begin()->second;
        if (edge_part(e)) return SimplexClass::EdgeType;
        return SimplexClass::BoundedOther;
    }
    if (parts.by_support.size() == 2) {
        const auto& e1 = parts.by_support.begin()->second;
        const auto& e2 = std::next(parts.by_support.begin())->second;
        if (edge_part(e1) && edge_part(e2)) return SimplexClass::Maximal;
        if ((edge_part(e1) && apex_only(e2)) || (edge_part(e2) && apex_only(e1)))
            return SimplexClass::TriangleType;
        return SimplexClass::BoundedOther;
    }
    throw ValidationError("simplex spans more than two squids; support graph not triangle-free?");
}

std::vector<std::uint32_t> BlowupBall::link_closed_form(const Simplex& s) const
{
    if (s.empty()) {
        std::vector<std::uint32_t> all(verts_.size());
        for (std::uint32_t i = 0; i < verts_.size(); ++i) all[i] = i;
        return all;
    }
    const Parts parts = decompose(*this, s);

    // Common neighbourhood of the support in the support ball.
    std::vector<std::uint32_t> common;
    bool first = true;
    for (const auto& [sv, part] : parts.by_support) {
        const auto& ns = support_.adjacency.neighbors[sv];
        if (first) {
            common.assign(ns.begin(), ns.end());
            first = false;
        } else {
            std::vector<std::uint32_t> merged;
            std::set_intersection(common.begin(), common.end(), ns.begin(), ns.end(),
                                  std::back_inserter(merged));
            common = std::move(merged);
        }
    }

    std::vector<std::uint32_t> out;
    for (std::uint32_t u : common) {
        out.push_back(apex_index(u));
        for (std::size_t p = 0; p < squids_[u].size(); ++p)
            out.push_back(point_index(u, static_cast<std::int32_t>(p)));
    }
    for (const auto& [sv, part] : parts.by_support) {
        const bool has_apex = part.first;
        const auto& pts = part.second;
        if (has_apex && pts.empty()) {
            for (std::size_t p = 0; p < squids_[sv].size(); ++p)
                out.push_back(point_index(sv, static_cast<std::int32_t>(p)));
        } else if (!has_apex && pts.size() == 1) {
            out.push_back(apex_index(sv));
        }
        // apex + point: empty squid link
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint32_t> BlowupBall::saturation(const Simplex& s) const
{
    const auto target = link_of(s);
    std::set<std::uint32_t> acc;
    for (const Simplex& t : simplices()) {
        if (t.empty()) continue;
        if (link_of(t) == target)
            for (std::uint32_t v : t) acc.insert(v);
    }
    return {acc.begin(), acc.end()};
}

std::optional<std::vector<std::uint32_t>> BlowupBall::saturation_closed_form(const Simplex& s) const
{
    const SimplexClass cls = classify(s);
    const Parts parts = decompose(*this, s);
    auto whole_squid = [&](std::uint32_t sv, std::vector<std::uint32_t>& out) {
        out.push_back(apex_index(sv));
        for (std::size_t p = 0; p < squids_[sv].size(); ++p)
            out.push_back(point_index(sv, static_cast<std::int32_t>(p)));
    };
    if (cls == SimplexClass::TriangleType) {
        std::uint32_t w = 0;
        for (const auto& [sv, part] : parts.by_support)
            if (part.first && part.second.empty()) w = sv;
        std::vector<std::uint32_t> out{apex_index(w)};
        for (std::uint32_t u : support_.adjacency.neighbors[w]) whole_squid(u, out);
        std::sort(out.begin(), out.end());
        return out;
    }
    if (cls == SimplexClass::EdgeType) {
        const std::uint32_t v = parts.by_support.begin()->first;
        if (support_.adjacency.neighbors[v].size() < 2) return std::nullopt;
        std::vector<std::uint32_t> out;
        whole_squid(v, out);
        std::sort(out.begin(), out.end());
        return out;
    }
    return std::nullopt;
}

namespace {

// Vertices adjacent to every member of `set` (all vertices when empty).
std::vector<std::uint32_t> common_link(const SimpleGraph& adj, std::size_t n,
                                       const std::vector<std::uint32_t>& set)
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t v = 0; v < n; ++v) {
        if (std::find(set.begin(), set.end(), v) != set.end()) continue;
        bool all = true;
        for (std::uint32_t m : set)
            if (!std::binary_search(adj.neighbors[v].begin(), adj.neighbors[v].end(), m)) {
                all = false;
                break;
            }
        if (all) out.push_back(v);
    }
    return out;
}

bool maximal_within(const SimpleGraph& adj, const std::vector<std::uint32_t>& ambient,
                    const std::vector<std::uint32_t>& part)
{
    for (std::uint32_t u : ambient) {
        if (std::find(part.begin(), part.end(), u) != part.end()) continue;
        bool extends = true;
        for (std::uint32_t m : part)
            if (!std::binary_search(adj.neighbors[u].begin(), adj.neighbors[u].end(), m)) {
                extends = false;
                break;
            }
        if (extends) return false;
    }
    return true;
}

} // namespace

bool BlowupBall::product_region_member(const Simplex& maximal, const Simplex& s) const
{
    if (classify(maximal) != SimplexClass::Maximal)
        throw ValidationError("product_region_member needs a maximal simplex");
    const auto l1 = link_of(s);
    const auto ll = common_link(adj_, verts_.size(), l1);

    std::vector<std::uint32_t> p1, p2, p3;
    for (std::uint32_t v : maximal) {
        if (std::binary_search(l1.begin(), l1.end(), v))
            p1.push_back(v);
        else if (std::binary_search(ll.begin(), ll.end(), v))
            p2.push_back(v);
        else
            p3.push_back(v);
    }
    if (!maximal_within(adj_, l1, p1)) return false;
    if (!maximal_within(adj_, ll, p2)) return false;

    std::vector<std::uint32_t> p12 = p1;
    p12.insert(p12.end(), p2.begin(), p2.end());
    std::sort(p12.begin(), p12.end());
    const auto lk12 = common_link(adj_, verts_.size(), p12);
    for (std::uint32_t v : p3)
        if (!std::binary_search(lk12.begin(), lk12.end(), v)) return false;
    return maximal_within(adj_, lk12, p3);
}

std::string BlowupBall::to_dot() const
{
    std::string out = "graph blowup_ball {\n";
    for (std::uint32_t i = 0; i < verts_.size(); ++i) {
        const BlowupVertex& bv = verts_[i];
        out += "  v" + std::to_string(i) + " [label=\"" + vertex_label(i) + "\", shape=" +
               (bv.point < 0 ? "box" : "circle") + "];\n";
    }
    for (std::uint32_t i = 0; i < verts_.size(); ++i)
        for (std::uint32_t j : adj_.neighbors[i])
            if (j > i) out += "  v" + std::to_string(i) + " -- v" + std::to_string(j) + ";\n";
    out += "}\n";
    return out;
}

std::string BlowupBall::to_json() const
{
    nlohmann::ordered_json j;
    j["coord_window"] = rat_to_string(coord_window_);
    auto& vs = j["vertices"] = nlohmann::ordered_json::array();
    for (std::uint32_t i = 0; i < verts_.size(); ++i) {
        const BlowupVertex& bv = verts_[i];
        nlohmann::ordered_json jv;
        jv["support"] = support_.vertices[bv.support].label();
        jv["kind"] = bv.point < 0 ? "apex" : "quasiline-point";
        if (bv.point >= 0) {
            jv["coordinate"] =
                rat_to_string(squids_[bv.support][static_cast<std::size_t>(bv.point)].coord);
            jv["representative"] =
                squids_[bv.support][static_cast<std::size_t>(bv.point)].rep.to_string();
        }
        vs.push_back(jv);
    }
    auto& es = j["edges"] = nlohmann::ordered_json::array();
    for (std::uint32_t i = 0; i < verts_.size(); ++i)
        for (std::uint32_t k : adj_.neighbors[i])
            if (k > i) es.push_back({i, k});
    return j.dump(2);
}

LevelSets::LevelSets(const BlowupBall& blowup, const Ball& group_ball, long long R)
    : blowup_(&blowup), elements_(group_ball.flatten()), R_(R)
{
    const GraphPtr graph = group_ball.graph;
    const std::size_t ne = elements_.size();
    const std::size_t nv = blowup.support().vertices.size();

    std::unordered_map<GroupWord, std::uint32_t, GroupWordHash> index;
    for (std::uint32_t i = 0; i < ne; ++i) index.emplace(elements_[i], i);

    element_neighbors_.resize(ne);
    for (std::uint32_t i = 0; i < ne; ++i)
        for (Gen a = 0; a < graph->vertex_count(); ++a)
            for (std::int8_t s : {std::int8_t{1}, std::int8_t{-1}}) {
                auto it = index.find(elements_[i].times(GroupWord::from_letters(graph, {{a, s}})));
                if (it != index.end()) element_neighbors_[i].push_back(it->second);
            }

    const auto shifts = ball_enumerate(graph, static_cast<std::size_t>(R)).flatten();
    nearby_coords_.assign(ne, std::vector<std::vector<Rat>>(nv));
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t gi = 0; gi < static_cast<std::ptrdiff_t>(ne); ++gi) {
        const GroupWord& g = elements_[static_cast<std::size_t>(gi)];
        for (std::size_t v = 0; v < nv; ++v) {
            const ExtVertex& ev = blowup.support().vertices[v];
            std::vector<Rat> coords;
            for (const GroupWord& u : shifts) {
                const GroupWord p = g.times(u);
                if (!blowup.charts().in_product_region(ev, p)) continue;
                coords.push_back(blowup.charts().coord_in(ev, p));
            }
            std::sort(coords.begin(), coords.end());
            coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
            nearby_coords_[static_cast<std::size_t>(gi)][v] = std::move(coords);
        }
    }
}

std::vector<std::uint32_t> LevelSets::level_set(std::uint32_t support, std::int32_t point) const
{
    return level_set_at(support,
                        blowup_->squid(support)[static_cast<std::size_t>(point)].coord);
}

std::vector<std::uint32_t> LevelSets::level_set_at(std::uint32_t support, const Rat& coord) const
{
    std::vector<std::uint32_t> out;
    const Rat radius(R_);
    for (std::uint32_t i = 0; i < elements_.size(); ++i)
        for (const Rat& c : nearby_coords_[i][support])
            if (rat_abs(c - coord) <= radius) {
                out.push_back(i);
                break;
            }
    return out;
}

std::optional<int> LevelSets::set_distance_ub(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b,
                                              int max_steps) const
{
    if (a.empty() || b.empty()) return std::nullopt;
    Bits target = make_bits(elements_.size());
    for (std::uint32_t i : b) set_bit(target, i);
    Bits seen = make_bits(elements_.size());
    std::vector<std::uint32_t> frontier;
    for (std::uint32_t i : a) {
        if (get_bit(target, i)) return 0;
        if (!get_bit(seen, i)) {
            set_bit(seen, i);
            frontier.push_back(i);
        }
    }
    for (int step = 1; step <= max_steps; ++step) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t v : frontier)
            for (std::uint32_t w : element_neighbors_[v]) {
                if (get_bit(seen, w)) continue;
                if (get_bit(target, w)) return step;
                set_bit(seen, w);
                next.push_back(w);
            }
        if (next.empty()) break;
        frontier = std::move(next);
    }
    return std::nullopt;
}

namespace {

// The two (support, point) squid edges of a maximal simplex.
std::array<std::pair<std::uint32_t, std::int32_t>, 2> maximal_parts(const BlowupBall& b,
                                                                    const Simplex& s)
{
    std::array<std::pair<std::uint32_t, std::int32_t>, 2> parts{};
    std::size_t at = 0;
    for (std::uint32_t idx : s) {
        const BlowupVertex& bv = b.vertex(idx);
        if (bv.point >= 0) parts[at++] = {bv.support, bv.point};
    }
    if (at != 2) throw ValidationError("maximal simplex must carry two quasiline points");
    return parts;
}

} // namespace

RealisationResult realisation(const Simplex& maximal, const LevelSets& ls)
{
    const BlowupBall& b = ls.blowup();
    if (b.classify(maximal) != SimplexClass::Maximal)
        throw ValidationError("realisation needs a maximal simplex");
    const auto parts = maximal_parts(b, maximal);
    const auto n1 = ls.level_set(parts[0].first, parts[0].second);
    const auto n2 = ls.level_set(parts[1].first, parts[1].second);
    RealisationResult res;
    std::set_intersection(n1.begin(), n1.end(), n2.begin(), n2.end(),
                          std::back_inserter(res.elements));
    res.possibly_empty = res.elements.empty();
    return res;
}

WEdgeResult w_adjacent(const Simplex& d1, const Simplex& d2, const LevelSets& ls, long long T)
{
    const BlowupBall& b = ls.blowup();
    WEdgeResult res;

    const auto f1 = realisation(d1, ls);
    const auto f2 = realisation(d2, ls);
    if (!f1.possibly_empty && !f2.possibly_empty) {
        auto d = ls.set_distance_ub(f1.elements, f2.elements, 1);
        if (d) {
            res.type = WEdgeType::CloseRealisations;
            return res;
        }
    } else {
        res.truncation_caveat = true;
    }

    // Staple edges: shared x-point, level sets of the other points close.
    const auto p1 = maximal_parts(b, d1);
    const auto p2 = maximal_parts(b, d2);
    for (const auto& shared : p1) {
        auto it = std::find(p2.begin(), p2.end(), shared);
        if (it == p2.end()) continue;
        const auto other1 = p1[0] == shared ? p1[1] : p1[0];
        const auto other2 = p2[0] == shared ? p2[1] : p2[0];
        const auto ny = ls.level_set(other1.first, other1.second);
        const auto nyp = ls.level_set(other2.first, other2.second);
        if (ny.empty() || nyp.empty()) {
            res.truncation_caveat = true;
            continue;
        }
        if (ls.set_distance_ub(ny, nyp, static_cast<int>(T + 1))) {
            res.type = WEdgeType::Staple;
            return res;
        }
    }
    res.truncation_caveat = true; // negative answers inside a finite ball stay tentative
    return res;
}

SimpleGraph augmented_support_graph(const LevelSets& ls, long long T)
{
    const BlowupBall& b = ls.blowup();
    const std::size_t n = b.support().vertices.size();
    SimpleGraph g;
    g.neighbors.resize(n);
    for (std::size_t v = 0; v < n; ++v)
        for (std::uint32_t w : b.support().adjacency.neighbors[v])
            if (w > v) g.add_edge(static_cast<std::uint32_t>(v), w);

    const auto& maximals = b.maximal_simplices();
    for (std::size_t i = 0; i < maximals.size(); ++i)
        for (std::size_t j = i + 1; j < maximals.size(); ++j) {
            const auto res = w_adjacent(maximals[i], maximals[j], ls, T);
            if (res.type == WEdgeType::None) continue;
            const auto pi = maximal_parts(b, maximals[i]);
            const auto pj = maximal_parts(b, maximals[j]);
            for (const auto& a : pi)
                for (const auto& c : pj)
                    if (a.first != c.first) g.add_edge(a.first, c.first);
        }
    g.neighbors.resize(n);
    g.finish();
    return g;
}

DeltaReport delta_hyperbolicity_estimate(const SimpleGraph& g)
{
    DeltaReport report;
    const auto comps = connected_components(g);
    report.component_count = comps.size();
    for (const auto& comp : comps) {
        SimpleGraph sub;
        sub.neighbors.resize(comp.size());
        std::unordered_map<std::uint32_t, std::uint32_t> remap;
        for (std::uint32_t i = 0; i < comp.size(); ++i) remap[comp[i]] = i;
        for (std::uint32_t i = 0; i < comp.size(); ++i)
            for (std::uint32_t w : g.neighbors[comp[i]])
                if (remap.count(w) && remap[w] > i) sub.add_edge(i, remap[w]);
        sub.neighbors.resize(comp.size());
        sub.finish();
        const auto dist = all_pairs_distances(sub);
        auto r = four_point_delta(dist);
        if (r.delta > report.max_delta) report.max_delta = r.delta;
        report.per_component.push_back(std::move(r));
    }
    return report;
}

bool geodesics_meet_star(const SimpleGraph& g, std::uint32_t u, std::uint32_t v,
                         const std::vector<bool>& in_star)
{
    if (in_star[u] || in_star[v]) return true;
    const auto dist = bfs_distances(g, u);
    if (dist[v] == kUnreachable) return true;
    SimpleGraph cut;
    cut.neighbors.resize(g.size());
    for (std::uint32_t x = 0; x < g.size(); ++x) {
        if (in_star[x]) continue;
        for (std::uint32_t y : g.neighbors[x])
            if (y > x && !in_star[y]) cut.add_edge(x, y);
    }
    cut.neighbors.resize(g.size());
    cut.finish();
    const auto dcut = bfs_distances(cut, u);
    return dcut[v] == kUnreachable || dcut[v] > dist[v];
}

BgiCheckReport strong_bgi_check(const LevelSets& ls, std::uint32_t w,
                                const SimpleGraph& aug, const Rat& threshold)
{
    const BlowupBall& b = ls.blowup();
    const auto& support = b.support();
    const std::size_t n = support.vertices.size();
    BgiCheckReport report;

    // Star(w) in the support ball.
    std::vector<bool> in_star(n, false);
    in_star[w] = true;
    for (std::uint32_t u : support.adjacency.neighbors[w]) in_star[u] = true;

    const ExtVertex& wv = support.vertices[w];
    auto rho_coord = [&](std::uint32_t u) -> std::optional<Rat> {
        if (u == w) return std::nullopt;
        if (std::binary_search(support.adjacency.neighbors[w].begin(),
                               support.adjacency.neighbors[w].end(), u))
            return std::nullopt; // orthogonal quasilines carry no rho
        return b.charts().project_ell(wv, support.vertices[u].conjugator);
    };

    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) {
            if (u == w || v == w) continue;
            const auto ru = rho_coord(u), rv = rho_coord(v);
            if (!ru || !rv || rat_abs(*ru - *rv) < threshold) {
                ++report.vacuous;
                continue;
            }
            ++report.checked;
            if (geodesics_meet_star(aug, u, v, in_star))
                ++report.passed;
            else {
                ++report.violations;
                report.violation_witnesses.push_back(support.vertices[u].label() + " -- " +
                                                     support.vertices[v].label());
            }
        }
    return report;
}

} // namespace raag
