#include "raag/quasiline.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace raag {

QuasilineChart::QuasilineChart(Quasimorphism m, Rat cutoff, Gen vertex, GroupWord z,
                               const std::vector<GroupWord>& probe)
    : m_(std::move(m)), cutoff_(cutoff), vertex_(vertex), z_(std::move(z)), m_of_z_(0)
{
    if (cutoff_ <= Rat(2) * m_.defect_bound())
        throw ValidationError("chart cutoff must exceed twice the defect bound");
    bool witnessed = false;
    for (const GroupWord& w : probe) {
        if (!m_.domain().contains(w)) continue;
        const Rat v = rat_abs(m_.eval(w));
        if (v > Rat(0) && v < cutoff_ / Rat(2)) witnessed = true;
    }
    if (!witnessed)
        throw ValidationError("no probed value of m lies in (0, C/2); cutoff too small");
    m_of_z_ = m_.eval(z_);
}

Rat QuasilineChart::default_cutoff(const Quasimorphism& m, const GroupWord& z)
{
    return Rat(2) * m.defect_bound() + Rat(2) * rat_abs(m.eval(z)) + Rat(1);
}

TauDistanceBounds tau_distance_bounds(const GroupWord& g, const QuasilineChart& chart)
{
    TauDistanceBounds out;
    if (g.is_identity()) return out;
    if (chart.m_of_z() == Rat(0))
        throw ValidationError("tau_distance_bounds needs m(z) != 0");

    const Rat C = chart.cutoff();
    const Rat D = chart.m().defect_bound();
    const Rat mg = chart.coord(g);
    out.lower = rat_ceil(rat_abs(mg) / (C + D));

    // Head factor g z^-n with n chosen so the factor is certified in tau.
    long long n = rat_round(mg / chart.m_of_z());
    GroupWord head = g.times(chart.z().power(-n));
    for (int tries = 0; tries < 64 && rat_abs(chart.coord(head)) >= C; ++tries) {
        n += chart.coord(head) * chart.m_of_z() > Rat(0) ? 1 : -1;
        head = g.times(chart.z().power(-n));
    }
    if (rat_abs(chart.coord(head)) >= C)
        throw ValidationError("could not certify the head factor in tau");

    long long factors = head.is_identity() ? 0 : 1;
    // Largest power of z per chunk with |t*m(z)| < C.
    const Rat ratio = C / rat_abs(chart.m_of_z());
    long long t_max = rat_ceil(ratio) - 1;
    if (Rat(t_max) * rat_abs(chart.m_of_z()) >= C) --t_max; // exact-division edge
    if (t_max < 1) t_max = 1;
    const long long an = std::llabs(n);
    factors += (an + t_max - 1) / t_max;
    out.upper = factors;
    return out;
}

std::optional<long long> tau_distance_exact_ball(const GroupWord& g, const QuasilineChart& chart,
                                                 long long search_cap, std::size_t tau_radius,
                                                 std::size_t cap)
{
    if (g.is_identity()) return 0;
    GraphPtr graph = g.graph();

    // tau-elements live in the vertex stabilizer: the star parabolic,
    // conjugated trivially here since exact search runs in standard
    // position.
    const auto star = ParabolicSubset::star_of(graph, chart.vertex());
    std::vector<GroupWord> tau_set;
    for (GroupWord& w : ball_enumerate(graph, tau_radius, cap).flatten()) {
        if (w.is_identity() || !w.supported_on(star.gens)) continue;
        if (chart.in_tau(w)) tau_set.push_back(std::move(w));
    }
    if (tau_set.empty()) return std::nullopt;

    const long long r = static_cast<long long>(tau_radius);

    std::unordered_set<GroupWord, GroupWordHash> visited{GroupWord::identity(graph)};
    std::vector<GroupWord> frontier{GroupWord::identity(graph)};
    for (long long level = 1; level <= search_cap; ++level) {
        std::vector<GroupWord> next;
        for (const GroupWord& s : frontier)
            for (const GroupWord& t : tau_set) {
                GroupWord u = s.times(t);
                if (u == g) return level;
                // Sound prune: a tau-geodesic of length <= search_cap keeps
                // every prefix within word distance r*(cap-level) of the
                // target, each factor moving at most r.
                const long long dist_to_g = static_cast<long long>(u.inverse().times(g).length());
                if (dist_to_g > r * (search_cap - level)) continue;
                if (visited.insert(u).second) next.push_back(std::move(u));
            }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return std::nullopt;
}

} // namespace raag
