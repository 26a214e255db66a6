#pragma once

#include "raag/ball.hpp"
#include "raag/quasimorphism.hpp"

#include <optional>

namespace raag {

/// A quasimorphism m and a cutoff C. tau = {g : |m(g)| < C} generates the
/// stabilizer, m is a quasi-isometry from the tau-Cayley graph to the
/// reals, and m(.) is the coordinate model of the quasiline.
class QuasilineChart {
public:
    /// Validates C > 2*defect_bound(m) and that the probe set realizes a
    /// value of m in (0, C/2). z is the cyclic direction generator.
    QuasilineChart(Quasimorphism m, Rat cutoff, Gen vertex, GroupWord z,
                   const std::vector<GroupWord>& probe);

    /// C = 2*defect_bound + 2*|m(z)| + 1, which satisfies both invariants
    /// whenever m(z) != 0.
    static Rat default_cutoff(const Quasimorphism& m, const GroupWord& z);

    const Quasimorphism& m() const { return m_; }
    const Rat& cutoff() const { return cutoff_; }
    Gen vertex() const { return vertex_; }
    const GroupWord& z() const { return z_; }
    const Rat& m_of_z() const { return m_of_z_; }

    Rat coord(const GroupWord& g) const { return m_.eval(g); }
    bool in_tau(const GroupWord& g) const { return rat_abs(m_.eval(g)) < cutoff_; }

private:
    Quasimorphism m_;
    Rat cutoff_;
    Gen vertex_;
    GroupWord z_;
    Rat m_of_z_;
};

/// quasiline_coord(g, chart) = m(g).
inline Rat quasiline_coord(const GroupWord& g, const QuasilineChart& chart)
{
    return chart.coord(g);
}

struct TauDistanceBounds {
    long long lower = 0;
    long long upper = 0;
};

/// lower = ceil(|m(g)| / (C + defect)); upper from the explicit
/// decomposition g = (g z^-n) z^n with n ~ m(g)/m(z), the z-part split into
/// certified tau-chunks. Requires m(z) != 0.
TauDistanceBounds tau_distance_bounds(const GroupWord& g, const QuasilineChart& chart);

/// Exact tau-word-length when at most search_cap, by BFS whose step
/// multiplies by any tau-element of the enumerated ball (radius
/// tau_radius); nullopt otherwise. Intermediate states are pruned only by
/// the sound word-length slabs, so an answer <= search_cap is the true
/// distance over that factor set.
std::optional<long long> tau_distance_exact_ball(const GroupWord& g, const QuasilineChart& chart,
                                                 long long search_cap,
                                                 std::size_t tau_radius = 2,
                                                 std::size_t cap = kDefaultBallCap);

} // namespace raag
