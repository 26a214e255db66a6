#pragma once

#include "raag/blowup.hpp"
#include "raag/util.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace raag {

enum class DomainKind { Top, U, Ell };

/// A symbolic domain of the three-layer coordinate system: the top level,
/// a link coordinate U_v, or a quasiline ell_v.
struct Domain {
    DomainKind kind = DomainKind::Top;
    std::optional<ExtVertex> vertex; // for U and Ell

    static Domain top() { return {DomainKind::Top, std::nullopt}; }
    static Domain u(ExtVertex v) { return {DomainKind::U, std::move(v)}; }
    static Domain ell(ExtVertex v) { return {DomainKind::Ell, std::move(v)}; }

    std::string label() const;
    friend bool operator==(const Domain&, const Domain&) = default;
};

enum class DomainRelation {
    Equal,
    FirstNestedInSecond,
    SecondNestedInFirst,
    Orthogonal,
    Transverse,
    Unknown // pairs the relation table does not cover, or outside the ball
};

std::string to_string(DomainRelation r);

/// Rho-point of one domain inside another's coordinate space: a rational
/// for quasiline targets, a cone vertex of the link parabolic for U
/// targets.
struct RhoPoint {
    std::optional<Rat> ell_coord;
    std::optional<std::string> u_cone;
};

struct ConsistencyStatistic {
    Rat max_violation{0};
    std::string witness_pair;
    std::size_t pairs_checked = 0;
};

/// Per-domain coordinates of a point or a median.
struct CoordinateTuple {
    GroupWord top;                            // cone-off position proxy
    std::map<std::string, GroupWord> u;       // label -> link-parabolic word
    std::map<std::string, Rat> ell;           // label -> chart coordinate
};

struct MedianResult {
    CoordinateTuple tuple;
    std::map<std::string, GroupWord> quasiline_representatives; // ell label -> chosen input
    std::map<std::string, std::string> divergence_witnesses;    // ell label -> note
};

/// The coordinate system spanned by an extension ball with charts: domains,
/// relations, projections, rho-points, consistency sampling, medians and
/// the divergence experiment.
class CoordinateSystem {
public:
    /// top_search_radius bounds the coned-off searches backing top and
    /// link coordinates of medians; the cone-offs are built once here.
    CoordinateSystem(ExtBall ball, const ChartAssignment& charts,
                     std::size_t top_search_radius = 4);

    const ExtBall& ball() const { return ball_; }
    const ChartAssignment& charts() const { return *charts_; }

    std::vector<Domain> domains() const; // Top, then U_v, Ell_v per ball vertex

    DomainRelation relation(const Domain& U, const Domain& V) const;

    /// Ell -> chart coordinate of the star gate; U -> link-parabolic word;
    /// Top -> the element itself.
    Rat project_ell(const Domain& d, const GroupWord& g) const;
    GroupWord project_u(const Domain& d, const GroupWord& g) const;

    /// rho(U, V) = the rho-point of V inside U's coordinate space; needs
    /// relation in {transverse, nested}. Orthogonal pairs are rejected.
    RhoPoint rho(const Domain& U, const Domain& V) const;

    /// Max over transverse quasiline pairs of
    /// min(|pi_U(g) - rho^V_U|, |pi_V(g) - rho^U_V|).
    ConsistencyStatistic consistency_check(
        const GroupWord& g, const std::vector<std::pair<Domain, Domain>>& pairs) const;

    /// All transverse Ell pairs within the ball.
    std::vector<std::pair<Domain, Domain>> transverse_ell_pairs() const;

    /// Coordinatewise coarse median: exact median of the three projections
    /// on every quasiline, representative = the input attaining it
    /// (shortlex tie-break); top and U coordinates from the input at the
    /// pairwise Gromov-product centre under coned-off upper bounds.
    MedianResult median_tuple(const GroupWord& x, const GroupWord& y, const GroupWord& z) const;

private:
    ExtBall ball_;
    const ChartAssignment* charts_;
    std::size_t top_radius_;
    std::optional<ConedOffContext> top_cone_;
    std::map<Gen, ConedOffContext> link_cones_; // per base generator
};

struct DivergenceRow {
    long long l = 0;
    long long k = 0;
    Rat lambda1{0}, lambda2{0};
    std::array<Rat, 3> phi1_of_triple{};
    std::array<Rat, 3> phi2_of_triple{};
    GroupWord x1, x2;
    Rat divergence{0};        // measured in the lambda2 chart
    Rat divergence_lambda1{0}; // same witness pair in the lambda1 chart
};

/// The divergence witness for the triple (1, z^k, g^l): medians are taken
/// in the charts phi^lambda1 and phi^lambda2 at vertex v; the result is
/// |phi^lambda2(x_1) - phi^lambda2(x_2)| for the representatives x_i.
/// Requires psi(p_v(g)) != 0.
DivergenceRow median_divergence(const GraphPtr& graph, Gen v, const Quasimorphism& psi,
                                const Rat& lambda1, const Rat& lambda2, long long k, long long l,
                                const GroupWord& z, const GroupWord& g);

struct FourPointStatistic {
    std::map<std::string, Rat> per_chart_max; // ell label -> max distance
    Rat overall{0};
    std::size_t quadruples = 0;
};

/// Median four-point statistic over sampled quadruples: the quasiline
/// distance between mu(mu(a,b,c),b,d) and mu(a,b,mu(c,b,d)) coordinates,
/// medians composed through the chart representatives.
FourPointStatistic four_point_check(const CoordinateSystem& cs,
                                    const std::vector<std::array<GroupWord, 4>>& quadruples);

/// Exact median of three chart values together with the input attaining
/// it; ties break toward the shortlex-smaller word. The selection depends
/// only on the order of the values, not their scale.
std::pair<Rat, GroupWord> median_with_representative(const std::array<Rat, 3>& vals,
                                                     const std::array<const GroupWord*, 3>& pts);

} // namespace raag
