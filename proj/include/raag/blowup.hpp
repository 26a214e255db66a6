#pragma once

#include "raag/charts.hpp"
#include "raag/kernels.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace raag {

/// A point of a truncated quasiline L_v: a power of the cyclic direction
/// with its chart coordinate.
struct SquidPoint {
    GroupWord rep; // element of the product region P_v
    Rat coord;
};

/// Vertex of the blowup: the apex of a squid (point = -1) or one of its
/// quasiline points.
struct BlowupVertex {
    std::uint32_t support; // index into the support ball's vertices
    std::int32_t point;    // -1 = apex, else index into squids[support]

    friend bool operator==(const BlowupVertex&, const BlowupVertex&) = default;
};

/// Simplex of the blowup, stored as sorted vertex indices. Supports have at
/// most two vertices since the support graph is triangle- and square-free.
using Simplex = std::vector<std::uint32_t>;

enum class SimplexClass { Empty, EdgeType, TriangleType, Maximal, BoundedOther };

std::string to_string(SimplexClass c);

/// Ball-scale blowup of an extension ball: every support vertex becomes the
/// cone of its apex over a window of quasiline points; adjacent squids span
/// joins. Immutable once built.
class BlowupBall {
public:
    BlowupBall(ExtBall support, const ChartAssignment& charts, Rat coord_window);

    const ExtBall& support() const { return support_; }
    const ChartAssignment& charts() const { return *charts_; }
    const Rat& coord_window() const { return coord_window_; }

    const std::vector<BlowupVertex>& vertices() const { return verts_; }
    const SimpleGraph& adjacency() const { return adj_; }
    const std::vector<SquidPoint>& squid(std::uint32_t support) const { return squids_[support]; }

    std::uint32_t apex_index(std::uint32_t support) const;
    std::uint32_t point_index(std::uint32_t support, std::int32_t point) const;
    const BlowupVertex& vertex(std::uint32_t idx) const { return verts_[idx]; }
    std::string vertex_label(std::uint32_t idx) const;

    /// All simplices including the empty one, deterministic order.
    const std::vector<Simplex>& simplices() const;
    const std::vector<Simplex>& maximal_simplices() const;

    bool is_simplex(const Simplex& s) const;
    std::vector<std::uint32_t> link_of(const Simplex& s) const; // generic, by adjacency
    std::vector<std::uint32_t> link_closed_form(const Simplex& s) const;
    SimplexClass classify(const Simplex& s) const;

    /// Union of all simplices with the same link (generic computation).
    std::vector<std::uint32_t> saturation(const Simplex& s) const;
    /// Closed form for triangle-type and edge-type (valence >= 2) simplices.
    std::optional<std::vector<std::uint32_t>> saturation_closed_form(const Simplex& s) const;

    /// Membership in the product region of [s]: the maximal simplex factors
    /// as P1 * P2 * P3 with P1 maximal in Lk(s), P2 maximal in Lk(Lk(s)),
    /// P3 maximal in Lk(P1 * P2).
    bool product_region_member(const Simplex& maximal, const Simplex& s) const;

    std::string to_dot() const;
    std::string to_json() const;

private:
    ExtBall support_;
    const ChartAssignment* charts_;
    Rat coord_window_;
    std::vector<std::vector<SquidPoint>> squids_;
    std::vector<BlowupVertex> verts_;
    std::vector<std::vector<std::uint32_t>> vert_index_; // [support][point+1] -> index
    SimpleGraph adj_;
    mutable std::vector<Simplex> simplices_;
    mutable std::vector<Simplex> maximal_;
};

/// Precomputed coarse level sets over a group ball: for every element and
/// support vertex, the chart coordinates of nearby product-region points.
class LevelSets {
public:
    LevelSets(const BlowupBall& blowup, const Ball& group_ball, long long R);

    const std::vector<GroupWord>& elements() const { return elements_; }
    long long R() const { return R_; }

    /// Members of N(x) for the squid point (support, point), as indices
    /// into elements().
    std::vector<std::uint32_t> level_set(std::uint32_t support, std::int32_t point) const;

    /// N-set of an arbitrary coordinate on the quasiline of `support`.
    std::vector<std::uint32_t> level_set_at(std::uint32_t support, const Rat& coord) const;

    /// Word-metric distance between two element-index sets, breadth-first
    /// inside the ball; nullopt if they do not meet within max_steps.
    std::optional<int> set_distance_ub(const std::vector<std::uint32_t>& a,
                                       const std::vector<std::uint32_t>& b,
                                       int max_steps) const;

    const BlowupBall& blowup() const { return *blowup_; }

private:
    const BlowupBall* blowup_;
    std::vector<GroupWord> elements_;
    long long R_;
    // per element, per support vertex: coordinates of P_v within B_R
    std::vector<std::vector<std::vector<Rat>>> nearby_coords_;
    std::vector<std::vector<std::uint32_t>> element_neighbors_; // generator moves inside ball
};

struct RealisationResult {
    std::vector<std::uint32_t> elements; // indices into LevelSets::elements()
    bool possibly_empty = false;         // empty inside the truncated ball
};

/// f(Delta) = N(x) ∩ N(y) for a maximal simplex supported on an edge.
RealisationResult realisation(const Simplex& maximal, const LevelSets& ls);

enum class WEdgeType { None, CloseRealisations, Staple };

struct WEdgeResult {
    WEdgeType type = WEdgeType::None;
    bool truncation_caveat = false; // a negative answer inside a finite ball
};

/// Type 1 iff the realisations are at distance <= 1; Type 2 iff the
/// simplices share their x-point and the level sets of the other two points
/// are within T+1.
WEdgeResult w_adjacent(const Simplex& d1, const Simplex& d2, const LevelSets& ls, long long T);

/// Support graph plus an edge between supports of W-adjacent maximal
/// simplices (ball truncation of the augmented support graph).
SimpleGraph augmented_support_graph(const LevelSets& ls, long long T);

struct DeltaReport {
    std::vector<FourPointResult> per_component;
    Rat max_delta{0};
    std::size_t component_count = 0;
};

/// Four-point hyperbolicity defect of a finite graph, per component.
DeltaReport delta_hyperbolicity_estimate(const SimpleGraph& g);

struct BgiCheckReport {
    std::size_t checked = 0;  // pairs with separation >= threshold
    std::size_t vacuous = 0;  // separation below threshold or rho undefined
    std::size_t passed = 0;
    std::size_t violations = 0;
    std::vector<std::string> violation_witnesses;
};

/// True iff every geodesic between u and v in g meets the star set:
/// deleting the star strictly increases (or disconnects) the distance.
bool geodesics_meet_star(const SimpleGraph& g, std::uint32_t u, std::uint32_t v,
                         const std::vector<bool>& in_star);

/// For support vertices u, v whose rho-coordinates on the quasiline of w
/// are separated by at least `threshold`, verifies every geodesic from u to
/// v in the augmented support graph meets Star(w). The threshold stands in
/// for twice the ambient hierarchy constant, which is existential; pairs
/// below it are vacuous.
/// `augmented` must come from augmented_support_graph on the same ball.
BgiCheckReport strong_bgi_check(const LevelSets& ls, std::uint32_t w,
                                const SimpleGraph& augmented, const Rat& threshold);

} // namespace raag
