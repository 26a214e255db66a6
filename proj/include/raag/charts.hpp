#pragma once

#include "raag/extension_graph.hpp"
#include "raag/quasiline.hpp"

#include <map>

namespace raag {

/// One quasiline chart per generator, transported to conjugate vertices by
/// translation. The distinguished vertex carries phi^lambda = exp + lambda
/// * (psi o p_v); every other base carries its exponent homomorphism.
class ChartAssignment {
public:
    /// psi must be a homogeneous quasimorphism on a free parabolic inside
    /// the link of `distinguished` (vanishing there is what keeps adjacent
    /// cyclic directions bounded on the quasiline).
    ChartAssignment(GraphPtr graph, Gen distinguished, Rat lambda, Quasimorphism psi,
                    std::optional<Rat> cutoff_override = std::nullopt);

    /// Exponent charts everywhere (lambda = 0, no counting summand).
    explicit ChartAssignment(GraphPtr graph, std::optional<Rat> cutoff_override = std::nullopt);

    const GraphPtr& graph() const { return graph_; }
    Gen distinguished() const { return distinguished_; }
    const Rat& lambda() const { return lambda_; }
    const QuasilineChart& chart_for_base(Gen base) const;

    /// Largest cutoff among the charts; 2x this is the default separation
    /// threshold wherever a multiple of the ambient hierarchy constant is
    /// called for.
    Rat max_cutoff() const;

    /// Coordinate of p as a point of L_v; p must lie in the product region
    /// P_v = conjugator·C(base).
    Rat coord_in(const ExtVertex& v, const GroupWord& p) const;
    bool in_product_region(const ExtVertex& v, const GroupWord& p) const;

    /// Projection of an arbitrary element to the quasiline of v: the chart
    /// coordinate of its gate onto P_v, conjugated to standard position.
    Rat project_ell(const ExtVertex& v, const GroupWord& g) const;

    /// Projection to the link coordinate of v: image of the star gate in
    /// the link parabolic (the base generator deleted).
    GroupWord project_u(const ExtVertex& v, const GroupWord& g) const;

private:
    GraphPtr graph_;
    Gen distinguished_;
    Rat lambda_;
    std::map<Gen, QuasilineChart> charts_;
};

/// Default psi for a graph: the homogenized Brooks quasimorphism on the
/// shortlex-least non-commuting pair in the link of `v`. Throws when the
/// link is too small to carry one.
Quasimorphism default_link_psi(const GraphPtr& graph, Gen v);

/// First vertex whose link contains two non-commuting generators; the
/// default distinguished vertex of the experiments.
Gen default_distinguished_vertex(const GraphPtr& graph);

} // namespace raag
