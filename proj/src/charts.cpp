#include "raag/charts.hpp"

namespace raag {

ChartAssignment::ChartAssignment(GraphPtr graph, Gen distinguished, Rat lambda,
                                 Quasimorphism psi, std::optional<Rat> cutoff_override)
    : graph_(std::move(graph)), distinguished_(distinguished), lambda_(lambda)
{
    for (Gen base = 0; base < graph_->vertex_count(); ++base) {
        Quasimorphism m = exponent_hom(graph_, base);
        if (base == distinguished_) m = phi_lambda(graph_, m, psi, lambda_, base);
        const GroupWord z = GroupWord::from_letters(graph_, {{base, 1}});
        std::vector<GroupWord> probe{z};
        for (Gen other : graph_->star(base))
            probe.push_back(GroupWord::from_letters(graph_, {{other, 1}}));
        const Rat cutoff = cutoff_override ? *cutoff_override : QuasilineChart::default_cutoff(m, z);
        charts_.emplace(base, QuasilineChart(std::move(m), cutoff, base, z, probe));
    }
}

ChartAssignment::ChartAssignment(GraphPtr graph, std::optional<Rat> cutoff_override)
    : graph_(std::move(graph)), distinguished_(static_cast<Gen>(graph_->vertex_count())),
      lambda_(0)
{
    for (Gen base = 0; base < graph_->vertex_count(); ++base) {
        Quasimorphism m = exponent_hom(graph_, base);
        const GroupWord z = GroupWord::from_letters(graph_, {{base, 1}});
        const Rat cutoff = cutoff_override ? *cutoff_override : QuasilineChart::default_cutoff(m, z);
        charts_.emplace(base, QuasilineChart(std::move(m), cutoff, base, z, {z}));
    }
}

const QuasilineChart& ChartAssignment::chart_for_base(Gen base) const
{
    auto it = charts_.find(base);
    if (it == charts_.end()) throw ValidationError("no chart for that generator");
    return it->second;
}

Rat ChartAssignment::max_cutoff() const
{
    Rat best(0);
    for (const auto& [base, chart] : charts_)
        if (chart.cutoff() > best) best = chart.cutoff();
    return best;
}

Rat ChartAssignment::coord_in(const ExtVertex& v, const GroupWord& p) const
{
    const GroupWord local = v.conjugator.inverse().times(p);
    if (!local.supported_on(graph_->star(v.base)))
        throw ValidationError("point is not in the product region of " + v.label());
    return chart_for_base(v.base).coord(local);
}

bool ChartAssignment::in_product_region(const ExtVertex& v, const GroupWord& p) const
{
    return v.conjugator.inverse().times(p).supported_on(graph_->star(v.base));
}

Rat ChartAssignment::project_ell(const ExtVertex& v, const GroupWord& g) const
{
    const auto star = ParabolicSubset::star_of(graph_, v.base);
    const GroupWord gate = parabolic_gate(v.conjugator.inverse().times(g), star);
    return chart_for_base(v.base).coord(gate);
}

GroupWord ChartAssignment::project_u(const ExtVertex& v, const GroupWord& g) const
{
    const auto star = ParabolicSubset::star_of(graph_, v.base);
    const GroupWord gate = parabolic_gate(v.conjugator.inverse().times(g), star);
    return delete_generator(gate, v.base);
}

Quasimorphism default_link_psi(const GraphPtr& graph, Gen v)
{
    const auto& link = graph->link(v);
    for (std::size_t i = 0; i < link.size(); ++i)
        for (std::size_t j = i + 1; j < link.size(); ++j)
            if (!graph->adjacent(link[i], link[j])) {
                const Gen x = std::min(link[i], link[j]);
                const Gen y = std::max(link[i], link[j]);
                // The whole link spans a free parabolic (the graph is
                // triangle-free), and the projection of the star lands in
                // all of it.
                return brooks_homogenized(GroupWord::from_letters(graph, {{x, 1}, {y, 1}}),
                                          ParabolicSubset::link_of(graph, v));
            }
    throw ValidationError("link of '" + graph->name(v) +
                          "' has no non-commuting pair to build a counting quasimorphism on");
}

Gen default_distinguished_vertex(const GraphPtr& graph)
{
    for (Gen v = 0; v < graph->vertex_count(); ++v) {
        const auto& link = graph->link(v);
        for (std::size_t i = 0; i < link.size(); ++i)
            for (std::size_t j = i + 1; j < link.size(); ++j)
                if (!graph->adjacent(link[i], link[j])) return v;
    }
    throw ValidationError("no vertex has a non-elementary link; experiments need one");
}

} // namespace raag
