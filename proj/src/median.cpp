#include "raag/median.hpp"

#include <algorithm>

namespace raag {

std::string Domain::label() const
{
    switch (kind) {
    case DomainKind::Top: return "S";
    case DomainKind::U: return "U(" + vertex->label() + ")";
    case DomainKind::Ell: return "ell(" + vertex->label() + ")";
    }
    return "?";
}

std::string to_string(DomainRelation r)
{
    switch (r) {
    case DomainRelation::Equal: return "equal";
    case DomainRelation::FirstNestedInSecond:
    case DomainRelation::SecondNestedInFirst: return "nested";
    case DomainRelation::Orthogonal: return "orthogonal";
    case DomainRelation::Transverse: return "transverse";
    case DomainRelation::Unknown: return "unknown";
    }
    return "?";
}

CoordinateSystem::CoordinateSystem(ExtBall ball, const ChartAssignment& charts,
                                   std::size_t top_search_radius)
    : ball_(std::move(ball)), charts_(&charts), top_radius_(top_search_radius)
{
    top_cone_.emplace(coned_off_cayley(ball_.graph, top_radius_));
    for (const ExtVertex& v : ball_.vertices) {
        if (link_cones_.count(v.base)) continue;
        const auto link = ParabolicSubset::link_of(ball_.graph, v.base);
        link_cones_.emplace(v.base, coned_off_parabolic(ball_.graph, link, link.gens,
                                                        top_radius_));
    }
}

std::vector<Domain> CoordinateSystem::domains() const
{
    std::vector<Domain> out{Domain::top()};
    for (const ExtVertex& v : ball_.vertices) out.push_back(Domain::u(v));
    for (const ExtVertex& v : ball_.vertices) out.push_back(Domain::ell(v));
    return out;
}

DomainRelation CoordinateSystem::relation(const Domain& U, const Domain& V) const
{
    if (U == V) return DomainRelation::Equal;
    if (U.kind == DomainKind::Top) return DomainRelation::SecondNestedInFirst;
    if (V.kind == DomainKind::Top) return DomainRelation::FirstNestedInSecond;

    const auto iu = ball_.find(*U.vertex);
    const auto iv = ball_.find(*V.vertex);
    if (!iu || !iv) return DomainRelation::Unknown;
    const bool adjacent =
        *iu != *iv && std::binary_search(ball_.adjacency.neighbors[*iu].begin(),
                                         ball_.adjacency.neighbors[*iu].end(),
                                         static_cast<std::uint32_t>(*iv));
    const std::size_t valence_u = ball_.adjacency.neighbors[*iu].size();
    const std::size_t valence_v = ball_.adjacency.neighbors[*iv].size();

    if (U.kind == DomainKind::Ell && V.kind == DomainKind::Ell) {
        if (adjacent) return DomainRelation::Orthogonal;
        return DomainRelation::Transverse; // distinct, non-adjacent
    }
    if (U.kind == DomainKind::Ell && V.kind == DomainKind::U) {
        if (*iu == *iv) return DomainRelation::Orthogonal; // ell_v ⊥ U_v
        if (adjacent) return DomainRelation::FirstNestedInSecond;
        if (valence_v > 1) return DomainRelation::Transverse;
        return DomainRelation::Unknown; // valence-one U against a far quasiline
    }
    if (U.kind == DomainKind::U && V.kind == DomainKind::Ell) {
        const DomainRelation r = relation(V, U);
        if (r == DomainRelation::FirstNestedInSecond) return DomainRelation::SecondNestedInFirst;
        return r;
    }
    // U vs U
    if (adjacent) return DomainRelation::Unknown; // not covered by the relation table
    if (valence_u > 1 && valence_v > 1) return DomainRelation::Transverse;
    return DomainRelation::Unknown;
}

Rat CoordinateSystem::project_ell(const Domain& d, const GroupWord& g) const
{
    if (d.kind != DomainKind::Ell) throw ValidationError("project_ell needs a quasiline domain");
    return charts_->project_ell(*d.vertex, g);
}

GroupWord CoordinateSystem::project_u(const Domain& d, const GroupWord& g) const
{
    if (d.kind != DomainKind::U) throw ValidationError("project_u needs a link domain");
    return charts_->project_u(*d.vertex, g);
}

RhoPoint CoordinateSystem::rho(const Domain& U, const Domain& V) const
{
    const DomainRelation rel = relation(U, V);
    if (rel == DomainRelation::Orthogonal)
        throw ValidationError("no rho between orthogonal domains");
    if (rel != DomainRelation::Transverse && rel != DomainRelation::FirstNestedInSecond &&
        rel != DomainRelation::SecondNestedInFirst)
        throw ValidationError("rho needs a transverse or nested pair, got " + to_string(rel));

    RhoPoint out;
    if (U.kind == DomainKind::Ell) {
        // Coordinate of the gate of V's product region, taken at its
        // canonical representative.
        out.ell_coord = charts_->project_ell(*U.vertex, V.vertex->conjugator);
        return out;
    }
    if (U.kind == DomainKind::U && V.kind == DomainKind::Ell) {
        // The cone vertex of the orbit of V's cyclic direction in the link
        // parabolic of U.
        const GroupWord img = charts_->project_u(*U.vertex, V.vertex->cyclic_direction());
        out.u_cone = img.is_identity() ? V.vertex->label() : img.to_string();
        return out;
    }
    throw ValidationError("rho for this pair is not modelled");
}

ConsistencyStatistic CoordinateSystem::consistency_check(
    const GroupWord& g, const std::vector<std::pair<Domain, Domain>>& pairs) const
{
    ConsistencyStatistic stat;
    for (const auto& [U, V] : pairs) {
        if (relation(U, V) != DomainRelation::Transverse)
            throw ValidationError("consistency_check needs transverse pairs");
        if (U.kind != DomainKind::Ell || V.kind != DomainKind::Ell)
            throw ValidationError("consistency statistic is modelled on quasiline pairs");
        const Rat pu = project_ell(U, g);
        const Rat pv = project_ell(V, g);
        const Rat ru = *rho(U, V).ell_coord;
        const Rat rv = *rho(V, U).ell_coord;
        const Rat violation = std::min(rat_abs(pu - ru), rat_abs(pv - rv));
        ++stat.pairs_checked;
        if (violation > stat.max_violation) {
            stat.max_violation = violation;
            stat.witness_pair = U.label() + " | " + V.label();
        }
    }
    return stat;
}

std::vector<std::pair<Domain, Domain>> CoordinateSystem::transverse_ell_pairs() const
{
    std::vector<std::pair<Domain, Domain>> out;
    for (std::size_t i = 0; i < ball_.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < ball_.vertices.size(); ++j) {
            Domain u = Domain::ell(ball_.vertices[i]);
            Domain v = Domain::ell(ball_.vertices[j]);
            if (relation(u, v) == DomainRelation::Transverse) out.emplace_back(u, v);
        }
    return out;
}

namespace {

// The input whose two companions have the smallest Gromov product at it,
// under the given symmetric distance; shortlex tie-break on words.
const GroupWord& gromov_centre(const std::array<const GroupWord*, 3>& pts,
                               const std::array<std::array<Rat, 3>, 3>& dist)
{
    std::array<Rat, 3> score;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        score[i] = (dist[i][j] + dist[i][k] - dist[j][k]) / Rat(2);
    }
    int best = 0;
    for (int i = 1; i < 3; ++i) {
        if (score[i] < score[best] ||
            (score[i] == score[best] && *pts[i] < *pts[best]))
            best = i;
    }
    return *pts[best];
}

} // namespace

std::pair<Rat, GroupWord> median_with_representative(const std::array<Rat, 3>& vals,
                                                     const std::array<const GroupWord*, 3>& pts)
{
    const Rat med = median3(vals[0], vals[1], vals[2]);
    const GroupWord* rep = nullptr;
    for (int i = 0; i < 3; ++i) {
        if (vals[static_cast<std::size_t>(i)] != med) continue;
        if (!rep || *pts[static_cast<std::size_t>(i)] < *rep) rep = pts[static_cast<std::size_t>(i)];
    }
    return {med, *rep};
}

MedianResult CoordinateSystem::median_tuple(const GroupWord& x, const GroupWord& y,
                                            const GroupWord& z) const
{
    MedianResult res;
    const std::array<const GroupWord*, 3> pts{&x, &y, &z};
    const Rat far(static_cast<long long>(top_radius_) + 1);

    // Quasiline coordinates: exact medians with attaining representatives.
    for (const ExtVertex& v : ball_.vertices) {
        const Domain d = Domain::ell(v);
        const std::array<Rat, 3> vals{project_ell(d, x), project_ell(d, y), project_ell(d, z)};
        auto [med, rep] = median_with_representative(vals, pts);
        res.tuple.ell[d.label()] = med;
        res.quasiline_representatives[d.label()] = std::move(rep);
    }

    // Top coordinate: the Gromov-product centre under coned-off upper
    // bounds (a heuristic proxy; the coarse centre is not algorithmic).
    {
        std::array<std::array<Rat, 3>, 3> dist{};
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                const auto d = top_cone_->distance_ub(*pts[i], *pts[j]);
                dist[i][j] = dist[j][i] = d ? Rat(*d) : far;
            }
        res.tuple.top = gromov_centre(pts, dist);
    }

    // Link coordinates: centre under the coned-off link parabolic metric.
    for (const ExtVertex& v : ball_.vertices) {
        const Domain d = Domain::u(v);
        std::array<GroupWord, 3> proj{project_u(d, x), project_u(d, y), project_u(d, z)};
        const ConedOffContext& cone = link_cones_.at(v.base);
        std::array<std::array<Rat, 3>, 3> dist{};
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                const auto dd = cone.distance_ub(proj[i], proj[j]);
                dist[i][j] = dist[j][i] = dd ? Rat(*dd) : far;
            }
        const GroupWord& centre = gromov_centre(pts, dist);
        res.tuple.u[d.label()] = charts_->project_u(v, centre);
    }
    return res;
}

DivergenceRow median_divergence(const GraphPtr& graph, Gen v, const Quasimorphism& psi,
                                const Rat& lambda1, const Rat& lambda2, long long k, long long l,
                                const GroupWord& z, const GroupWord& g)
{
    const GroupWord pg = delete_generator(parabolic_gate(g, ParabolicSubset::star_of(graph, v)), v);
    if (psi.eval(pg) == Rat(0))
        throw ValidationError("divergence needs psi(p_v(g)) != 0; got 0 on " + pg.to_string());

    const Quasimorphism phi = exponent_hom(graph, v);
    const Quasimorphism phi1 = phi_lambda(graph, phi, psi, lambda1, v);
    const Quasimorphism phi2 = phi_lambda(graph, phi, psi, lambda2, v);

    DivergenceRow row;
    row.l = l;
    row.k = k;
    row.lambda1 = lambda1;
    row.lambda2 = lambda2;

    const std::array<GroupWord, 3> triple{GroupWord::identity(graph), z.power(k), g.power(l)};
    for (int i = 0; i < 3; ++i) {
        row.phi1_of_triple[static_cast<std::size_t>(i)] = phi1.eval(triple[static_cast<std::size_t>(i)]);
        row.phi2_of_triple[static_cast<std::size_t>(i)] = phi2.eval(triple[static_cast<std::size_t>(i)]);
    }

    const std::array<const GroupWord*, 3> pts{&triple[0], &triple[1], &triple[2]};
    row.x1 = median_with_representative(row.phi1_of_triple, pts).second;
    row.x2 = median_with_representative(row.phi2_of_triple, pts).second;

    if (row.x1 == row.x2) {
        row.divergence = Rat(0);
        row.divergence_lambda1 = Rat(0);
    } else {
        row.divergence = rat_abs(phi2.eval(row.x1) - phi2.eval(row.x2));
        row.divergence_lambda1 = rat_abs(phi1.eval(row.x1) - phi1.eval(row.x2));
    }
    return row;
}

FourPointStatistic four_point_check(const CoordinateSystem& cs,
                                    const std::vector<std::array<GroupWord, 4>>& quadruples)
{
    FourPointStatistic stat;
    for (const ExtVertex& v : cs.ball().vertices) {
        const Domain d = Domain::ell(v);
        Rat worst(0);
        for (const auto& q : quadruples) {
            const auto& [a, b, c, e] = q;
            auto med_rep = [&](const GroupWord& p, const GroupWord& r,
                               const GroupWord& s) -> GroupWord {
                const std::array<Rat, 3> vals{cs.project_ell(d, p), cs.project_ell(d, r),
                                              cs.project_ell(d, s)};
                return median_with_representative(vals, {&p, &r, &s}).second;
            };
            const GroupWord left = med_rep(med_rep(a, b, c), b, e);
            const GroupWord right = med_rep(a, b, med_rep(c, b, e));
            const Rat gap = rat_abs(cs.project_ell(d, left) - cs.project_ell(d, right));
            if (gap > worst) worst = gap;
        }
        stat.per_chart_max[d.label()] = worst;
        if (worst > stat.overall) stat.overall = worst;
    }
    stat.quadruples = quadruples.size();
    return stat;
}

} // namespace raag
