#include "raag/quasimorphism.hpp"

#include <algorithm>

namespace raag {

std::string QmDomain::describe(const GraphPtr& g) const
{
    if (!subset) return "G";
    std::string out = "G_{";
    for (std::size_t i = 0; i < subset->gens.size(); ++i) {
        if (i) out += ",";
        out += g->name(subset->gens[i]);
    }
    return out + "}";
}

Rat Quasimorphism::eval(const GroupWord& w) const
{
    if (!domain_.contains(w))
        throw QmDomainError("'" + w.to_string() + "' is outside the domain of " + spec_);
    return eval_(w);
}

Quasimorphism exponent_hom(const GraphPtr& graph, Gen letter)
{
    if (letter >= graph->vertex_count()) throw ValidationError("exponent_hom: no such generator");
    const std::string spec = "exp:" + graph->name(letter);
    return Quasimorphism(
        spec, [letter](const GroupWord& w) { return Rat(w.exponent_sum(letter)); }, Rat(0),
        /*homogeneous=*/true, QmDomain{});
}

namespace {

// Occurrences of the two-letter pattern in the word, cyclically when
// `cyclic`, minus occurrences of the inverse pattern.
long long pattern_count(const std::vector<Letter>& word, const Letter p0, const Letter p1,
                        bool cyclic)
{
    const std::size_t n = word.size();
    if (n < 2) return 0;
    const Letter q0{p1.gen, static_cast<std::int8_t>(-p1.sign)};
    const Letter q1{p0.gen, static_cast<std::int8_t>(-p0.sign)};
    long long count = 0;
    const std::size_t limit = cyclic ? n : n - 1;
    for (std::size_t i = 0; i < limit; ++i) {
        const Letter& x = word[i];
        const Letter& y = word[(i + 1) % n];
        if (x == p0 && y == p1) ++count;
        if (x == q0 && y == q1) --count;
    }
    return count;
}

Quasimorphism make_brooks(const GroupWord& pattern, std::optional<ParabolicSubset> domain_opt,
                          Rat defect_bound, bool cyclic)
{
    if (pattern.length() != 2)
        throw ValidationError("brooks: pattern must be a reduced length-2 word");
    const Letter p0 = pattern.letters()[0];
    const Letter p1 = pattern.letters()[1];
    GraphPtr graph = pattern.graph();
    if (p0.gen == p1.gen)
        throw ValidationError("brooks: pattern letters must use distinct generators");
    if (graph->adjacent(p0.gen, p1.gen))
        throw ValidationError("brooks: pattern letters must not commute (free parabolic)");

    ParabolicSubset domain =
        domain_opt ? *domain_opt
                   : ParabolicSubset{{std::min(p0.gen, p1.gen), std::max(p0.gen, p1.gen)}};
    if (!domain.contains(p0.gen) || !domain.contains(p1.gen))
        throw ValidationError("brooks: domain must contain the pattern letters");
    for (std::size_t i = 0; i < domain.gens.size(); ++i)
        for (std::size_t j = i + 1; j < domain.gens.size(); ++j)
            if (graph->adjacent(domain.gens[i], domain.gens[j]))
                throw ValidationError("brooks: domain must span a free parabolic");
    const std::string kind = cyclic ? "brooks" : "brooks-raw";
    const std::string spec =
        kind + ":" + graph->name(p0.gen) + (p0.sign < 0 ? "^-1" : "") + graph->name(p1.gen) +
        (p1.sign < 0 ? "^-1" : "");
    auto fn = [p0, p1, cyclic](const GroupWord& w) {
        const GroupWord core = cyclic ? cyclic_reduce_free(w) : w;
        return Rat(pattern_count(core.letters(), p0, p1, cyclic));
    };
    return Quasimorphism(spec, std::move(fn), defect_bound, /*homogeneous=*/cyclic,
                         QmDomain{domain});
}

} // namespace

Quasimorphism brooks_homogenized(const GroupWord& pattern,
                                 std::optional<ParabolicSubset> domain, Rat defect_bound)
{
    return make_brooks(pattern, std::move(domain), defect_bound, /*cyclic=*/true);
}

Quasimorphism brooks_raw(const GroupWord& pattern, std::optional<ParabolicSubset> domain,
                         Rat defect_bound)
{
    return make_brooks(pattern, std::move(domain), defect_bound, /*cyclic=*/false);
}

Rat homogenize_numeric(const Quasimorphism& m, const GroupWord& g, long long N)
{
    if (N < 1) throw ValidationError("homogenize_numeric: N must be >= 1");
    return m.eval(g.power(N)) / Rat(N);
}

Rat defect_lower_bound(const Quasimorphism& m,
                       const std::vector<std::pair<GroupWord, GroupWord>>& samples)
{
    Rat best(0);
    for (const auto& [g, h] : samples) {
        const Rat v = rat_abs(m.eval(g.times(h)) - m.eval(g) - m.eval(h));
        if (v > best) best = v;
    }
    return best;
}

void ExtensionData::validate(const QmDomain& fallback_domain) const
{
    if (coset_reps.empty()) throw ValidationError("extension data: no coset representatives");
    if (epsilon.size() != coset_reps.size())
        throw ValidationError("extension data: epsilon size mismatch");
    if (!coset_reps.front().is_identity())
        throw ValidationError("extension data: first representative must be the identity");
    if (epsilon.front() != 1)
        throw ValidationError("extension data: epsilon of the identity must be +1");
    for (int e : epsilon)
        if (e != 1 && e != -1) throw ValidationError("extension data: epsilon values must be ±1");
    const std::optional<ParabolicSubset>& subgroup =
        extension_domain ? extension_domain : fallback_domain.subset;
    if (subgroup) {
        for (std::size_t i = 0; i < coset_reps.size(); ++i)
            for (std::size_t j = i + 1; j < coset_reps.size(); ++j) {
                GroupWord q = coset_reps[j].inverse().times(coset_reps[i]);
                if (q.supported_on(subgroup->gens))
                    throw ValidationError("extension data: representatives " + std::to_string(i) +
                                          " and " + std::to_string(j) + " share a coset");
            }
    } else if (coset_reps.size() > 1) {
        throw ValidationError(
            "extension data: representatives of a whole-group extension cannot be distinct");
    }
}

Quasimorphism average_m_G(const Quasimorphism& m, const ExtensionData& ext)
{
    ext.validate(m.domain());
    const Rat k(static_cast<long long>(ext.index()));
    auto reps = ext.coset_reps;
    auto eps = ext.epsilon;
    const Quasimorphism inner = m;
    auto fn = [inner, reps, eps, k](const GroupWord& h) {
        Rat acc(0);
        for (std::size_t i = 0; i < reps.size(); ++i) {
            GroupWord conj = h.conjugated_by(reps[i]);
            if (!inner.domain().contains(conj))
                throw QmDomainError("conjugate " + conj.to_string() + " leaves the domain of " +
                                    inner.spec());
            acc += Rat(eps[i]) * inner.eval(conj);
        }
        return acc / k;
    };
    return Quasimorphism("avg(" + m.spec() + ")", std::move(fn), m.defect_bound(),
                         m.homogeneous(), m.domain());
}

Quasimorphism phi_lambda(const GraphPtr& graph, const Quasimorphism& phi,
                         const Quasimorphism& psi, const Rat& lambda, Gen v)
{
    if (psi.domain().subset)
        for (Gen w : graph->link(v))
            if (!psi.domain().subset->contains(w))
                throw ValidationError("phi_lambda: psi must be defined on the whole link of '" +
                                      graph->name(v) + "'");
    const Quasimorphism p = phi, q = psi;
    auto fn = [p, q, lambda, v](const GroupWord& g) {
        const GroupWord projected = delete_generator(g, v);
        return p.eval(g) + lambda * q.eval(projected);
    };
    const Rat defect = phi.defect_bound() + rat_abs(lambda) * psi.defect_bound();
    const std::string spec = "lam:" + rat_to_string(lambda) + ":" + phi.spec() + ":" + psi.spec();
    const bool hom = phi.homogeneous() && psi.homogeneous();
    return Quasimorphism(spec, std::move(fn), defect, hom,
                         QmDomain{ParabolicSubset::star_of(graph, v)});
}

LinkVanishingReport check_link_vanishing(const Quasimorphism& phi, Gen v,
                                         const std::vector<GroupWord>& sample_conjugators,
                                         long long max_power)
{
    LinkVanishingReport report;
    if (sample_conjugators.empty()) return report;
    const GraphPtr graph = sample_conjugators.front().graph();
    for (Gen w : graph->link(v)) {
        const GroupWord wgen = GroupWord::from_letters(graph, {{w, 1}});
        for (const GroupWord& x : sample_conjugators)
            for (long long n = 1; n <= max_power; ++n) {
                const GroupWord probe = wgen.power(n).conjugated_by(x);
                if (!phi.domain().contains(probe)) {
                    ++report.skipped;
                    continue;
                }
                ++report.checked;
                const Rat val = rat_abs(phi.eval(probe));
                if (val > report.max_abs) {
                    report.max_abs = val;
                    report.witness = probe.to_string();
                }
            }
    }
    return report;
}

std::pair<long long, long long> straighten(const StraighteningInput& input)
{
    if (input.N <= 0) throw ValidationError("straighten: N must be positive");

    // Rows with sign_g * sign_z = +1 force the twist to vanish by the
    // parity argument; mixed-sign rows need an even power multiple (p=4N)
    // and pin q.
    bool need_double = false;
    for (const auto& row : input.rows) {
        if (row.sign_g != 1 && row.sign_g != -1)
            throw ValidationError("straighten: sign_g must be ±1");
        if (row.sign_z != 1 && row.sign_z != -1)
            throw ValidationError("straighten: sign_z must be ±1");
        if (row.sign_g * row.sign_z == 1 && row.twist != 0)
            throw StraighteningInfeasible(
                "row with matching signs forces twist 0, got " + std::to_string(row.twist));
        if (row.sign_g * row.sign_z == -1) need_double = true;
    }

    const long long p = need_double ? 4 * input.N : 2 * input.N;
    std::optional<long long> q;
    for (const auto& row : input.rows) {
        if (row.sign_g * row.sign_z != -1) continue;
        // sign_g=+1, sign_z=-1: q = M * (p / 2N) / 2; the mirrored case
        // flips the sign.
        const long long s = p / (2 * input.N); // 2 here
        const long long needed = (row.sign_g == 1 ? row.twist : -row.twist) * s / 2;
        if (q && *q != needed)
            throw StraighteningInfeasible("conflicting twist requirements: " +
                                          std::to_string(*q) + " vs " + std::to_string(needed));
        q = needed;
    }
    const long long qv = q.value_or(0);

    // Symbolic verification: t (g^p z^q) t^{-1} must be g' or g'^{-1}.
    for (const auto& row : input.rows) {
        const long long reps = p / (2 * input.N);
        const long long conj_g = row.sign_g * p;
        const long long conj_z = row.twist * reps + qv * row.sign_z;
        const bool is_gprime = conj_g == p && conj_z == qv;
        const bool is_inverse = conj_g == -p && conj_z == -qv;
        if (!is_gprime && !is_inverse)
            throw StraighteningInfeasible("verification failed for a row");
    }
    return {p, qv};
}

} // namespace raag
