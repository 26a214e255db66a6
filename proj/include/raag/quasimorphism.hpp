#pragma once

#include "raag/rational.hpp"
#include "raag/word.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace raag {

/// Where a quasimorphism is defined: the whole group or a parabolic
/// subgroup on a generator subset.
struct QmDomain {
    std::optional<ParabolicSubset> subset; // nullopt = whole group

    bool contains(const GroupWord& w) const
    {
        return !subset || w.supported_on(subset->gens);
    }
    std::string describe(const GraphPtr& g) const;
};

/// An evaluatable map group -> rationals with a declared defect bound.
/// Evaluation is pure; instances are immutable and freely shareable.
class Quasimorphism {
public:
    using EvalFn = std::function<Rat(const GroupWord&)>;

    Quasimorphism() = default;
    Quasimorphism(std::string spec, EvalFn eval, Rat defect_bound, bool homogeneous,
                  QmDomain domain)
        : spec_(std::move(spec)), eval_(std::move(eval)), defect_bound_(defect_bound),
          homogeneous_(homogeneous), domain_(std::move(domain))
    {
    }

    Rat operator()(const GroupWord& w) const { return eval(w); }
    Rat eval(const GroupWord& w) const;

    const Rat& defect_bound() const { return defect_bound_; }
    bool homogeneous() const { return homogeneous_; }
    const QmDomain& domain() const { return domain_; }
    const std::string& spec() const { return spec_; }

private:
    std::string spec_; // display form, e.g. "exp:b" or "lam:3:exp:b:brooks:ac"
    EvalFn eval_;
    Rat defect_bound_{0};
    bool homogeneous_ = false;
    QmDomain domain_;
};

/// A quasimorphism value outside its declared domain subgroup, or extension
/// data whose conjugates leave the domain.
class QmDomainError : public std::runtime_error {
public:
    explicit QmDomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Exponent-sum homomorphism of one generator. Defect 0, homogeneous.
Quasimorphism exponent_hom(const GraphPtr& graph, Gen letter);

inline constexpr long long kBrooksDefectBound = 6;

/// Homogenized Brooks counting quasimorphism for a reduced length-2
/// pattern: occurrences of the pattern in the cyclic reduction, read
/// cyclically, minus occurrences of its inverse. Exactly homogeneous;
/// vanishes on every single generator. The domain must span a free
/// parabolic (pairwise non-commuting generators) containing the pattern;
/// when absent it is the pair of pattern letters. The defect bound is the
/// configured constant, certifiable from below via defect_lower_bound.
Quasimorphism brooks_homogenized(const GroupWord& pattern,
                                 std::optional<ParabolicSubset> domain = std::nullopt,
                                 Rat defect_bound = Rat(kBrooksDefectBound));

/// Raw (non-cyclic) Brooks count on the reduced word; not homogeneous.
Quasimorphism brooks_raw(const GroupWord& pattern,
                         std::optional<ParabolicSubset> domain = std::nullopt,
                         Rat defect_bound = Rat(kBrooksDefectBound));

/// m(g^N)/N; within defect_bound/N of the true homogenization.
Rat homogenize_numeric(const Quasimorphism& m, const GroupWord& g, long long N);

/// Certified lower bound for the true defect: max over the sample pairs of
/// |m(gh) - m(g) - m(h)|.
Rat defect_lower_bound(const Quasimorphism& m,
                       const std::vector<std::pair<GroupWord, GroupWord>>& samples);

/// Coset data for averaging over a finite-index extension. epsilon is
/// declared data: +1 when the representative preserves the central
/// direction, -1 when it inverts it. extension_domain names the subgroup E
/// whose cosets the representatives must separate; when absent, the
/// averaged quasimorphism's own domain is used.
struct ExtensionData {
    std::vector<GroupWord> coset_reps; // g_1 = identity first
    std::vector<int> epsilon;          // one per rep, +1 / -1
    std::optional<ParabolicSubset> extension_domain;
    std::size_t index() const { return coset_reps.size(); }

    /// Checks: epsilon(g_1) = +1, signs valid, reps pairwise in distinct
    /// cosets of the extension subgroup when one is known.
    void validate(const QmDomain& fallback_domain) const;
};

/// m^G(h) = (1/k) sum_i epsilon(g_i) m(g_i h g_i^-1). Evaluation throws
/// QmDomainError when a conjugate g_i h g_i^-1 leaves m's domain.
Quasimorphism average_m_G(const Quasimorphism& m, const ExtensionData& ext);

/// phi^lambda = phi + lambda * (psi o p_v), where p_v deletes the
/// generator v and lands in the link parabolic. Defined on the star
/// parabolic <v> x G_Lk(v); homogeneous; defect bound
/// defect(phi) + |lambda|*defect(psi).
Quasimorphism phi_lambda(const GraphPtr& graph, const Quasimorphism& phi,
                         const Quasimorphism& psi, const Rat& lambda, Gen v);

struct LinkVanishingReport {
    Rat max_abs{0};
    std::string witness;     // word attaining the max, empty if vacuous
    std::size_t checked = 0; // evaluations that landed in the domain
    std::size_t skipped = 0; // conjugates outside the domain
    bool vacuous() const { return checked == 0; }
};

/// Probes |phi(x w^n x^-1)| for w in the link of v, sampled conjugators x
/// and powers |n| <= max_power, restricted to elements of phi's domain.
LinkVanishingReport check_link_vanishing(const Quasimorphism& phi, Gen v,
                                         const std::vector<GroupWord>& sample_conjugators,
                                         long long max_power = 10);

/// One relation t g^{2N} t^{-1} = g^{±2N} z^{±...} z^{twist} per generator
/// of the finite quotient.
struct StraighteningRow {
    int sign_g;     // ±1
    int sign_z;     // ±1
    long long twist; // exponent M
};

struct StraighteningInput {
    long long N = 1; // must be positive
    std::vector<StraighteningRow> rows;
};

/// Rows that the parity argument rules out (a twist forced to zero, or
/// conflicting twist requirements between rows).
class StraighteningInfeasible : public std::runtime_error {
public:
    explicit StraighteningInfeasible(const std::string& what) : std::runtime_error(what) {}
};

/// Exponents (p, q) with g' = g^p z^q generating a subgroup normal under
/// every listed t; verified symbolically by re-deriving t g' t^{-1} from
/// the row data.
std::pair<long long, long long> straighten(const StraighteningInput& input);

} // namespace raag
