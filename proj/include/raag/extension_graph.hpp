#pragma once

#include "raag/ball.hpp"
#include "raag/kernels.hpp"
#include "raag/word.hpp"

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace raag {

/// A conjugate of a standard generator, identified with the left coset
/// conjugator·C(base) of the star centralizer. The conjugator stored is the
/// canonical minimal coset representative, so two values are equal iff the
/// fields coincide.
struct ExtVertex {
    Gen base;
    GroupWord conjugator;

    /// z_v, the conjugated generator itself.
    GroupWord cyclic_direction() const;

    std::string label() const;

    friend bool operator==(const ExtVertex& a, const ExtVertex& b)
    {
        return a.base == b.base && a.conjugator == b.conjugator;
    }
    friend bool operator<(const ExtVertex& a, const ExtVertex& b)
    {
        if (a.base != b.base) return a.base < b.base;
        return a.conjugator < b.conjugator;
    }
};

/// Canonical vertex for the coset g·C(base): strips the maximal right
/// divisor of g lying in the star parabolic.
ExtVertex canonical_vertex(Gen base, const GroupWord& g);

/// Left translation x·(g·C(base)) = (x·g)·C(base).
ExtVertex translate(const GroupWord& x, const ExtVertex& v);

/// True iff the two conjugated generators commute. Throws on v == w.
bool ext_adjacent(const ExtVertex& v, const ExtVertex& w);

/// Finite piece of the extension graph: all vertices whose canonical
/// conjugator has length <= conj_radius, with every adjacency among them.
/// color(v) = base(v); the coloring is proper on every ball produced.
struct ExtBall {
    GraphPtr graph;
    ExtVertex center;
    std::size_t conj_radius = 0;
    std::vector<ExtVertex> vertices; // sorted
    SimpleGraph adjacency;           // indices into `vertices`

    std::size_t index_of(const ExtVertex& v) const; // throws if absent
    std::optional<std::size_t> find(const ExtVertex& v) const;
    Gen color(std::size_t i) const { return vertices[i].base; }

    std::string to_dot() const;
    std::string to_json() const;
};

ExtBall extension_ball(const ExtVertex& center, std::size_t conj_radius,
                       std::size_t cap = kDefaultBallCap);

/// Precomputed cone-off of a ball of the group (or of a parabolic): nodes
/// are the enumerated elements plus one node per coset of each cone
/// family; traversing a cone costs 2. Distances are left-invariant, so one
/// BFS from the identity answers every query.
class ConedOffContext {
public:
    ConedOffContext(GraphPtr graph, std::size_t search_radius,
                    std::vector<ParabolicSubset> cone_families,
                    std::optional<ParabolicSubset> ambient = std::nullopt,
                    std::size_t cap = kDefaultBallCap);

    /// Upper bound on the coned-off distance; exact whenever a true
    /// geodesic stays in the searched ball; nullopt when g^-1 h fell
    /// outside it.
    std::optional<int> distance_ub(const GroupWord& g, const GroupWord& h) const;

    std::size_t search_radius() const { return radius_; }

private:
    GraphPtr graph_;
    std::size_t radius_;
    std::vector<GroupWord> elements_;
    std::vector<int> dist_from_identity_;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> index_; // hash buckets
    std::optional<std::uint32_t> find(const GroupWord& w) const;
};

/// Cone-off over all centralizer cosets x·C(a) of the whole group.
ConedOffContext coned_off_cayley(GraphPtr graph, std::size_t search_radius,
                                 std::size_t cap = kDefaultBallCap);

/// One-shot convenience wrapper around coned_off_cayley().distance_ub().
std::optional<int> coned_off_distance_ub(const GroupWord& g, const GroupWord& h,
                                         std::size_t search_radius,
                                         std::size_t cap = kDefaultBallCap);

/// Cone-off of the parabolic on `ambient` over the cosets of the cyclic
/// subgroups on `cone_gens`; the coordinate-space model of a link.
ConedOffContext coned_off_parabolic(GraphPtr graph, const ParabolicSubset& ambient,
                                    const std::vector<Gen>& cone_gens,
                                    std::size_t search_radius,
                                    std::size_t cap = kDefaultBallCap);

} // namespace raag
