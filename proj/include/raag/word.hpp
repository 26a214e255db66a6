#pragma once

#include "raag/defining_graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace raag {

/// One signed generator occurrence. Input exponents are expanded to unit
/// letters, so a word is just a sequence of these.
struct Letter {
    Gen gen;
    std::int8_t sign; // +1 or -1

    // Memberwise order, used only for container keys; the shortlex order
    // on the alphabet is letter_less below.
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Shortlex order on the alphabet: generator index first, positive before
/// negative. The canonical form below is minimal for the induced shortlex
/// order on words.
inline bool letter_less(const Letter& a, const Letter& b)
{
    if (a.gen != b.gen) return a.gen < b.gen;
    return a.sign > b.sign;
}

/// A group element in canonical form: freely reduced and shortlex-minimal
/// among all words reachable by swapping adjacent commuting letters.
/// Canonical forms are unique per element, so equality of elements is
/// equality of letter sequences. Instances are immutable.
class GroupWord {
public:
    GroupWord() = default; // identity of no particular graph; use the factories

    static GroupWord identity(GraphPtr graph);
    static GroupWord from_letters(GraphPtr graph, std::vector<Letter> letters);

    /// Grammar: whitespace-separated `name` or `name^k` / `name^-k` tokens.
    static GroupWord parse(GraphPtr graph, const std::string& text);

    const GraphPtr& graph() const { return graph_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool is_identity() const { return letters_.empty(); }
    bool canonical() const { return canonical_; }

    GroupWord inverse() const;
    GroupWord times(const GroupWord& rhs) const;
    GroupWord power(long long n) const;
    GroupWord conjugated_by(const GroupWord& x) const { return x.times(*this).times(x.inverse()); }

    bool same_graph(const GroupWord& other) const { return graph_.get() == other.graph_.get(); }

    /// True iff the element lies in the parabolic subgroup on `subset`.
    bool supported_on(const std::vector<Gen>& subset) const;

    long long exponent_sum(Gen g) const;

    std::string to_string() const; // "" renders as "1"

    std::uint64_t hash() const;

    friend bool operator==(const GroupWord& a, const GroupWord& b)
    {
        return a.graph_.get() == b.graph_.get() && a.letters_ == b.letters_;
    }
    friend bool operator!=(const GroupWord& a, const GroupWord& b) { return !(a == b); }

    /// Shortlex order; total on canonical words over one graph.
    friend bool operator<(const GroupWord& a, const GroupWord& b);

private:
    GroupWord(GraphPtr graph, std::vector<Letter> canonical_letters);

    GraphPtr graph_;
    std::vector<Letter> letters_;
    bool canonical_ = false;
};

struct GroupWordHash {
    std::size_t operator()(const GroupWord& w) const { return static_cast<std::size_t>(w.hash()); }
};

/// A subset of the generators, standing for the parabolic subgroup it
/// spans.
struct ParabolicSubset {
    std::vector<Gen> gens; // sorted, unique

    static ParabolicSubset of(GraphPtr graph, const std::vector<std::string>& names);
    static ParabolicSubset star_of(const GraphPtr& graph, Gen v);
    static ParabolicSubset link_of(const GraphPtr& graph, Gen v);
    bool contains(Gen g) const;
};

/// Canonical form of u·v; same as times(), kept as the named operation.
GroupWord multiply(const GroupWord& u, const GroupWord& v);
GroupWord normal_form(const GroupWord& w);
bool equals(const GroupWord& u, const GroupWord& v);

/// Maximal left-divisor of w lying in the parabolic on S. It is the closest
/// point of that subgroup in the word metric and fixes the subgroup
/// pointwise.
GroupWord parabolic_gate(const GroupWord& w, const ParabolicSubset& S);

/// Splits w = gate · remainder with gate the maximal left-divisor in G_S.
std::pair<GroupWord, GroupWord> gate_split(const GroupWord& w, const ParabolicSubset& S);

/// Splits w = remainder · tail with tail the maximal right-divisor in G_S.
/// The remainder is the canonical minimal representative of the coset w·G_S.
std::pair<GroupWord, GroupWord> right_gate_split(const GroupWord& w, const ParabolicSubset& S);

/// Word distance from w to the parabolic on S (length of the gate remainder).
std::size_t distance_to_parabolic(const GroupWord& w, const ParabolicSubset& S);

/// Deletes every occurrence of `killed` and reduces; the retraction of the
/// star subgroup onto the link parabolic.
GroupWord delete_generator(const GroupWord& w, Gen killed);

/// Cyclic reduction inside a free parabolic (no two letters commute).
/// Returns the cyclically reduced core; w is conjugate to it.
GroupWord cyclic_reduce_free(const GroupWord& w);

} // namespace raag
