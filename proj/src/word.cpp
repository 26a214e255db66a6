#include "raag/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace raag {

namespace {

// Letters strictly before position i must all commute with letters[i] (and
// none may share its generator) for it to be movable to the front.
bool front_movable(const DefiningGraph& g, const std::vector<Letter>& ls, std::size_t i)
{
    for (std::size_t j = 0; j < i; ++j) {
        if (ls[j].gen == ls[i].gen) return false;
        if (!g.adjacent(ls[j].gen, ls[i].gen)) return false;
    }
    return true;
}

// Free reduction up to shuffles: cancel any pair of opposite letters of the
// same generator separated only by letters commuting with it. Iterates to a
// fixed point; the result is a geodesic representative.
void shuffle_reduce(const DefiningGraph& g, std::vector<Letter>& ls)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < ls.size() && !changed; ++i) {
            for (std::size_t k = i + 1; k < ls.size(); ++k) {
                if (ls[k].gen == ls[i].gen) {
                    if (ls[k].sign == -ls[i].sign) {
                        ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(k));
                        ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(i));
                        changed = true;
                    }
                    break; // same generator blocks either way
                }
                if (!g.adjacent(ls[k].gen, ls[i].gen)) break;
            }
        }
    }
}

// Greedy lex-least linear extension of the reduced word's dependence order.
std::vector<Letter> shortlex_pick(const DefiningGraph& g, std::vector<Letter> ls)
{
    std::vector<Letter> out;
    out.reserve(ls.size());
    while (!ls.empty()) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < ls.size(); ++i)
            if (front_movable(g, ls, i) && letter_less(ls[i], ls[best])) best = i;
        out.push_back(ls[best]);
        ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return out;
}

std::vector<Letter> canonicalize(const DefiningGraph& g, std::vector<Letter> ls)
{
    shuffle_reduce(g, ls);
    return shortlex_pick(g, std::move(ls));
}

} // namespace

GroupWord::GroupWord(GraphPtr graph, std::vector<Letter> canonical_letters)
    : graph_(std::move(graph)), letters_(std::move(canonical_letters)), canonical_(true)
{
}

GroupWord GroupWord::identity(GraphPtr graph) { return GroupWord(std::move(graph), {}); }

GroupWord GroupWord::from_letters(GraphPtr graph, std::vector<Letter> letters)
{
    for (const Letter& l : letters) {
        if (l.gen >= graph->vertex_count()) throw ValidationError("letter index out of range");
        if (l.sign != 1 && l.sign != -1) throw ValidationError("letter sign must be +1 or -1");
    }
    auto canon = canonicalize(*graph, std::move(letters));
    return GroupWord(std::move(graph), std::move(canon));
}

GroupWord GroupWord::parse(GraphPtr graph, const std::string& text)
{
    std::vector<Letter> letters;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        std::string name = tok;
        long long exp = 1;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            name = tok.substr(0, caret);
            std::string e = tok.substr(caret + 1);
            if (e.empty()) throw ValidationError("empty exponent in '" + tok + "'");
            try {
                exp = std::stoll(e);
            } catch (const std::exception&) {
                throw ValidationError("bad exponent in '" + tok + "'");
            }
        }
        Gen g = graph->index_of(name);
        const std::int8_t sign = exp >= 0 ? std::int8_t{1} : std::int8_t{-1};
        for (long long i = 0; i < std::llabs(exp); ++i) letters.push_back({g, sign});
    }
    return from_letters(std::move(graph), std::move(letters));
}

GroupWord GroupWord::inverse() const
{
    std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
    for (Letter& l : inv) l.sign = static_cast<std::int8_t>(-l.sign);
    return from_letters(graph_, std::move(inv));
}

GroupWord GroupWord::times(const GroupWord& rhs) const
{
    if (graph_.get() != rhs.graph_.get())
        throw ValidationError("cannot multiply words over different graphs");
    std::vector<Letter> cat = letters_;
    cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
    return from_letters(graph_, std::move(cat));
}

GroupWord GroupWord::power(long long n) const
{
    GroupWord base = n >= 0 ? *this : inverse();
    GroupWord acc = identity(graph_);
    for (long long i = 0; i < std::llabs(n); ++i) acc = acc.times(base);
    return acc;
}

bool GroupWord::supported_on(const std::vector<Gen>& subset) const
{
    for (const Letter& l : letters_)
        if (std::find(subset.begin(), subset.end(), l.gen) == subset.end()) return false;
    return true;
}

long long GroupWord::exponent_sum(Gen g) const
{
    long long s = 0;
    for (const Letter& l : letters_)
        if (l.gen == g) s += l.sign;
    return s;
}

std::string GroupWord::to_string() const
{
    if (letters_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters_.size();) {
        std::size_t j = i;
        while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
        const long long run = static_cast<long long>(j - i) * letters_[i].sign;
        if (!out.empty()) out += ' ';
        out += graph_->name(letters_[i].gen);
        if (run != 1) out += "^" + std::to_string(run);
        i = j;
    }
    return out;
}

std::uint64_t GroupWord::hash() const
{
    std::uint64_t h = 1469598103934665603ull;
    for (const Letter& l : letters_) {
        h ^= static_cast<std::uint64_t>(l.gen) * 2 + (l.sign < 0 ? 1 : 0) + 0x9e3779b9;
        h *= 1099511628211ull;
    }
    return h;
}

bool operator<(const GroupWord& a, const GroupWord& b)
{
    if (a.letters_.size() != b.letters_.size()) return a.letters_.size() < b.letters_.size();
    for (std::size_t i = 0; i < a.letters_.size(); ++i) {
        if (a.letters_[i] == b.letters_[i]) continue;
        return letter_less(a.letters_[i], b.letters_[i]);
    }
    return false;
}

ParabolicSubset ParabolicSubset::of(GraphPtr graph, const std::vector<std::string>& names)
{
    ParabolicSubset s;
    for (const auto& n : names) s.gens.push_back(graph->index_of(n));
    std::sort(s.gens.begin(), s.gens.end());
    s.gens.erase(std::unique(s.gens.begin(), s.gens.end()), s.gens.end());
    return s;
}

ParabolicSubset ParabolicSubset::star_of(const GraphPtr& graph, Gen v)
{
    return ParabolicSubset{graph->star(v)};
}

ParabolicSubset ParabolicSubset::link_of(const GraphPtr& graph, Gen v)
{
    ParabolicSubset s{graph->link(v)};
    std::sort(s.gens.begin(), s.gens.end());
    return s;
}

bool ParabolicSubset::contains(Gen g) const
{
    return std::binary_search(gens.begin(), gens.end(), g);
}

GroupWord multiply(const GroupWord& u, const GroupWord& v) { return u.times(v); }

GroupWord normal_form(const GroupWord& w) { return w; } // already canonical by construction

bool equals(const GroupWord& u, const GroupWord& v)
{
    if (!u.same_graph(v)) throw ValidationError("cannot compare words over different graphs");
    return u == v;
}

std::pair<GroupWord, GroupWord> gate_split(const GroupWord& w, const ParabolicSubset& S)
{
    const DefiningGraph& g = *w.graph();
    std::vector<Letter> rest = w.letters();
    std::vector<Letter> gate;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < rest.size(); ++i) {
            if (!S.contains(rest[i].gen)) continue;
            if (!front_movable(g, rest, i)) continue;
            gate.push_back(rest[i]);
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            changed = true;
            break;
        }
    }
    return {GroupWord::from_letters(w.graph(), std::move(gate)),
            GroupWord::from_letters(w.graph(), std::move(rest))};
}

GroupWord parabolic_gate(const GroupWord& w, const ParabolicSubset& S)
{
    return gate_split(w, S).first;
}

std::pair<GroupWord, GroupWord> right_gate_split(const GroupWord& w, const ParabolicSubset& S)
{
    auto [gate_inv, rem_inv] = gate_split(w.inverse(), S);
    return {rem_inv.inverse(), gate_inv.inverse()};
}

std::size_t distance_to_parabolic(const GroupWord& w, const ParabolicSubset& S)
{
    return gate_split(w, S).second.length();
}

GroupWord delete_generator(const GroupWord& w, Gen killed)
{
    std::vector<Letter> kept;
    for (const Letter& l : w.letters())
        if (l.gen != killed) kept.push_back(l);
    return GroupWord::from_letters(w.graph(), std::move(kept));
}

GroupWord cyclic_reduce_free(const GroupWord& w)
{
    std::vector<Letter> ls = w.letters();
    while (ls.size() >= 2 && ls.front().gen == ls.back().gen &&
           ls.front().sign == -ls.back().sign) {
        ls.erase(ls.begin());
        ls.pop_back();
    }
    return GroupWord::from_letters(w.graph(), std::move(ls));
}

} // namespace raag
