#pragma once

// Brute-force oracles, independent of the library's normalization path.
// Words are raw letter vectors; the closure explores swaps of adjacent
// commuting letters and deletions of adjacent inverse pairs, which connects
// every representative of length at most the input's.

#include "raag/word.hpp"

#include <set>
#include <vector>

namespace raag::oracle {

using RawWord = std::vector<Letter>;

/// All words reachable from `w` by commutation swaps and free cancellations.
std::set<RawWord> closure(const DefiningGraph& g, const RawWord& w);

/// Shortlex-least element of the closure: the oracle normal form.
RawWord oracle_normal_form(const DefiningGraph& g, const RawWord& w);

bool oracle_equals(const DefiningGraph& g, const RawWord& u, const RawWord& v);

/// All group elements of word length <= radius, as oracle normal forms,
/// found by exhaustive enumeration of raw words and closure reduction.
std::set<RawWord> oracle_ball(const DefiningGraph& g, std::size_t radius);

/// Raw words of exactly / at most the given length, in lexicographic order.
std::vector<RawWord> all_raw_words(const DefiningGraph& g, std::size_t length);

} // namespace raag::oracle
