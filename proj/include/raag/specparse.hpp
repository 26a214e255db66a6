#pragma once

#include "raag/quasimorphism.hpp"

#include <optional>
#include <string>

namespace raag {

/// A parsed chart spec: the quasimorphism plus, when the spec names one,
/// the vertex whose quasiline it charts (exp:<v> or lam:..:exp:<v>:..).
struct ParsedQm {
    Quasimorphism qm;
    std::optional<Gen> vertex;
};

/// Grammar:
///   spec  := "exp:" name
///          | "brooks:" pair          (pair = "x,y" or two one-letter names)
///          | "lam:" rational ":" spec ":" spec
///          | "avg(" spec [";reps=" words ";eps=" signs] ")"
/// Words in avg(...) separate letters with '.', e.g. "c.b^-1"; the empty
/// word is the identity.
ParsedQm parse_qm_spec(const GraphPtr& graph, const std::string& text);

} // namespace raag
