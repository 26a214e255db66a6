#pragma once

#include "raag/word.hpp"

#include <cstddef>
#include <vector>

namespace raag {

/// All canonical forms of word length <= radius, grouped by length.
/// Spheres are sorted shortlex, so the layout is deterministic.
struct Ball {
    GraphPtr graph;
    std::size_t radius = 0;
    std::vector<std::vector<GroupWord>> spheres; // spheres[r] = elements of length r

    std::size_t size() const
    {
        std::size_t n = 0;
        for (const auto& s : spheres) n += s.size();
        return n;
    }

    std::vector<GroupWord> flatten() const
    {
        std::vector<GroupWord> out;
        out.reserve(size());
        for (const auto& s : spheres) out.insert(out.end(), s.begin(), s.end());
        return out;
    }
};

inline constexpr std::size_t kDefaultBallCap = 1000000;

/// Reference breadth-first enumeration, one frontier element at a time.
Ball ball_enumerate_serial(GraphPtr graph, std::size_t radius,
                           std::size_t cap = kDefaultBallCap);

/// Same result, frontier expansion parallelised over OpenMP threads.
/// Throws ResourceCapError when cap elements would be exceeded.
Ball ball_enumerate(GraphPtr graph, std::size_t radius, std::size_t cap = kDefaultBallCap);

} // namespace raag
