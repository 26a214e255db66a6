#pragma once

#include "raag/rational.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace raag {

/// Plain undirected graph on indices 0..n-1; adjacency lists sorted.
struct SimpleGraph {
    std::vector<std::vector<std::uint32_t>> neighbors;

    std::size_t size() const { return neighbors.size(); }
    void add_edge(std::uint32_t a, std::uint32_t b);
    void finish(); // sort + dedup adjacency lists
};

inline constexpr int kUnreachable = -1;

/// BFS distances from one source; kUnreachable where not connected.
std::vector<int> bfs_distances(const SimpleGraph& g, std::uint32_t source);

/// Full distance matrix, one BFS per source.
std::vector<std::vector<int>> all_pairs_distances_serial(const SimpleGraph& g);
/// Same matrix, sources distributed over OpenMP threads.
std::vector<std::vector<int>> all_pairs_distances(const SimpleGraph& g);

struct FourPointResult {
    Rat delta{0};                    // max Gromov-product defect over scanned quadruples
    std::array<std::uint32_t, 4> witness{0, 0, 0, 0};
    std::size_t quadruples_scanned = 0;
    bool exhaustive = false;
};

/// Four-point hyperbolicity defect of a distance matrix: for a quadruple,
/// half the gap between the two largest of the three pairings. Scans all
/// quadruples when their number is at most `exhaustive_cap`, a deterministic
/// sample of `sample_size` otherwise.
FourPointResult four_point_delta_serial(const std::vector<std::vector<int>>& dist,
                                        std::size_t exhaustive_cap = 2000000,
                                        std::size_t sample_size = 200000,
                                        std::uint64_t seed = 1);
FourPointResult four_point_delta(const std::vector<std::vector<int>>& dist,
                                 std::size_t exhaustive_cap = 2000000,
                                 std::size_t sample_size = 200000,
                                 std::uint64_t seed = 1);

/// Connected components as index lists (sorted).
std::vector<std::vector<std::uint32_t>> connected_components(const SimpleGraph& g);

} // namespace raag
