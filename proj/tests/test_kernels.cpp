#include "raag/kernels.hpp"
#include "raag/util.hpp"

#include <doctest.h>

using namespace raag;

namespace {

SimpleGraph random_graph(std::size_t n, std::size_t edges, std::uint64_t seed)
{
    SimpleGraph g;
    g.neighbors.resize(n);
    Sampler rng(seed);
    for (std::size_t i = 0; i + 1 < n; ++i)
        g.add_edge(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i + 1)); // connected
    for (std::size_t e = 0; e < edges; ++e) {
        const auto a = static_cast<std::uint32_t>(rng.below(n));
        const auto b = static_cast<std::uint32_t>(rng.below(n));
        if (a != b) g.add_edge(a, b);
    }
    g.neighbors.resize(n);
    g.finish();
    return g;
}

} // namespace

TEST_CASE("serial and parallel all-pairs distances agree")
{
    const auto g = random_graph(60, 120, 5);
    CHECK(all_pairs_distances_serial(g) == all_pairs_distances(g));
}

TEST_CASE("serial and parallel four-point scans agree, exhaustive and sampled")
{
    const auto g = random_graph(24, 40, 9);
    const auto dist = all_pairs_distances(g);
    const auto s = four_point_delta_serial(dist);
    const auto p = four_point_delta(dist);
    CHECK(s.delta == p.delta);
    CHECK(s.witness == p.witness);
    CHECK(s.quadruples_scanned == p.quadruples_scanned);
    CHECK(s.exhaustive);

    const auto g2 = random_graph(80, 200, 11);
    const auto dist2 = all_pairs_distances(g2);
    const auto s2 = four_point_delta_serial(dist2, 1000, 5000, 3);
    const auto p2 = four_point_delta(dist2, 1000, 5000, 3);
    CHECK_FALSE(s2.exhaustive);
    CHECK(s2.delta == p2.delta);
    CHECK(s2.witness == p2.witness);
}

TEST_CASE("distance matrix marks unreachable pairs")
{
    SimpleGraph g;
    g.neighbors.resize(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    g.finish();
    const auto dist = all_pairs_distances(g);
    CHECK(dist[0][1] == 1);
    CHECK(dist[0][2] == kUnreachable);
    CHECK(connected_components(g).size() == 2);
}
