// Timing comparison of the serial reference kernels against their
// OpenMP-parallel counterparts, checking that both produce the same result.

#include "raag/ball.hpp"
#include "raag/blowup.hpp"

#include <chrono>
#include <cstdio>
#include <string>

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool equal)
{
    std::printf("%-28s serial %9.1f ms   parallel %9.1f ms   speedup %5.2fx   %s\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms, equal ? "match" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv)
{
    const std::size_t ball_radius = argc > 1 ? std::stoul(argv[1]) : 7;
    auto graph = raag::DefiningGraph::make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});

    {
        auto t0 = Clock::now();
        auto serial = raag::ball_enumerate_serial(graph, ball_radius);
        const double ts = ms_since(t0);
        t0 = Clock::now();
        auto parallel = raag::ball_enumerate(graph, ball_radius);
        const double tp = ms_since(t0);
        bool equal = serial.size() == parallel.size();
        for (std::size_t r = 0; equal && r <= ball_radius; ++r)
            equal = serial.spheres[r] == parallel.spheres[r];
        report(("ball radius " + std::to_string(ball_radius)).c_str(), ts, tp, equal);
    }

    auto ext = raag::extension_ball(
        raag::canonical_vertex(0, raag::GroupWord::identity(graph)), 4);
    std::printf("extension ball: %zu vertices\n", ext.vertices.size());

    {
        auto t0 = Clock::now();
        auto ds = raag::all_pairs_distances_serial(ext.adjacency);
        const double ts = ms_since(t0);
        t0 = Clock::now();
        auto dp = raag::all_pairs_distances(ext.adjacency);
        const double tp = ms_since(t0);
        report("all-pairs BFS", ts, tp, ds == dp);

        t0 = Clock::now();
        auto fs = raag::four_point_delta_serial(ds);
        const double ts2 = ms_since(t0);
        t0 = Clock::now();
        auto fp = raag::four_point_delta(dp);
        const double tp2 = ms_since(t0);
        report("four-point delta scan", ts2, tp2,
               fs.delta == fp.delta && fs.witness == fp.witness &&
                   fs.quadruples_scanned == fp.quadruples_scanned);
        std::printf("  delta = %s over %zu quadruples\n",
                    raag::rat_to_string(fs.delta).c_str(), fs.quadruples_scanned);
    }
    return 0;
}
