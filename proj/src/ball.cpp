#include "raag/ball.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <unordered_set>

namespace raag {

namespace {

std::vector<GroupWord> signed_generators(const GraphPtr& g)
{
    std::vector<GroupWord> out;
    for (Gen i = 0; i < g->vertex_count(); ++i) {
        out.push_back(GroupWord::from_letters(g, {{i, 1}}));
        out.push_back(GroupWord::from_letters(g, {{i, -1}}));
    }
    return out;
}

Ball assemble(GraphPtr graph, std::size_t radius,
              std::vector<std::vector<GroupWord>> spheres)
{
    for (auto& s : spheres) std::sort(s.begin(), s.end());
    return Ball{std::move(graph), radius, std::move(spheres)};
}

} // namespace

Ball ball_enumerate_serial(GraphPtr graph, std::size_t radius, std::size_t cap)
{
    const auto gens = signed_generators(graph);
    std::unordered_set<GroupWord, GroupWordHash> seen;
    std::vector<std::vector<GroupWord>> spheres(radius + 1);
    spheres[0].push_back(GroupWord::identity(graph));
    seen.insert(spheres[0][0]);

    for (std::size_t r = 1; r <= radius; ++r) {
        for (const GroupWord& w : spheres[r - 1]) {
            for (const GroupWord& l : gens) {
                GroupWord next = w.times(l);
                if (next.length() != r) continue; // shortened: already seen at r-2
                if (seen.insert(next).second) {
                    spheres[r].push_back(std::move(next));
                    if (seen.size() > cap)
                        throw ResourceCapError("ball enumeration exceeded cap of " +
                                               std::to_string(cap) + " elements");
                }
            }
        }
    }
    return assemble(std::move(graph), radius, std::move(spheres));
}

Ball ball_enumerate(GraphPtr graph, std::size_t radius, std::size_t cap)
{
    const auto gens = signed_generators(graph);
    std::unordered_set<GroupWord, GroupWordHash> seen;
    std::vector<std::vector<GroupWord>> spheres(radius + 1);
    spheres[0].push_back(GroupWord::identity(graph));
    seen.insert(spheres[0][0]);

    std::size_t total = 1;
    for (std::size_t r = 1; r <= radius; ++r) {
        const auto& frontier = spheres[r - 1];
        // Candidates are produced in parallel, then merged serially so the
        // ball is identical to the serial enumeration.
        std::vector<std::vector<GroupWord>> chunks;
#ifdef _OPENMP
#pragma omp parallel
        {
#pragma omp single
            chunks.resize(static_cast<std::size_t>(omp_get_num_threads()));
            auto& mine = chunks[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
            for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(frontier.size()); ++i) {
                for (const GroupWord& l : gens) {
                    GroupWord next = frontier[static_cast<std::size_t>(i)].times(l);
                    if (next.length() == r) mine.push_back(std::move(next));
                }
            }
        }
#else
        chunks.resize(1);
        for (const GroupWord& w : frontier)
            for (const GroupWord& l : gens) {
                GroupWord next = w.times(l);
                if (next.length() == r) chunks[0].push_back(std::move(next));
            }
#endif
        for (auto& chunk : chunks)
            for (GroupWord& next : chunk)
                if (seen.insert(next).second) {
                    spheres[r].push_back(std::move(next));
                    if (++total > cap)
                        throw ResourceCapError("ball enumeration exceeded cap of " +
                                               std::to_string(cap) + " elements");
                }
    }
    return assemble(std::move(graph), radius, std::move(spheres));
}

} // namespace raag
