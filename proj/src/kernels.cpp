#include "raag/kernels.hpp"

#include "raag/util.hpp"

#include <algorithm>
#include <queue>

namespace raag {

void SimpleGraph::add_edge(std::uint32_t a, std::uint32_t b)
{
    const std::size_t need = std::max(a, b) + 1;
    if (neighbors.size() < need) neighbors.resize(need);
    neighbors[a].push_back(b);
    neighbors[b].push_back(a);
}

void SimpleGraph::finish()
{
    for (auto& ns : neighbors) {
        std::sort(ns.begin(), ns.end());
        ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    }
}

std::vector<int> bfs_distances(const SimpleGraph& g, std::uint32_t source)
{
    std::vector<int> dist(g.size(), kUnreachable);
    std::queue<std::uint32_t> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        std::uint32_t v = q.front();
        q.pop();
        for (std::uint32_t w : g.neighbors[v])
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

std::vector<std::vector<int>> all_pairs_distances_serial(const SimpleGraph& g)
{
    std::vector<std::vector<int>> out(g.size());
    for (std::size_t s = 0; s < g.size(); ++s)
        out[s] = bfs_distances(g, static_cast<std::uint32_t>(s));
    return out;
}

std::vector<std::vector<int>> all_pairs_distances(const SimpleGraph& g)
{
    std::vector<std::vector<int>> out(g.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(g.size()); ++s)
        out[static_cast<std::size_t>(s)] = bfs_distances(g, static_cast<std::uint32_t>(s));
    return out;
}

namespace {

// Defect of one quadruple, doubled to stay integral: the gap between the two
// largest of the three pairings. Quadruples touching unreachable pairs are
// skipped.
long long quadruple_defect2(const std::vector<std::vector<int>>& d, std::uint32_t a,
                            std::uint32_t b, std::uint32_t c, std::uint32_t e)
{
    const int ab = d[a][b], cd = d[c][e], ac = d[a][c], bd = d[b][e], ad = d[a][e], bc = d[b][c];
    if (ab < 0 || cd < 0 || ac < 0 || bd < 0 || ad < 0 || bc < 0) return -1;
    long long s[3] = {static_cast<long long>(ab) + cd, static_cast<long long>(ac) + bd,
                      static_cast<long long>(ad) + bc};
    std::sort(s, s + 3);
    return s[2] - s[1];
}

std::size_t count_quadruples(std::size_t n)
{
    if (n < 4) return 0;
    return n * (n - 1) / 2 * (n - 2) / 3 * (n - 3) / 4;
}

FourPointResult scan(const std::vector<std::vector<int>>& dist, std::size_t exhaustive_cap,
                     std::size_t sample_size, std::uint64_t seed, bool parallel)
{
    const std::uint32_t n = static_cast<std::uint32_t>(dist.size());
    FourPointResult res;
    res.exhaustive = count_quadruples(n) <= exhaustive_cap;

    std::vector<std::array<std::uint32_t, 4>> sampled;
    if (!res.exhaustive) {
        Sampler rng(seed);
        sampled.reserve(sample_size);
        while (sampled.size() < sample_size) {
            std::array<std::uint32_t, 4> q;
            for (auto& x : q) x = static_cast<std::uint32_t>(rng.below(n));
            if (q[0] == q[1] || q[0] == q[2] || q[0] == q[3] || q[1] == q[2] || q[1] == q[3] ||
                q[2] == q[3])
                continue;
            sampled.push_back(q);
        }
    }

    long long best2 = 0;
    std::array<std::uint32_t, 4> witness{0, 0, 0, 0};
    std::size_t scanned = 0;

    if (res.exhaustive) {
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (std::ptrdiff_t ai = 0; ai < static_cast<std::ptrdiff_t>(n); ++ai) {
            const auto a = static_cast<std::uint32_t>(ai);
            long long local_best = 0;
            std::array<std::uint32_t, 4> local_wit{0, 0, 0, 0};
            std::size_t local_scanned = 0;
            for (std::uint32_t b = a + 1; b < n; ++b)
                for (std::uint32_t c = b + 1; c < n; ++c)
                    for (std::uint32_t e = c + 1; e < n; ++e) {
                        ++local_scanned;
                        const long long v = quadruple_defect2(dist, a, b, c, e);
                        if (v > local_best) {
                            local_best = v;
                            local_wit = {a, b, c, e};
                        }
                    }
#pragma omp critical
            {
                scanned += local_scanned;
                if (local_best > best2 ||
                    (local_best == best2 && local_best > 0 && local_wit < witness)) {
                    best2 = local_best;
                    witness = local_wit;
                }
            }
        }
    } else {
#pragma omp parallel if (parallel)
        {
            long long local_best = 0;
            std::array<std::uint32_t, 4> local_wit{0, 0, 0, 0};
            std::size_t local_scanned = 0;
#pragma omp for schedule(static)
            for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(sampled.size()); ++i) {
                const auto& q = sampled[static_cast<std::size_t>(i)];
                const long long v = quadruple_defect2(dist, q[0], q[1], q[2], q[3]);
                ++local_scanned;
                if (v > local_best || (v == local_best && v > 0 && q < local_wit)) {
                    local_best = v;
                    local_wit = q;
                }
            }
#pragma omp critical
            {
                scanned += local_scanned;
                if (local_best > best2 ||
                    (local_best == best2 && local_best > 0 && local_wit < witness)) {
                    best2 = local_best;
                    witness = local_wit;
                }
            }
        }
    }

    res.delta = Rat(best2, 2);
    res.witness = witness;
    res.quadruples_scanned = scanned;
    return res;
}

} // namespace

FourPointResult four_point_delta_serial(const std::vector<std::vector<int>>& dist,
                                        std::size_t exhaustive_cap, std::size_t sample_size,
                                        std::uint64_t seed)
{
    return scan(dist, exhaustive_cap, sample_size, seed, false);
}

FourPointResult four_point_delta(const std::vector<std::vector<int>>& dist,
                                 std::size_t exhaustive_cap, std::size_t sample_size,
                                 std::uint64_t seed)
{
    return scan(dist, exhaustive_cap, sample_size, seed, true);
}

std::vector<std::vector<std::uint32_t>> connected_components(const SimpleGraph& g)
{
    std::vector<std::vector<std::uint32_t>> comps;
    std::vector<bool> seen(g.size(), false);
    for (std::uint32_t s = 0; s < g.size(); ++s) {
        if (seen[s]) continue;
        std::vector<std::uint32_t> comp;
        std::vector<std::uint32_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            std::uint32_t v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (std::uint32_t w : g.neighbors[v])
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

} // namespace raag
