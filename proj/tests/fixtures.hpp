#pragma once

#include "raag/ball.hpp"
#include "raag/charts.hpp"

namespace raag::fixtures {

/// Path a -- b -- c; the standard experiment fixture.
inline GraphPtr path3()
{
    static GraphPtr g = DefiningGraph::make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    return g;
}

/// Path a -- b -- c -- d; used for gate oracles off the degenerate case.
inline GraphPtr path4()
{
    static GraphPtr g =
        DefiningGraph::make({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
    return g;
}

inline GroupWord w3(const char* text) { return GroupWord::parse(path3(), text); }
inline GroupWord w4(const char* text) { return GroupWord::parse(path4(), text); }

inline const Ball& path3_ball(std::size_t radius)
{
    static std::map<std::size_t, Ball> cache;
    auto it = cache.find(radius);
    if (it == cache.end()) it = cache.emplace(radius, ball_enumerate(path3(), radius)).first;
    return it->second;
}

} // namespace raag::fixtures
