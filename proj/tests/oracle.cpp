#include "oracle.hpp"

#include <algorithm>
#include <deque>

namespace raag::oracle {

namespace {

bool raw_less(const RawWord& a, const RawWord& b)
{
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) continue;
        return letter_less(a[i], b[i]);
    }
    return false;
}

} // namespace

std::set<RawWord> closure(const DefiningGraph& g, const RawWord& w)
{
    std::set<RawWord> seen{w};
    std::deque<RawWord> queue{w};
    while (!queue.empty()) {
        RawWord cur = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            const Letter& x = cur[i];
            const Letter& y = cur[i + 1];
            if (x.gen == y.gen && x.sign == -y.sign) {
                RawWord shorter = cur;
                shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(i),
                              shorter.begin() + static_cast<std::ptrdiff_t>(i) + 2);
                if (seen.insert(shorter).second) queue.push_back(shorter);
            }
            if (x.gen != y.gen && g.adjacent(x.gen, y.gen)) {
                RawWord swapped = cur;
                std::swap(swapped[i], swapped[i + 1]);
                if (seen.insert(swapped).second) queue.push_back(swapped);
            }
        }
    }
    return seen;
}

RawWord oracle_normal_form(const DefiningGraph& g, const RawWord& w)
{
    const auto all = closure(g, w);
    RawWord best = *all.begin();
    for (const RawWord& cand : all)
        if (raw_less(cand, best)) best = cand;
    return best;
}

bool oracle_equals(const DefiningGraph& g, const RawWord& u, const RawWord& v)
{
    return oracle_normal_form(g, u) == oracle_normal_form(g, v);
}

std::vector<RawWord> all_raw_words(const DefiningGraph& g, std::size_t length)
{
    std::vector<Letter> alphabet;
    for (Gen a = 0; a < g.vertex_count(); ++a) {
        alphabet.push_back({a, 1});
        alphabet.push_back({a, -1});
    }
    std::vector<RawWord> out{{}};
    std::vector<RawWord> layer{{}};
    for (std::size_t n = 1; n <= length; ++n) {
        std::vector<RawWord> next;
        for (const RawWord& w : layer)
            for (const Letter& l : alphabet) {
                RawWord ext = w;
                ext.push_back(l);
                next.push_back(std::move(ext));
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

std::set<RawWord> oracle_ball(const DefiningGraph& g, std::size_t radius)
{
    std::set<RawWord> forms;
    for (const RawWord& w : all_raw_words(g, radius)) forms.insert(oracle_normal_form(g, w));
    return forms;
}

} // namespace raag::oracle
