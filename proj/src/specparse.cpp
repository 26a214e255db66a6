#include "raag/specparse.hpp"

#include <algorithm>

namespace raag {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    bool eat(const std::string& word)
    {
        if (s.compare(pos, word.size(), word) != 0) return false;
        pos += word.size();
        return true;
    }
    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    void expect(char c)
    {
        if (peek() != c)
            throw ValidationError("qm spec: expected '" + std::string(1, c) + "' at position " +
                                  std::to_string(pos) + " in '" + s + "'");
        ++pos;
    }
    std::string token(const std::string& stops)
    {
        std::size_t start = pos;
        while (pos < s.size() && stops.find(s[pos]) == std::string::npos) ++pos;
        if (pos == start) throw ValidationError("qm spec: empty token in '" + s + "'");
        return s.substr(start, pos - start);
    }
};

GroupWord word_from_dotted(const GraphPtr& graph, std::string text)
{
    std::replace(text.begin(), text.end(), '.', ' ');
    return GroupWord::parse(graph, text);
}

ParsedQm parse(const GraphPtr& graph, Cursor& cur,
               const std::optional<ParabolicSubset>& brooks_domain = std::nullopt);

ParsedQm parse(const GraphPtr& graph, Cursor& cur,
               const std::optional<ParabolicSubset>& brooks_domain)
{
    if (cur.eat("exp:")) {
        const std::string name = cur.token(":;)");
        const Gen v = graph->index_of(name);
        return {exponent_hom(graph, v), v};
    }
    if (cur.eat("brooks:")) {
        const std::string pair = cur.token(":;)");
        std::string first, second;
        if (auto comma = pair.find(','); comma != std::string::npos) {
            first = pair.substr(0, comma);
            second = pair.substr(comma + 1);
        } else if (pair.size() == 2) {
            first = pair.substr(0, 1);
            second = pair.substr(1, 1);
        } else {
            throw ValidationError("brooks pattern must be 'x,y' or two one-letter names");
        }
        const GroupWord pattern = GroupWord::parse(graph, first + " " + second);
        return {brooks_homogenized(pattern, brooks_domain), std::nullopt};
    }
    if (cur.eat("lam:")) {
        const Rat lambda = rat_parse(cur.token(":"));
        cur.expect(':');
        ParsedQm phi = parse(graph, cur);
        cur.expect(':');
        if (!phi.vertex)
            throw ValidationError("lam spec needs an exp:<vertex> part to name the vertex");
        // A counting psi inside lam lives on the whole link parabolic.
        ParsedQm psi = parse(graph, cur, ParabolicSubset::link_of(graph, *phi.vertex));
        return {phi_lambda(graph, phi.qm, psi.qm, lambda, *phi.vertex), phi.vertex};
    }
    if (cur.eat("avg(")) {
        ParsedQm inner = parse(graph, cur);
        ExtensionData ext;
        ext.coset_reps = {GroupWord::identity(graph)};
        ext.epsilon = {1};
        if (cur.eat(";reps=")) {
            ext.coset_reps.clear();
            while (true) {
                const char c = cur.peek();
                if (c == ',' || c == ';' || c == ')') {
                    ext.coset_reps.push_back(GroupWord::identity(graph));
                } else {
                    ext.coset_reps.push_back(word_from_dotted(graph, cur.token(",;)")));
                }
                if (cur.peek() != ',') break;
                cur.expect(',');
            }
            if (!cur.eat(";eps="))
                throw ValidationError("avg spec with reps needs ';eps=' signs");
            ext.epsilon.clear();
            while (true) {
                const std::string sign = cur.token(",)");
                if (sign == "1" || sign == "+1")
                    ext.epsilon.push_back(1);
                else if (sign == "-1")
                    ext.epsilon.push_back(-1);
                else
                    throw ValidationError("avg eps entries must be +1 or -1");
                if (cur.peek() != ',') break;
                cur.expect(',');
            }
        }
        cur.expect(')');
        return {average_m_G(inner.qm, ext), inner.vertex};
    }
    throw ValidationError("unknown qm spec at '" + cur.s.substr(cur.pos) + "'");
}

} // namespace

ParsedQm parse_qm_spec(const GraphPtr& graph, const std::string& text)
{
    Cursor cur{text};
    ParsedQm out = parse(graph, cur);
    if (cur.pos != text.size())
        throw ValidationError("trailing characters in qm spec: '" + text.substr(cur.pos) + "'");
    return out;
}

} // namespace raag
