#include "raag/artifacts.hpp"

#include <json.hpp>

#include <fstream>
#include <iostream>

namespace raag {

std::string RunMeta::digest() const
{
    std::string canon = "tool=" + std::string(kToolVersion) + ";sub=" + subcommand_ + ";";
    for (const auto& [k, v] : params_) canon += k + "=" + v + ";";
    return fnv1a_hex(canon);
}

std::string RunMeta::comment_header(const std::string& prefix) const
{
    std::string out;
    out += prefix + " tool=raagtool " + kToolVersion + "\n";
    out += prefix + " subcommand=" + subcommand_ + "\n";
    for (const auto& [k, v] : params_) out += prefix + " " + k + "=" + v + "\n";
    out += prefix + " config_digest=" + digest() + "\n";
    return out;
}

std::string RunMeta::json_meta() const
{
    nlohmann::ordered_json j;
    j["tool"] = std::string("raagtool ") + kToolVersion;
    j["subcommand"] = subcommand_;
    auto& p = j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : params_) p[k] = v;
    j["config_digest"] = digest();
    return j.dump();
}

std::string divergence_csv(const RunMeta& meta, const std::vector<DivergenceRow>& rows)
{
    std::string out = meta.comment_header();
    out += "l,k,lambda1,lambda2,phi1_of_triple,phi2_of_triple,x1,x2,divergence\n";
    auto triple = [](const std::array<Rat, 3>& t) {
        return rat_to_string(t[0]) + ";" + rat_to_string(t[1]) + ";" + rat_to_string(t[2]);
    };
    for (const auto& r : rows) {
        out += std::to_string(r.l) + "," + std::to_string(r.k) + "," + rat_to_string(r.lambda1) +
               "," + rat_to_string(r.lambda2) + "," + triple(r.phi1_of_triple) + "," +
               triple(r.phi2_of_triple) + "," + r.x1.to_string() + "," + r.x2.to_string() + "," +
               rat_to_string(r.divergence) + "\n";
    }
    return out;
}

void write_artifact(const std::string& path, const std::string& text)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write to '" + path + "'");
    out << text;
}

} // namespace raag
