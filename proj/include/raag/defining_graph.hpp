#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace raag {

using Gen = std::uint16_t;

/// A finite simplicial defining graph. Vertices are the group generators,
/// edges are the commutation relations. Loading rejects non-simple graphs,
/// triangles, squares and single-point components.
class DefiningGraph {
public:
    static std::shared_ptr<const DefiningGraph>
    make(std::vector<std::string> vertices,
         std::vector<std::pair<std::string, std::string>> edges);

    /// Parses {"vertices":[...], "edges":[["a","b"],...]}.
    static std::shared_ptr<const DefiningGraph> from_json(const std::string& json_text);
    static std::shared_ptr<const DefiningGraph> from_json_file(const std::string& path);

    std::size_t vertex_count() const { return names_.size(); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& name(Gen g) const { return names_.at(g); }
    Gen index_of(const std::string& name) const; // throws ValidationError on unknown name
    bool has_vertex(const std::string& name) const;

    bool adjacent(Gen a, Gen b) const { return adj_[a][b]; }
    const std::vector<Gen>& link(Gen a) const { return links_[a]; }
    std::vector<Gen> star(Gen a) const;
    const std::vector<std::pair<Gen, Gen>>& edges() const { return edges_; }

    bool connected() const;

    /// Extra requirements for the coordinate-system experiments:
    /// connected with at least three vertices.
    /// Returns an empty string when fine, otherwise the reason.
    std::string experiment_defect() const;

    std::string to_json() const;

private:
    DefiningGraph() = default;

    std::vector<std::string> names_;
    std::vector<std::vector<bool>> adj_;
    std::vector<std::vector<Gen>> links_;
    std::vector<std::pair<Gen, Gen>> edges_;
};

using GraphPtr = std::shared_ptr<const DefiningGraph>;

/// Input that violates a contract (bad graph, unknown generator, malformed
/// word). CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration cap was hit. CLI maps this to exit code 3.
class ResourceCapError : public std::runtime_error {
public:
    explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace raag
