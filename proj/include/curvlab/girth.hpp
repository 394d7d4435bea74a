#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "curvlab/graph.hpp"

namespace curvlab {

// Length of a shortest cycle, or infinite when there is none.
class GirthValue {
public:
    static GirthValue infinite() { return GirthValue(); }
    // Throws std::invalid_argument for lengths below 3.
    static GirthValue finite(std::size_t length);

    bool is_infinite() const noexcept { return !length_; }
    // Throws std::bad_optional_access when infinite.
    std::size_t length() const { return length_.value(); }
    bool at_least(std::size_t bound) const noexcept { return !length_ || *length_ >= bound; }

    // "inf" or the decimal length.
    std::string to_string() const;

    friend bool operator==(const GirthValue&, const GirthValue&) = default;
    // Infinite compares greater than every finite length.
    friend bool operator<(const GirthValue& a, const GirthValue& b) noexcept {
        if (!a.length_) return false;
        if (!b.length_) return true;
        return *a.length_ < *b.length_;
    }

private:
    GirthValue() = default;
    explicit GirthValue(std::size_t length) : length_(length) {}

    std::optional<std::size_t> length_;
};

// Shortest cycle through x, from a BFS that labels every vertex with the
// first-hop neighbor of x on its tree path.
GirthValue vertex_girth(const Graph& g, Vertex x);

GirthValue graph_girth(const Graph& g);

bool has_girth_at_least(const Graph& g, std::size_t lower);

}  // namespace curvlab
