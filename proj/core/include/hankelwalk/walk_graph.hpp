#pragma once

#include "hankelwalk/caps.hpp"
#include "hankelwalk/dyck.hpp"
#include "hankelwalk/lgv.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hankelwalk {

/// Point (x_1, ..., x_k) of the product graph: 0 <= x_1 <= ... <= x_k, all of one parity.
class WalkVertex {
public:
    /// Throws Error(InvalidVertex) if the coordinates break the ordering or parity rule.
    explicit WalkVertex(std::vector<int> coords);
    static WalkVertex origin(std::size_t k) { return WalkVertex(std::vector<int>(k, 0)); }

    const std::vector<int>& coords() const noexcept { return coords_; }
    std::size_t k() const noexcept { return coords_.size(); }
    std::string to_string() const;

    friend auto operator<=>(const WalkVertex&, const WalkVertex&) = default;

private:
    std::vector<int> coords_;
};

bool is_walk_vertex(const std::vector<int>& coords) noexcept;

/// Vertices u with u - v in {-1, 1}^k, in lexicographic order.
std::vector<WalkVertex> neighbors(const WalkVertex& v);

/// Rational gauge of the product-graph edge weight: the step u -> v carries
/// prod over coordinates j (1-based) that move up of lambda_{v_j + 2j - 2};
/// coordinates moving down contribute 1. Along any closed walk this matches
/// the symmetric weight prod_j w_{max(u_j, v_j) + 2j - 2}.
Rational edge_weight_directed(const WalkVertex& u, const WalkVertex& v, const LevelWeights& weights);

/// The product graph over N^k with level weights, rooted at the origin. The
/// vertex set is never materialized.
struct ProductGraph {
    std::size_t k = 1;
    LevelWeights weights;
};

struct WeightedEdge {
    std::size_t a = 0;
    std::size_t b = 0;
    Rational weight;
};

/// Finite undirected graph with symmetric rational edge weights. The component
/// of the root is 2-colored on construction.
class ExplicitGraph {
public:
    /// Throws Error(InvalidArgument) on bad indices, self loops or repeated edges,
    /// Error(NotBipartite) if the root's component has an odd cycle.
    ExplicitGraph(std::vector<std::string> labels, std::vector<WeightedEdge> edges, std::size_t root);
    /// Unlabelled vertices 0..n-1.
    ExplicitGraph(std::size_t vertex_count, std::vector<WeightedEdge> edges, std::size_t root);

    std::size_t vertex_count() const noexcept { return labels_.size(); }
    std::size_t root() const noexcept { return root_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<WeightedEdge>& edges() const noexcept { return edges_; }
    const std::vector<std::pair<std::size_t, Rational>>& adjacent(std::size_t v) const { return adjacency_[v]; }

private:
    std::vector<std::string> labels_;
    std::vector<WeightedEdge> edges_;
    std::size_t root_;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> adjacency_;
};

using WalkGraph = std::variant<ProductGraph, ExplicitGraph>;

/// Weighted closed-walk totals from the root for every walk length 0..max_length
/// (odd lengths included). Requires max_length / 2 <= caps.walk_n.
std::vector<Rational> closed_walk_weights(const WalkGraph& g, std::size_t max_length, const Caps& caps = {});

/// Weighted sum over closed walks of length 2n from the root.
Rational closed_walk_sum(const WalkGraph& g, std::size_t n, const Caps& caps = {});

/// closed_walk_sum for n = 0..N as a moment prefix.
MomentPrefix closed_walk_sums(const WalkGraph& g, std::size_t N, const Caps& caps = {});

/// Walk on the product graph, v_0 = v_{2n} = origin.
struct ClosedWalk {
    std::vector<WalkVertex> vertices;

    friend bool operator==(const ClosedWalk&, const ClosedWalk&) = default;
};

/// v_i = (height_i(P_1), ..., height_i(P_k)).
ClosedWalk phi(const PathTuple& tuple);

/// Reads each coordinate back as a Dyck path. Throws Error(InvalidWalk) if a
/// step is not an edge or the walk does not start and end at the origin.
PathTuple phi_inverse(const ClosedWalk& walk);

/// Product of edge_weight_directed along the walk.
Rational walk_weight(const ClosedWalk& walk, const LevelWeights& weights);

/// Product-graph vertices within `radius` steps of the origin, as an explicit
/// graph with symmetric weights sqrt(prod_j lambda_{max(u_j, v_j) + 2j - 2}).
/// Throws Error(InvalidArgument) if some symmetric weight is irrational.
ExplicitGraph materialize(const ProductGraph& g, std::size_t radius);

}  // namespace hankelwalk
