#include "hankelwalk/walk_graph.hpp"

#include "hankelwalk/error.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <optional>
#include <set>
#include <type_traits>

namespace hankelwalk {

namespace {

using Frontier = std::map<std::vector<int>, Rational>;

std::string coords_string(const std::vector<int>& c) {
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(c[i]);
    }
    return out + ")";
}

bool adjacent_coords(const std::vector<int>& u, const std::vector<int>& v) {
    if (u.size() != v.size()) return false;
    for (std::size_t j = 0; j < u.size(); ++j)
        if (u[j] - v[j] != 1 && v[j] - u[j] != 1) return false;
    return true;
}

// Neighbours of `v` in lexicographic order, without constructing WalkVertex objects.
std::vector<std::vector<int>> neighbor_coords(const std::vector<int>& v) {
    const std::size_t k = v.size();
    std::vector<std::vector<int>> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::vector<int> u(v);
        for (std::size_t j = 0; j < k; ++j) u[j] += (mask >> (k - 1 - j)) & 1 ? 1 : -1;
        if (is_walk_vertex(u)) out.push_back(std::move(u));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rational directed_weight(const std::vector<int>& u, const std::vector<int>& v, const LevelWeights& weights) {
    Rational product = 1;
    for (std::size_t j = 0; j < u.size(); ++j) {
        if (v[j] == u[j] + 1) product *= weights.at(static_cast<std::size_t>(v[j]) + 2 * j);
    }
    return product;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

std::vector<Rational> product_walks(const ProductGraph& g, std::size_t max_length) {
    if (g.k == 0) throw Error(ErrorKind::InvalidArgument, "product graph needs k >= 1");
    const std::vector<int> origin(g.k, 0);
    std::vector<Rational> out{1};
    Frontier frontier{{origin, Rational(1)}};
    for (std::size_t len = 1; len <= max_length; ++len) {
        // A vertex whose top coordinate exceeds the remaining steps cannot reach
        // the origin in time; the whole walk stays in that shrinking ball.
        const int remaining = static_cast<int>(max_length - len);
        Frontier next;
        for (const auto& [u, value] : frontier) {
            if (value == 0) continue;
            for (auto& v : neighbor_coords(u)) {
                if (v.back() > remaining) continue;
                next[v] += value * directed_weight(u, v, g.weights);
            }
        }
        frontier = std::move(next);
        auto it = frontier.find(origin);
        out.push_back(it == frontier.end() ? Rational(0) : it->second);
    }
    return out;
}

std::vector<Rational> explicit_walks(const ExplicitGraph& g, std::size_t max_length) {
    std::vector<Rational> out{1};
    std::vector<Rational> current(g.vertex_count());
    current[g.root()] = 1;
    for (std::size_t len = 1; len <= max_length; ++len) {
        std::vector<Rational> next(g.vertex_count());
        for (std::size_t u = 0; u < g.vertex_count(); ++u) {
            if (current[u] == 0) continue;
            for (const auto& [v, w] : g.adjacent(u)) next[v] += w * current[u];
        }
        current = std::move(next);
        out.push_back(current[g.root()]);
    }
    return out;
}

}  // namespace

bool is_walk_vertex(const std::vector<int>& coords) noexcept {
    if (coords.empty()) return false;
    for (std::size_t j = 0; j < coords.size(); ++j) {
        if (coords[j] < 0) return false;
        if (j > 0 && (coords[j] < coords[j - 1] || (coords[j] - coords[0]) % 2 != 0)) return false;
    }
    return true;
}

WalkVertex::WalkVertex(std::vector<int> coords) : coords_(std::move(coords)) {
    if (!is_walk_vertex(coords_)) {
        throw Error(ErrorKind::InvalidVertex, coords_string(coords_) + " is not an ordered, equal-parity point of N^k");
    }
}

std::string WalkVertex::to_string() const { return coords_string(coords_); }

std::vector<WalkVertex> neighbors(const WalkVertex& v) {
    std::vector<WalkVertex> out;
    for (auto& c : neighbor_coords(v.coords())) out.emplace_back(std::move(c));
    return out;
}

Rational edge_weight_directed(const WalkVertex& u, const WalkVertex& v, const LevelWeights& weights) {
    if (!adjacent_coords(u.coords(), v.coords())) {
        throw Error(ErrorKind::NotAdjacent, u.to_string() + " and " + v.to_string() + " are not adjacent");
    }
    return directed_weight(u.coords(), v.coords(), weights);
}

ExplicitGraph::ExplicitGraph(std::size_t vertex_count, std::vector<WeightedEdge> edges, std::size_t root)
    : ExplicitGraph(
          [vertex_count] {
              std::vector<std::string> labels;
              labels.reserve(vertex_count);
              for (std::size_t i = 0; i < vertex_count; ++i) labels.push_back(std::to_string(i));
              return labels;
          }(),
          std::move(edges), root) {}

ExplicitGraph::ExplicitGraph(std::vector<std::string> labels, std::vector<WeightedEdge> edges, std::size_t root)
    : labels_(std::move(labels)), edges_(std::move(edges)), root_(root), adjacency_(labels_.size()) {
    const std::size_t n = labels_.size();
    if (root_ >= n) throw Error(ErrorKind::InvalidArgument, "root index out of range");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : edges_) {
        if (e.a >= n || e.b >= n) throw Error(ErrorKind::InvalidArgument, "edge endpoint out of range");
        if (e.a == e.b) throw Error(ErrorKind::NotBipartite, "self loop at vertex " + labels_[e.a]);
        if (!seen.emplace(std::min(e.a, e.b), std::max(e.a, e.b)).second) {
            throw Error(ErrorKind::InvalidArgument, "repeated edge " + labels_[e.a] + "-" + labels_[e.b]);
        }
        adjacency_[e.a].emplace_back(e.b, e.weight);
        adjacency_[e.b].emplace_back(e.a, e.weight);
    }
    for (auto& adj : adjacency_) {
        std::sort(adj.begin(), adj.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    }

    std::vector<int> color(n, -1);
    std::queue<std::size_t> pending;
    color[root_] = 0;
    pending.push(root_);
    while (!pending.empty()) {
        const auto u = pending.front();
        pending.pop();
        for (const auto& [v, w] : adjacency_[u]) {
            if (color[v] == -1) {
                color[v] = 1 - color[u];
                pending.push(v);
            } else if (color[v] == color[u]) {
                throw Error(ErrorKind::NotBipartite,
                            "odd cycle through edge " + labels_[u] + "-" + labels_[v]);
            }
        }
    }
}

std::vector<Rational> closed_walk_weights(const WalkGraph& g, std::size_t max_length, const Caps& caps) {
    if ((max_length + 1) / 2 > caps.walk_n) {
        throw Error(ErrorKind::CapExceeded, "walk length " + std::to_string(max_length) + " exceeds cap 2*" +
                                                std::to_string(caps.walk_n));
    }
    return std::visit(
        [max_length](const auto& graph) {
            using G = std::decay_t<decltype(graph)>;
            if constexpr (std::is_same_v<G, ProductGraph>) {
                return product_walks(graph, max_length);
            } else {
                return explicit_walks(graph, max_length);
            }
        },
        g);
}

Rational closed_walk_sum(const WalkGraph& g, std::size_t n, const Caps& caps) {
    return closed_walk_weights(g, 2 * n, caps).back();
}

MomentPrefix closed_walk_sums(const WalkGraph& g, std::size_t N, const Caps& caps) {
    const auto all = closed_walk_weights(g, 2 * N, caps);
    std::vector<Rational> even;
    even.reserve(N + 1);
    for (std::size_t i = 0; i < all.size(); i += 2) even.push_back(all[i]);
    return MomentPrefix(std::move(even));
}

ClosedWalk phi(const PathTuple& tuple) {
    std::vector<std::vector<int>> heights;
    heights.reserve(tuple.k());
    for (const auto& p : tuple.paths()) heights.push_back(p.heights());
    ClosedWalk walk;
    walk.vertices.reserve(heights.front().size());
    for (std::size_t i = 0; i < heights.front().size(); ++i) {
        std::vector<int> coords;
        coords.reserve(tuple.k());
        for (const auto& h : heights) coords.push_back(h[i]);
        walk.vertices.emplace_back(std::move(coords));
    }
    return walk;
}

PathTuple phi_inverse(const ClosedWalk& walk) {
    if (walk.vertices.empty()) throw Error(ErrorKind::InvalidWalk, "walk has no vertices");
    const std::size_t k = walk.vertices.front().k();
    const auto origin = WalkVertex::origin(k);
    if (walk.vertices.front() != origin || walk.vertices.back() != origin) {
        throw Error(ErrorKind::InvalidWalk, "walk must start and end at the origin");
    }
    std::vector<std::vector<Step>> steps(k);
    for (std::size_t i = 1; i < walk.vertices.size(); ++i) {
        const auto& u = walk.vertices[i - 1].coords();
        const auto& v = walk.vertices[i].coords();
        if (!adjacent_coords(u, v)) {
            throw Error(ErrorKind::InvalidWalk, "step " + std::to_string(i) + " from " + coords_string(u) + " to " +
                                                    coords_string(v) + " is not an edge");
        }
        for (std::size_t j = 0; j < k; ++j) steps[j].push_back(v[j] > u[j] ? Step::Up : Step::Down);
    }
    std::vector<DyckPath> paths;
    paths.reserve(k);
    for (auto& s : steps) paths.emplace_back(std::move(s));
    return PathTuple(std::move(paths));
}

Rational walk_weight(const ClosedWalk& walk, const LevelWeights& weights) {
    Rational product = 1;
    for (std::size_t i = 1; i < walk.vertices.size(); ++i)
        product *= edge_weight_directed(walk.vertices[i - 1], walk.vertices[i], weights);
    return product;
}

ExplicitGraph materialize(const ProductGraph& g, std::size_t radius) {
    const std::vector<int> origin(g.k, 0);
    std::map<std::vector<int>, std::size_t> index{{origin, 0}};
    std::vector<std::vector<int>> order{origin};
    std::vector<std::size_t> distance{0};
    for (std::size_t head = 0; head < order.size(); ++head) {
        if (distance[head] == radius) continue;
        for (auto& v : neighbor_coords(order[head])) {
            if (index.count(v)) continue;
            index.emplace(v, order.size());
            order.push_back(v);
            distance.push_back(distance[head] + 1);
        }
    }

    std::vector<WeightedEdge> edges;
    for (std::size_t a = 0; a < order.size(); ++a) {
        for (const auto& v : neighbor_coords(order[a])) {
            auto it = index.find(v);
            if (it == index.end() || it->second <= a) continue;
            Rational squared = 1;
            for (std::size_t j = 0; j < g.k; ++j) {
                squared *= g.weights.at(static_cast<std::size_t>(std::max(order[a][j], v[j])) + 2 * j);
            }
            auto root = exact_sqrt(squared);
            if (!root) {
                throw Error(ErrorKind::InvalidArgument, "edge " + coords_string(order[a]) + "-" + coords_string(v) +
                                                            " has irrational symmetric weight sqrt(" +
                                                            to_string(squared) + ")");
            }
            edges.push_back({a, it->second, *root});
        }
    }
    std::vector<std::string> labels;
    labels.reserve(order.size());
    for (const auto& c : order) labels.push_back(coords_string(c));
    return ExplicitGraph(std::move(labels), std::move(edges), 0);
}

}  // namespace hankelwalk
