#include "hankelwalk/lanczos.hpp"

#include "hankelwalk/error.hpp"

#include <map>
#include <type_traits>
#include <utility>

namespace hankelwalk {

namespace {

template <class Key>
using SparseVector = std::map<Key, Rational>;

template <class Key>
Rational dot(const SparseVector<Key>& x, const SparseVector<Key>& y) {
    Rational total = 0;
    for (const auto& [key, value] : x) {
        auto it = y.find(key);
        if (it != y.end()) total += value * it->second;
    }
    return total;
}

template <class Key>
void axpy(SparseVector<Key>& y, const Rational& alpha, const SparseVector<Key>& x) {
    for (const auto& [key, value] : x) y[key] += alpha * value;
}

template <class Key>
void prune(SparseVector<Key>& x) {
    std::erase_if(x, [](const auto& entry) { return entry.second == 0; });
}

template <class Key, class ApplyRight, class ApplyLeft>
TridiagonalWeights run_lanczos(const Key& root, std::size_t depth, bool probe, ApplyRight apply_right,
                               ApplyLeft apply_left) {
    TridiagonalWeights out;
    SparseVector<Key> p_prev, l_prev;
    SparseVector<Key> p{{root, Rational(1)}};
    SparseVector<Key> l = p;
    Rational norm = 1;
    Rational beta_sq = 0;

    const std::size_t steps = probe ? depth + 1 : depth;
    for (std::size_t m = 1; m <= steps; ++m) {
        auto p_next = apply_right(p);
        auto l_next = apply_left(l);
        if (beta_sq != 0) {
            axpy(p_next, -beta_sq, p_prev);
            axpy(l_next, -beta_sq, l_prev);
        }
        prune(p_next);
        prune(l_next);
        const Rational next_norm = dot(l_next, p_next);
        if (next_norm == 0) {
            out.terminated = true;
            break;
        }
        if (m == depth + 1) break;
        beta_sq = next_norm / norm;
        out.beta_sq.push_back(beta_sq);
        norm = next_norm;
        p_prev = std::exchange(p, std::move(p_next));
        l_prev = std::exchange(l, std::move(l_next));
    }
    return out;
}

}  // namespace

TridiagonalWeights lanczos_path_weights(const WalkGraph& g, std::size_t depth, const Caps& caps) {
    if (depth == 0) throw Error(ErrorKind::InvalidArgument, "Lanczos depth must be positive");
    if (depth > caps.lanczos_depth) {
        throw Error(ErrorKind::CapExceeded, "Lanczos depth " + std::to_string(depth) + " exceeds cap " +
                                                std::to_string(caps.lanczos_depth));
    }

    if (const auto* explicit_graph = std::get_if<ExplicitGraph>(&g)) {
        const auto& graph = *explicit_graph;
        auto apply = [&graph](const SparseVector<std::size_t>& x) {
            SparseVector<std::size_t> y;
            for (const auto& [u, value] : x)
                for (const auto& [v, w] : graph.adjacent(u)) y[v] += w * value;
            return y;
        };
        return run_lanczos<std::size_t>(graph.root(), depth, true, apply, apply);
    }

    const auto& product = std::get<ProductGraph>(g);
    using Key = WalkVertex;
    // (A p)(u) = sum_v weight(u -> v) p(v)
    auto apply_right = [&product](const SparseVector<Key>& x) {
        SparseVector<Key> y;
        for (const auto& [v, value] : x)
            for (const auto& u : neighbors(v)) y[u] += edge_weight_directed(u, v, product.weights) * value;
        return y;
    };
    // (A^T l)(v) = sum_u weight(u -> v) l(u)
    auto apply_left = [&product](const SparseVector<Key>& x) {
        SparseVector<Key> y;
        for (const auto& [u, value] : x)
            for (const auto& v : neighbors(u)) y[v] += edge_weight_directed(u, v, product.weights) * value;
        return y;
    };
    // The breakdown probe reaches one level above the last coefficient.
    const bool probe = product.weights.covers(depth + 2 * product.k - 1);
    return run_lanczos<Key>(WalkVertex::origin(product.k), depth, probe, apply_right, apply_left);
}

}  // namespace hankelwalk
