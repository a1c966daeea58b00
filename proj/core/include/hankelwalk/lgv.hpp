#pragma once

#include "hankelwalk/caps.hpp"
#include "hankelwalk/dyck.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace hankelwalk {

/// k Dyck paths of equal length with P_j pointwise below or touching P_{j+1}.
class PathTuple {
public:
    /// Throws Error(InvalidTuple) on empty input, unequal lengths or a crossing.
    explicit PathTuple(std::vector<DyckPath> paths);

    const std::vector<DyckPath>& paths() const noexcept { return paths_; }
    std::size_t k() const noexcept { return paths_.size(); }
    std::size_t half_length() const noexcept { return paths_.front().half_length(); }
    /// Concatenated step words, used as the ordering key.
    std::string key() const;

    friend bool operator==(const PathTuple&, const PathTuple&) = default;

private:
    std::vector<DyckPath> paths_;
};

/// A Dyck path drawn from (start_x, 0).
struct ShiftedPath {
    int start_x = 0;
    DyckPath path;

    friend bool operator==(const ShiftedPath&, const ShiftedPath&) = default;
};

/// Lifted form of a PathTuple: path j (1-based) starts at (-2(j-1), 0), has
/// length 2n + 4(j-1), and no two paths share a lattice point.
struct ShiftedTuple {
    std::vector<ShiftedPath> paths;

    friend bool operator==(const ShiftedTuple&, const ShiftedTuple&) = default;
};

/// True if no lattice point is shared by two of the paths.
bool vertex_disjoint(const ShiftedTuple& tuple);

/// Every non-crossing k-tuple of Dyck paths of length 2n, ordered by key().
std::vector<PathTuple> enumerate_noncrossing(std::size_t n, std::size_t k, const Caps& caps = {});

/// Pads P_j with 2(j-1) forced up steps before and down steps after.
ShiftedTuple lift_tuple(const PathTuple& tuple);

/// Inverse of lift_tuple. Throws Error(MalformedPadding) if a path lacks its
/// forced steps or its middle dips below the padding height.
PathTuple drop_tuple(const ShiftedTuple& tuple);

/// b_n: sum over non-crossing tuples of prod_j path_weight(P_j, weights, 2j-2).
Rational noncrossing_sum(const LevelWeights& weights, std::size_t k, std::size_t n, const Caps& caps = {});

/// a0^k times the weighted count of non-intersecting lifted tuples, each path
/// weighted with the unshifted levels. Equals the k x k Hankel determinant of
/// the moments generated by `weights`.
Rational lgv_sum(const Rational& a0, const LevelWeights& weights, std::size_t k, std::size_t n,
                 const Caps& caps = {});

/// prod_{j=1..k} prod_{h=1..2(j-1)} lambda_h: the weight of the forced padding,
/// so lgv_sum(a0, w, k, n) = a0^k * padding_weight(w, k) * noncrossing_sum(w, k, n).
Rational padding_weight(const LevelWeights& weights, std::size_t k);

}  // namespace hankelwalk
