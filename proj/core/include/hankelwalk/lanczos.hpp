#pragma once

#include "hankelwalk/caps.hpp"
#include "hankelwalk/dyck.hpp"
#include "hankelwalk/walk_graph.hpp"

#include <cstddef>
#include <vector>

namespace hankelwalk {

/// Squared off-diagonal entries beta_1^2, beta_2^2, ... of a zero-diagonal
/// symmetric tridiagonal matrix T. When `terminated`, the Krylov sequence of
/// the root broke down after beta_sq.size() steps and T reproduces every
/// closed-walk total of its source graph.
struct TridiagonalWeights {
    std::vector<Rational> beta_sq;
    bool terminated = false;

    /// The nearest-neighbour path graph weighted by beta_sq.
    LevelWeights as_level_weights() const { return {beta_sq, terminated}; }

    friend bool operator==(const TridiagonalWeights&, const TridiagonalWeights&) = default;
};

/// Three-term Lanczos recurrence from the root indicator, kept unnormalized so
/// only squared norms appear:
///
///   p_{m+1} = A p_m - beta_m^2 p_{m-1},   beta_{m+1}^2 = <p_{m+1}, p_{m+1}> / <p_m, p_m>.
///
/// Bipartiteness makes every diagonal coefficient vanish. Product graphs use the
/// directed gauge weights, so the recurrence runs two-sided (left vectors
/// propagate through A^T) and the squared norms become <l_m, p_m>; the values
/// are the same as for the symmetric weights. A zero squared norm is an exact
/// breakdown and sets `terminated`. Returns at most `depth` coefficients; one
/// extra step is taken to detect breakdown right at `depth`.
TridiagonalWeights lanczos_path_weights(const WalkGraph& g, std::size_t depth, const Caps& caps = {});

}  // namespace hankelwalk
