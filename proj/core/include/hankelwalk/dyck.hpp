#pragma once

#include "hankelwalk/caps.hpp"
#include "hankelwalk/hankel.hpp"
#include "hankelwalk/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hankelwalk {

enum class Step : unsigned char { Up, Down };

/// Lattice path of up/down steps from height 0 back to height 0 that never
/// goes below 0.
class DyckPath {
public:
    DyckPath() = default;
    /// Throws Error(InvalidArgument) unless `steps` is a Dyck word.
    explicit DyckPath(std::vector<Step> steps);
    /// Parses a word over {U, D}, e.g. "UUDD".
    static DyckPath from_string(std::string_view word);

    const std::vector<Step>& steps() const noexcept { return steps_; }
    /// Number of up steps; the path has length 2n.
    std::size_t half_length() const noexcept { return steps_.size() / 2; }
    /// Heights of the 2n+1 vertices.
    std::vector<int> heights() const;
    int max_height() const;
    std::string to_string() const;

    friend bool operator==(const DyckPath&, const DyckPath&) = default;

private:
    std::vector<Step> steps_;
};

/// lambda_n = w_n^2 for heights n = 1..M. When `terminated`, every level above
/// M carries weight 0.
struct LevelWeights {
    std::vector<Rational> lambda;
    bool terminated = false;

    /// True if level h (1-based) has a known weight.
    bool covers(std::size_t h) const noexcept { return terminated || h <= lambda.size(); }
    /// lambda_h; throws Error(InsufficientWeights) if the level is not covered.
    Rational at(std::size_t h) const;

    friend bool operator==(const LevelWeights&, const LevelWeights&) = default;
};

/// All Dyck paths of length 2n, Up ordered before Down.
std::vector<DyckPath> enumerate_dyck(std::size_t n, const Caps& caps = {});

/// Product over up steps ending at height h of lambda_{h+shift}.
Rational path_weight(const DyckPath& path, const LevelWeights& weights, std::size_t shift = 0);

/// a_n = a0 * sum over Dyck paths of length 2n of path_weight, for n = 0..N,
/// by height-bounded dynamic programming.
MomentPrefix moments_from_weights(const LevelWeights& weights, const Rational& a0, std::size_t N,
                                  const Caps& caps = {});

struct WeightExtraction {
    /// Set when the prefix has an S-fraction representation.
    std::optional<LevelWeights> weights;
    /// First index where the prefix contradicts the termination forced by a zero weight.
    std::optional<std::size_t> inconsistent_index;

    bool consistent() const noexcept { return weights.has_value(); }
};

/// Recovers lambda_1..lambda_N from a_0..a_N by peeling one level of the
/// Stieltjes continued fraction a_0 / (1 - lambda_1 z / (1 - lambda_2 z / ...))
/// per round with exact power-series arithmetic. A zero weight terminates the
/// fraction; the remaining terms are then checked against the terminated
/// weights. Signs are reported as found.
WeightExtraction weights_from_moments(const MomentPrefix& a);

}  // namespace hankelwalk
