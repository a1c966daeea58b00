#pragma once

#include "hankelwalk/caps.hpp"
#include "hankelwalk/dyck.hpp"
#include "hankelwalk/hankel.hpp"
#include "hankelwalk/lanczos.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hankelwalk {

struct VerifyOptions {
    /// Largest n compared; defaults to every term of L_k(a) within caps.walk_n.
    std::optional<std::size_t> max_n;
    Caps caps;
};

struct TermComparison {
    std::size_t n = 0;
    Rational transformed;  // a'_n
    Rational predicted;    // a'_0 * b_n
    bool match = false;
};

/// Every artifact of the constructive check that L_k maps a weighted
/// path-enumerable sequence to another one.
struct VerificationReport {
    MomentPrefix input;
    std::size_t k = 1;
    LevelWeights weights;              // lambda recovered from the input
    MomentPrefix transformed;          // a' = L_k(a)
    MomentPrefix walk_sums;            // b_n on the product graph, n = 0..compared_up_to
    std::size_t compared_up_to = 0;
    std::vector<TermComparison> comparisons{};
    std::optional<LevelWeights> witness{};      // lambda' recovered from b
    std::optional<TridiagonalWeights> lanczos{};  // Lanczos on the product graph, same depth
    bool input_weights_nonnegative = false;
    bool witness_nonnegative = false;
    bool lanczos_agrees = false;

    bool verified() const noexcept { return witness_nonnegative && lanczos_agrees; }
};

/// Recovers lambda from `a`, forms L_k(a), sums closed walks of the weighted
/// product graph, checks a'_n = a'_0 b_n exactly, and extracts the witness
/// weights of b both by continued fraction and by Lanczos.
///
/// Throws Error(ZeroLeadingTerm) unless a_0 > 0, Error(InsufficientTerms) if
/// L_k(a) would have fewer than 3 terms, Error(InconsistentMoments) if the input
/// has no continued-fraction weights, and Error(MismatchBug) if some
/// a'_n != a'_0 b_n.
VerificationReport verify_theorem(const MomentPrefix& a, std::size_t k, const VerifyOptions& options = {});

}  // namespace hankelwalk
