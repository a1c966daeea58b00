#include "hankelwalk/verify.hpp"

#include "hankelwalk/error.hpp"
#include "hankelwalk/walk_graph.hpp"

#include <algorithm>

namespace hankelwalk {

namespace {

bool nonnegative(const LevelWeights& w) {
    return std::all_of(w.lambda.begin(), w.lambda.end(), [](const Rational& x) { return x >= 0; });
}

}  // namespace

VerificationReport verify_theorem(const MomentPrefix& a, std::size_t k, const VerifyOptions& options) {
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be positive");
    if (a[0] <= 0) throw Error(ErrorKind::ZeroLeadingTerm, "verification needs a_0 > 0");
    if (a.size() < 2 * k + 1) {
        throw Error(ErrorKind::InsufficientTerms, "L_" + std::to_string(k) + " needs " + std::to_string(2 * k + 1) +
                                                      " terms for three output terms, prefix has " +
                                                      std::to_string(a.size()));
    }

    auto extraction = weights_from_moments(a);
    if (!extraction.consistent()) {
        throw Error(ErrorKind::InconsistentMoments,
                    "input has no continued-fraction weights (first bad term a_" +
                        std::to_string(*extraction.inconsistent_index) + ")");
    }
    const LevelWeights weights = std::move(*extraction.weights);
    MomentPrefix transformed = hankel_transform(a, k);

    std::size_t depth = std::min(transformed.last_index(), options.caps.walk_n);
    if (options.max_n) depth = std::min(depth, *options.max_n);

    const WalkGraph graph = ProductGraph{k, weights};
    MomentPrefix walk_sums = closed_walk_sums(graph, depth, options.caps);

    VerificationReport report{.input = a,
                              .k = k,
                              .weights = weights,
                              .transformed = std::move(transformed),
                              .walk_sums = std::move(walk_sums),
                              .compared_up_to = depth};
    for (std::size_t n = 0; n <= depth; ++n) {
        TermComparison c{.n = n, .transformed = report.transformed[n], .predicted = report.transformed[0] * report.walk_sums[n]};
        c.match = c.transformed == c.predicted;
        if (!c.match) {
            throw Error(ErrorKind::MismatchBug, "a'_" + std::to_string(n) + " = " + to_string(c.transformed) +
                                                    " but a'_0 b_n = " + to_string(c.predicted));
        }
        report.comparisons.push_back(std::move(c));
    }

    report.input_weights_nonnegative = nonnegative(weights);
    auto witness = weights_from_moments(report.walk_sums);
    if (witness.consistent()) {
        report.witness = std::move(*witness.weights);
        report.witness_nonnegative = nonnegative(*report.witness);
    }
    if (depth > 0) {
        report.lanczos = lanczos_path_weights(graph, depth, options.caps);
        report.lanczos_agrees = report.witness && report.lanczos->beta_sq == report.witness->lambda;
    } else {
        report.lanczos_agrees = true;
    }
    return report;
}

}  // namespace hankelwalk
