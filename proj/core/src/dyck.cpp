#include "hankelwalk/dyck.hpp"

#include "hankelwalk/error.hpp"

#include <algorithm>
#include <utility>

namespace hankelwalk {

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
    int height = 0;
    for (Step s : steps_) {
        height += s == Step::Up ? 1 : -1;
        if (height < 0) throw Error(ErrorKind::InvalidArgument, "path goes below height 0");
    }
    if (height != 0) throw Error(ErrorKind::InvalidArgument, "path does not return to height 0");
}

DyckPath DyckPath::from_string(std::string_view word) {
    std::vector<Step> steps;
    steps.reserve(word.size());
    for (char c : word) {
        if (c == 'U') {
            steps.push_back(Step::Up);
        } else if (c == 'D') {
            steps.push_back(Step::Down);
        } else {
            throw Error(ErrorKind::ParseError, "Dyck word may only contain U and D: \"" + std::string(word) + "\"");
        }
    }
    return DyckPath(std::move(steps));
}

std::vector<int> DyckPath::heights() const {
    std::vector<int> h;
    h.reserve(steps_.size() + 1);
    h.push_back(0);
    for (Step s : steps_) h.push_back(h.back() + (s == Step::Up ? 1 : -1));
    return h;
}

int DyckPath::max_height() const {
    const auto h = heights();
    return *std::max_element(h.begin(), h.end());
}

std::string DyckPath::to_string() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out.push_back(s == Step::Up ? 'U' : 'D');
    return out;
}

Rational LevelWeights::at(std::size_t h) const {
    if (h == 0) throw Error(ErrorKind::InvalidArgument, "levels are 1-based");
    if (h <= lambda.size()) return lambda[h - 1];
    if (terminated) return 0;
    throw Error(ErrorKind::InsufficientWeights,
                "level " + std::to_string(h) + " requested, only " + std::to_string(lambda.size()) + " weights known");
}

namespace {

void extend(std::vector<Step>& prefix, std::size_t ups, std::size_t downs, std::size_t n,
            std::vector<DyckPath>& out) {
    if (ups == n && downs == n) {
        out.emplace_back(prefix);
        return;
    }
    if (ups < n) {
        prefix.push_back(Step::Up);
        extend(prefix, ups + 1, downs, n, out);
        prefix.pop_back();
    }
    if (downs < ups) {
        prefix.push_back(Step::Down);
        extend(prefix, ups, downs + 1, n, out);
        prefix.pop_back();
    }
}

// Coefficients of 1/f to the same order; f[0] must be 1.
std::vector<Rational> series_reciprocal(const std::vector<Rational>& f) {
    std::vector<Rational> g(f.size());
    g[0] = 1;
    for (std::size_t i = 1; i < f.size(); ++i) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= i; ++j) acc += f[j] * g[i - j];
        g[i] = -acc;
    }
    return g;
}

}  // namespace

std::vector<DyckPath> enumerate_dyck(std::size_t n, const Caps& caps) {
    if (n > caps.dyck_n) {
        throw Error(ErrorKind::CapExceeded,
                    "Dyck enumeration n=" + std::to_string(n) + " exceeds cap " + std::to_string(caps.dyck_n));
    }
    std::vector<DyckPath> out;
    std::vector<Step> prefix;
    prefix.reserve(2 * n);
    extend(prefix, 0, 0, n, out);
    return out;
}

Rational path_weight(const DyckPath& path, const LevelWeights& weights, std::size_t shift) {
    if (shift % 2 != 0) throw Error(ErrorKind::InvalidArgument, "level shift must be even");
    Rational product = 1;
    int height = 0;
    for (Step s : path.steps()) {
        if (s == Step::Up) {
            ++height;
            product *= weights.at(static_cast<std::size_t>(height) + shift);
        } else {
            --height;
        }
    }
    return product;
}

MomentPrefix moments_from_weights(const LevelWeights& weights, const Rational& a0, std::size_t N,
                                  const Caps& caps) {
    if (N > caps.dyck_n) {
        throw Error(ErrorKind::CapExceeded,
                    "moment count N=" + std::to_string(N) + " exceeds cap " + std::to_string(caps.dyck_n));
    }
    if (a0 < 0) throw Error(ErrorKind::InvalidArgument, "a0 must be nonnegative");
    if (!weights.covers(N)) {
        throw Error(ErrorKind::InsufficientWeights, "moments up to a_" + std::to_string(N) + " need " +
                                                        std::to_string(N) + " level weights, have " +
                                                        std::to_string(weights.lambda.size()));
    }

    // paths[h] = total weight of walks of the current length ending at height h.
    std::vector<Rational> paths(N + 2);
    paths[0] = 1;
    std::vector<Rational> out;
    out.reserve(N + 1);
    out.push_back(a0);
    for (std::size_t len = 1; len <= 2 * N; ++len) {
        const std::size_t reach = std::min(len, 2 * N - len);  // must still be able to return
        std::vector<Rational> next(N + 2);
        for (std::size_t h = 0; h <= reach; ++h) {
            if (h > 0 && paths[h - 1] != 0) next[h] += paths[h - 1] * weights.at(h);
            if (paths[h + 1] != 0) next[h] += paths[h + 1];
        }
        paths = std::move(next);
        if (len % 2 == 0) out.push_back(a0 * paths[0]);
    }
    return MomentPrefix(std::move(out));
}

WeightExtraction weights_from_moments(const MomentPrefix& a) {
    const Rational& a0 = a[0];
    if (a0 < 0) throw Error(ErrorKind::ZeroLeadingTerm, "a_0 must be positive, got " + to_string(a0));
    if (a0 == 0) {
        for (std::size_t n = 1; n < a.size(); ++n) {
            if (a[n] != 0) {
                throw Error(ErrorKind::ZeroLeadingTerm,
                            "a_0 = 0 but a_" + std::to_string(n) + " = " + to_string(a[n]));
            }
        }
        return {LevelWeights{{}, true}, std::nullopt};
    }

    std::vector<Rational> f;
    f.reserve(a.size());
    for (const auto& term : a.terms()) f.push_back(term / a0);

    LevelWeights found;
    while (f.size() > 1) {
        // f = 1 / (1 - lambda z g): (1 - 1/f) / z = lambda g with g(0) = 1.
        const auto recip = series_reciprocal(f);
        std::vector<Rational> rest(f.size() - 1);
        for (std::size_t i = 0; i + 1 < f.size(); ++i) rest[i] = -recip[i + 1];
        const Rational lambda = rest[0];
        if (lambda == 0) {
            found.terminated = true;
            break;
        }
        for (auto& c : rest) c /= lambda;
        found.lambda.push_back(lambda);
        f = std::move(rest);
    }

    if (found.terminated) {
        const auto predicted = moments_from_weights(found, a0, a.last_index(), Caps::uniform(a.last_index()));
        for (std::size_t n = 0; n < a.size(); ++n) {
            if (predicted[n] != a[n]) return {std::nullopt, n};
        }
    }
    return {std::move(found), std::nullopt};
}

}  // namespace hankelwalk
