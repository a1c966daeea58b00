#include "hankelwalk/lgv.hpp"

#include "hankelwalk/error.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace hankelwalk {

namespace {

bool below_or_touching(const std::vector<int>& lower, const std::vector<int>& upper) {
    for (std::size_t i = 0; i < lower.size(); ++i)
        if (lower[i] > upper[i]) return false;
    return true;
}

void check_caps(std::size_t n, std::size_t k, const Caps& caps) {
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be positive");
    if (n > caps.tuple_n || k > caps.tuple_k) {
        throw Error(ErrorKind::CapExceeded, "tuple enumeration (n=" + std::to_string(n) + ", k=" +
                                                std::to_string(k) + ") exceeds caps (n<=" +
                                                std::to_string(caps.tuple_n) + ", k<=" +
                                                std::to_string(caps.tuple_k) + ")");
    }
}

void choose(const std::vector<DyckPath>& paths, const std::vector<std::vector<int>>& heights,
            std::size_t k, std::vector<std::size_t>& picked, std::vector<PathTuple>& out) {
    if (picked.size() == k) {
        std::vector<DyckPath> tuple;
        tuple.reserve(k);
        for (auto idx : picked) tuple.push_back(paths[idx]);
        out.emplace_back(std::move(tuple));
        return;
    }
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (!picked.empty() && !below_or_touching(heights[picked.back()], heights[i])) continue;
        picked.push_back(i);
        choose(paths, heights, k, picked, out);
        picked.pop_back();
    }
}

}  // namespace

PathTuple::PathTuple(std::vector<DyckPath> paths) : paths_(std::move(paths)) {
    if (paths_.empty()) throw Error(ErrorKind::InvalidTuple, "tuple must hold at least one path");
    const auto len = paths_.front().steps().size();
    std::vector<int> previous;
    for (std::size_t j = 0; j < paths_.size(); ++j) {
        if (paths_[j].steps().size() != len) throw Error(ErrorKind::InvalidTuple, "paths differ in length");
        auto h = paths_[j].heights();
        if (j > 0 && !below_or_touching(previous, h)) {
            throw Error(ErrorKind::InvalidTuple,
                        "path " + std::to_string(j) + " rises above path " + std::to_string(j + 1));
        }
        previous = std::move(h);
    }
}

std::string PathTuple::key() const {
    std::string out;
    for (const auto& p : paths_) out += p.to_string();
    return out;
}

bool vertex_disjoint(const ShiftedTuple& tuple) {
    std::set<std::pair<int, int>> seen;
    for (const auto& sp : tuple.paths) {
        const auto h = sp.path.heights();
        for (std::size_t i = 0; i < h.size(); ++i) {
            if (!seen.emplace(sp.start_x + static_cast<int>(i), h[i]).second) return false;
        }
    }
    return true;
}

std::vector<PathTuple> enumerate_noncrossing(std::size_t n, std::size_t k, const Caps& caps) {
    check_caps(n, k, caps);
    Caps dyck_caps = caps;
    dyck_caps.dyck_n = std::max(caps.dyck_n, n);
    const auto paths = enumerate_dyck(n, dyck_caps);
    std::vector<std::vector<int>> heights;
    heights.reserve(paths.size());
    for (const auto& p : paths) heights.push_back(p.heights());

    std::vector<PathTuple> out;
    std::vector<std::size_t> picked;
    choose(paths, heights, k, picked, out);
    std::sort(out.begin(), out.end(), [](const PathTuple& x, const PathTuple& y) { return x.key() < y.key(); });
    return out;
}

ShiftedTuple lift_tuple(const PathTuple& tuple) {
    ShiftedTuple out;
    out.paths.reserve(tuple.k());
    for (std::size_t j = 0; j < tuple.k(); ++j) {
        const std::size_t pad = 2 * j;
        std::vector<Step> steps(pad, Step::Up);
        const auto& middle = tuple.paths()[j].steps();
        steps.insert(steps.end(), middle.begin(), middle.end());
        steps.insert(steps.end(), pad, Step::Down);
        out.paths.push_back({-static_cast<int>(pad), DyckPath(std::move(steps))});
    }
    return out;
}

PathTuple drop_tuple(const ShiftedTuple& tuple) {
    if (tuple.paths.empty()) throw Error(ErrorKind::MalformedPadding, "empty shifted tuple");
    const std::size_t len = tuple.paths.front().path.steps().size();
    std::vector<DyckPath> ground;
    ground.reserve(tuple.paths.size());
    for (std::size_t j = 0; j < tuple.paths.size(); ++j) {
        const std::size_t pad = 2 * j;
        const auto& sp = tuple.paths[j];
        const auto& steps = sp.path.steps();
        const std::string label = "path " + std::to_string(j + 1);
        if (sp.start_x != -static_cast<int>(pad))
            throw Error(ErrorKind::MalformedPadding, label + " must start at x = " + std::to_string(-static_cast<int>(pad)));
        if (steps.size() != len + 2 * pad)
            throw Error(ErrorKind::MalformedPadding, label + " has the wrong length");
        for (std::size_t i = 0; i < pad; ++i) {
            if (steps[i] != Step::Up) throw Error(ErrorKind::MalformedPadding, label + " must open with " + std::to_string(pad) + " up steps");
            if (steps[steps.size() - 1 - i] != Step::Down)
                throw Error(ErrorKind::MalformedPadding, label + " must close with " + std::to_string(pad) + " down steps");
        }
        std::vector<Step> middle(steps.begin() + static_cast<std::ptrdiff_t>(pad),
                                 steps.end() - static_cast<std::ptrdiff_t>(pad));
        int height = 0;
        for (Step s : middle) {
            height += s == Step::Up ? 1 : -1;
            if (height < 0) throw Error(ErrorKind::MalformedPadding, label + " dips below its padding height");
        }
        ground.emplace_back(std::move(middle));
    }
    return PathTuple(std::move(ground));
}

Rational noncrossing_sum(const LevelWeights& weights, std::size_t k, std::size_t n, const Caps& caps) {
    Rational total = 0;
    for (const auto& t : enumerate_noncrossing(n, k, caps)) {
        Rational product = 1;
        for (std::size_t j = 0; j < k; ++j) product *= path_weight(t.paths()[j], weights, 2 * j);
        total += product;
    }
    return total;
}

Rational lgv_sum(const Rational& a0, const LevelWeights& weights, std::size_t k, std::size_t n, const Caps& caps) {
    Rational total = 0;
    for (const auto& t : enumerate_noncrossing(n, k, caps)) {
        Rational product = 1;
        for (const auto& sp : lift_tuple(t).paths) product *= path_weight(sp.path, weights, 0);
        total += product;
    }
    Rational scale = 1;
    for (std::size_t j = 0; j < k; ++j) scale *= a0;
    return scale * total;
}

Rational padding_weight(const LevelWeights& weights, std::size_t k) {
    Rational product = 1;
    for (std::size_t j = 1; j <= k; ++j)
        for (std::size_t h = 1; h <= 2 * (j - 1); ++h) product *= weights.at(h);
    return product;
}

}  // namespace hankelwalk
