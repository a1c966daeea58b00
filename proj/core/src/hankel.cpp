#include "hankelwalk/hankel.hpp"

#include "hankelwalk/error.hpp"

#include <utility>

namespace hankelwalk {

namespace {

using Grid = std::vector<std::vector<Rational>>;

void require_terms(const MomentPrefix& a, std::size_t required, const char* what) {
    if (a.size() < required) {
        throw Error(ErrorKind::InsufficientTerms,
                    std::string(what) + " needs " + std::to_string(required) +
                        " terms, prefix has " + std::to_string(a.size()));
    }
}

// Returns an empty vector when `m` is PSD, otherwise a direction v with v^T m v < 0.
std::vector<Rational> negative_direction(const Grid& m) {
    const std::size_t n = m.size();
    if (n == 0) return {};

    const Rational& d = m[0][0];
    if (d < 0) {
        std::vector<Rational> v(n);
        v[0] = 1;
        return v;
    }

    if (d == 0) {
        for (std::size_t q = 1; q < n; ++q) {
            if (m[0][q] == 0) continue;
            // On the block [[0, c], [c, e]] the vector (-(e+1)/(2c), 1) evaluates to -1.
            const Rational& c = m[0][q];
            const Rational& e = m[q][q];
            std::vector<Rational> v(n);
            v[0] = -(e + 1) / (2 * c);
            v[q] = 1;
            return v;
        }
        Grid rest(n - 1, std::vector<Rational>(n - 1));
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 1; j < n; ++j) rest[i - 1][j - 1] = m[i][j];
        auto sub = negative_direction(rest);
        if (sub.empty()) return {};
        std::vector<Rational> v(n);
        for (std::size_t i = 1; i < n; ++i) v[i] = sub[i - 1];
        return v;
    }

    // d > 0: x^T M x = y^T S y for x = (-(b.y)/d, y), S the Schur complement.
    Grid schur(n - 1, std::vector<Rational>(n - 1));
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) schur[i - 1][j - 1] = m[i][j] - m[0][i] * m[0][j] / d;
    auto sub = negative_direction(schur);
    if (sub.empty()) return {};
    Rational by = 0;
    for (std::size_t i = 1; i < n; ++i) by += m[0][i] * sub[i - 1];
    std::vector<Rational> v(n);
    v[0] = -by / d;
    for (std::size_t i = 1; i < n; ++i) v[i] = sub[i - 1];
    return v;
}

}  // namespace

MomentPrefix::MomentPrefix(std::vector<Rational> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw Error(ErrorKind::EmptyPrefix, "moment prefix must have at least one term");
}

SymMatrix::SymMatrix(std::size_t m) : size_(m), entries_(m * m) {}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) throw Error(ErrorKind::InvalidArgument, "matrix must be at least 1x1");
    SymMatrix out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw Error(ErrorKind::InvalidArgument, "matrix is not square");
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (j < i && rows[i][j] != rows[j][i])
                throw Error(ErrorKind::InvalidArgument, "matrix is not symmetric");
            out.entries_[i * out.size_ + j] = rows[i][j];
        }
    }
    return out;
}

void SymMatrix::set(std::size_t i, std::size_t j, const Rational& value) {
    entries_[i * size_ + j] = value;
    entries_[j * size_ + i] = value;
}

std::vector<std::vector<Rational>> SymMatrix::rows() const {
    std::vector<std::vector<Rational>> out(size_, std::vector<Rational>(size_));
    for (std::size_t i = 0; i < size_; ++i)
        for (std::size_t j = 0; j < size_; ++j) out[i][j] = (*this)(i, j);
    return out;
}

SymMatrix SymMatrix::leading(std::size_t m) const {
    SymMatrix out(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) out.set(i, j, (*this)(i, j));
    return out;
}

Rational quadratic_form(const SymMatrix& m, const std::vector<Rational>& v) {
    if (v.size() != m.size()) throw Error(ErrorKind::InvalidArgument, "vector length does not match matrix size");
    Rational total = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (v[i] == 0) continue;
        Rational row = 0;
        for (std::size_t j = 0; j < m.size(); ++j) row += m(i, j) * v[j];
        total += v[i] * row;
    }
    return total;
}

SymMatrix hankel_matrix(const MomentPrefix& a, std::size_t shift, std::size_t m) {
    if (m == 0) throw Error(ErrorKind::InvalidArgument, "Hankel matrix size must be positive");
    require_terms(a, 2 * m - 1 + shift, "hankel_matrix");
    SymMatrix out(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) out.set(i, j, a[i + j + shift]);
    return out;
}

Rational det_exact(const SymMatrix& m) {
    Grid g = m.rows();
    const std::size_t n = g.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && g[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(g[pivot], g[col]);
            det = -det;
        }
        det *= g[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (g[r][col] == 0) continue;
            const Rational factor = g[r][col] / g[col][col];
            for (std::size_t c = col; c < n; ++c) g[r][c] -= factor * g[col][c];
        }
    }
    return det;
}

MomentPrefix hankel_transform(const MomentPrefix& a, std::size_t k) {
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be positive");
    require_terms(a, 2 * k - 1, "hankel_transform");
    const std::size_t count = a.size() - 2 * k + 2;
    std::vector<Rational> out;
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n) out.push_back(det_exact(hankel_matrix(a, n, k)));
    return MomentPrefix(std::move(out));
}

MomentPrefix shift(const MomentPrefix& a, std::size_t s) {
    require_terms(a, s + 1, "shift");
    return MomentPrefix(std::vector<Rational>(a.terms().begin() + static_cast<std::ptrdiff_t>(s), a.terms().end()));
}

MomentPrefix iterate_L2(const MomentPrefix& a, std::size_t t) {
    require_terms(a, 2 * t + 1, "iterate_L2");
    MomentPrefix out = a;
    for (std::size_t i = 0; i < t; ++i) out = hankel_transform(out, 2);
    return out;
}

PsdResult psd_check(const SymMatrix& m) {
    PsdResult result;
    result.witness = negative_direction(m.rows());
    result.psd = result.witness.empty();
    return result;
}

SmCheckResult sm_check(const MomentPrefix& a) {
    SmCheckResult result;
    result.depth_unshifted = (a.size() + 1) / 2;
    result.depth_shifted = a.size() / 2;

    for (std::size_t s = 0; s < 2 && !result.refutation; ++s) {
        const std::size_t depth = s == 0 ? result.depth_unshifted : result.depth_shifted;
        if (depth == 0) continue;
        const SymMatrix full = hankel_matrix(a, s, depth);
        if (psd_check(full).psd) continue;
        for (std::size_t m = 1; m <= depth; ++m) {
            SymMatrix block = full.leading(m);
            auto verdict = psd_check(block);
            if (verdict.psd) continue;
            Refutation r;
            r.reason = s == 0 ? "H(a) truncation is not positive semidefinite"
                              : "H(theta a) truncation is not positive semidefinite";
            r.shift = s;
            r.matrix = std::move(block);
            r.witness = std::move(verdict.witness);
            result.refutation = std::move(r);
            break;
        }
    }

    if (!result.refutation && a[0] == 0) {
        for (std::size_t n = 1; n < a.size(); ++n) {
            if (a[n] == 0) continue;
            Refutation r;
            r.reason = "a_0 = 0 forces the whole sequence to vanish";
            r.offending_index = n;
            result.refutation = std::move(r);
            break;
        }
    }
    return result;
}

}  // namespace hankelwalk
