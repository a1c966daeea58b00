#pragma once

#include "hankelwalk/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hankelwalk {

/// Finite prefix (a_0, ..., a_N) of a real sequence. Never empty.
class MomentPrefix {
public:
    /// Throws Error(EmptyPrefix) on an empty list.
    explicit MomentPrefix(std::vector<Rational> terms);

    std::size_t size() const noexcept { return terms_.size(); }
    /// Index of the last stored term, N.
    std::size_t last_index() const noexcept { return terms_.size() - 1; }

    const Rational& operator[](std::size_t n) const { return terms_[n]; }
    const std::vector<Rational>& terms() const noexcept { return terms_; }

    friend bool operator==(const MomentPrefix&, const MomentPrefix&) = default;

private:
    std::vector<Rational> terms_;
};

/// Dense symmetric matrix over the rationals.
class SymMatrix {
public:
    /// m x m zero matrix.
    explicit SymMatrix(std::size_t m);

    /// Throws Error(InvalidArgument) if `rows` is empty, ragged or not symmetric.
    static SymMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t size() const noexcept { return size_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }
    /// Writes both (i,j) and (j,i).
    void set(std::size_t i, std::size_t j, const Rational& value);

    std::vector<std::vector<Rational>> rows() const;
    /// Leading principal m x m block.
    SymMatrix leading(std::size_t m) const;

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    std::size_t size_;
    std::vector<Rational> entries_;
};

/// v^T M v, exactly.
Rational quadratic_form(const SymMatrix& m, const std::vector<Rational>& v);

/// m x m matrix with (i,j) entry a_{i+j+shift}. Needs 2m-1+shift terms.
SymMatrix hankel_matrix(const MomentPrefix& a, std::size_t shift, std::size_t m);

/// Exact determinant by rational Gaussian elimination with row pivoting.
Rational det_exact(const SymMatrix& m);

/// L_k: a'_n = det(a_{n+i+j})_{i,j<k}. Output has size() - 2k + 2 terms.
MomentPrefix hankel_transform(const MomentPrefix& a, std::size_t k);

/// Drops the first s terms.
MomentPrefix shift(const MomentPrefix& a, std::size_t s);

/// k = 2 transform applied t times; output has size() - 2t terms.
MomentPrefix iterate_L2(const MomentPrefix& a, std::size_t t);

struct PsdResult {
    bool psd = true;
    /// Nonempty iff !psd; satisfies witness^T M witness < 0.
    std::vector<Rational> witness;
};

/// Decides positive semidefiniteness exactly by recursive Schur complements.
PsdResult psd_check(const SymMatrix& m);

struct Refutation {
    std::string reason;
    /// 0 for H(a), 1 for H(theta a).
    std::size_t shift = 0;
    /// Smallest leading truncation that fails, with a negative direction for it.
    std::optional<SymMatrix> matrix;
    std::vector<Rational> witness;
    /// Set when a_0 = 0 but a later term is not; no finite Hankel witness may exist.
    std::optional<std::size_t> offending_index;
};

struct SmCheckResult {
    /// Largest truncation sizes of H(a) and H(theta a) supported by the prefix.
    std::size_t depth_unshifted = 0;
    std::size_t depth_shifted = 0;
    std::optional<Refutation> refutation;

    bool consistent() const noexcept { return !refutation.has_value(); }
    /// Depth verified for both matrices.
    std::size_t depth() const noexcept {
        return depth_unshifted < depth_shifted ? depth_unshifted : depth_shifted;
    }
};

/// Necessary-condition check for the Stieltjes moment property on a finite prefix.
/// A consistent result never certifies the full property.
SmCheckResult sm_check(const MomentPrefix& a);

}  // namespace hankelwalk
