#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "mubcomp/array.hpp"
#include "mubcomp/gaussian.hpp"
#include "mubcomp/rational.hpp"

namespace mubcomp {

/// Exact coefficients of F(z) F*(z^-1) on a rectangular lag grid.
///
/// Axis j has extent d_j; its lags run from -(d_j - 1) to d_j - 1. Arrays have n axes of
/// extent 2, sequences one axis of extent L. Storage is axis 0 fastest.
class LaurentAutocorrelation {
public:
    LaurentAutocorrelation() = default;
    explicit LaurentAutocorrelation(std::vector<int> extents);

    std::span<const int> extents() const { return extents_; }
    std::size_t size() const { return coeffs_.size(); }

    GaussianInt at(std::span<const int> lag) const;
    /// Scalar lag on a one-axis grid.
    GaussianInt at(int lag) const;
    GaussianInt zero_lag() const { return coeffs_[center_]; }

    std::span<const GaussianInt> coefficients() const { return coeffs_; }
    std::span<GaussianInt> coefficients() { return coeffs_; }
    std::size_t flat_index(std::span<const int> lag) const;
    std::vector<int> lag_of(std::size_t flat) const;
    std::size_t center() const { return center_; }

    LaurentAutocorrelation& operator+=(const LaurentAutocorrelation& o);

private:
    std::vector<int> extents_;
    std::vector<std::size_t> strides_;
    std::size_t center_ = 0;
    std::vector<GaussianInt> coeffs_;
};

LaurentAutocorrelation autocorrelation(const ArrayFunction& f);
LaurentAutocorrelation autocorrelation(const Sequence& s);

struct ComplementarityResult {
    bool complementary = false;
    /// The constant sum when complementary, else the zero-lag sum.
    GaussianInt lambda;
    /// First nonzero lag with a nonzero residual (empty when complementary).
    std::vector<int> offending_lag;
    GaussianInt residual;
};

/// Sum of autocorrelations; complementary when every nonzero lag vanishes.
/// Throws std::invalid_argument on an empty set or mismatched shapes.
ComplementarityResult verify_complementary(std::span<const ArrayFunction> fs);
ComplementarityResult verify_complementary(std::span<const Sequence> ss);

/// Max over m of |F(e^{2 pi i m / grid})|^2 / ||F||^2. Throws std::invalid_argument when the
/// sequence is empty or all zero, or grid < length.
double papr_spectrum(const Sequence& seq, std::size_t grid);

struct DeltaReport {
    Rational max_delta_squared{0};
    /// Indices into the deduplicated set.
    std::size_t argmax_first = 0;
    std::size_t argmax_second = 0;
    std::uint64_t pair_count = 0;
    bool exhaustive = true;
    std::map<Rational, std::uint64_t> histogram;
    /// Phase-canonical, sorted, duplicate-free input.
    std::vector<Sequence> set;
};

struct DeltaOptions {
    bool histogram = false;
    unsigned threads = 0;  ///< 0 = hardware concurrency
    /// When set, sample this many random pairs instead of all of them.
    std::optional<std::uint64_t> sample_pairs;
    std::uint64_t seed = 1;
};

/// Exact max of delta_squared over distinct pairs of a set of equal-length sequences.
/// Throws std::invalid_argument on an empty set, mismatched lengths, or an all-zero member.
/// A set with one distinct member reports 0 pairs.
DeltaReport max_delta(std::span<const Sequence> set, const DeltaOptions& options = {});

/// The support-overlap bound 2^(e + e' - 2u), where the supports of f and g have sizes
/// 2^(n-e) and 2^(n-e') and their common support has size 2^(n-u). Written in terms of sizes it is
/// |common|^2 / (|supp f| |supp g|). Throws std::invalid_argument on a zero-norm input.
Rational overlap_bound(std::span<const Symbol> f, std::span<const Symbol> g);

}  // namespace mubcomp
