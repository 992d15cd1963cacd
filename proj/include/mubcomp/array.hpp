#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "mubcomp/gaussian.hpp"
#include "mubcomp/rational.hpp"
#include "mubcomp/symbol.hpp"

namespace mubcomp {

/// A generalized Boolean function f: F2^n -> {0,1,i,-1,-i}, stored as its 2^n values.
///
/// Index convention: bit j of the storage index is x_j, with x_0 the least
/// significant bit. Values are unnormalized; the array norm is sqrt(support_size()).
class ArrayFunction {
public:
    ArrayFunction() = default;
    explicit ArrayFunction(int n);
    ArrayFunction(int n, std::vector<Symbol> values);

    int dims() const { return n_; }
    std::size_t size() const { return values_.size(); }

    Symbol operator[](std::size_t x) const { return values_[x]; }
    Symbol& operator[](std::size_t x) { return values_[x]; }

    std::span<const Symbol> values() const { return values_; }

    /// Number of nonzero entries; equals the squared norm since entries are unimodular.
    std::size_t support_size() const;
    std::int64_t norm_squared() const { return static_cast<std::int64_t>(support_size()); }

    /// True when the nonzero support is an affine subspace of F2^n.
    bool has_affine_support() const;

    friend bool operator==(const ArrayFunction&, const ArrayFunction&) = default;
    friend auto operator<=>(const ArrayFunction&, const ArrayFunction&) = default;

private:
    int n_ = 0;
    std::vector<Symbol> values_;
};

/// A one-dimensional sequence over the alphabet (typically a projected array).
struct Sequence {
    std::vector<Symbol> values;

    std::size_t size() const { return values.size(); }
    std::size_t support_size() const;

    friend bool operator==(const Sequence&, const Sequence&) = default;
    friend auto operator<=>(const Sequence&, const Sequence&) = default;
};

/// Sum over x of f(x) * conj(g(x)), exact.
GaussianInt inner_product(std::span<const Symbol> f, std::span<const Symbol> g);
GaussianInt inner_product(const ArrayFunction& f, const ArrayFunction& g);

/// |<f,g>|^2 / (|f|^2 |g|^2). Throws std::invalid_argument on a zero-norm input.
Rational delta_squared(std::span<const Symbol> f, std::span<const Symbol> g);
Rational delta_squared(const ArrayFunction& f, const ArrayFunction& g);

/// Multiply by the global phase that sends the first nonzero entry to 1.
ArrayFunction canonicalize_phase(ArrayFunction f);
Sequence canonicalize_phase(Sequence s);

}  // namespace mubcomp
