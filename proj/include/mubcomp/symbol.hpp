#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "mubcomp/gaussian.hpp"

namespace mubcomp {

/// An element of the alphabet {0, 1, i, -1, -i}: either zero or a Z4 phase i^t.
class Symbol {
public:
    constexpr Symbol() = default;

    static constexpr Symbol zero() { return Symbol(kZero); }
    static constexpr Symbol phase(int t) { return Symbol(static_cast<std::uint8_t>(((t % 4) + 4) % 4)); }
    static constexpr Symbol one() { return phase(0); }

    constexpr bool is_zero() const { return code_ == kZero; }
    /// Z4 exponent; only meaningful when !is_zero().
    constexpr int exponent() const { return code_; }
    /// Packed code: 0..3 are phases, 4 is zero.
    constexpr std::uint8_t code() const { return code_; }
    static constexpr Symbol from_code(std::uint8_t c) { return Symbol(c); }

    constexpr Symbol conj() const { return is_zero() ? *this : phase(-code_); }

    constexpr GaussianInt to_gaussian() const {
        switch (code_) {
            case 0: return {1, 0};
            case 1: return {0, 1};
            case 2: return {-1, 0};
            case 3: return {0, -1};
            default: return {0, 0};
        }
    }

    /// Inverse of to_gaussian on the five alphabet values.
    static constexpr std::optional<Symbol> from_gaussian(const GaussianInt& g) {
        if (g == GaussianInt{0, 0}) return zero();
        if (g == GaussianInt{1, 0}) return phase(0);
        if (g == GaussianInt{0, 1}) return phase(1);
        if (g == GaussianInt{-1, 0}) return phase(2);
        if (g == GaussianInt{0, -1}) return phase(3);
        return std::nullopt;
    }

    friend constexpr Symbol operator*(Symbol a, Symbol b) {
        if (a.is_zero() || b.is_zero()) return zero();
        return phase(a.code_ + b.code_);
    }

    friend constexpr bool operator==(Symbol, Symbol) = default;
    friend constexpr auto operator<=>(Symbol, Symbol) = default;

    /// One of "0", "1", "i", "-1", "-i".
    std::string_view str() const;
    static std::optional<Symbol> parse(std::string_view text);

private:
    static constexpr std::uint8_t kZero = 4;
    constexpr explicit Symbol(std::uint8_t code) : code_(code) {}

    std::uint8_t code_ = kZero;
};

constexpr Symbol symbol_mul(Symbol a, Symbol b) { return a * b; }

inline std::ostream& operator<<(std::ostream& os, Symbol s) { return os << s.str(); }

}  // namespace mubcomp
