#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

namespace mubcomp {

/// Exact complex integer a + bi. All correlation values in the library live here.
struct GaussianInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr GaussianInt() = default;
    constexpr GaussianInt(std::int64_t r, std::int64_t i = 0) : re(r), im(i) {}

    constexpr GaussianInt conj() const { return {re, -im}; }
    constexpr std::int64_t norm() const { return re * re + im * im; }
    constexpr bool is_zero() const { return re == 0 && im == 0; }

    constexpr GaussianInt& operator+=(const GaussianInt& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    constexpr GaussianInt& operator-=(const GaussianInt& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    constexpr GaussianInt& operator*=(const GaussianInt& o) {
        const std::int64_t r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }

    friend constexpr GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
    friend constexpr GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }
    friend constexpr GaussianInt operator*(GaussianInt a, const GaussianInt& b) { return a *= b; }
    friend constexpr GaussianInt operator-(const GaussianInt& a) { return {-a.re, -a.im}; }

    friend constexpr bool operator==(const GaussianInt&, const GaussianInt&) = default;
    friend constexpr auto operator<=>(const GaussianInt&, const GaussianInt&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const GaussianInt& g) {
    if (g.im == 0) return os << g.re;
    if (g.re == 0) return os << g.im << "i";
    return os << g.re << (g.im < 0 ? "-" : "+") << (g.im < 0 ? -g.im : g.im) << "i";
}

}  // namespace mubcomp
