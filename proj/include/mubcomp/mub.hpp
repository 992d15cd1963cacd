#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mubcomp/symbol.hpp"

namespace mubcomp {

/// One of the three bases of the dimension-2 MUB {I, H, N}.
enum class MubLetter : std::uint8_t { I = 0, H = 1, N = 2 };

inline constexpr std::array<MubLetter, 3> kMubLetters{MubLetter::I, MubLetter::H, MubLetter::N};

constexpr bool is_identity(MubLetter l) { return l == MubLetter::I; }

char to_char(MubLetter l);

/// Unnormalized 2x2 matrix of a letter: I = [[1,0],[0,1]], H = [[1,1],[1,-1]], N = [[1,i],[1,-i]].
std::array<std::array<Symbol, 2>, 2> unnormalized_matrix(MubLetter l);

using MubWord = std::vector<MubLetter>;

/// Parses a word over {I,H,N}; returns nullopt on any other character.
std::optional<MubWord> parse_word(std::string_view text);
std::string to_string(std::span<const MubLetter> word);

/// Parses a bit string; character j is bit j.
std::optional<std::vector<std::uint8_t>> parse_bits(std::string_view text);
std::string bits_to_string(std::span<const std::uint8_t> bits);

/// Every word of length n over {I,H,N} (or {I,H}), in lexicographic I < H < N order.
std::vector<MubWord> all_words(int n, bool ih_only = false);

/// The n low bits of mask as a bit vector, bit j at index j.
std::vector<std::uint8_t> bits_of(std::uint64_t mask, int n);

/// Full parameter set of the construction: letters U, offsets r (P_j = X^r(j)), member k.
struct MubString {
    MubWord u;
    std::vector<std::uint8_t> r;
    int k = 0;

    int length() const { return static_cast<int>(u.size()); }

    /// Throws std::invalid_argument when |u| != |r|, r is not binary, or k is not 0/1.
    void validate() const;

    /// Convenience: parse "HINI", "0101", k.
    static MubString parse(std::string_view u, std::string_view r, int k = 0);
};

/// Permutation pi of {0..n-1}; variable x_j maps to bit position pi[j].
class Projection {
public:
    Projection() = default;
    /// Throws std::invalid_argument unless pi is a bijection on {0..n-1}.
    explicit Projection(std::vector<int> pi);

    static Projection identity(int n);

    int size() const { return static_cast<int>(pi_.size()); }
    int operator[](int j) const { return pi_[static_cast<std::size_t>(j)]; }
    std::span<const int> values() const { return pi_; }

    friend bool operator==(const Projection&, const Projection&) = default;
    friend auto operator<=>(const Projection&, const Projection&) = default;

private:
    std::vector<int> pi_;
};

}  // namespace mubcomp
