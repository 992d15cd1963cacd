#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mubcomp/array.hpp"
#include "mubcomp/count.hpp"
#include "mubcomp/mub.hpp"
#include "mubcomp/rational.hpp"

namespace mubcomp {

/// Three letter strings whose closed-form families make a codebook.
///
/// u_aux[i] is the non-I letter among r0[i], r1[i]. w_aux[i] counts the N letters of r2 placed
/// strictly between i and the previous non-I position of the same source string.
struct RTriple {
    MubWord r0, r1, r2;
    MubWord u_aux;
    std::vector<int> w_aux;
};

/// r1[i] == I exactly when r0[i] != I.
bool satisfies_cond1(std::span<const MubLetter> r0, std::span<const MubLetter> r1);

/// Builds r2 position by position. Throws std::invalid_argument when the lengths differ or
/// cond1 fails.
RTriple build_r2(std::span<const MubLetter> r0, std::span<const MubLetter> r1);

/// For every i, [u_aux(i) = N] plus the N letters of r2 in (previous position of the same
/// source, i] is odd, and r2 has no I.
bool has_odd_n_runs(const RTriple& t);

struct Codeword {
    int family = 0;  ///< index into the generating strings
    std::vector<std::uint8_t> r;
    ArrayFunction array;
};

/// An (N, K) codebook. Codewords are unnormalized arrays; each one's norm is sqrt(support size).
struct Codebook {
    int n = 0;
    std::vector<MubWord> families;
    std::vector<Codeword> codewords;
    Rational delta_squared{0};

    std::size_t N() const { return codewords.size(); }
    std::size_t K() const { return std::size_t{1} << n; }
};

/// All k = 0 closed forms over r for each family, with exact max pairwise delta squared.
/// Throws std::invalid_argument when two codewords coincide up to a global phase.
Codebook build_codebook_from(std::vector<MubWord> families);
Codebook build_codebook(const RTriple& triple);

/// r1 = H where r0 = I and I elsewhere. Throws std::invalid_argument unless r0 is over {I,H}.
Codebook build_ih_codebook(std::span<const MubLetter> r0);

/// (N - K) / (K (N - 1)). Throws std::invalid_argument when N < K or N < 2.
Rational welch_bound_squared(std::size_t N, std::size_t K);

struct WelchMetrics {
    Rational delta_squared;
    Rational welch_bound_squared;
    /// delta^2 / welch^2; absent when the bound is 0.
    std::optional<Rational> ratio_squared;
    double delta = 0.0;
    double welch_bound = 0.0;
    std::optional<double> ratio;
};

WelchMetrics welch_metrics(const Codebook& cb);

/// 2^(n-1) (2^n - 1).
BigCount count_codebooks(int n);

/// Distinct codebooks over all cond1 pairs (r0, r1). Throws std::invalid_argument for n > 4.
std::size_t count_codebooks_brute(int n);

}  // namespace mubcomp
