#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mubcomp {

using BigCount = boost::multiprecision::cpp_int;

BigCount binomial(int n, int k);
BigCount factorial(int n);

/// Stirling numbers of the second kind via the alternating sum; 0 when k > n.
BigCount stirling2(int n, int k);

/// Generalized ordered Bell numbers B(r, n) by the binomial recursion.
BigCount ordered_bell(int r, int n);
/// The same numbers as sum_k r^k k! S2(n, k).
BigCount ordered_bell_stirling(int r, int n);

// Counting helpers for |B'_n|. Strings are letter words of length n whose last letter is not I;
// the first n-1 positions form an I/non-I pattern with k letters I.

/// Palindromic binary strings of length n-1 with k zeros.
BigCount symmetric_patterns(int n, int k);
/// C(n-1, k) - S_k.
BigCount asymmetric_patterns(int n, int k);
/// Palindromic {H,N} assignments to the n-k non-I letters: 2^ceil((n-k)/2).
BigCount symmetric_letters(int n, int k);
/// 2^(n-k) - S'_k.
BigCount asymmetric_letters(int n, int k);

/// Summation form of |B'_n|.
BigCount count_Bn_prime_sum(int n);
/// Closed form of |B'_n| (separate even and odd n).
BigCount count_Bn_prime_closed(int n);
/// |B'_n|, after asserting both forms agree (throws std::logic_error otherwise). |B'_0| = 1.
BigCount count_Bn_prime(int n);

/// sum_{m=0}^{n} |B'_m| 2^(n-m).
BigCount count_Bn_sum(int n);
/// Closed form of |B_n|.
BigCount count_Bn_closed(int n);
/// |B_n|, after asserting both forms agree.
BigCount count_Bn(int n);

BigCount count_EIH(int n);
BigCount count_EIHN(int n);
/// E_IHN computed as 3 sum_k 2^(k-2) k! S2(n,k) + 2^n - 1/2, scaled by 4 to stay integral, then divided.
BigCount count_EIHN_stirling(int n);

struct TildeCounts {
    BigCount e_ih;
    BigCount e_ihn;
};

/// Counts under criterion A only: 2 B(1,n) and (3/2) B(2,n).
TildeCounts count_tildes(int n);

enum class AsymptoticKind { IH, IHN };

/// Exact count divided by n!/2 log2(e)^(n+1) (IH) or n!/(4 ln(3/2)^(n+1)) (IHN).
double asymptotic_ratio(AsymptoticKind kind, int n);

/// Brute-force classification of letter strings up to block reversal. Blocks are I^a R for
/// non-I R; trailing I's stay in place.
struct ReversalClasses {
    std::uint64_t strings = 0;
    std::uint64_t classes = 0;
    std::uint64_t palindromic = 0;
};

/// All strings of length n (prime_only: last letter not I). n <= 16.
ReversalClasses classify_reversal(int n, bool prime_only);

/// Per-k split used to check the pattern helpers: index k holds the counts among strings with k
/// letters I in the first n-1 positions and a non-I last letter.
struct PatternSplit {
    std::vector<std::uint64_t> symmetric_patterns;
    std::vector<std::uint64_t> all_patterns;
    std::vector<std::uint64_t> symmetric_strings;
};
PatternSplit classify_patterns(int n);

}  // namespace mubcomp
