#include "mubcomp/count.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mubcomp {

namespace {

BigCount pow_big(int base, int e) {
    BigCount r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

void require_nonneg(int n, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string(what) + ": negative argument");
}

}  // namespace

BigCount binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigCount r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

BigCount factorial(int n) {
    require_nonneg(n, "factorial");
    BigCount r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigCount stirling2(int n, int k) {
    require_nonneg(n, "stirling2");
    require_nonneg(k, "stirling2");
    if (k > n) return 0;
    // k! S2(n,k) = sum_j (-1)^j C(k,j) (k-j)^n
    BigCount acc = 0;
    for (int j = 0; j <= k; ++j) {
        const BigCount term = binomial(k, j) * pow_big(k - j, n);
        if (j % 2) acc -= term;
        else acc += term;
    }
    return acc / factorial(k);
}

BigCount ordered_bell(int r, int n) {
    if (r < 1) throw std::invalid_argument("ordered_bell: r must be positive");
    require_nonneg(n, "ordered_bell");
    std::vector<BigCount> b(static_cast<std::size_t>(n) + 1);
    b[0] = 1;
    for (int m = 1; m <= n; ++m) {
        BigCount acc = 0;
        for (int k = 1; k <= m; ++k) acc += binomial(m, k) * b[static_cast<std::size_t>(m - k)];
        b[static_cast<std::size_t>(m)] = acc * r;
    }
    return b[static_cast<std::size_t>(n)];
}

BigCount ordered_bell_stirling(int r, int n) {
    if (r < 1) throw std::invalid_argument("ordered_bell_stirling: r must be positive");
    require_nonneg(n, "ordered_bell_stirling");
    BigCount acc = 0;
    for (int k = 0; k <= n; ++k) acc += pow_big(r, k) * factorial(k) * stirling2(n, k);
    return acc;
}

BigCount symmetric_patterns(int n, int k) {
    const int len = n - 1;
    if (len < 0 || k < 0 || k > len) return 0;
    if (len % 2 == 0) return k % 2 ? BigCount(0) : binomial(len / 2, k / 2);
    // Odd length: the centre symbol absorbs the parity of k.
    return binomial(len / 2, k / 2);
}

BigCount asymmetric_patterns(int n, int k) { return binomial(n - 1, k) - symmetric_patterns(n, k); }

BigCount symmetric_letters(int n, int k) { return pow_big(2, (n - k + 1) / 2); }

BigCount asymmetric_letters(int n, int k) { return pow_big(2, n - k) - symmetric_letters(n, k); }

BigCount count_Bn_prime_sum(int n) {
    if (n < 1) throw std::invalid_argument("count_Bn_prime_sum: n must be positive");
    // Reversal classes of (pattern, letters) = (all + symmetric) / 2, summed over k, times 2^n offsets.
    BigCount twice = 0;
    for (int k = 0; k <= n - 1; ++k)
        twice += binomial(n - 1, k) * pow_big(2, n - k) + symmetric_patterns(n, k) * symmetric_letters(n, k);
    return pow_big(2, n) * twice / 2;
}

BigCount count_Bn_prime_closed(int n) {
    if (n < 1) throw std::invalid_argument("count_Bn_prime_closed: n must be positive");
    const BigCount lead = pow_big(2, n) * pow_big(3, n - 1);
    if (n % 2 == 0) return lead + pow_big(2, n + 1) * pow_big(3, n / 2 - 1);
    return lead + pow_big(2, n) * pow_big(3, (n - 1) / 2);
}

BigCount count_Bn_prime(int n) {
    require_nonneg(n, "count_Bn_prime");
    if (n == 0) return 1;
    const BigCount a = count_Bn_prime_sum(n);
    if (a != count_Bn_prime_closed(n)) throw std::logic_error("count_Bn_prime: summation and closed forms differ");
    return a;
}

BigCount count_Bn_sum(int n) {
    require_nonneg(n, "count_Bn_sum");
    BigCount acc = 0;
    for (int m = 0; m <= n; ++m) acc += count_Bn_prime(m) * pow_big(2, n - m);
    return acc;
}

BigCount count_Bn_closed(int n) {
    require_nonneg(n, "count_Bn_closed");
    if (n == 0) return 1;
    const BigCount half = pow_big(2, n - 1);
    if (n % 2 == 0) return half * (pow_big(3, n) + 3 * pow_big(3, n / 2) - 2);
    return half * (pow_big(3, n) + 5 * pow_big(3, (n - 1) / 2) - 2);
}

BigCount count_Bn(int n) {
    const BigCount a = count_Bn_sum(n);
    if (a != count_Bn_closed(n)) throw std::logic_error("count_Bn: summation and closed forms differ");
    return a;
}

BigCount count_EIH(int n) {
    if (n < 1) throw std::invalid_argument("count_EIH: n must be positive");
    BigCount acc = pow_big(2, n - 1);
    for (int k = 0; k <= n; ++k) acc += factorial(k) * stirling2(n, k);
    return acc;
}

BigCount count_EIHN(int n) {
    if (n < 1) throw std::invalid_argument("count_EIHN: n must be positive");
    const BigCount four = 3 * ordered_bell(2, n) + pow_big(2, n + 2) - 2;
    if (four % 4 != 0) throw std::logic_error("count_EIHN: non-integral value");
    return four / 4;
}

BigCount count_EIHN_stirling(int n) {
    if (n < 1) throw std::invalid_argument("count_EIHN_stirling: n must be positive");
    // 4 * (3 sum 2^(k-2) k! S2 + 2^n - 1/2) = 3 sum 2^k k! S2 + 2^(n+2) - 2
    BigCount four = pow_big(2, n + 2) - 2;
    for (int k = 0; k <= n; ++k) four += 3 * pow_big(2, k) * factorial(k) * stirling2(n, k);
    return four / 4;
}

TildeCounts count_tildes(int n) {
    if (n < 1) throw std::invalid_argument("count_tildes: n must be positive");
    const BigCount b2 = ordered_bell(2, n);
    if ((3 * b2) % 2 != 0) throw std::logic_error("count_tildes: non-integral value");
    return {2 * ordered_bell(1, n), 3 * b2 / 2};
}

double asymptotic_ratio(AsymptoticKind kind, int n) {
    if (n < 1) throw std::invalid_argument("asymptotic_ratio: n must be positive");
    const double nfact = std::tgamma(static_cast<double>(n) + 1.0);
    if (kind == AsymptoticKind::IH) {
        const double asym = nfact / 2.0 * std::pow(std::log2(std::exp(1.0)), n + 1);
        return count_EIH(n).convert_to<double>() / asym;
    }
    const double asym = nfact / (4.0 * std::pow(std::log(1.5), n + 1));
    return count_EIHN(n).convert_to<double>() / asym;
}

namespace {

// Letters as base-3 digits (0 = I); returns the block reversal of u.
std::vector<int> block_reverse(const std::vector<int>& u) {
    const int n = static_cast<int>(u.size());
    int t = 0;
    while (t < n && u[static_cast<std::size_t>(n - 1 - t)] == 0) ++t;
    std::vector<std::vector<int>> blocks;
    std::vector<int> cur;
    for (int j = 0; j < n - t; ++j) {
        cur.push_back(u[static_cast<std::size_t>(j)]);
        if (u[static_cast<std::size_t>(j)] != 0) {
            blocks.push_back(cur);
            cur.clear();
        }
    }
    std::vector<int> out;
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
    out.resize(static_cast<std::size_t>(n), 0);
    return out;
}

template <class Fn>
void for_each_string(int n, Fn fn) {
    std::vector<int> u(static_cast<std::size_t>(n), 0);
    while (true) {
        fn(u);
        int j = n - 1;
        while (j >= 0 && u[static_cast<std::size_t>(j)] == 2) u[static_cast<std::size_t>(j--)] = 0;
        if (j < 0) return;
        ++u[static_cast<std::size_t>(j)];
    }
}

}  // namespace

ReversalClasses classify_reversal(int n, bool prime_only) {
    if (n < 1 || n > 16) throw std::invalid_argument("classify_reversal: n must be in 1..16");
    ReversalClasses c;
    for_each_string(n, [&](const std::vector<int>& u) {
        if (prime_only && u.back() == 0) return;
        ++c.strings;
        if (block_reverse(u) == u) ++c.palindromic;
    });
    c.classes = (c.strings + c.palindromic) / 2;
    return c;
}

PatternSplit classify_patterns(int n) {
    if (n < 1 || n > 16) throw std::invalid_argument("classify_patterns: n must be in 1..16");
    PatternSplit split;
    split.symmetric_patterns.assign(static_cast<std::size_t>(n), 0);
    split.all_patterns.assign(static_cast<std::size_t>(n), 0);
    split.symmetric_strings.assign(static_cast<std::size_t>(n), 0);
    // Patterns: bit j set means position j is non-I.
    for (std::uint32_t p = 0; p < (std::uint32_t{1} << (n - 1)); ++p) {
        int k = 0;
        bool sym = true;
        for (int j = 0; j < n - 1; ++j) {
            k += ((p >> j) & 1U) == 0;
            sym = sym && (((p >> j) & 1U) == ((p >> (n - 2 - j)) & 1U));
        }
        ++split.all_patterns[static_cast<std::size_t>(k)];
        if (sym) ++split.symmetric_patterns[static_cast<std::size_t>(k)];
    }
    for_each_string(n, [&](const std::vector<int>& u) {
        if (u.back() == 0) return;
        int k = 0;
        for (int j = 0; j < n - 1; ++j) k += u[static_cast<std::size_t>(j)] == 0;
        if (block_reverse(u) == u) ++split.symmetric_strings[static_cast<std::size_t>(k)];
    });
    return split;
}

}  // namespace mubcomp
