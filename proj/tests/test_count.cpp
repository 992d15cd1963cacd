#include <catch_amalgamated.hpp>

#include <cmath>
#include <functional>

#include "mubcomp/count.hpp"
#include "mubcomp/project.hpp"

using namespace mubcomp;

namespace {

const std::vector<std::uint64_t> kEIH{2, 5, 17, 83, 557, 4715, 47357, 545963, 7087517, 102248075};
const std::vector<std::uint64_t> kEIHN{3, 11, 63, 563, 6783, 99971, 1724943, 34031603, 755385183};

BigCount pow2(int e) { return BigCount(1) << e; }

// Set partitions of {0..n-1} into exactly k blocks, counted as restricted growth strings.
std::uint64_t partitions(int n, int k) {
    std::uint64_t count = 0;
    std::function<void(int, int)> go = [&](int pos, int used) {
        if (pos == n) {
            count += used == k;
            return;
        }
        for (int b = 0; b <= used && b < k; ++b) go(pos + 1, std::max(used, b + 1));
    };
    go(0, 0);
    return count;
}

}  // namespace

TEST_CASE("stirling numbers of the second kind") {
    for (int n = 0; n <= 8; ++n) CHECK(stirling2(n, n) == 1);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(3, 0) == 0);
    CHECK(stirling2(2, 5) == 0);
    for (int n = 1; n <= 9; ++n)
        for (int k = 0; k <= n; ++k) CHECK(stirling2(n, k) == partitions(n, k));
    CHECK_THROWS_AS(stirling2(-1, 0), std::invalid_argument);
}

TEST_CASE("ordered Bell numbers") {
    for (int r = 1; r <= 3; ++r) CHECK(ordered_bell(r, 0) == 1);
    CHECK(ordered_bell(1, 3) == 13);
    CHECK(ordered_bell(2, 2) == 10);
    for (int r = 1; r <= 3; ++r)
        for (int n = 0; n <= 20; ++n) CHECK(ordered_bell(r, n) == ordered_bell_stirling(r, n));
    CHECK_THROWS_AS(ordered_bell(0, 3), std::invalid_argument);
}

TEST_CASE("array counts for small n") {
    CHECK(count_Bn_prime(0) == 1);
    CHECK(count_Bn_prime(1) == 4);
    CHECK(count_Bn_prime(2) == 20);
    CHECK(count_Bn(1) == 6);
    CHECK(count_Bn(2) == 32);
}

TEST_CASE("summation and closed forms of the array counts agree") {
    for (int n = 1; n <= 30; ++n) {
        CHECK(count_Bn_prime_sum(n) == count_Bn_prime_closed(n));
        CHECK(count_Bn_sum(n) == count_Bn_closed(n));
    }
}

TEST_CASE("pattern helpers match string classification") {
    for (int n = 1; n <= 10; ++n) {
        const auto split = classify_patterns(n);
        for (int k = 0; k < n; ++k) {
            const auto kk = static_cast<std::size_t>(k);
            CHECK(symmetric_patterns(n, k) == split.symmetric_patterns[kk]);
            CHECK(binomial(n - 1, k) == split.all_patterns[kk]);
            CHECK(asymmetric_patterns(n, k) == split.all_patterns[kk] - split.symmetric_patterns[kk]);
            CHECK(symmetric_patterns(n, k) * symmetric_letters(n, k) == split.symmetric_strings[kk]);
            CHECK(symmetric_letters(n, k) + asymmetric_letters(n, k) == pow2(n - k));
        }
    }
}

TEST_CASE("array counts equal letter strings up to block reversal times offsets") {
    for (int n = 1; n <= 12; ++n) {
        CHECK(BigCount(classify_reversal(n, true).classes) * pow2(n) == count_Bn_prime(n));
        CHECK(BigCount(classify_reversal(n, false).classes) * pow2(n) == count_Bn(n));
    }
}

TEST_CASE("unique-generation tables") {
    CHECK(count_EIH(1) == 2);
    CHECK(count_EIH(5) == 557);
    CHECK(count_EIHN(6) == 99971);
    for (std::size_t i = 0; i < kEIH.size(); ++i) CHECK(count_EIH(static_cast<int>(i) + 1) == kEIH[i]);
    for (std::size_t i = 0; i < kEIHN.size(); ++i) CHECK(count_EIHN(static_cast<int>(i) + 1) == kEIHN[i]);
    for (int n = 1; n <= 40; ++n) CHECK(count_EIHN(n) == count_EIHN_stirling(n));
    CHECK_THROWS_AS(count_EIH(0), std::invalid_argument);
}

TEST_CASE("criterion-A-only counts") {
    const std::vector<std::uint64_t> tilde_ihn{3, 15, 111, 1095, 13503, 199815};
    for (int n = 1; n <= 30; ++n) {
        const auto t = count_tildes(n);
        CHECK(t.e_ih == 2 * count_EIH(n) - pow2(n));
        CHECK(t.e_ihn == 2 * count_EIHN(n) - pow2(n + 1) + 1);
    }
    CHECK(count_tildes(5).e_ih == 1082);
    for (std::size_t i = 0; i < tilde_ihn.size(); ++i) CHECK(count_tildes(static_cast<int>(i) + 1).e_ihn == tilde_ihn[i]);
    // Independent check against the generator with only the block-ordering rule.
    for (int n = 1; n <= 7; ++n) CHECK(count_tildes(n).e_ih == count_canonical_reps(n, {false, false}));
}

TEST_CASE("asymptotic ratios") {
    const double ih = asymptotic_ratio(AsymptoticKind::IH, 10);
    const double ihn = asymptotic_ratio(AsymptoticKind::IHN, 9);
    CHECK(ih >= 0.99);
    CHECK(ih <= 1.01);
    CHECK(ihn >= 0.99);
    CHECK(ihn <= 1.01);
    const double first = asymptotic_ratio(AsymptoticKind::IH, 1);
    CHECK(std::isfinite(first));
    CHECK(first > 0);
    for (int n = 8; n < 10; ++n)
        CHECK(std::abs(asymptotic_ratio(AsymptoticKind::IH, n + 1) - 1) < std::abs(asymptotic_ratio(AsymptoticKind::IH, n) - 1));
    for (int n = 7; n < 9; ++n)
        CHECK(std::abs(asymptotic_ratio(AsymptoticKind::IHN, n + 1) - 1) < std::abs(asymptotic_ratio(AsymptoticKind::IHN, n) - 1));
}
