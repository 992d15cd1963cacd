#include <catch_amalgamated.hpp>

#include <random>

#include "mubcomp/analyze.hpp"
#include "mubcomp/codebook.hpp"

using namespace mubcomp;

namespace {

MubWord word(std::string_view s) { return *parse_word(s); }

// A random pair satisfying cond1: each position gives its non-I letter to one of the two strings.
std::pair<MubWord, MubWord> random_pair(std::mt19937_64& rng, int n) {
    MubWord r0(static_cast<std::size_t>(n), MubLetter::I), r1 = r0;
    for (auto i = 0U; i < static_cast<unsigned>(n); ++i) {
        const MubLetter l = rng() % 2 ? MubLetter::H : MubLetter::N;
        (rng() % 2 ? r0 : r1)[i] = l;
    }
    return {r0, r1};
}

// Max pairwise delta through the analysis kernel, independent of the codebook's own loop.
Rational kernel_delta(const Codebook& cb) {
    std::vector<Sequence> seqs;
    for (const auto& c : cb.codewords) seqs.push_back(Sequence{{c.array.values().begin(), c.array.values().end()}});
    return max_delta(seqs).max_delta_squared;
}

Rational pow2_inv(int n) { return Rational(1, std::int64_t{1} << n); }

}  // namespace

TEST_CASE("first worked example") {
    const auto t = build_r2(word("IINIIHII"), word("HNIHHINN"));
    CHECK(t.w_aux == std::vector<int>{0, 0, 1, 1, 0, 1, 0, 0});
    CHECK(to_string(t.r2) == "NHNHNHHH");
    CHECK(has_odd_n_runs(t));
}

TEST_CASE("second worked example follows the position rule") {
    const auto t = build_r2(word("HIIIN"), word("IHHHI"));
    CHECK(to_string(t.u_aux) == "HHHHN");
    CHECK(has_odd_n_runs(t));
    const auto cb = build_codebook(t);
    CHECK(cb.delta_squared == pow2_inv(5));

    // The printed third string NNNNN breaks the odd-run invariant and the coherence target.
    RTriple printed = t;
    printed.r2 = word("NNNNN");
    CHECK_FALSE(has_odd_n_runs(printed));
    CHECK(build_codebook_from({printed.r0, printed.r1, printed.r2}).delta_squared > pow2_inv(5));
}

TEST_CASE("single-position triple") {
    const auto t = build_r2(word("H"), word("I"));
    CHECK(to_string(t.r2) == "N");
    CHECK(t.w_aux == std::vector<int>{0});
    const auto cb = build_codebook(t);
    CHECK(cb.N() == 6);
    CHECK(cb.K() == 2);
    CHECK(cb.delta_squared == Rational(1, 2));
}

TEST_CASE("cond1 is enforced") {
    CHECK(satisfies_cond1(word("IHN"), word("HII")));
    CHECK_FALSE(satisfies_cond1(word("IHN"), word("HIN")));
    CHECK_FALSE(satisfies_cond1(word("IH"), word("HHH")));
    CHECK_THROWS_AS(build_r2(word("IHI"), word("HHH")), std::invalid_argument);
    CHECK_THROWS_AS(build_r2(word("IH"), word("H")), std::invalid_argument);
}

TEST_CASE("every cond1 pair yields a valid triple") {
    for (int n = 1; n <= 8; ++n) {
        for (std::uint32_t owner = 0; owner < (1U << n); ++owner) {
            for (std::uint32_t letters = 0; letters < (1U << n); ++letters) {
                MubWord r0(static_cast<std::size_t>(n), MubLetter::I), r1 = r0;
                for (int i = 0; i < n; ++i)
                    (((owner >> i) & 1U) ? r1 : r0)[static_cast<std::size_t>(i)] = ((letters >> i) & 1U) ? MubLetter::N : MubLetter::H;
                REQUIRE(has_odd_n_runs(build_r2(r0, r1)));
            }
        }
    }
}

TEST_CASE("constructed codebooks reach coherence 2^-n exactly") {
    std::mt19937_64 rng(41);
    for (int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < (n <= 4 ? 12 : 4); ++trial) {
            const auto [r0, r1] = random_pair(rng, n);
            const auto cb = build_codebook(build_r2(r0, r1));
            CHECK(cb.N() == 3 * cb.K());
            CHECK(cb.delta_squared == pow2_inv(n));
            CHECK(kernel_delta(cb) == pow2_inv(n));
        }
    }
}

TEST_CASE("codewords within one family are orthogonal") {
    const auto cb = build_codebook(build_r2(word("IINIIHII"), word("HNIHHINN")));
    for (std::size_t a = 0; a < cb.codewords.size(); ++a)
        for (std::size_t b = a + 1; b < cb.codewords.size(); ++b)
            if (cb.codewords[a].family == cb.codewords[b].family)
                CHECK(inner_product(cb.codewords[a].array, cb.codewords[b].array).is_zero());
}

TEST_CASE("rejected inputs") {
    CHECK_THROWS_AS(build_codebook_from({word("HH"), word("HH")}), std::invalid_argument);
    CHECK_THROWS_AS(build_codebook_from({word("HH"), word("H")}), std::invalid_argument);
    CHECK_THROWS_AS(build_codebook_from({}), std::invalid_argument);
    RTriple bad = build_r2(word("IH"), word("HI"));
    bad.r2 = word("HH");
    CHECK_FALSE(has_odd_n_runs(bad));
    CHECK_THROWS_AS(build_codebook(bad), std::invalid_argument);
    CHECK_THROWS_AS(build_ih_codebook(word("IN")), std::invalid_argument);
}

TEST_CASE("welch bound ratios") {
    for (int n = 1; n <= 6; ++n) {
        MubWord r0(static_cast<std::size_t>(n), MubLetter::I), r1(static_cast<std::size_t>(n), MubLetter::H);
        const auto m = welch_metrics(build_codebook(build_r2(r0, r1)));
        REQUIRE(m.ratio_squared);
        CHECK(*m.ratio_squared == (Rational(3) - pow2_inv(n)) / Rational(2));
        CHECK(*m.ratio == Catch::Approx(std::sqrt((3.0 - std::ldexp(1.0, -n)) / 2)));
    }
    const auto m3 = welch_metrics(build_codebook(build_r2(word("III"), word("HHH"))));
    CHECK(m3.delta_squared == Rational(1, 8));
    CHECK(*m3.ratio_squared == Rational(23, 16));

    CHECK(welch_bound_squared(6, 2) == Rational(4, 10));
    CHECK(welch_bound_squared(4, 4) == Rational(0));
    CHECK_THROWS_AS(welch_bound_squared(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(welch_bound_squared(1, 1), std::invalid_argument);
}

TEST_CASE("two-family codebook") {
    for (int n = 1; n <= 6; ++n) {
        std::mt19937_64 rng(static_cast<std::uint64_t>(n));
        MubWord r0;
        for (int i = 0; i < n; ++i) r0.push_back(rng() % 2 ? MubLetter::H : MubLetter::I);
        const auto cb = build_ih_codebook(r0);
        CHECK(cb.N() == 2 * cb.K());
        CHECK(cb.delta_squared == pow2_inv(n));
        const auto m = welch_metrics(cb);
        CHECK(*m.ratio_squared == Rational(2) - pow2_inv(n));
    }
    const auto cb = build_ih_codebook(word("IH"));
    CHECK(cb.N() == 8);
    CHECK(cb.delta_squared == Rational(1, 4));
    CHECK(to_string(cb.families[1]) == "HI");
}

TEST_CASE("codebook counts") {
    CHECK(count_codebooks(1) == 1);
    CHECK(count_codebooks(2) == 6);
    CHECK(count_codebooks(3) == 28);
    for (int n = 1; n <= 3; ++n) CHECK(BigCount(count_codebooks_brute(n)) == count_codebooks(n));
    CHECK_THROWS_AS(count_codebooks_brute(5), std::invalid_argument);
}
