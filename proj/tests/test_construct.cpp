#include <catch_amalgamated.hpp>

#include <random>

#include "mubcomp/construct.hpp"

using namespace mubcomp;

namespace {

MubWord word(std::string_view s) { return *parse_word(s); }

// Reference evaluation of a generalized Boolean exponent, written independently of closed_form.
template <class Exponent, class Gate>
ArrayFunction tabulate(int n, Exponent e, Gate g) {
    ArrayFunction f(n);
    for (std::size_t idx = 0; idx < f.size(); ++idx) {
        std::vector<int> x(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) x[static_cast<std::size_t>(j)] = static_cast<int>((idx >> j) & 1U);
        f[idx] = g(x) ? Symbol::phase(e(x)) : Symbol::zero();
    }
    return f;
}

const auto always = [](const std::vector<int>&) { return true; };

}  // namespace

TEST_CASE("structure vectors") {
    auto sv = structure_vectors(word("HIININ"));
    CHECK(sv.p == std::vector<int>{0, 3, 5});
    CHECK(sv.l == std::vector<int>{3, 5});
    CHECK(sv.s == std::vector<int>{1, 2, 4});
    CHECK(sv.q == std::vector<int>{3, 3, 3, 5, 5, 6});
    CHECK(sv.t == 0);

    sv = structure_vectors(word("NIHII"));
    CHECK(sv.p == std::vector<int>{0, 2});
    CHECK(sv.l == std::vector<int>{0});
    CHECK(sv.s == std::vector<int>{1, 3, 4});
    CHECK(sv.q == std::vector<int>{2, 2, 5, 5, 5});
    CHECK(sv.b == std::vector<std::uint8_t>{0, 0, 0, 1, 1});

    sv = structure_vectors(word("II"));
    CHECK(sv.p.empty());
    CHECK(sv.s == std::vector<int>{0, 1});
    CHECK(sv.q == std::vector<int>{2, 2});
    CHECK(sv.b == std::vector<std::uint8_t>{1, 1});
    CHECK(sv.t == 2);
}

TEST_CASE("offset vector examples") {
    CHECK(offset_vector(word("HHH"), std::vector<std::uint8_t>{0, 0, 0}).w == std::vector<std::uint8_t>{0, 0, 0});
    CHECK(offset_vector(word("HH"), std::vector<std::uint8_t>{1, 0}).w == std::vector<std::uint8_t>{1, 0});
    // q = (1, 2): each w(i) is the single offset r(i).
    CHECK(offset_vector(word("IH"), std::vector<std::uint8_t>{1, 1}).w == std::vector<std::uint8_t>{1, 1});
    // q(0) = 2 here, so w(0) = r(0) + r(1).
    CHECK(offset_vector(word("IIH"), std::vector<std::uint8_t>{1, 1, 0}).w == std::vector<std::uint8_t>{0, 1, 0});
}

TEST_CASE("offset vector is a bijection for every letter string") {
    for (int n = 1; n <= 8; ++n) {
        std::mt19937_64 rng(static_cast<unsigned>(n));
        // Exhaustive over letter strings up to n = 5, sampled above.
        std::vector<MubWord> words;
        if (n <= 5) {
            words = all_words(n);
        } else {
            std::uniform_int_distribution<int> letter(0, 2);
            for (int i = 0; i < 40; ++i) {
                MubWord u;
                for (int j = 0; j < n; ++j) u.push_back(static_cast<MubLetter>(letter(rng)));
                words.push_back(u);
            }
        }
        for (const auto& u : words) {
            std::set<std::vector<std::uint8_t>> seen;
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) seen.insert(offset_vector(u, bits_of(m, n)).w);
            REQUIRE(seen.size() == (std::size_t{1} << n));
        }
    }
}

TEST_CASE("closed form examples") {
    const std::vector<std::uint8_t> z4(4, 0);
    CHECK(closed_form(MubString{word("HHHH"), z4, 0}) ==
          tabulate(4, [](const auto& x) { return 2 * (x[0] * x[1] + x[1] * x[2] + x[2] * x[3]); }, always));
    CHECK(closed_form(MubString{word("HNHN"), z4, 0}) ==
          tabulate(
              4, [](const auto& x) { return 2 * (x[0] * x[1] + x[1] * x[2] + x[2] * x[3]) + x[1] + x[3]; }, always));
    for (int k = 0; k < 2; ++k) {
        const auto expected = tabulate(
            5, [k](const auto& x) { return 2 * (k * x[2] + x[0] * x[2]) + x[0]; },
            [k](const auto& x) {
                return (x[1] + x[2] + 1) % 2 == 1 && (x[3] + k + 1) % 2 == 1 && (x[4] + k + 1) % 2 == 1;
            });
        CHECK(closed_form(MubString{word("NIHII"), std::vector<std::uint8_t>(5, 0), k}) == expected);
    }
}

TEST_CASE("matrix recursion examples") {
    auto pair = matrix_recursion(MubString::parse("H", "0"));
    CHECK(pair[0] == ArrayFunction(1, {Symbol::one(), Symbol::one()}));
    CHECK(pair[1] == ArrayFunction(1, {Symbol::one(), Symbol::phase(2)}));
    pair = matrix_recursion(MubString::parse("HH", "00"));
    CHECK(pair[0] == ArrayFunction(2, {Symbol::one(), Symbol::one(), Symbol::one(), Symbol::phase(2)}));
    pair = matrix_recursion(MubString::parse("N", "0"));
    CHECK(pair[0] == ArrayFunction(1, {Symbol::one(), Symbol::phase(1)}));
}

TEST_CASE("closed form equals the recursion up to a global phase") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& u : all_words(n)) {
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
                const auto r = bits_of(m, n);
                const auto rec = matrix_recursion(MubString{u, r, 0});
                for (int k = 0; k < 2; ++k) {
                    const auto f = closed_form(MubString{u, r, k});
                    REQUIRE(canonicalize_phase(f) == canonicalize_phase(rec[static_cast<std::size_t>(k)]));
                }
            }
        }
    }
}

TEST_CASE("support size and shape of constructed arrays") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& u : all_words(n)) {
            const auto sv = structure_vectors(u);
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
                const auto f = closed_form(MubString{u, bits_of(m, n), 0});
                REQUIRE(f.support_size() == (std::size_t{1} << (n - static_cast<int>(sv.s.size()))));
                REQUIRE(f.has_affine_support());
            }
        }
    }
}

TEST_CASE("compose_step examples") {
    // Variables: w = 0, y = 1.
    const auto w = LaurentPoly::monomial(0);
    const auto y = LaurentPoly::monomial(1);
    const auto one = LaurentPoly::constant({1, 0});
    PolyVector f{one + w, one - w};
    PolyMatrix u{{one, y}, {one, LaurentPoly::constant({-1, 0}) * y}};
    auto res = compose_step(u, f);
    CHECK(res.f[0] == one + w + y - w * y);
    CHECK(res.f[1] == one + w - y + w * y);
    CHECK(res.lambda.constant_value() == GaussianInt{8, 0});
    CHECK(lambda_of(res.f) == res.lambda);

    res = compose_step(PolyMatrix{{one}}, PolyVector{one});
    CHECK(res.f[0] == one);
    CHECK(res.lambda.constant_value() == GaussianInt{1, 0});

    res = compose_step(PolyMatrix{{one, one}, {one, LaurentPoly::constant({-1, 0})}}, PolyVector{one, one});
    CHECK(res.f[0] == LaurentPoly::constant({2, 0}));
    CHECK(res.f[1].is_zero());
    CHECK(res.lambda.constant_value() == GaussianInt{4, 0});
}

TEST_CASE("compose_step rejects bad inputs") {
    const auto w = LaurentPoly::monomial(0);
    const auto one = LaurentPoly::constant({1, 0});
    PolyVector f{one + w, one - w};
    CHECK_THROWS_AS(compose_step(PolyMatrix{{one, one}, {one, one}}, f), std::invalid_argument);
    CHECK_THROWS_AS(compose_step(PolyMatrix{{one, w}, {one, LaurentPoly::constant({-1, 0}) * w}}, f),
                    std::invalid_argument);
    CHECK_THROWS_AS(compose_step(PolyMatrix{{one}}, f), std::invalid_argument);
}

TEST_CASE("compose_step multiplies lambda on random unitary inputs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> letter(0, 2), phase(0, 3);
    const auto sym = [](Symbol s) { return LaurentPoly::constant(s.to_gaussian()); };
    for (int trial = 0; trial < 50; ++trial) {
        // F from a random two-step recursion in variables 0, 1; U a letter times diag(1, y^e) in variable 5.
        MubWord u0{static_cast<MubLetter>(letter(rng)), static_cast<MubLetter>(letter(rng))};
        const auto pair = matrix_recursion(MubString{u0, {0, 0}, 0});
        PolyVector f{array_polynomial(pair[0]), array_polynomial(pair[1])};
        const auto m = unnormalized_matrix(static_cast<MubLetter>(letter(rng)));
        const auto y = LaurentPoly::monomial(5, 1 + trial % 3);
        const auto g = sym(Symbol::phase(phase(rng)));
        PolyMatrix u{{g * sym(m[0][0]), g * sym(m[0][1]) * y}, {sym(m[1][0]), sym(m[1][1]) * y}};
        const auto res = compose_step(u, f);
        CHECK(lambda_of(res.f) == res.lambda);
        CHECK(res.lambda == LaurentPoly::constant(*unitary_lambda(u)) * lambda_of(f));
    }
}

TEST_CASE("set B_n has 6^n distinct arrays") {
    const auto b1 = build_set_Bn(1);
    CHECK(b1.size() == 6);
    const std::set<ArrayFunction> expected{
        ArrayFunction(1, {Symbol::one(), Symbol::zero()}),     ArrayFunction(1, {Symbol::zero(), Symbol::one()}),
        ArrayFunction(1, {Symbol::one(), Symbol::one()}),      ArrayFunction(1, {Symbol::one(), Symbol::phase(2)}),
        ArrayFunction(1, {Symbol::one(), Symbol::phase(1)}),   ArrayFunction(1, {Symbol::one(), Symbol::phase(3)}),
    };
    CHECK(std::set<ArrayFunction>(b1.begin(), b1.end()) == expected);
    // Every (U, r) gives a distinct array, so exact dedup keeps all 6^n of them.
    CHECK(build_set_Bn(2).size() == 36);
    CHECK(build_set_Bn(3).size() == 216);
    CHECK(build_set_Bn_prime(2).size() == 24);
    CHECK_THROWS_AS(build_set_Bn(3, 2), std::invalid_argument);
}

TEST_CASE("conjecture check finds no counterexample") {
    for (int n = 1; n <= 3; ++n) {
        const auto report = conjecture_check(n);
        CHECK(report.counterexamples.empty());
        CHECK(report.matched == report.type_i_count);
    }
    const auto r1 = conjecture_check(1);
    CHECK(r1.type_i_count == 8);
    CHECK(conjecture_check(2).type_i_count == 40);
    CHECK_THROWS_AS(conjecture_check(4), std::invalid_argument);
}
