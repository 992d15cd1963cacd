#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mubcomp/array.hpp"
#include "mubcomp/gaussian.hpp"
#include "mubcomp/mub.hpp"

namespace mubcomp {

/// Auxiliary index vectors of a letter string.
///
/// p: non-I positions, l: N positions, s: I positions (all ascending).
/// q[v]: the next non-I position after v, or n if there is none.
/// b[j] = 1 for the t trailing I positions.
struct StructureVectors {
    std::vector<int> p;
    std::vector<int> l;
    std::vector<int> s;
    std::vector<int> q;
    std::vector<std::uint8_t> b;
    int t = 0;
};

StructureVectors structure_vectors(std::span<const MubLetter> u);

/// Offsets as they appear in the closed form: w(i) = r(i) + ... + r(q(i)-1) mod 2.
struct OffsetVector {
    std::vector<std::uint8_t> w;
};

/// Throws std::invalid_argument when |u| != |r|.
OffsetVector offset_vector(std::span<const MubLetter> u, std::span<const std::uint8_t> r);

/// Direct evaluation of the closed-form generalized Boolean function for (u, r, k).
ArrayFunction closed_form(const MubString& params);

/// Iterates F_j = P_j U_j V_j(z_j) F_{j-1} from (1,1). Returns both members; params.k is ignored.
std::array<ArrayFunction, 2> matrix_recursion(const MubString& params);

// ---------------------------------------------------------------------------
// Generic one-step composition over multivariate Laurent polynomials.

/// Multivariate Laurent polynomial with Gaussian-integer coefficients.
/// A monomial is a sorted list of (variable, nonzero exponent) pairs.
class LaurentPoly {
public:
    using Monomial = std::vector<std::pair<int, int>>;

    LaurentPoly() = default;
    static LaurentPoly constant(GaussianInt c);
    /// c * z_var^exp
    static LaurentPoly monomial(int var, int exp = 1, GaussianInt c = {1, 0});

    const std::map<Monomial, GaussianInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// The coefficient when the polynomial is a constant (including zero).
    std::optional<GaussianInt> constant_value() const;
    std::set<int> variables() const;
    GaussianInt coefficient(const Monomial& m) const;

    /// F*(z^-1): conjugate coefficients and negate exponents.
    LaurentPoly reciprocal_conj() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    std::string str() const;

private:
    void add_term(const Monomial& m, GaussianInt c);
    std::map<Monomial, GaussianInt> terms_;
};

using PolyVector = std::vector<LaurentPoly>;
using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

/// Polynomial vector of a single array: F(z) = sum_x f(x) z^x, variables 0..n-1.
LaurentPoly array_polynomial(const ArrayFunction& f, int first_var = 0);

/// sum_k F_k(z) F_k*(z^-1).
LaurentPoly lambda_of(const PolyVector& f);

/// Returns lambda when U(y) U^dagger(y^-1) = lambda * Identity for a constant lambda.
std::optional<GaussianInt> unitary_lambda(const PolyMatrix& u);

struct ComposeResult {
    PolyVector f;
    LaurentPoly lambda;
};

/// F' = U F with lambda_F' = lambda_U * lambda_F. Throws std::invalid_argument when U is
/// not square of size |F|, not unitary up to a constant, or shares variables with F.
ComposeResult compose_step(const PolyMatrix& u, const PolyVector& f);

/// Relabels variables: result(y) = f(x) where bit pi[j] of y is x_j.
ArrayFunction permute_variables(const ArrayFunction& f, const Projection& pi);

// ---------------------------------------------------------------------------
// Brute-force sets

inline constexpr int kDefaultBruteCeiling = 6;

/// All distinct k = 0 arrays over every (U, r) of length n, phase-canonical and sorted.
/// Throws std::invalid_argument when n > ceiling.
std::vector<ArrayFunction> build_set_Bn(int n, int ceiling = kDefaultBruteCeiling);

/// Same, restricted to strings whose last letter is not I.
std::vector<ArrayFunction> build_set_Bn_prime(int n, int ceiling = kDefaultBruteCeiling);

struct ConjectureReport {
    int n = 0;
    /// Arrays over {0,1,-1} that have a complementary partner over the same alphabet.
    std::size_t type_i_count = 0;
    /// Type-I arrays equal to an {I,H} closed form after a variable permutation and sign.
    std::size_t matched = 0;
    /// Type-I arrays not matched by the same {I,H} form in the fixed variable order.
    std::size_t literal_misses = 0;
    std::vector<ArrayFunction> counterexamples;
};

/// Exhaustive search over {0,1,-1}^(2^n). Throws std::invalid_argument for n > 3.
ConjectureReport conjecture_check(int n);

}  // namespace mubcomp
