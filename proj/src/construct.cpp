#include "mubcomp/construct.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace mubcomp {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

}  // namespace

StructureVectors structure_vectors(std::span<const MubLetter> u) {
    const int n = static_cast<int>(u.size());
    StructureVectors sv;
    sv.q.assign(at(n), n);
    sv.b.assign(at(n), 0);
    for (int j = 0; j < n; ++j) {
        if (is_identity(u[at(j)])) {
            sv.s.push_back(j);
        } else {
            sv.p.push_back(j);
            if (u[at(j)] == MubLetter::N) sv.l.push_back(j);
        }
    }
    int next = n;
    for (int v = n - 1; v >= 0; --v) {
        sv.q[at(v)] = next;
        if (!is_identity(u[at(v)])) next = v;
    }
    while (sv.t < n && is_identity(u[at(n - 1 - sv.t)])) ++sv.t;
    for (int j = n - sv.t; j < n; ++j) sv.b[at(j)] = 1;
    return sv;
}

OffsetVector offset_vector(std::span<const MubLetter> u, std::span<const std::uint8_t> r) {
    if (u.size() != r.size()) throw std::invalid_argument("offset_vector: |u| != |r|");
    const StructureVectors sv = structure_vectors(u);
    OffsetVector out;
    out.w.resize(u.size());
    for (int i = 0; i < static_cast<int>(u.size()); ++i) {
        unsigned acc = 0;
        for (int h = i; h < sv.q[at(i)]; ++h) acc ^= r[at(h)];
        out.w[at(i)] = static_cast<std::uint8_t>(acc);
    }
    return out;
}

ArrayFunction closed_form(const MubString& params) {
    params.validate();
    const int n = params.length();
    const int k = params.k;
    const StructureVectors sv = structure_vectors(params.u);
    const OffsetVector w = offset_vector(params.u, params.r);

    std::vector<Symbol> values(std::size_t{1} << n, Symbol::zero());
    // x_n is the boundary variable, always 0.
    const auto bit = [](std::size_t x, int j) { return static_cast<int>((x >> j) & 1U); };
    for (std::size_t x = 0; x < values.size(); ++x) {
        bool gate = true;
        for (int s : sv.s) {
            const int sum = bit(x, s) + bit(x, sv.q[at(s)]) + k * sv.b[at(s)] + w.w[at(s)];
            if (sum & 1) {
                gate = false;
                break;
            }
        }
        if (!gate) continue;

        int quad = 0;
        if (!sv.p.empty()) quad += k * bit(x, sv.p.back());
        for (int pj : sv.p) quad += w.w[at(pj)] * bit(x, pj);
        for (std::size_t j = 0; j + 1 < sv.p.size(); ++j) quad += bit(x, sv.p[j]) * bit(x, sv.p[j + 1]);
        int lin = 0;
        for (int lj : sv.l) lin += bit(x, lj);
        values[x] = Symbol::phase(2 * quad + lin);
    }
    return ArrayFunction(n, std::move(values));
}

std::array<ArrayFunction, 2> matrix_recursion(const MubString& params) {
    params.validate();
    const int n = params.length();
    std::array<std::vector<Symbol>, 2> f{std::vector<Symbol>{Symbol::one()}, std::vector<Symbol>{Symbol::one()}};
    for (int j = 0; j < n; ++j) {
        const auto m = unnormalized_matrix(params.u[at(j)]);
        const std::size_t half = std::size_t{1} << j;
        std::array<std::vector<Symbol>, 2> out;
        for (int a = 0; a < 2; ++a) {
            out[at(a)].assign(half * 2, Symbol::zero());
            // U[a][b] multiplies z_j^b, which is the upper half of the new index range.
            for (int b = 0; b < 2; ++b)
                for (std::size_t x = 0; x < half; ++x)
                    out[at(a)][x | (static_cast<std::size_t>(b) << j)] = m[at(a)][at(b)] * f[at(b)][x];
        }
        if (params.r[at(j)]) std::swap(out[0], out[1]);
        f = std::move(out);
    }
    return {ArrayFunction(n, std::move(f[0])), ArrayFunction(n, std::move(f[1]))};
}

ArrayFunction permute_variables(const ArrayFunction& f, const Projection& pi) {
    if (pi.size() != f.dims()) throw std::invalid_argument("permute_variables: size mismatch");
    ArrayFunction out(f.dims());
    for (std::size_t x = 0; x < f.size(); ++x) {
        std::size_t y = 0;
        for (int j = 0; j < f.dims(); ++j) y |= ((x >> j) & 1U) << pi[j];
        out[y] = f[x];
    }
    return out;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::constant(GaussianInt c) {
    LaurentPoly p;
    p.add_term({}, c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int var, int exp, GaussianInt c) {
    LaurentPoly p;
    if (exp == 0)
        p.add_term({}, c);
    else
        p.add_term({{var, exp}}, c);
    return p;
}

void LaurentPoly::add_term(const Monomial& m, GaussianInt c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<GaussianInt> LaurentPoly::constant_value() const {
    if (terms_.empty()) return GaussianInt{0, 0};
    if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
    return std::nullopt;
}

std::set<int> LaurentPoly::variables() const {
    std::set<int> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m) vars.insert(v);
    return vars;
}

GaussianInt LaurentPoly::coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? GaussianInt{0, 0} : it->second;
}

LaurentPoly LaurentPoly::reciprocal_conj() const {
    LaurentPoly out;
    for (const auto& [m, c] : terms_) {
        Monomial inv = m;
        for (auto& [v, e] : inv) e = -e;
        out.add_term(inv, c.conj());
    }
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            // Merge two sorted (var, exp) lists, dropping cancelled exponents.
            LaurentPoly::Monomial m;
            std::size_t i = 0, j = 0;
            while (i < ma.size() || j < mb.size()) {
                if (j == mb.size() || (i < ma.size() && ma[i].first < mb[j].first)) {
                    m.push_back(ma[i++]);
                } else if (i == ma.size() || mb[j].first < ma[i].first) {
                    m.push_back(mb[j++]);
                } else {
                    const int e = ma[i].second + mb[j].second;
                    if (e != 0) m.emplace_back(ma[i].first, e);
                    ++i;
                    ++j;
                }
            }
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c << ')';
        for (const auto& [v, e] : m) {
            os << "*z" << v;
            if (e != 1) os << '^' << e;
        }
    }
    return os.str();
}

LaurentPoly array_polynomial(const ArrayFunction& f, int first_var) {
    LaurentPoly p;
    for (std::size_t x = 0; x < f.size(); ++x) {
        if (f[x].is_zero()) continue;
        LaurentPoly term = LaurentPoly::constant(f[x].to_gaussian());
        for (int j = 0; j < f.dims(); ++j)
            if ((x >> j) & 1U) term = term * LaurentPoly::monomial(first_var + j);
        p += term;
    }
    return p;
}

LaurentPoly lambda_of(const PolyVector& f) {
    LaurentPoly acc;
    for (const auto& fk : f) acc += fk * fk.reciprocal_conj();
    return acc;
}

std::optional<GaussianInt> unitary_lambda(const PolyMatrix& u) {
    const std::size_t s = u.size();
    if (s == 0) return std::nullopt;
    for (const auto& row : u)
        if (row.size() != s) return std::nullopt;
    std::optional<GaussianInt> lambda;
    for (std::size_t a = 0; a < s; ++a) {
        for (std::size_t b = 0; b < s; ++b) {
            LaurentPoly entry;
            for (std::size_t c = 0; c < s; ++c) entry += u[a][c] * u[b][c].reciprocal_conj();
            const auto value = entry.constant_value();
            if (!value) return std::nullopt;
            if (a != b) {
                if (!value->is_zero()) return std::nullopt;
            } else if (!lambda) {
                lambda = *value;
            } else if (*lambda != *value) {
                return std::nullopt;
            }
        }
    }
    if (!lambda || lambda->is_zero()) return std::nullopt;
    return lambda;
}

ComposeResult compose_step(const PolyMatrix& u, const PolyVector& f) {
    if (u.size() != f.size()) throw std::invalid_argument("compose_step: matrix size does not match vector size");
    const auto lambda_u = unitary_lambda(u);
    if (!lambda_u) throw std::invalid_argument("compose_step: U is not unitary up to a constant");

    std::set<int> f_vars;
    for (const auto& p : f) f_vars.merge(p.variables());
    for (const auto& row : u)
        for (const auto& p : row)
            for (int v : p.variables())
                if (f_vars.contains(v)) throw std::invalid_argument("compose_step: U and F share a variable");

    ComposeResult out;
    out.f.resize(f.size());
    for (std::size_t a = 0; a < u.size(); ++a)
        for (std::size_t b = 0; b < f.size(); ++b) out.f[a] += u[a][b] * f[b];
    out.lambda = LaurentPoly::constant(*lambda_u) * lambda_of(f);
    return out;
}

// ---------------------------------------------------------------------------
// Brute-force sets

namespace {

std::vector<ArrayFunction> collect_arrays(int n, int ceiling, bool prime_only) {
    if (n < 0) throw std::invalid_argument("build_set_Bn: negative n");
    if (n > ceiling) throw std::invalid_argument("build_set_Bn: n exceeds the brute-force ceiling");
    std::set<ArrayFunction> found;
    for (const MubWord& u : all_words(n)) {
        if (prime_only && (n == 0 || is_identity(u.back()))) continue;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
            found.insert(canonicalize_phase(closed_form(MubString{u, bits_of(mask, n), 0})));
    }
    return {found.begin(), found.end()};
}

}  // namespace

std::vector<ArrayFunction> build_set_Bn(int n, int ceiling) { return collect_arrays(n, ceiling, false); }

std::vector<ArrayFunction> build_set_Bn_prime(int n, int ceiling) { return collect_arrays(n, ceiling, true); }

// ---------------------------------------------------------------------------
// Conjecture check

namespace {

// Real-valued autocorrelation over the 3^n lag grid, lag digit (d_j + 1) in base 3.
std::vector<int> real_autocorrelation(const std::vector<int>& a, int n) {
    std::vector<int> t3(a.size(), 0);
    int center = 0;
    for (int j = 0, p = 1; j < n; ++j, p *= 3) center += p;
    for (std::size_t x = 0; x < a.size(); ++x)
        for (int j = 0, p = 1; j < n; ++j, p *= 3)
            if ((x >> j) & 1U) t3[x] += p;
    std::vector<int> out(static_cast<std::size_t>(2 * center + 1), 0);
    for (std::size_t x = 0; x < a.size(); ++x) {
        if (a[x] == 0) continue;
        for (std::size_t y = 0; y < a.size(); ++y)
            if (a[y] != 0) out[static_cast<std::size_t>(t3[x] - t3[y] + center)] += a[x] * a[y];
    }
    return out;
}

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ULL;
        for (int x : v) h = (h ^ static_cast<std::size_t>(x + 1000)) * 1099511628211ULL;
        return h;
    }
};

std::vector<int> to_ints(const ArrayFunction& f) {
    std::vector<int> out(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) out[x] = static_cast<int>(f[x].to_gaussian().re);
    return out;
}

std::vector<int> sign_canonical(std::vector<int> a) {
    const auto first = std::ranges::find_if(a, [](int v) { return v != 0; });
    if (first != a.end() && *first < 0)
        for (int& v : a) v = -v;
    return a;
}

}  // namespace

ConjectureReport conjecture_check(int n) {
    if (n < 1 || n > 3) throw std::invalid_argument("conjecture_check: n must be in 1..3");
    const std::size_t len = std::size_t{1} << n;
    std::size_t total = 1;
    for (std::size_t i = 0; i < len; ++i) total *= 3;

    // All nonzero arrays over {0,1,-1} and the off-centre part of their autocorrelations.
    std::vector<std::vector<int>> arrays;
    std::vector<std::vector<int>> keys;
    arrays.reserve(total);
    keys.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<int> a(len);
        std::size_t c = code;
        for (std::size_t x = 0; x < len; ++x, c /= 3) a[x] = static_cast<int>(c % 3) - 1;
        if (std::ranges::all_of(a, [](int v) { return v == 0; })) continue;
        auto ac = real_autocorrelation(a, n);
        ac[ac.size() / 2] = 0;
        arrays.push_back(std::move(a));
        keys.push_back(std::move(ac));
    }
    const std::unordered_set<std::vector<int>, VecHash> key_set(keys.begin(), keys.end());

    // The {I,H} closed forms, in fixed variable order and closed under permutations.
    std::set<std::vector<int>> literal;
    std::set<std::vector<int>> closed;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (const MubWord& u : all_words(n, true)) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            const ArrayFunction f = closed_form(MubString{u, bits_of(mask, n), 0});
            literal.insert(sign_canonical(to_ints(f)));
            for (int j = 0; j < n; ++j) perm[at(j)] = j;
            do {
                closed.insert(sign_canonical(to_ints(permute_variables(f, Projection(perm)))));
            } while (std::ranges::next_permutation(perm).found);
        }
    }

    ConjectureReport report;
    report.n = n;
    for (std::size_t i = 0; i < arrays.size(); ++i) {
        std::vector<int> neg = keys[i];
        for (int& v : neg) v = -v;
        if (!key_set.contains(neg)) continue;
        ++report.type_i_count;
        const auto canon = sign_canonical(arrays[i]);
        if (closed.contains(canon)) {
            ++report.matched;
        } else {
            std::vector<Symbol> vals;
            for (int v : arrays[i]) vals.push_back(v == 0 ? Symbol::zero() : Symbol::phase(v > 0 ? 0 : 2));
            report.counterexamples.emplace_back(n, std::move(vals));
        }
        if (!literal.contains(canon)) ++report.literal_misses;
    }
    return report;
}

}  // namespace mubcomp
