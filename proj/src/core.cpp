#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "mubcomp/array.hpp"
#include "mubcomp/mub.hpp"
#include "mubcomp/rational.hpp"
#include "mubcomp/symbol.hpp"

namespace mubcomp {

std::string_view Symbol::str() const {
    switch (code_) {
        case 0: return "1";
        case 1: return "i";
        case 2: return "-1";
        case 3: return "-i";
        default: return "0";
    }
}

std::optional<Symbol> Symbol::parse(std::string_view text) {
    if (text == "0") return zero();
    if (text == "1") return phase(0);
    if (text == "i") return phase(1);
    if (text == "-1") return phase(2);
    if (text == "-i") return phase(3);
    return std::nullopt;
}

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q.numerator();
    if (q.denominator() != 1) os << '/' << q.denominator();
    return os.str();
}

// ---------------------------------------------------------------------------
// ArrayFunction / Sequence

ArrayFunction::ArrayFunction(int n) : ArrayFunction(n, std::vector<Symbol>(std::size_t{1} << n, Symbol::zero())) {}

ArrayFunction::ArrayFunction(int n, std::vector<Symbol> values) : n_(n), values_(std::move(values)) {
    if (n < 0 || n > 30) throw std::invalid_argument("ArrayFunction: dimension out of range");
    if (values_.size() != (std::size_t{1} << n)) throw std::invalid_argument("ArrayFunction: expected 2^n values");
}

std::size_t ArrayFunction::support_size() const {
    return static_cast<std::size_t>(std::ranges::count_if(values_, [](Symbol s) { return !s.is_zero(); }));
}

bool ArrayFunction::has_affine_support() const {
    std::vector<std::size_t> support;
    for (std::size_t x = 0; x < values_.size(); ++x)
        if (!values_[x].is_zero()) support.push_back(x);
    if (support.empty() || !std::has_single_bit(support.size())) return false;
    // Translate so the first support point is 0, then check closure under XOR.
    const std::size_t origin = support.front();
    std::vector<bool> in(values_.size(), false);
    for (std::size_t x : support) in[x ^ origin] = true;
    for (std::size_t a : support)
        for (std::size_t b : support)
            if (!in[(a ^ origin) ^ (b ^ origin)]) return false;
    return true;
}

std::size_t Sequence::support_size() const {
    return static_cast<std::size_t>(std::ranges::count_if(values, [](Symbol s) { return !s.is_zero(); }));
}

GaussianInt inner_product(std::span<const Symbol> f, std::span<const Symbol> g) {
    if (f.size() != g.size()) throw std::invalid_argument("inner_product: length mismatch");
    std::array<std::int64_t, 4> counts{};
    for (std::size_t x = 0; x < f.size(); ++x) {
        const Symbol p = f[x] * g[x].conj();
        if (!p.is_zero()) ++counts[static_cast<std::size_t>(p.exponent())];
    }
    return {counts[0] - counts[2], counts[1] - counts[3]};
}

GaussianInt inner_product(const ArrayFunction& f, const ArrayFunction& g) {
    if (f.dims() != g.dims()) throw std::invalid_argument("inner_product: dimension mismatch");
    return inner_product(f.values(), g.values());
}

Rational delta_squared(std::span<const Symbol> f, std::span<const Symbol> g) {
    const auto nonzero = [](std::span<const Symbol> v) {
        return static_cast<std::int64_t>(std::ranges::count_if(v, [](Symbol s) { return !s.is_zero(); }));
    };
    const std::int64_t nf = nonzero(f);
    const std::int64_t ng = nonzero(g);
    if (nf == 0 || ng == 0) throw std::invalid_argument("delta_squared: zero-norm input");
    return Rational(inner_product(f, g).norm(), nf * ng);
}

Rational delta_squared(const ArrayFunction& f, const ArrayFunction& g) {
    if (f.dims() != g.dims()) throw std::invalid_argument("delta_squared: dimension mismatch");
    return delta_squared(f.values(), g.values());
}

namespace {

void rotate_to_first_nonzero(std::span<Symbol> v) {
    const auto first = std::ranges::find_if(v, [](Symbol s) { return !s.is_zero(); });
    if (first == v.end()) return;
    const Symbol undo = first->conj();
    for (Symbol& s : v) s = s * undo;
}

}  // namespace

ArrayFunction canonicalize_phase(ArrayFunction f) {
    std::vector<Symbol> v(f.values().begin(), f.values().end());
    rotate_to_first_nonzero(v);
    return ArrayFunction(f.dims(), std::move(v));
}

Sequence canonicalize_phase(Sequence s) {
    rotate_to_first_nonzero(s.values);
    return s;
}

// ---------------------------------------------------------------------------
// MUB letters, words, projections

char to_char(MubLetter l) {
    switch (l) {
        case MubLetter::I: return 'I';
        case MubLetter::H: return 'H';
        case MubLetter::N: return 'N';
    }
    return '?';
}

std::array<std::array<Symbol, 2>, 2> unnormalized_matrix(MubLetter l) {
    const Symbol z = Symbol::zero(), one = Symbol::phase(0), i = Symbol::phase(1), m1 = Symbol::phase(2),
                 mi = Symbol::phase(3);
    switch (l) {
        case MubLetter::I: return {{{one, z}, {z, one}}};
        case MubLetter::H: return {{{one, one}, {one, m1}}};
        case MubLetter::N: return {{{one, i}, {one, mi}}};
    }
    return {};
}

std::optional<MubWord> parse_word(std::string_view text) {
    MubWord out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'I': out.push_back(MubLetter::I); break;
            case 'H': out.push_back(MubLetter::H); break;
            case 'N': out.push_back(MubLetter::N); break;
            default: return std::nullopt;
        }
    }
    return out;
}

std::string to_string(std::span<const MubLetter> word) {
    std::string s;
    s.reserve(word.size());
    for (MubLetter l : word) s.push_back(to_char(l));
    return s;
}

std::optional<std::vector<std::uint8_t>> parse_bits(std::string_view text) {
    std::vector<std::uint8_t> out;
    out.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') return std::nullopt;
        out.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return out;
}

std::string bits_to_string(std::span<const std::uint8_t> bits) {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

std::vector<MubWord> all_words(int n, bool ih_only) {
    const int base = ih_only ? 2 : 3;
    std::vector<MubWord> out;
    MubWord w(static_cast<std::size_t>(n), MubLetter::I);
    while (true) {
        out.push_back(w);
        // Odometer with the last position varying fastest.
        int j = n - 1;
        while (j >= 0 && static_cast<int>(w[static_cast<std::size_t>(j)]) == base - 1) {
            w[static_cast<std::size_t>(j)] = MubLetter::I;
            --j;
        }
        if (j < 0) break;
        w[static_cast<std::size_t>(j)] = static_cast<MubLetter>(static_cast<int>(w[static_cast<std::size_t>(j)]) + 1);
    }
    return out;
}

std::vector<std::uint8_t> bits_of(std::uint64_t mask, int n) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) bits[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>((mask >> j) & 1U);
    return bits;
}

void MubString::validate() const {
    if (u.size() != r.size()) throw std::invalid_argument("MubString: |u| != |r|");
    if (k != 0 && k != 1) throw std::invalid_argument("MubString: k must be 0 or 1");
    if (std::ranges::any_of(r, [](std::uint8_t b) { return b > 1; }))
        throw std::invalid_argument("MubString: r must be a bit vector");
    if (u.size() > 30) throw std::invalid_argument("MubString: length too large");
}

MubString MubString::parse(std::string_view u, std::string_view r, int k) {
    auto word = parse_word(u);
    if (!word) throw std::invalid_argument("MubString: letters must be from {I,H,N}");
    auto bits = parse_bits(r);
    if (!bits) throw std::invalid_argument("MubString: offsets must be a 0/1 string");
    MubString s{std::move(*word), std::move(*bits), k};
    s.validate();
    return s;
}

Projection::Projection(std::vector<int> pi) : pi_(std::move(pi)) {
    std::vector<bool> seen(pi_.size(), false);
    for (int v : pi_) {
        if (v < 0 || static_cast<std::size_t>(v) >= pi_.size() || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("Projection: not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Projection Projection::identity(int n) {
    std::vector<int> pi(static_cast<std::size_t>(n));
    std::iota(pi.begin(), pi.end(), 0);
    return Projection(std::move(pi));
}

}  // namespace mubcomp
