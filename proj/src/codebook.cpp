#include "mubcomp/codebook.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "mubcomp/construct.hpp"

namespace mubcomp {

bool satisfies_cond1(std::span<const MubLetter> r0, std::span<const MubLetter> r1) {
    if (r0.size() != r1.size()) return false;
    for (std::size_t i = 0; i < r0.size(); ++i)
        if (is_identity(r1[i]) == is_identity(r0[i])) return false;
    return true;
}

RTriple build_r2(std::span<const MubLetter> r0, std::span<const MubLetter> r1) {
    if (r0.size() != r1.size()) throw std::invalid_argument("build_r2: r0 and r1 differ in length");
    if (!satisfies_cond1(r0, r1)) throw std::invalid_argument("build_r2: r1[i] must be I exactly where r0[i] is not I");
    const std::size_t n = r0.size();
    RTriple t{MubWord(r0.begin(), r0.end()), MubWord(r1.begin(), r1.end()), MubWord(n, MubLetter::I), MubWord(n),
              std::vector<int>(n, 0)};
    // previous[j]: last position owned by source j (-1 before the first).
    int previous[2] = {-1, -1};
    for (std::size_t i = 0; i < n; ++i) {
        const int src = is_identity(r0[i]) ? 1 : 0;
        const MubLetter u = src == 0 ? r0[i] : r1[i];
        int w = 0;
        for (int h = previous[src] + 1; h < static_cast<int>(i); ++h)
            w += t.r2[static_cast<std::size_t>(h)] == MubLetter::N;
        const bool odd = w % 2 == 1;
        t.u_aux[i] = u;
        t.w_aux[i] = w;
        t.r2[i] = ((odd && u == MubLetter::H) || (!odd && u == MubLetter::N)) ? MubLetter::H : MubLetter::N;
        previous[src] = static_cast<int>(i);
    }
    return t;
}

bool has_odd_n_runs(const RTriple& t) {
    const std::size_t n = t.r0.size();
    if (t.r1.size() != n || t.r2.size() != n || !satisfies_cond1(t.r0, t.r1)) return false;
    int previous[2] = {-1, -1};
    for (std::size_t i = 0; i < n; ++i) {
        if (is_identity(t.r2[i])) return false;
        const int src = is_identity(t.r0[i]) ? 1 : 0;
        const MubLetter u = src == 0 ? t.r0[i] : t.r1[i];
        int count = u == MubLetter::N;
        for (int h = previous[src] + 1; h <= static_cast<int>(i); ++h) count += t.r2[static_cast<std::size_t>(h)] == MubLetter::N;
        if (count % 2 == 0) return false;
        previous[src] = static_cast<int>(i);
    }
    return true;
}

Codebook build_codebook_from(std::vector<MubWord> families) {
    if (families.empty()) throw std::invalid_argument("build_codebook: no families");
    Codebook cb;
    cb.n = static_cast<int>(families.front().size());
    for (const auto& f : families)
        if (static_cast<int>(f.size()) != cb.n) throw std::invalid_argument("build_codebook: family lengths differ");
    cb.families = std::move(families);

    std::set<ArrayFunction> seen;
    for (std::size_t fam = 0; fam < cb.families.size(); ++fam) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cb.n); ++mask) {
            auto r = bits_of(mask, cb.n);
            ArrayFunction a = closed_form(MubString{cb.families[fam], r, 0});
            if (!seen.insert(canonicalize_phase(a)).second)
                throw std::invalid_argument("build_codebook: duplicate codeword");
            cb.codewords.push_back(Codeword{static_cast<int>(fam), std::move(r), std::move(a)});
        }
    }
    for (std::size_t a = 0; a < cb.codewords.size(); ++a)
        for (std::size_t b = a + 1; b < cb.codewords.size(); ++b)
            cb.delta_squared = std::max(cb.delta_squared, delta_squared(cb.codewords[a].array, cb.codewords[b].array));
    return cb;
}

Codebook build_codebook(const RTriple& triple) {
    if (!has_odd_n_runs(triple)) throw std::invalid_argument("build_codebook: invalid triple");
    return build_codebook_from({triple.r0, triple.r1, triple.r2});
}

Codebook build_ih_codebook(std::span<const MubLetter> r0) {
    MubWord r1;
    for (MubLetter l : r0) {
        if (l == MubLetter::N) throw std::invalid_argument("build_ih_codebook: r0 must be over {I,H}");
        r1.push_back(is_identity(l) ? MubLetter::H : MubLetter::I);
    }
    return build_codebook_from({MubWord(r0.begin(), r0.end()), r1});
}

Rational welch_bound_squared(std::size_t N, std::size_t K) {
    if (N < K) throw std::invalid_argument("welch_bound: N < K");
    if (N < 2) throw std::invalid_argument("welch_bound: need at least two codewords");
    return Rational(static_cast<std::int64_t>(N - K), static_cast<std::int64_t>(K * (N - 1)));
}

WelchMetrics welch_metrics(const Codebook& cb) {
    WelchMetrics m;
    m.delta_squared = cb.delta_squared;
    m.welch_bound_squared = welch_bound_squared(cb.N(), cb.K());
    m.delta = std::sqrt(boost::rational_cast<double>(m.delta_squared));
    m.welch_bound = std::sqrt(boost::rational_cast<double>(m.welch_bound_squared));
    if (m.welch_bound_squared.numerator() != 0) {
        m.ratio_squared = m.delta_squared / m.welch_bound_squared;
        m.ratio = std::sqrt(boost::rational_cast<double>(*m.ratio_squared));
    }
    return m;
}

BigCount count_codebooks(int n) {
    if (n < 1) throw std::invalid_argument("count_codebooks: n must be positive");
    BigCount p = 1;
    p <<= n;
    return (p / 2) * (p - 1);
}

std::size_t count_codebooks_brute(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("count_codebooks_brute: n must be in 1..4");
    std::set<std::set<ArrayFunction>> books;
    // Each position: which string is non-I (bit of owner) and its letter (bit of letters).
    for (std::uint32_t owner = 0; owner < (1U << n); ++owner) {
        for (std::uint32_t letters = 0; letters < (1U << n); ++letters) {
            MubWord r0(static_cast<std::size_t>(n), MubLetter::I), r1 = r0;
            for (int i = 0; i < n; ++i) {
                const MubLetter l = ((letters >> i) & 1U) ? MubLetter::N : MubLetter::H;
                (((owner >> i) & 1U) ? r1 : r0)[static_cast<std::size_t>(i)] = l;
            }
            const Codebook cb = build_codebook(build_r2(r0, r1));
            std::set<ArrayFunction> key;
            for (const auto& c : cb.codewords) key.insert(canonicalize_phase(c.array));
            books.insert(std::move(key));
        }
    }
    return books.size();
}

}  // namespace mubcomp
