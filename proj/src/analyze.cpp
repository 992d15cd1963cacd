#include "mubcomp/analyze.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include <fftw3.h>

namespace mubcomp {

// ---------------------------------------------------------------------------
// LaurentAutocorrelation

LaurentAutocorrelation::LaurentAutocorrelation(std::vector<int> extents) : extents_(std::move(extents)) {
    std::size_t total = 1;
    strides_.reserve(extents_.size());
    for (int d : extents_) {
        if (d < 1) throw std::invalid_argument("LaurentAutocorrelation: extents must be positive");
        strides_.push_back(total);
        center_ += static_cast<std::size_t>(d - 1) * total;
        total *= static_cast<std::size_t>(2 * d - 1);
    }
    coeffs_.assign(total, GaussianInt{});
}

std::size_t LaurentAutocorrelation::flat_index(std::span<const int> lag) const {
    if (lag.size() != extents_.size()) throw std::invalid_argument("LaurentAutocorrelation: lag rank mismatch");
    std::size_t idx = 0;
    for (std::size_t j = 0; j < lag.size(); ++j) {
        const int d = extents_[j];
        if (lag[j] <= -d || lag[j] >= d) throw std::out_of_range("LaurentAutocorrelation: lag out of range");
        idx += static_cast<std::size_t>(lag[j] + d - 1) * strides_[j];
    }
    return idx;
}

std::vector<int> LaurentAutocorrelation::lag_of(std::size_t flat) const {
    std::vector<int> lag(extents_.size());
    for (std::size_t j = 0; j < extents_.size(); ++j) {
        const auto width = static_cast<std::size_t>(2 * extents_[j] - 1);
        lag[j] = static_cast<int>(flat % width) - (extents_[j] - 1);
        flat /= width;
    }
    return lag;
}

GaussianInt LaurentAutocorrelation::at(std::span<const int> lag) const { return coeffs_[flat_index(lag)]; }

GaussianInt LaurentAutocorrelation::at(int lag) const {
    const int l[1] = {lag};
    return at(std::span<const int>(l, 1));
}

LaurentAutocorrelation& LaurentAutocorrelation::operator+=(const LaurentAutocorrelation& o) {
    if (o.extents_ != extents_) throw std::invalid_argument("LaurentAutocorrelation: shape mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

namespace {

// Shared kernel: coords[x] is the flat lag-grid offset of point x, so the pair (x, y)
// lands at coords[x] - coords[y] + center. Phases are tallied per Z4 exponent.
void accumulate(LaurentAutocorrelation& out, std::span<const Symbol> values, std::span<const std::int64_t> coords) {
    std::vector<std::size_t> support;
    for (std::size_t x = 0; x < values.size(); ++x)
        if (!values[x].is_zero()) support.push_back(x);

    const auto center = static_cast<std::int64_t>(out.center());
    std::vector<std::int64_t> tally(out.size() * 4, 0);
    for (std::size_t x : support) {
        const int ex = values[x].exponent();
        const std::int64_t base = coords[x] + center;
        for (std::size_t y : support) {
            const int e = (ex - values[y].exponent()) & 3;
            ++tally[static_cast<std::size_t>(base - coords[y]) * 4 + static_cast<std::size_t>(e)];
        }
    }
    auto c = out.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::int64_t* t = &tally[i * 4];
        c[i] += GaussianInt{t[0] - t[2], t[1] - t[3]};
    }
}

std::vector<std::int64_t> array_coords(int n) {
    std::vector<std::int64_t> coords(std::size_t{1} << n, 0);
    for (std::size_t x = 0; x < coords.size(); ++x) {
        std::int64_t p = 1;
        for (int j = 0; j < n; ++j, p *= 3)
            if ((x >> j) & 1U) coords[x] += p;
    }
    return coords;
}

std::vector<std::int64_t> sequence_coords(std::size_t len) {
    std::vector<std::int64_t> coords(len);
    std::iota(coords.begin(), coords.end(), std::int64_t{0});
    return coords;
}

template <class T>
ComplementarityResult check_sum(std::span<const T> items) {
    if (items.empty()) throw std::invalid_argument("verify_complementary: empty set");
    LaurentAutocorrelation sum = autocorrelation(items.front());
    for (std::size_t i = 1; i < items.size(); ++i) sum += autocorrelation(items[i]);

    ComplementarityResult res;
    res.lambda = sum.zero_lag();
    const auto c = sum.coefficients();
    // Scan positive lags first, in increasing order; Hermitian symmetry covers the rest.
    for (std::size_t i = sum.center() + 1; i < c.size(); ++i) {
        if (!c[i].is_zero()) {
            res.offending_lag = sum.lag_of(i);
            res.residual = c[i];
            return res;
        }
    }
    for (std::size_t i = 0; i < sum.center(); ++i) {
        if (!c[i].is_zero()) {
            res.offending_lag = sum.lag_of(i);
            res.residual = c[i];
            return res;
        }
    }
    res.complementary = true;
    return res;
}

}  // namespace

LaurentAutocorrelation autocorrelation(const ArrayFunction& f) {
    LaurentAutocorrelation out(std::vector<int>(static_cast<std::size_t>(f.dims()), 2));
    const auto coords = array_coords(f.dims());
    accumulate(out, f.values(), coords);
    return out;
}

LaurentAutocorrelation autocorrelation(const Sequence& s) {
    if (s.values.empty()) throw std::invalid_argument("autocorrelation: empty sequence");
    LaurentAutocorrelation out({static_cast<int>(s.values.size())});
    const auto coords = sequence_coords(s.values.size());
    accumulate(out, s.values, coords);
    return out;
}

ComplementarityResult verify_complementary(std::span<const ArrayFunction> fs) {
    for (const auto& f : fs)
        if (f.dims() != fs.front().dims()) throw std::invalid_argument("verify_complementary: dimension mismatch");
    return check_sum(fs);
}

ComplementarityResult verify_complementary(std::span<const Sequence> ss) {
    for (const auto& s : ss)
        if (s.size() != ss.front().size()) throw std::invalid_argument("verify_complementary: length mismatch");
    return check_sum(ss);
}

// ---------------------------------------------------------------------------
// PAPR

namespace {

struct FftwBuffers {
    std::size_t n = 0;
    fftw_complex* in = nullptr;
    fftw_complex* out = nullptr;
    fftw_plan plan = nullptr;
    ~FftwBuffers() {
        if (plan) fftw_destroy_plan(plan);
        fftw_free(in);
        fftw_free(out);
    }
};

// The FFTW planner is not thread-safe; each thread keeps its own buffers and plans them under a lock.
std::mutex planner_mutex;

FftwBuffers& buffers_for(std::size_t grid) {
    thread_local std::unordered_map<std::size_t, std::unique_ptr<FftwBuffers>> cache;
    auto& slot = cache[grid];
    if (!slot) {
        auto b = std::make_unique<FftwBuffers>();
        b->n = grid;
        b->in = fftw_alloc_complex(grid);
        b->out = fftw_alloc_complex(grid);
        std::lock_guard lock(planner_mutex);
        b->plan = fftw_plan_dft_1d(static_cast<int>(grid), b->in, b->out, FFTW_FORWARD, FFTW_ESTIMATE);
        slot = std::move(b);
    }
    return *slot;
}

}  // namespace

double papr_spectrum(const Sequence& seq, std::size_t grid) {
    if (seq.values.empty()) throw std::invalid_argument("papr_spectrum: empty sequence");
    if (grid < seq.size()) throw std::invalid_argument("papr_spectrum: grid smaller than sequence length");
    const std::size_t norm = seq.support_size();
    if (norm == 0) throw std::invalid_argument("papr_spectrum: zero sequence");

    FftwBuffers& b = buffers_for(grid);
    for (std::size_t m = 0; m < grid; ++m) {
        const GaussianInt g = m < seq.size() ? seq.values[m].to_gaussian() : GaussianInt{};
        b.in[m][0] = static_cast<double>(g.re);
        b.in[m][1] = static_cast<double>(g.im);
    }
    fftw_execute(b.plan);
    double peak = 0.0;
    for (std::size_t m = 0; m < grid; ++m) peak = std::max(peak, b.out[m][0] * b.out[m][0] + b.out[m][1] * b.out[m][1]);
    return peak / static_cast<double>(norm);
}

// ---------------------------------------------------------------------------
// Pairwise inner products

namespace {

// Bit-sliced sequence: phase bits a0, a1 and support, one bit per position.
struct Packed {
    std::vector<std::uint64_t> lo, hi, supp;
    std::int64_t weight = 0;
};

Packed pack(const Sequence& s) {
    const std::size_t words = (s.size() + 63) / 64;
    Packed p;
    p.lo.assign(words, 0);
    p.hi.assign(words, 0);
    p.supp.assign(words, 0);
    for (std::size_t m = 0; m < s.size(); ++m) {
        if (s.values[m].is_zero()) continue;
        const std::uint64_t bit = std::uint64_t{1} << (m % 64);
        const int e = s.values[m].exponent();
        if (e & 1) p.lo[m / 64] |= bit;
        if (e & 2) p.hi[m / 64] |= bit;
        p.supp[m / 64] |= bit;
        ++p.weight;
    }
    return p;
}

// <f, g> as |.|^2 using the Z4 difference a - b computed with a borrow.
std::int64_t inner_norm(const Packed& f, const Packed& g) {
    std::int64_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
    for (std::size_t w = 0; w < f.lo.size(); ++w) {
        const std::uint64_t mask = f.supp[w] & g.supp[w];
        const std::uint64_t lo = f.lo[w] ^ g.lo[w];
        const std::uint64_t borrow = ~f.lo[w] & g.lo[w];
        const std::uint64_t hi = f.hi[w] ^ g.hi[w] ^ borrow;
        c0 += std::popcount(mask & ~hi & ~lo);
        c1 += std::popcount(mask & ~hi & lo);
        c2 += std::popcount(mask & hi & ~lo);
        c3 += std::popcount(mask & hi & lo);
    }
    const std::int64_t re = c0 - c2, im = c1 - c3;
    return re * re + im * im;
}

struct Partial {
    std::int64_t best_num = -1;
    std::int64_t best_den = 1;
    std::size_t i = 0, j = 0;
    std::uint64_t pairs = 0;
    std::unordered_map<std::uint64_t, std::uint64_t> hist;

    void offer(std::int64_t num, std::int64_t den, std::size_t a, std::size_t b, bool histogram) {
        ++pairs;
        if (histogram) ++hist[(static_cast<std::uint64_t>(num) << 32) | static_cast<std::uint64_t>(den)];
        if (best_num < 0 || num * best_den > best_num * den) {
            best_num = num;
            best_den = den;
            i = a;
            j = b;
        }
    }
};

}  // namespace

DeltaReport max_delta(std::span<const Sequence> input, const DeltaOptions& options) {
    if (input.empty()) throw std::invalid_argument("max_delta: empty set");
    const std::size_t len = input.front().size();
    std::set<Sequence> unique;
    for (const auto& s : input) {
        if (s.size() != len) throw std::invalid_argument("max_delta: length mismatch");
        if (s.support_size() == 0) throw std::invalid_argument("max_delta: zero sequence");
        unique.insert(canonicalize_phase(s));
    }

    DeltaReport report;
    report.set.assign(unique.begin(), unique.end());
    const std::size_t m = report.set.size();
    std::vector<Packed> packed;
    packed.reserve(m);
    for (const auto& s : report.set) packed.push_back(pack(s));
    if (m < 2) return report;

    unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
    std::vector<Partial> partials(threads);

    if (options.sample_pairs) {
        report.exhaustive = false;
        const std::uint64_t total = *options.sample_pairs;
        auto worker = [&](unsigned t) {
            std::mt19937_64 rng(options.seed + t);
            std::uniform_int_distribution<std::size_t> pick(0, m - 1);
            for (std::uint64_t s = t; s < total; s += threads) {
                std::size_t a = pick(rng), b = pick(rng);
                while (b == a) b = pick(rng);
                if (a > b) std::swap(a, b);
                partials[t].offer(inner_norm(packed[a], packed[b]), packed[a].weight * packed[b].weight, a, b,
                                  options.histogram);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, t);
        worker(0);
        for (auto& th : pool) th.join();
    } else {
        // Rows are dealt round-robin so the triangular workload stays balanced.
        auto worker = [&](unsigned t) {
            for (std::size_t a = t; a < m; a += threads)
                for (std::size_t b = a + 1; b < m; ++b)
                    partials[t].offer(inner_norm(packed[a], packed[b]), packed[a].weight * packed[b].weight, a, b,
                                      options.histogram);
        };
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, t);
        worker(0);
        for (auto& th : pool) th.join();
    }

    Partial merged;
    for (auto& p : partials) {
        merged.pairs += p.pairs;
        for (const auto& [k, v] : p.hist) merged.hist[k] += v;
        if (p.best_num < 0) continue;
        const bool better = merged.best_num < 0 || p.best_num * merged.best_den > merged.best_num * p.best_den;
        const bool tie_earlier = merged.best_num >= 0 && p.best_num * merged.best_den == merged.best_num * p.best_den &&
                                 std::pair(p.i, p.j) < std::pair(merged.i, merged.j);
        if (better || tie_earlier) {
            merged.best_num = p.best_num;
            merged.best_den = p.best_den;
            merged.i = p.i;
            merged.j = p.j;
        }
    }
    report.pair_count = merged.pairs;
    if (merged.best_num >= 0) {
        report.max_delta_squared = Rational(merged.best_num, merged.best_den);
        report.argmax_first = merged.i;
        report.argmax_second = merged.j;
    }
    for (const auto& [k, v] : merged.hist)
        report.histogram[Rational(static_cast<std::int64_t>(k >> 32), static_cast<std::int64_t>(k & 0xffffffffU))] += v;
    return report;
}

Rational overlap_bound(std::span<const Symbol> f, std::span<const Symbol> g) {
    if (f.size() != g.size()) throw std::invalid_argument("overlap_bound: length mismatch");
    std::int64_t sf = 0, sg = 0, common = 0;
    for (std::size_t x = 0; x < f.size(); ++x) {
        sf += !f[x].is_zero();
        sg += !g[x].is_zero();
        common += !f[x].is_zero() && !g[x].is_zero();
    }
    if (sf == 0 || sg == 0) throw std::invalid_argument("overlap_bound: zero-norm input");
    return Rational(common * common, sf * sg);
}

}  // namespace mubcomp
