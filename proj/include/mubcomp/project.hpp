#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mubcomp/array.hpp"
#include "mubcomp/mub.hpp"

namespace mubcomp {

/// s[m] = f(x) with m = sum_j x_j 2^pi[j]. Throws std::invalid_argument on a size mismatch.
Sequence project(const ArrayFunction& f, const Projection& pi);

/// One (IH skeleton, pi) pair surviving the uniqueness criteria.
///
/// The skeleton is a sequence of blocks I^(c-1) R followed by t trailing I's. Within each block
/// and within the trailing run, pi is increasing.
struct CanonicalRep {
    std::vector<std::uint8_t> skeleton;  ///< 1 = R (H or N), 0 = I
    std::vector<int> blocks;             ///< block sizes c_1..c_m
    int trailing = 0;                    ///< t
    Projection pi;

    std::string skeleton_string() const;
};

/// Borrowed view handed to visitors; valid only during the callback.
struct RepView {
    std::span<const std::uint8_t> skeleton;
    std::span<const int> blocks;
    int trailing;
    std::span<const int> pi;
};

struct RepCriteria {
    bool reversal = true;    ///< criterion B: drop the larger of a skeleton and its block reversal
    bool palindrome = true;  ///< criterion C: halve the permutations of block-palindromic skeletons
};

namespace detail {

/// Prefix of the skeleton without its last R and trailing I's, read LSB-first with R = 1.
std::uint64_t prefix_value(std::span<const int> blocks);

/// True when the composition should be kept under criterion B.
inline bool keep_composition(std::span<const int> blocks) {
    std::vector<int> rev(blocks.rbegin(), blocks.rend());
    if (std::ranges::equal(rev, blocks)) return true;
    return prefix_value(blocks) < prefix_value(rev);
}

template <class Visitor>
class RepWalker {
public:
    RepWalker(int n, int t, std::vector<int> blocks, bool palindrome_rule, Visitor& visit)
        : n_(n), t_(t), blocks_(std::move(blocks)), visit_(visit) {
        const int m = static_cast<int>(blocks_.size());
        int offset = 0;
        for (int c : blocks_) {
            starts_.push_back(offset);
            sizes_.push_back(c);
            offset += c;
            for (int i = 0; i < c - 1; ++i) skeleton_.push_back(0);
            skeleton_.push_back(1);
        }
        if (t_ > 0) {
            starts_.push_back(offset);
            sizes_.push_back(t_);
        }
        skeleton_.resize(static_cast<std::size_t>(n_), 0);
        pi_.assign(static_cast<std::size_t>(n_), 0);
        masks_.assign(sizes_.size(), 0);
        palindrome_ = palindrome_rule && m >= 2 && std::ranges::equal(blocks_, std::vector<int>(blocks_.rbegin(), blocks_.rend()));
        half_ = m / 2;
    }

    void run() {
        if (sizes_.empty()) {
            leaf();
            return;
        }
        descend(0, (std::uint32_t{1} << n_) - 1U);
    }

private:
    void descend(std::size_t g, std::uint32_t avail) {
        if (g + 1 == sizes_.size()) {
            // Last group takes whatever remains, in increasing order.
            masks_[g] = avail;
            int v = starts_[g];
            for (std::uint32_t rest = avail; rest; rest &= rest - 1) pi_[static_cast<std::size_t>(v++)] = std::countr_zero(rest);
            leaf();
            return;
        }
        const int k = sizes_[g];
        int bits[32];
        int count = 0;
        for (std::uint32_t rest = avail; rest; rest &= rest - 1) bits[count++] = std::countr_zero(rest);
        int idx[32];
        for (int i = 0; i < k; ++i) idx[i] = i;
        const int start = starts_[g];
        while (true) {
            std::uint32_t chosen = 0;
            for (int i = 0; i < k; ++i) {
                pi_[static_cast<std::size_t>(start + i)] = bits[idx[i]];
                chosen |= std::uint32_t{1} << bits[idx[i]];
            }
            masks_[g] = chosen;
            descend(g + 1, avail & ~chosen);
            int i = k - 1;
            while (i >= 0 && idx[i] == count - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }

    void leaf() {
        if (palindrome_) {
            // Block reversal swaps the left and right off-centre blocks; keep the image whose
            // smallest off-centre bit sits on the left.
            std::uint32_t left = 0, right = 0;
            const std::size_t m = blocks_.size();
            for (std::size_t j = 0; j < half_; ++j) {
                left |= masks_[j];
                right |= masks_[m - 1 - j];
            }
            if (std::countr_zero(left) > std::countr_zero(right)) return;
        }
        visit_(RepView{skeleton_, blocks_, t_, pi_});
    }

    int n_;
    int t_;
    std::vector<int> blocks_;
    Visitor& visit_;
    std::vector<int> starts_, sizes_;
    std::vector<std::uint8_t> skeleton_;
    std::vector<int> pi_;
    std::vector<std::uint32_t> masks_;
    bool palindrome_ = false;
    std::size_t half_ = 0;
};

}  // namespace detail

/// Depth-first generation of every canonical representative for length n (n <= 31).
/// The visitor receives a RepView that is mutated in place between calls.
template <class Visitor>
void for_each_canonical_rep(int n, Visitor&& visit, RepCriteria criteria = {}) {
    if (n < 0 || n > 31) throw std::invalid_argument("for_each_canonical_rep: n out of range");
    for (int t = 0; t <= n; ++t) {
        const int len = n - t;
        if (len == 0) {
            detail::RepWalker<Visitor> walker(n, t, {}, criteria.palindrome, visit);
            walker.run();
            continue;
        }
        // Compositions of len: bit i of the cut mask splits after position i.
        for (std::uint32_t cuts = 0; cuts < (std::uint32_t{1} << (len - 1)); ++cuts) {
            std::vector<int> blocks;
            int run = 1;
            for (int i = 0; i < len - 1; ++i) {
                if ((cuts >> i) & 1U) {
                    blocks.push_back(run);
                    run = 1;
                } else {
                    ++run;
                }
            }
            blocks.push_back(run);
            if (criteria.reversal && !detail::keep_composition(blocks)) continue;
            detail::RepWalker<Visitor> walker(n, t, std::move(blocks), criteria.palindrome, visit);
            walker.run();
        }
    }
}

std::vector<CanonicalRep> canonical_reps(int n, RepCriteria criteria = {});
std::uint64_t count_canonical_reps(int n, RepCriteria criteria = {});

struct ExpandCounts {
    std::uint64_t strings = 0;    ///< sum over reps of 2^m (the IHN count)
    std::uint64_t sequences = 0;  ///< times 2^n offsets
};

/// Count mode of the expansion over {H,N} at each R and over all offsets r.
ExpandCounts expand_reps_count(int n, RepCriteria criteria = {});

/// Streams every expanded sequence together with its parameters. The sequence passed is the
/// projection of the k = 0 closed form.
using ExpandSink = std::function<void(const MubString&, const Projection&, const Sequence&)>;
void expand_reps(int n, const ExpandSink& sink, RepCriteria criteria = {});

struct BruteSequenceOptions {
    bool ih_only = false;
    bool zero_offsets = false;
    int ceiling = 5;
};

/// Phase-canonical distinct projections of closed_form(U, r, 0) over all U, r and pi.
/// Throws std::invalid_argument when n exceeds options.ceiling.
std::vector<Sequence> brute_force_sequences(int n, const BruteSequenceOptions& options = {});

}  // namespace mubcomp
