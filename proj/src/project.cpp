#include "mubcomp/project.hpp"

#include <numeric>
#include <set>

#include "mubcomp/construct.hpp"

namespace mubcomp {

Sequence project(const ArrayFunction& f, const Projection& pi) {
    if (pi.size() != f.dims()) throw std::invalid_argument("project: permutation size does not match array");
    Sequence s;
    s.values.assign(f.size(), Symbol::zero());
    for (std::size_t x = 0; x < f.size(); ++x) {
        std::size_t m = 0;
        for (int j = 0; j < f.dims(); ++j) m |= ((x >> j) & 1U) << pi[j];
        s.values[m] = f[x];
    }
    return s;
}

std::string CanonicalRep::skeleton_string() const {
    std::string s;
    for (auto b : skeleton) s.push_back(b ? 'R' : 'I');
    return s;
}

namespace detail {

std::uint64_t prefix_value(std::span<const int> blocks) {
    std::uint64_t value = 0;
    int pos = 0;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        pos += blocks[j] - 1;
        // The last block's R is dropped.
        if (j + 1 < blocks.size()) value |= std::uint64_t{1} << pos++;
    }
    return value;
}

}  // namespace detail

std::vector<CanonicalRep> canonical_reps(int n, RepCriteria criteria) {
    std::vector<CanonicalRep> out;
    for_each_canonical_rep(
        n,
        [&](const RepView& v) {
            out.push_back(CanonicalRep{{v.skeleton.begin(), v.skeleton.end()},
                                       {v.blocks.begin(), v.blocks.end()},
                                       v.trailing,
                                       Projection(std::vector<int>(v.pi.begin(), v.pi.end()))});
        },
        criteria);
    return out;
}

std::uint64_t count_canonical_reps(int n, RepCriteria criteria) {
    std::uint64_t count = 0;
    for_each_canonical_rep(n, [&](const RepView&) { ++count; }, criteria);
    return count;
}

ExpandCounts expand_reps_count(int n, RepCriteria criteria) {
    ExpandCounts c;
    for_each_canonical_rep(n, [&](const RepView& v) { c.strings += std::uint64_t{1} << v.blocks.size(); }, criteria);
    c.sequences = c.strings << n;
    return c;
}

void expand_reps(int n, const ExpandSink& sink, RepCriteria criteria) {
    for_each_canonical_rep(
        n,
        [&](const RepView& v) {
            const Projection pi(std::vector<int>(v.pi.begin(), v.pi.end()));
            std::vector<std::size_t> r_positions;
            for (std::size_t j = 0; j < v.skeleton.size(); ++j)
                if (v.skeleton[j]) r_positions.push_back(j);
            MubString params{MubWord(v.skeleton.size(), MubLetter::I), std::vector<std::uint8_t>(v.skeleton.size(), 0), 0};
            for (std::uint32_t letters = 0; letters < (std::uint32_t{1} << r_positions.size()); ++letters) {
                for (std::size_t i = 0; i < r_positions.size(); ++i)
                    params.u[r_positions[i]] = ((letters >> i) & 1U) ? MubLetter::N : MubLetter::H;
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                    params.r = bits_of(mask, n);
                    sink(params, pi, project(closed_form(params), pi));
                }
            }
        },
        criteria);
}

std::vector<Sequence> brute_force_sequences(int n, const BruteSequenceOptions& options) {
    if (n < 1) throw std::invalid_argument("brute_force_sequences: n must be positive");
    if (n > options.ceiling) throw std::invalid_argument("brute_force_sequences: n exceeds the brute-force ceiling");
    std::vector<Projection> perms;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.emplace_back(p);
    } while (std::ranges::next_permutation(p).found);

    std::set<Sequence> found;
    for (const MubWord& u : all_words(n, options.ih_only)) {
        const std::uint64_t offsets = options.zero_offsets ? 1 : (std::uint64_t{1} << n);
        for (std::uint64_t mask = 0; mask < offsets; ++mask) {
            const ArrayFunction f = closed_form(MubString{u, bits_of(mask, n), 0});
            for (const auto& pi : perms) found.insert(canonicalize_phase(project(f, pi)));
        }
    }
    return {found.begin(), found.end()};
}

}  // namespace mubcomp
