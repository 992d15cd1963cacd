#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mubcomp/analyze.hpp"
#include "mubcomp/codebook.hpp"
#include "mubcomp/construct.hpp"
#include "mubcomp/count.hpp"
#include "mubcomp/project.hpp"
#include "mubcomp/records.hpp"

using namespace mubcomp;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kFail = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int brute_ceiling(int fallback) {
    if (const char* env = std::getenv("MUBCOMP_BRUTE_MAX_N")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw UsageError("MUBCOMP_BRUTE_MAX_N must be an integer");
        }
    }
    return fallback;
}

MubWord word_or_throw(const std::string& text, int n, const char* flag) {
    auto w = parse_word(text);
    if (!w || static_cast<int>(w->size()) != n)
        throw UsageError(std::string(flag) + " must be " + std::to_string(n) + " letters from {I,H,N}");
    return *w;
}

std::string digits(const std::vector<int>& w) {
    bool wide = false;
    for (int v : w) wide = wide || v > 9;
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (wide && i) s.push_back(',');
        s += std::to_string(w[i]);
    }
    return s;
}

// ---- arrays ---------------------------------------------------------------

struct ArraysArgs {
    int n = 0;
    std::string u, r, k = "0", pi, format = "json", out;
};

int run_arrays(const ArraysArgs& a) {
    MubString params;
    try {
        params = MubString::parse(a.u, a.r, 0);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (params.length() != a.n) throw UsageError("--u and --r must have length --n");
    std::vector<int> ks;
    if (a.k == "both") ks = {0, 1};
    else if (a.k == "0" || a.k == "1") ks = {a.k == "1"};
    else throw UsageError("--k must be 0, 1 or both");

    std::optional<Projection> pi;
    if (!a.pi.empty()) {
        try {
            pi = Projection(parse_pi(a.pi));
        } catch (const std::exception&) {
            throw UsageError("--pi must be a permutation of 0..n-1 as a comma list");
        }
        if (pi->size() != a.n) throw UsageError("--pi must have n entries");
    }

    const int num_i = static_cast<int>(structure_vectors(params.u).s.size());
    std::vector<SequenceRecord> recs;
    for (int k : ks) {
        params.k = k;
        const ArrayFunction f = closed_form(params);
        SequenceRecord rec;
        rec.n = a.n;
        rec.u = a.u;
        rec.r = a.r;
        rec.k = k;
        if (pi) {
            rec.pi = std::vector<int>(pi->values().begin(), pi->values().end());
            rec.values = project(f, *pi).values;
        } else {
            rec.values.assign(f.values().begin(), f.values().end());
        }
        rec.meta = SequenceRecord::Meta{num_i, std::int64_t{1} << (a.n - num_i + 1), std::int64_t{1} << (a.n - num_i)};
        recs.push_back(std::move(rec));
    }

    const RecordFormat fmt = a.format == "csv" ? RecordFormat::Csv : RecordFormat::Json;
    if (a.out.empty()) {
        write_records(std::cout, recs, fmt);
    } else {
        std::ofstream os(a.out);
        if (!os) throw UsageError("cannot open " + a.out);
        write_records(os, recs, fmt);
    }
    return kOk;
}

// ---- enumerate ------------------------------------------------------------

struct EnumerateArgs {
    int n = 0;
    std::string what;
    bool brute = false;
};

int run_enumerate(const EnumerateArgs& a) {
    if (a.n < 1) throw UsageError("--n must be positive");
    const bool arrays = a.what == "arrays" || a.what == "prime";
    const int ceiling = brute_ceiling(arrays ? kDefaultBruteCeiling : 5);
    if (a.brute && a.n > ceiling)
        throw UsageError("--brute limited to n <= " + std::to_string(ceiling) + " (set MUBCOMP_BRUTE_MAX_N to raise)");
    BigCount closed;
    if (a.what == "arrays") closed = count_Bn(a.n);
    else if (a.what == "prime") closed = count_Bn_prime(a.n);
    else if (a.what == "ih") closed = count_EIH(a.n);
    else if (a.what == "ihn") closed = count_EIHN(a.n);
    else closed = (BigCount(1) << a.n) * count_EIHN(a.n);

    std::cout << "n: " << a.n << "\nwhat: " << a.what << "\nclosed: " << closed << '\n';
    if (arrays && a.n <= 16) {
        const auto rc = classify_reversal(a.n, a.what == "prime");
        std::cout << "param_classes: " << (BigCount(rc.classes) << a.n) << '\n';
    }
    if (!a.brute) return kOk;

    std::size_t brute = 0;
    if (a.what == "arrays") brute = build_set_Bn(a.n, ceiling).size();
    else if (a.what == "prime") brute = build_set_Bn_prime(a.n, ceiling).size();
    else if (a.what == "ih") brute = brute_force_sequences(a.n, {true, true, ceiling}).size();
    else if (a.what == "ihn") brute = brute_force_sequences(a.n, {false, true, ceiling}).size();
    else brute = brute_force_sequences(a.n, {false, false, ceiling}).size();

    const bool equal = BigCount(brute) == closed;
    std::cout << "brute: " << brute << "\nequal: " << (equal ? "true" : "false") << '\n';
    return equal ? kOk : kFail;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
    std::string file;
    bool array = false;
    bool papr = false;
    std::size_t grid = 0;
};

int run_verify(const VerifyArgs& a) {
    std::ifstream is(a.file);
    if (!is) throw UsageError("cannot open " + a.file);
    const auto recs = read_records(is);
    if (recs.empty()) throw UsageError("no records in " + a.file);

    bool all_pass = true;
    std::size_t set_index = 0;
    for (std::size_t begin = 0; begin < recs.size();) {
        std::size_t end = begin + 1;
        const auto same = [&](const SequenceRecord& x, const SequenceRecord& y) {
            return x.n == y.n && x.u == y.u && x.r == y.r && x.pi == y.pi;
        };
        while (end < recs.size() && same(recs[begin], recs[end])) ++end;

        const SequenceRecord& head = recs[begin];
        std::cout << "set " << set_index++ << " (n=" << head.n << " u=" << head.u << " r=" << head.r;
        if (head.pi) std::cout << " pi=" << pi_to_string(*head.pi);
        std::cout << ", " << end - begin << " member" << (end - begin == 1 ? "" : "s") << "): ";

        ComplementarityResult res;
        std::vector<Sequence> seqs;
        for (std::size_t i = begin; i < end; ++i) seqs.push_back(Sequence{recs[i].values});
        if (a.array) {
            std::vector<ArrayFunction> fs;
            for (std::size_t i = begin; i < end; ++i) fs.emplace_back(recs[i].n, recs[i].values);
            res = verify_complementary(std::span<const ArrayFunction>(fs));
        } else {
            res = verify_complementary(std::span<const Sequence>(seqs));
        }
        if (res.complementary) {
            std::cout << "lambda=" << res.lambda << " PASS";
        } else {
            all_pass = false;
            std::cout << "FAIL at lag ";
            for (std::size_t i = 0; i < res.offending_lag.size(); ++i) std::cout << (i ? "," : "") << res.offending_lag[i];
            std::cout << " (residual " << res.residual << ")";
        }
        if (a.papr) {
            const std::size_t grid = a.grid ? a.grid : 8 * head.values.size();
            double worst = 0.0;
            for (const auto& s : seqs) worst = std::max(worst, papr_spectrum(s, grid));
            const bool ok = worst <= static_cast<double>(end - begin) + 1e-9;
            all_pass = all_pass && ok;
            std::ostringstream v;
            v.precision(12);
            v << worst;
            std::cout << " papr_max=" << v.str() << (ok ? " PASS" : " FAIL");
        }
        std::cout << '\n';
        begin = end;
    }
    return all_pass ? kOk : kFail;
}

// ---- codebook -------------------------------------------------------------

struct CodebookArgs {
    int n = 0;
    std::string r0, r1;
    bool ih = false, welch = false, emit = false;
};

int run_codebook(const CodebookArgs& a) {
    const MubWord r0 = word_or_throw(a.r0, a.n, "--r0");
    Codebook cb;
    if (a.ih) {
        try {
            cb = build_ih_codebook(r0);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        std::cout << "R1: " << to_string(cb.families[1]) << '\n';
    } else {
        if (a.r1.empty()) throw UsageError("--r1 is required unless --ih is given");
        const MubWord r1 = word_or_throw(a.r1, a.n, "--r1");
        if (!satisfies_cond1(r0, r1)) throw UsageError("r1 must be I exactly where r0 is not I");
        const RTriple t = build_r2(r0, r1);
        std::cout << "R2: " << to_string(t.r2) << "\nw: " << digits(t.w_aux) << '\n';
        if (!has_odd_n_runs(t)) {
            std::cout << "triple: invalid\n";
            return kFail;
        }
        cb = build_codebook(t);
    }
    std::cout << "N: " << cb.N() << "\nK: " << cb.K() << "\ndelta_squared: " << to_string(cb.delta_squared) << '\n';
    if (a.welch) {
        const WelchMetrics m = welch_metrics(cb);
        std::cout << "welch_squared: " << to_string(m.welch_bound_squared) << '\n';
        if (m.ratio_squared) std::cout << "ratio_squared: " << to_string(*m.ratio_squared) << "\nratio: " << *m.ratio << '\n';
    }
    if (a.emit) {
        std::vector<SequenceRecord> recs;
        for (const auto& c : cb.codewords) {
            SequenceRecord rec;
            rec.n = cb.n;
            rec.u = to_string(cb.families[static_cast<std::size_t>(c.family)]);
            rec.r = bits_to_string(c.r);
            rec.values.assign(c.array.values().begin(), c.array.values().end());
            recs.push_back(std::move(rec));
        }
        write_records(std::cout, recs, RecordFormat::Json);
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Complementary arrays and sequences seeded by the {I,H,N} bases"};
    app.require_subcommand(1);

    ArraysArgs arrays;
    auto* c_arrays = app.add_subcommand("arrays", "Emit closed-form arrays (or projected sequences)");
    c_arrays->add_option("--n", arrays.n, "Number of variables")->required()->check(CLI::Range(1, 24));
    c_arrays->add_option("--u", arrays.u, "Letters over {I,H,N}, x0 first")->required();
    c_arrays->add_option("--r", arrays.r, "Offset bits, x0 first")->required();
    c_arrays->add_option("--k", arrays.k, "Pair member: 0, 1 or both")->capture_default_str();
    c_arrays->add_option("--pi", arrays.pi, "Project with this permutation (comma list)");
    c_arrays->add_option("--format", arrays.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    c_arrays->add_option("--out", arrays.out, "Write to this file instead of stdout");

    EnumerateArgs enumerate;
    auto* c_enum = app.add_subcommand("enumerate", "Closed-form counts, optionally checked by brute force");
    c_enum->add_option("--n", enumerate.n, "Number of variables")->required()->check(CLI::Range(1, 200));
    c_enum->add_option("--what", enumerate.what, "arrays, prime, ih, ihn or sequences")
        ->required()
        ->check(CLI::IsMember({"arrays", "prime", "ih", "ihn", "sequences"}));
    c_enum->add_flag("--brute", enumerate.brute, "Also count by exhaustive construction and deduplication");

    VerifyArgs verify;
    auto* c_verify = app.add_subcommand("verify", "Check complementarity of the record sets in a file");
    c_verify->add_option("--file", verify.file, "JSON-lines or CSV records")->required();
    c_verify->add_flag("--array", verify.array, "Treat values as 2x...x2 arrays (multivariate lags)");
    c_verify->add_flag("--papr", verify.papr, "Also bound the sampled PAPR by the set size");
    c_verify->add_option("--grid", verify.grid, "PAPR grid size (default 8x length)");

    CodebookArgs codebook;
    auto* c_book = app.add_subcommand("codebook", "Build the three-family codebook from r0 and r1");
    c_book->add_option("--n", codebook.n, "Number of variables")->required()->check(CLI::Range(1, 12));
    c_book->add_option("--r0", codebook.r0, "First string")->required();
    c_book->add_option("--r1", codebook.r1, "Second string");
    c_book->add_flag("--ih", codebook.ih, "Two families over {I,H} only");
    c_book->add_flag("--welch", codebook.welch, "Report the Welch bound and ratio");
    c_book->add_flag("--emit", codebook.emit, "Print all codewords as JSON lines");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        if (c_arrays->parsed()) return run_arrays(arrays);
        if (c_enum->parsed()) return run_enumerate(enumerate);
        if (c_verify->parsed()) return run_verify(verify);
        if (c_book->parsed()) return run_codebook(codebook);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const RecordError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    }
    return kInvalid;
}
