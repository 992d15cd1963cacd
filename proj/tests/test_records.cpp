#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "mubcomp/construct.hpp"
#include "mubcomp/project.hpp"
#include "mubcomp/records.hpp"

using namespace mubcomp;

namespace {

SequenceRecord make_record(const std::string& u, const std::string& r, int k, std::optional<std::vector<int>> pi, bool meta) {
    const auto params = MubString::parse(u, r, k);
    const auto f = closed_form(params);
    SequenceRecord rec;
    rec.n = params.length();
    rec.u = u;
    rec.r = r;
    rec.k = k;
    if (pi) {
        rec.pi = pi;
        rec.values = project(f, Projection(*pi)).values;
    } else {
        rec.values.assign(f.values().begin(), f.values().end());
    }
    if (meta) rec.meta = SequenceRecord::Meta{1, 8, 4};
    return rec;
}

std::vector<SequenceRecord> sample_records() {
    return {make_record("NIHII", "00000", 0, std::nullopt, true), make_record("NIHII", "00000", 1, std::nullopt, true),
            make_record("HNHIN", "10110", 0, std::vector<int>{4, 2, 0, 1, 3}, false),
            make_record("HNHIN", "10110", 1, std::vector<int>{4, 2, 0, 1, 3}, true)};
}

std::size_t error_line(const std::string& text) {
    std::istringstream is(text);
    try {
        read_records(is);
    } catch (const RecordError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_CASE("json lines round-trip byte for byte") {
    const auto recs = sample_records();
    std::ostringstream first;
    write_records(first, recs, RecordFormat::Json);
    std::istringstream in(first.str());
    const auto parsed = read_records(in);
    CHECK(parsed == recs);
    std::ostringstream second;
    write_records(second, parsed, RecordFormat::Json);
    CHECK(second.str() == first.str());
}

TEST_CASE("csv round-trips byte for byte") {
    const auto recs = sample_records();
    std::ostringstream first;
    write_records(first, recs, RecordFormat::Csv);
    std::istringstream in(first.str());
    const auto parsed = read_records(in);
    CHECK(parsed == recs);
    std::ostringstream second;
    write_records(second, parsed, RecordFormat::Csv);
    CHECK(second.str() == first.str());
}

TEST_CASE("random records round-trip in both formats") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> sym(0, 4);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + trial % 6;
        std::vector<SequenceRecord> recs;
        for (int i = 0; i < 3; ++i) {
            SequenceRecord rec;
            rec.n = n;
            for (int j = 0; j < n; ++j) {
                rec.u.push_back("IHN"[rng() % 3]);
                rec.r.push_back("01"[rng() % 2]);
            }
            rec.k = static_cast<int>(rng() % 2);
            if (rng() % 2) {
                std::vector<int> pi(static_cast<std::size_t>(n));
                std::iota(pi.begin(), pi.end(), 0);
                std::shuffle(pi.begin(), pi.end(), rng);
                rec.pi = pi;
            }
            for (int x = 0; x < (1 << n); ++x) rec.values.push_back(Symbol::from_code(static_cast<std::uint8_t>(sym(rng))));
            if (rng() % 2) rec.meta = SequenceRecord::Meta{static_cast<int>(rng() % 5), static_cast<std::int64_t>(rng() % 99), 7};
            recs.push_back(rec);
        }
        for (auto fmt : {RecordFormat::Json, RecordFormat::Csv}) {
            std::ostringstream a;
            write_records(a, recs, fmt);
            std::istringstream in(a.str());
            const auto back = read_records(in);
            REQUIRE(back == recs);
            std::ostringstream b;
            write_records(b, back, fmt);
            CHECK(b.str() == a.str());
        }
    }
}

TEST_CASE("field layout") {
    const auto rec = make_record("IH", "10", 0, std::vector<int>{1, 0}, false);
    const auto json = to_json_line(rec);
    CHECK(json.rfind(R"({"n":2,"u":"IH","r":"10","k":0,"pi":"1,0","values":[)", 0) == 0);
    CHECK(csv_header(4) == "n,u,r,k,pi,num_i,lambda,support,v0,v1,v2,v3");
    CHECK(to_csv_line(rec).rfind(R"(2,IH,10,0,"1,0",,,,)", 0) == 0);
    CHECK(pi_to_string({2, 0, 1}) == "2,0,1");
    CHECK(parse_pi("2,0,1") == std::vector<int>{2, 0, 1});
    CHECK(parse_pi("").empty());
}

TEST_CASE("parse errors carry line numbers") {
    const std::string good = R"({"n":1,"u":"H","r":"0","k":0,"values":["1","1"]})";
    CHECK(error_line(good + "\n" + R"({"n":1,"u":"H","r":"0","k":0,"values":["1","2"]})" + "\n") == 2);
    CHECK(error_line(good + "\n\n" + "{not json\n") == 3);
    CHECK(error_line(R"({"n":2,"u":"H","r":"0","k":0,"values":["1","1"]})") == 1);
    CHECK(error_line(R"({"n":1,"u":"X","r":"0","k":0,"values":["1","1"]})") == 1);
    CHECK(error_line(R"({"n":1,"u":"H","r":"0","k":2,"values":["1","1"]})") == 1);
    CHECK(error_line(R"({"n":1,"u":"H","r":"0","values":["1","1"]})") == 1);
    CHECK(error_line(R"({"n":2,"u":"HH","r":"00","k":0,"pi":"0,0","values":["1","1","1","1"]})") == 1);
    CHECK(error_line("n,u,r,k,pi,num_i,lambda,support,v0,v1\n1,H,0,0,,,,,1,1\n1,H,0,0,,,,,1\n") == 3);
    CHECK(error_line("n,u,r,k,pi,num_i,lambda,support,v0,v1\n1,H,0,0,\"0,,,,,1,1\n") == 2);
    CHECK(error_line(good + "\n") == 0);

    std::istringstream in("n,u,r,k,pi,num_i,lambda,support,v0,v1\n1,H,0,0,,,,,1,q\n");
    try {
        read_records(in);
        FAIL("expected a RecordError");
    } catch (const RecordError& e) {
        CHECK(std::string(e.what()).rfind("line 2: ", 0) == 0);
    }
}

TEST_CASE("csv output needs equal lengths") {
    std::vector<SequenceRecord> recs{make_record("H", "0", 0, std::nullopt, false), make_record("HH", "00", 0, std::nullopt, false)};
    std::ostringstream os;
    CHECK_THROWS_AS(write_records(os, recs, RecordFormat::Csv), RecordError);
    CHECK_NOTHROW(write_records(os, recs, RecordFormat::Json));
}
