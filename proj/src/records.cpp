#include "mubcomp/records.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "mubcomp/mub.hpp"

namespace mubcomp {

using ordered_json = nlohmann::ordered_json;

RecordError::RecordError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

int parse_int(std::string_view s, std::size_t line, const char* field) {
    int v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw RecordError(line, std::string("bad integer in field ") + field);
    return v;
}

std::int64_t parse_i64(std::string_view s, std::size_t line, const char* field) {
    std::int64_t v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw RecordError(line, std::string("bad integer in field ") + field);
    return v;
}

Symbol parse_symbol(std::string_view s, std::size_t line) {
    const auto sym = Symbol::parse(s);
    if (!sym) throw RecordError(line, "bad symbol '" + std::string(s) + "'");
    return *sym;
}

// Splits one CSV line; fields may be double-quoted with "" as an escaped quote.
std::vector<std::string> split_csv(std::string_view line, std::size_t line_no) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur.push_back('"');
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (quoted) throw RecordError(line_no, "unterminated quote");
    out.push_back(std::move(cur));
    return out;
}

}  // namespace

void SequenceRecord::validate() const {
    if (n < 0 || n > 30) throw RecordError(0, "n out of range");
    if (values.size() != (std::size_t{1} << n)) throw RecordError(0, "expected 2^n values");
    if (u.size() != static_cast<std::size_t>(n) || !parse_word(u)) throw RecordError(0, "u must be n letters from {I,H,N}");
    if (r.size() != static_cast<std::size_t>(n) || !parse_bits(r)) throw RecordError(0, "r must be n bits");
    if (k != 0 && k != 1) throw RecordError(0, "k must be 0 or 1");
    if (pi) {
        if (pi->size() != static_cast<std::size_t>(n)) throw RecordError(0, "pi must have n entries");
        try {
            Projection check(*pi);
        } catch (const std::invalid_argument&) {
            throw RecordError(0, "pi is not a permutation");
        }
    }
}

std::string pi_to_string(const std::vector<int>& pi) {
    std::string s;
    for (std::size_t i = 0; i < pi.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(pi[i]);
    }
    return s;
}

std::vector<int> parse_pi(std::string_view text) {
    std::vector<int> pi;
    if (text.empty()) return pi;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        pi.push_back(parse_int(text.substr(start, comma - start), 0, "pi"));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return pi;
}

std::string to_json_line(const SequenceRecord& rec) {
    rec.validate();
    ordered_json j;
    j["n"] = rec.n;
    j["u"] = rec.u;
    j["r"] = rec.r;
    j["k"] = rec.k;
    if (rec.pi) j["pi"] = pi_to_string(*rec.pi);
    ordered_json vals = ordered_json::array();
    for (Symbol s : rec.values) vals.push_back(std::string(s.str()));
    j["values"] = std::move(vals);
    if (rec.meta) {
        j["meta"] = ordered_json{{"num_identity", rec.meta->num_identity},
                                 {"lambda", rec.meta->lambda},
                                 {"support", rec.meta->support}};
    }
    return j.dump();
}

SequenceRecord parse_json_line(std::string_view line, std::size_t line_no) {
    ordered_json j;
    try {
        j = ordered_json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
        throw RecordError(line_no, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw RecordError(line_no, "expected a JSON object");
    SequenceRecord rec;
    try {
        rec.n = j.at("n").get<int>();
        rec.u = j.at("u").get<std::string>();
        rec.r = j.at("r").get<std::string>();
        rec.k = j.at("k").get<int>();
        if (j.contains("pi")) rec.pi = parse_pi(j.at("pi").get<std::string>());
        for (const auto& v : j.at("values")) rec.values.push_back(parse_symbol(v.get<std::string>(), line_no));
        if (j.contains("meta")) {
            const auto& m = j.at("meta");
            rec.meta = SequenceRecord::Meta{m.at("num_identity").get<int>(), m.at("lambda").get<std::int64_t>(),
                                            m.at("support").get<std::int64_t>()};
        }
    } catch (const nlohmann::json::exception& e) {
        throw RecordError(line_no, std::string("bad field: ") + e.what());
    } catch (const RecordError& e) {
        throw RecordError(line_no, e.what());
    }
    try {
        rec.validate();
    } catch (const RecordError& e) {
        throw RecordError(line_no, e.what());
    }
    return rec;
}

std::string csv_header(std::size_t length) {
    std::string h = "n,u,r,k,pi,num_i,lambda,support";
    for (std::size_t i = 0; i < length; ++i) h += ",v" + std::to_string(i);
    return h;
}

std::string to_csv_line(const SequenceRecord& rec) {
    rec.validate();
    std::ostringstream os;
    os << rec.n << ',' << rec.u << ',' << rec.r << ',' << rec.k << ',';
    if (rec.pi) os << '"' << pi_to_string(*rec.pi) << '"';
    os << ',';
    if (rec.meta) os << rec.meta->num_identity << ',' << rec.meta->lambda << ',' << rec.meta->support;
    else os << ",,";
    for (Symbol s : rec.values) os << ',' << s.str();
    return os.str();
}

SequenceRecord parse_csv_line(std::string_view line, std::size_t line_no) {
    const auto f = split_csv(line, line_no);
    if (f.size() < 9) throw RecordError(line_no, "too few CSV fields");
    SequenceRecord rec;
    try {
        rec.n = parse_int(f[0], line_no, "n");
        rec.u = f[1];
        rec.r = f[2];
        rec.k = parse_int(f[3], line_no, "k");
        if (!f[4].empty()) rec.pi = parse_pi(f[4]);
        const bool has_meta = !f[5].empty() || !f[6].empty() || !f[7].empty();
        if (has_meta)
            rec.meta = SequenceRecord::Meta{parse_int(f[5], line_no, "num_i"), parse_i64(f[6], line_no, "lambda"),
                                            parse_i64(f[7], line_no, "support")};
        for (std::size_t i = 8; i < f.size(); ++i) rec.values.push_back(parse_symbol(f[i], line_no));
        rec.validate();
    } catch (const RecordError& e) {
        throw RecordError(line_no, e.line() ? std::string(e.what()).substr(std::string(e.what()).find(": ") + 2) : e.what());
    }
    return rec;
}

void write_records(std::ostream& os, const std::vector<SequenceRecord>& recs, RecordFormat fmt) {
    if (fmt == RecordFormat::Json) {
        for (const auto& r : recs) os << to_json_line(r) << '\n';
        return;
    }
    if (recs.empty()) return;
    const std::size_t len = recs.front().values.size();
    os << csv_header(len) << '\n';
    for (const auto& r : recs) {
        if (r.values.size() != len) throw RecordError(0, "CSV output needs equal-length records");
        os << to_csv_line(r) << '\n';
    }
}

std::vector<SequenceRecord> read_records(std::istream& is) {
    std::vector<SequenceRecord> out;
    std::string line;
    std::size_t line_no = 0;
    std::optional<RecordFormat> fmt;
    std::size_t columns = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (!fmt) {
            if (line.rfind("n,", 0) == 0) {
                fmt = RecordFormat::Csv;
                columns = split_csv(line, line_no).size();
                continue;
            }
            fmt = RecordFormat::Json;
        }
        if (*fmt == RecordFormat::Json) {
            out.push_back(parse_json_line(line, line_no));
        } else {
            if (split_csv(line, line_no).size() != columns) throw RecordError(line_no, "column count differs from header");
            out.push_back(parse_csv_line(line, line_no));
        }
    }
    return out;
}

}  // namespace mubcomp
