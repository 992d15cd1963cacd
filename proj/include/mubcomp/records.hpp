#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mubcomp/symbol.hpp"

namespace mubcomp {

/// One emitted array or projected sequence with its parameters.
struct SequenceRecord {
    struct Meta {
        int num_identity = 0;
        std::int64_t lambda = 0;
        std::int64_t support = 0;
        friend bool operator==(const Meta&, const Meta&) = default;
    };

    int n = 0;
    std::string u;  ///< letters over {I,H,N}, x_0 first
    std::string r;  ///< offset bits, x_0 first
    int k = 0;
    std::optional<std::vector<int>> pi;
    std::vector<Symbol> values;
    std::optional<Meta> meta;

    /// Throws RecordError unless |values| = 2^n, |u| = |r| = n and fields are well formed.
    void validate() const;

    friend bool operator==(const SequenceRecord&, const SequenceRecord&) = default;
};

/// Parse or validation failure; line is 1-based, 0 when unknown.
class RecordError : public std::runtime_error {
public:
    RecordError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

enum class RecordFormat { Json, Csv };

std::string pi_to_string(const std::vector<int>& pi);
std::vector<int> parse_pi(std::string_view text);

/// One JSON object per line; keys in the fixed order n, u, r, k, pi, values, meta.
std::string to_json_line(const SequenceRecord& rec);
SequenceRecord parse_json_line(std::string_view line, std::size_t line_no = 0);

/// Header: n,u,r,k,pi,num_i,lambda,support,v0..v(L-1).
std::string csv_header(std::size_t length);
std::string to_csv_line(const SequenceRecord& rec);
SequenceRecord parse_csv_line(std::string_view line, std::size_t line_no = 0);

/// Writes all records; CSV requires equal lengths (throws RecordError otherwise).
void write_records(std::ostream& os, const std::vector<SequenceRecord>& recs, RecordFormat fmt);

/// Reads a whole stream. The format is CSV when the first non-empty line starts with "n,",
/// JSON lines otherwise. Blank lines are skipped.
std::vector<SequenceRecord> read_records(std::istream& is);

}  // namespace mubcomp
