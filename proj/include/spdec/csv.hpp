#pragma once

#include <cinttypes>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace spdec {

// Deterministic float formatting: shortest round-trip representation so data
// files are byte-stable across runs.
inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    double back;
    std::sscanf(buf, "%lg", &back);
    for (int prec = 1; prec < 17; ++prec) {
        char shorter[64];
        std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
        std::sscanf(shorter, "%lg", &back);
        if (back == v) return shorter;
    }
    return buf;
}

// RFC-4180: quote fields containing comma, quote or newline; double quotes.
inline std::string csv_escape(const std::string& field) {
    bool needs_quote = field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quote) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

class CsvWriter {
  public:
    explicit CsvWriter(std::ostream& os) : os_(os) {}

    CsvWriter& field(const std::string& s) {
        row_.push_back(csv_escape(s));
        return *this;
    }
    CsvWriter& field(const char* s) { return field(std::string(s)); }
    CsvWriter& field(double v) {
        row_.push_back(format_double(v));
        return *this;
    }
    CsvWriter& field(std::uint64_t v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%" PRIu64, v);
        row_.push_back(buf);
        return *this;
    }
    CsvWriter& field(std::int64_t v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%" PRId64, v);
        row_.push_back(buf);
        return *this;
    }
    CsvWriter& field(int v) { return field(static_cast<std::int64_t>(v)); }
    CsvWriter& field(std::size_t v) { return field(static_cast<std::uint64_t>(v)); }
    CsvWriter& field(bool v) { return field(std::string(v ? "true" : "false")); }

    void end_row() {
        for (std::size_t i = 0; i < row_.size(); ++i) {
            if (i) os_ << ',';
            os_ << row_[i];
        }
        os_ << "\r\n";
        row_.clear();
    }

  private:
    std::ostream& os_;
    std::vector<std::string> row_;
};

}  // namespace spdec
