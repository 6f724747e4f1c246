#pragma once

#include <string>

namespace owc {

/// Fixed-format float for CSV output: %.12g, stable for byte-level
/// regression comparison of repeated runs.
std::string csv_num(double v);

std::string csv_num(int v);
std::string csv_num(unsigned long long v);

/// Minimal deterministic CSV builder: fixed header, comma separator,
/// '\n' line ends.
class CsvBuilder {
public:
    explicit CsvBuilder(const std::string& header) { line(header); }

    void line(const std::string& raw) {
        out_ += raw;
        out_ += '\n';
    }

    template <typename... Cells>
    void row(const Cells&... cells) {
        bool first = true;
        ((append_cell(to_cell(cells), first), first = false), ...);
        out_ += '\n';
    }

    const std::string& str() const { return out_; }

private:
    static std::string to_cell(const std::string& s) { return s; }
    static std::string to_cell(const char* s) { return s; }
    static std::string to_cell(double v) { return csv_num(v); }
    static std::string to_cell(int v) { return csv_num(v); }
    static std::string to_cell(unsigned long long v) { return csv_num(v); }

    void append_cell(const std::string& cell, bool first) {
        if (!first) out_ += ',';
        out_ += cell;
    }

    std::string out_;
};

}  // namespace owc
