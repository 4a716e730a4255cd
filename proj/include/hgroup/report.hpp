#pragma once

#include <string>
#include <vector>

#include "hgroup/hfunction.hpp"

namespace hgroup {

/// Ordered key/value report with two renderings.
///
/// Structured grammar (hgreport v1):
///
///   report   := "hgreport v1" NL "command = " word NL entry* "status = " ("pass"|"fail") NL "end" NL
///   entry    := "[" section "]" NL | key " = " value NL
///   value    := number | word | list
///   list     := "[" (number ("," number)*)? "]"
///   number   := printf %.15g, complex values as re"+"im"i" or re"-"im"i"
///
/// Keys keep insertion order; a failed check adds "check.<name> = fail".
class Report {
public:
    explicit Report(std::string command);

    void section(const std::string& name);
    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, const char* value) { add(key, std::string(value)); }
    void add(const std::string& key, double value);
    void add(const std::string& key, Complex value);
    void add(const std::string& key, bool value);
    void add(const std::string& key, long long value);
    void add(const std::string& key, int value) { add(key, static_cast<long long>(value)); }
    void add(const std::string& key, std::size_t value) { add(key, static_cast<long long>(value)); }
    void add(const std::string& key, const std::vector<double>& values);
    void add(const std::string& key, const HFunction& values);

    /// Records a mathematical check; a failure makes the run exit with 1.
    void check(const std::string& name, bool passed, const std::string& detail = "");
    bool failed() const { return failed_; }

    std::string structured() const;
    std::string text() const;

private:
    struct Line {
        bool is_section;
        std::string key, value;
    };
    std::string command_;
    std::vector<Line> lines_;
    bool failed_ = false;
};

std::string format_number(double v);
std::string format_complex(Complex v);

}  // namespace hgroup
