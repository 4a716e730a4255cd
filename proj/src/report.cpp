#include "hgroup/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace hgroup {

std::string format_number(double v) {
    if (v == 0.0) v = 0.0;
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string format_complex(Complex v) {
    if (v.imag() == 0.0) return format_number(v.real());
    std::string im = format_number(std::abs(v.imag()));
    return format_number(v.real()) + (v.imag() < 0 ? "-" : "+") + im + "i";
}

Report::Report(std::string command) : command_(std::move(command)) {}

void Report::section(const std::string& name) { lines_.push_back({true, name, ""}); }

void Report::add(const std::string& key, const std::string& value) { lines_.push_back({false, key, value}); }

void Report::add(const std::string& key, double value) { add(key, format_number(value)); }

void Report::add(const std::string& key, Complex value) { add(key, format_complex(value)); }

void Report::add(const std::string& key, bool value) { add(key, std::string(value ? "true" : "false")); }

void Report::add(const std::string& key, long long value) { add(key, std::to_string(value)); }

void Report::add(const std::string& key, const std::vector<double>& values) {
    std::string s = "[";
    for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + format_number(values[i]);
    add(key, s + "]");
}

void Report::add(const std::string& key, const HFunction& values) {
    std::string s = "[";
    for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + format_complex(values[i]);
    add(key, s + "]");
}

void Report::check(const std::string& name, bool passed, const std::string& detail) {
    add("check." + name, std::string(passed ? "pass" : "fail"));
    if (!passed && !detail.empty()) add("check." + name + ".detail", detail);
    failed_ = failed_ || !passed;
}

std::string Report::structured() const {
    std::ostringstream out;
    out << "hgreport v1\ncommand = " << command_ << "\n";
    for (const Line& l : lines_) {
        if (l.is_section)
            out << "[" << l.key << "]\n";
        else
            out << l.key << " = " << l.value << "\n";
    }
    out << "status = " << (failed_ ? "fail" : "pass") << "\nend\n";
    return out.str();
}

std::string Report::text() const {
    std::size_t width = 0;
    for (const Line& l : lines_)
        if (!l.is_section) width = std::max(width, l.key.size());
    std::ostringstream out;
    out << command_ << "\n";
    for (const Line& l : lines_) {
        if (l.is_section) {
            out << "\n" << l.key << "\n";
            continue;
        }
        out << "  " << l.key << std::string(width - l.key.size() + 2, ' ') << l.value << "\n";
    }
    out << "\n" << (failed_ ? "FAIL" : "PASS") << "\n";
    return out.str();
}

}  // namespace hgroup
