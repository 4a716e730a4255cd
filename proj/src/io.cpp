#include "hgroup/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "hgroup/errors.hpp"

namespace hgroup {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

bool is_exact_literal(const std::string& s) {
    return s.find_first_of(".eE") == std::string::npos || s.find('/') != std::string::npos;
}

std::size_t parse_index(const std::string& s, int line) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size() || v < 0) throw std::invalid_argument(s);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw ParseError(line, "expected a nonnegative integer, got '" + s + "'");
    }
}

double parse_real(const std::string& s, int line) {
    try {
        if (s.find('/') != std::string::npos) return parse_rational(s).get_d();
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected a number, got '" + s + "'");
    }
}

Rational parse_exact(const std::string& s, int line) {
    try {
        return parse_rational(s);
    } catch (const Error&) {
        throw ParseError(line, "expected p/q, got '" + s + "'");
    }
}

}  // namespace

HypergroupTable read_hypergroup(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next = [&](std::vector<std::string>& tok) {
        while (std::getline(in, line)) {
            ++lineno;
            tok = tokens(line);
            if (tok.empty() || tok[0][0] == '#') continue;
            return true;
        }
        return false;
    };
    std::vector<std::string> tok;
    if (!next(tok) || tok.size() != 2 || tok[0] != "hypergroup" || tok[1] != "v1")
        throw ParseError(lineno, "expected header 'hypergroup v1'");

    std::string name = "unnamed";
    std::optional<std::size_t> size, identity, generator;
    std::vector<std::string> labels, haar_text;
    std::vector<std::size_t> involution;
    std::optional<int> radius;
    bool natural = false;
    bool in_structure = false;
    struct Entry {
        std::size_t x, y, z;
        std::string value;
        int line;
    };
    std::vector<Entry> entries;
    bool ended = false;

    while (next(tok)) {
        if (in_structure) {
            if (tok.size() == 1 && tok[0] == "end") {
                ended = true;
                break;
            }
            if (tok.size() != 4) throw ParseError(lineno, "expected 'x y z value'");
            entries.push_back({parse_index(tok[0], lineno), parse_index(tok[1], lineno),
                               parse_index(tok[2], lineno), tok[3], lineno});
            continue;
        }
        const std::string& key = tok[0];
        auto need_size = [&]() {
            if (!size) throw ParseError(lineno, "'" + key + "' before 'size'");
            if (tok.size() != *size + 1) throw ParseError(lineno, "'" + key + "' needs " + std::to_string(*size) + " entries");
        };
        if (key == "name" && tok.size() == 2) {
            name = tok[1];
        } else if (key == "size" && tok.size() == 2) {
            size = parse_index(tok[1], lineno);
            if (*size == 0) throw ParseError(lineno, "size must be positive");
        } else if (key == "identity" && tok.size() == 2) {
            identity = parse_index(tok[1], lineno);
        } else if (key == "generator" && tok.size() == 2) {
            generator = parse_index(tok[1], lineno);
        } else if (key == "truncated" && tok.size() == 2) {
            radius = static_cast<int>(parse_index(tok[1], lineno));
        } else if (key == "natural" && tok.size() == 1) {
            natural = true;
        } else if (key == "involution") {
            need_size();
            for (std::size_t i = 1; i < tok.size(); ++i) involution.push_back(parse_index(tok[i], lineno));
        } else if (key == "labels") {
            need_size();
            labels.assign(tok.begin() + 1, tok.end());
        } else if (key == "haar") {
            need_size();
            haar_text.assign(tok.begin() + 1, tok.end());
        } else if (key == "structure" && tok.size() == 1) {
            if (!size) throw ParseError(lineno, "'structure' before 'size'");
            in_structure = true;
        } else {
            throw ParseError(lineno, "unexpected line '" + line + "'");
        }
    }
    if (!ended) throw ParseError(lineno, "missing 'end'");
    if (!identity) throw ParseError(lineno, "missing 'identity'");
    const std::size_t n = *size;
    if (labels.empty())
        for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));

    bool exact = true;
    for (const auto& e : entries) exact = exact && is_exact_literal(e.value);
    for (const auto& s : haar_text) exact = exact && is_exact_literal(s);

    try {
        TableBuilder b(labels);
        b.name(name);
        if (*identity >= n) throw ParseError(lineno, "identity out of range");
        b.identity(*identity);
        if (!involution.empty()) b.involution(involution);
        if (generator) b.generator(*generator);
        if (radius) b.truncated(*radius);
        b.natural_indexed(natural);
        for (const auto& e : entries) {
            if (e.x >= n || e.y >= n || e.z >= n) throw ParseError(e.line, "index out of range");
            if (exact)
                b.add(e.x, e.y, e.z, parse_exact(e.value, e.line));
            else
                b.add(e.x, e.y, e.z, parse_real(e.value, e.line));
        }
        if (!haar_text.empty()) {
            if (exact) {
                std::vector<Rational> w;
                for (const auto& s : haar_text) w.push_back(parse_exact(s, lineno));
                b.haar(w);
            } else {
                std::vector<double> w;
                for (const auto& s : haar_text) w.push_back(parse_real(s, lineno));
                b.haar(w);
            }
        }
        return b.build();
    } catch (const ParseError&) {
        throw;
    } catch (const Error& err) {
        throw ParseError(lineno, err.what());
    }
}

HypergroupTable load_hypergroup(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    return read_hypergroup(in);
}

void write_hypergroup(std::ostream& out, const HypergroupTable& h) {
    const std::size_t n = h.size();
    out << "hypergroup v1\n";
    out << "name " << h.name() << "\n";
    out << "size " << n << "\n";
    out << "identity " << h.identity() << "\n";
    out << "involution";
    for (Index x = 0; x < n; ++x) out << ' ' << h.involution(x);
    out << "\nlabels";
    for (Index x = 0; x < n; ++x) out << ' ' << h.label(x);
    out << "\n";
    if (h.haar_declared()) {
        out << "haar";
        for (Index x = 0; x < n; ++x)
            out << ' ' << (h.haar_exact().empty() ? format_double(h.haar(x)) : format_rational(h.haar_exact()[x]));
        out << "\n";
    }
    if (h.truncated()) out << "truncated " << h.radius() << "\n";
    out << "generator " << h.generator() << "\n";
    if (h.natural_indexed()) out << "natural\n";
    out << "structure\n";
    for (Index x = 0; x < n; ++x)
        for (Index y = h.commutative() ? x : 0; y < n; ++y) {
            if (!h.has_row(x, y)) continue;
            const auto& r = h.row(x, y);
            for (std::size_t i = 0; i < r.size(); ++i) {
                out << x << ' ' << y << ' ' << r[i].z << ' ';
                if (h.exact())
                    out << format_rational(h.exact_row(x, y)[i]);
                else
                    out << format_double(r[i].value);
                out << "\n";
            }
        }
    out << "end\n";
}

void save_hypergroup(const std::string& path, const HypergroupTable& h) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::InvalidParameter, "cannot write " + path);
    write_hypergroup(out, h);
}

std::string hypergroup_to_string(const HypergroupTable& h) {
    std::ostringstream ss;
    write_hypergroup(ss, h);
    return ss.str();
}

}  // namespace hgroup
