#include "hgroup/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "hgroup/errors.hpp"

namespace hgroup {

int FusionRing::N(Index a, Index b, Index c) const {
    auto it = rules.find({a, b});
    if (it == rules.end()) return 0;
    for (const auto& [g, m] : it->second)
        if (g == c) return m;
    return 0;
}

Index FusionRing::find_label(const std::string& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw Error(ErrorCode::InvalidParameter, "unknown label '" + label + "'");
    return static_cast<Index>(it - labels.begin());
}

void validate_fusion(const FusionRing& fr, double tol) {
    const std::size_t k = fr.size();
    if (k == 0) throw Error(ErrorCode::InvalidTable, "empty fusion ring");
    if (fr.conj.size() != k || fr.n.size() != k || fr.d.size() != k)
        throw Error(ErrorCode::InvalidTable, "fusion ring vectors have inconsistent lengths");
    if (fr.trivial >= k) throw Error(ErrorCode::InvalidTable, "trivial label out of range");
    for (Index a = 0; a < k; ++a) {
        if (fr.conj[a] >= k || fr.conj[fr.conj[a]] != a)
            throw Error(ErrorCode::InvalidTable, "conjugation is not an involution at " + fr.labels[a]);
        if (fr.n[a] < 1 || !(fr.d[a] > 0.0))
            throw Error(ErrorCode::InvalidTable, "dimensions must be positive at " + fr.labels[a]);
    }
    for (const auto& [ab, row] : fr.rules)
        for (const auto& [c, m] : row)
            if (m < 0 || c >= k) throw Error(ErrorCode::InvalidTable, "bad rule entry");
    auto L = [&](Index x) { return fr.labels[x]; };
    for (Index a = 0; a < k; ++a)
        for (Index b = 0; b < k; ++b) {
            if (!fr.has_row(a, b)) continue;
            for (Index c = 0; c < k; ++c) {
                int m = fr.N(a, b, c);
                if (fr.has_row(fr.conj[a], c) && fr.N(fr.conj[a], c, b) != m)
                    throw Error(ErrorCode::ReciprocityViolation, "N^" + L(c) + "_{" + L(a) + "," + L(b) + "} = " +
                                                                     std::to_string(m) + " but N^" + L(b) + "_{" +
                                                                     L(fr.conj[a]) + "," + L(c) + "} = " +
                                                                     std::to_string(fr.N(fr.conj[a], c, b)));
                if (fr.has_row(c, fr.conj[b]) && fr.N(c, fr.conj[b], a) != m)
                    throw Error(ErrorCode::ReciprocityViolation, "N^" + L(c) + "_{" + L(a) + "," + L(b) + "} = " +
                                                                     std::to_string(m) + " but N^" + L(a) + "_{" +
                                                                     L(c) + "," + L(fr.conj[b]) + "} = " +
                                                                     std::to_string(fr.N(c, fr.conj[b], a)));
            }
            int triv = fr.N(a, b, fr.trivial);
            if (triv != (b == fr.conj[a] ? 1 : 0))
                throw Error(ErrorCode::InvalidTable, "trivial multiplicity wrong in " + L(a) + " x " + L(b));
            long long nsum = 0;
            double dsum = 0.0;
            for (Index c = 0; c < k; ++c) {
                nsum += static_cast<long long>(fr.N(a, b, c)) * fr.n[c];
                dsum += fr.N(a, b, c) * fr.d[c];
            }
            if (nsum != static_cast<long long>(fr.n[a]) * fr.n[b])
                throw Error(ErrorCode::InvalidTable, "classical dimensions do not multiply in " + L(a) + " x " + L(b));
            if (std::abs(dsum - fr.d[a] * fr.d[b]) > tol * fr.d[a] * fr.d[b])
                throw Error(ErrorCode::InvalidTable, "quantum dimensions do not multiply in " + L(a) + " x " + L(b));
        }
}

FusionRing fusion_ring(const IrreducibleData& irr, const std::string& name) {
    FusionRing fr;
    fr.name = name;
    fr.labels = irr.labels;
    fr.conj = irr.conjugate;
    fr.n = irr.dims;
    for (int v : irr.dims) fr.d.push_back(v);
    const std::size_t k = irr.labels.size();
    for (Index a = 0; a < k; ++a)
        for (Index b = 0; b < k; ++b) {
            auto& row = fr.rules[{a, b}];
            for (Index c = 0; c < k; ++c)
                if (irr.mult[a][b][c] > 0) row.emplace_back(c, irr.mult[a][b][c]);
        }
    validate_fusion(fr);
    return fr;
}

FusionRing fusion_ring(const FiniteGroup& g) { return fusion_ring(irreducible_data(g), g.name()); }

FusionRing suq2_fusion_ring(double q, int radius) {
    if (radius < 1) throw Error(ErrorCode::InvalidParameter, "truncation radius must be >= 1");
    if (!(q > 0.0 && q <= 1.0)) throw Error(ErrorCode::InvalidParameter, "suq2 fusion ring needs q in (0,1]");
    FusionRing fr;
    std::ostringstream nm;
    nm << "SU_q(2)_q" << q;
    fr.name = nm.str();
    fr.radius = radius;
    for (int a = 1; a <= radius + 1; ++a) {
        fr.labels.push_back(std::to_string(a));
        fr.conj.push_back(a - 1);
        fr.n.push_back(a);
        fr.d.push_back(q_integer(a, q));
    }
    for (int x = 0; x <= radius; ++x)
        for (int y = 0; x + y <= radius; ++y) {
            auto& row = fr.rules[{static_cast<Index>(x), static_cast<Index>(y)}];
            int a = x + 1, b = y + 1;
            for (int c = std::abs(a - b) + 1; c <= a + b - 1; c += 2) row.emplace_back(c - 1, 1);
        }
    validate_fusion(fr);
    return fr;
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

long long parse_int(const std::string& s, int line) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + s + "'");
    }
}

double parse_double(const std::string& s, int line) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected a number, got '" + s + "'");
    }
}

Index label_at(const FusionRing& fr, const std::string& s, int line) {
    auto it = std::find(fr.labels.begin(), fr.labels.end(), s);
    if (it == fr.labels.end()) throw ParseError(line, "unknown label '" + s + "'");
    return static_cast<Index>(it - fr.labels.begin());
}

}  // namespace

FusionRing read_fusion(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::vector<std::string> tok;
    auto next = [&]() {
        while (std::getline(in, line)) {
            ++lineno;
            tok = tokens(line);
            if (tok.empty() || tok[0][0] == '#') continue;
            return true;
        }
        return false;
    };
    if (!next() || tok.size() != 2 || tok[0] != "fusion" || tok[1] != "v1")
        throw ParseError(lineno, "expected header 'fusion v1'");
    FusionRing fr;
    std::vector<std::string> conj_text;
    std::optional<double> q;
    bool have_d = false, have_n = false, ended = false;
    int conj_line = 0;
    while (next()) {
        const std::string& key = tok[0];
        if (key == "name" && tok.size() == 2) {
            fr.name = tok[1];
        } else if (key == "labels") {
            fr.labels.assign(tok.begin() + 1, tok.end());
            for (std::size_t i = 0; i < fr.labels.size(); ++i)
                for (std::size_t j = 0; j < i; ++j)
                    if (fr.labels[i] == fr.labels[j]) throw ParseError(lineno, "duplicate label '" + fr.labels[i] + "'");
        } else if (key == "conj") {
            conj_text.assign(tok.begin() + 1, tok.end());
            conj_line = lineno;
        } else if (key == "ndims") {
            fr.n.clear();
            for (std::size_t i = 1; i < tok.size(); ++i) fr.n.push_back(static_cast<int>(parse_int(tok[i], lineno)));
            have_n = true;
        } else if (key == "ddims") {
            if (q) throw ParseError(lineno, "ddims and q are exclusive");
            fr.d.clear();
            for (std::size_t i = 1; i < tok.size(); ++i) fr.d.push_back(parse_double(tok[i], lineno));
            have_d = true;
        } else if (key == "q" && tok.size() == 2) {
            if (have_d) throw ParseError(lineno, "ddims and q are exclusive");
            q = parse_double(tok[1], lineno);
            if (!(*q > 0.0 && *q <= 1.0)) throw ParseError(lineno, "q must lie in (0,1]");
        } else if (key == "truncated" && tok.size() == 2) {
            long long r = parse_int(tok[1], lineno);
            if (r < 1) throw ParseError(lineno, "truncation radius must be >= 1");
            fr.radius = static_cast<int>(r);
        } else if (key == "rules" && tok.size() == 1) {
            const std::size_t k = fr.labels.size();
            if (k == 0) throw ParseError(lineno, "labels must precede rules");
            if (!have_n || fr.n.size() != k) throw ParseError(lineno, "ndims must list one value per label");
            if (have_d && fr.d.size() != k) throw ParseError(lineno, "ddims must list one value per label");
            if (!have_d) {
                fr.d.clear();
                for (int v : fr.n) fr.d.push_back(q ? q_integer(v, *q) : v);
            }
            if (conj_text.empty()) {
                for (Index a = 0; a < k; ++a) fr.conj.push_back(a);
            } else {
                if (conj_text.size() != k) throw ParseError(conj_line, "conj must list one label per label");
                for (const auto& s : conj_text) fr.conj.push_back(label_at(fr, s, conj_line));
            }
            fr.trivial = 0;
            std::map<std::pair<Index, Index>, std::map<Index, int>> raw;
            while (true) {
                if (!next()) throw ParseError(lineno, "missing 'end'");
                if (tok.size() == 1 && tok[0] == "end") break;
                if (tok.size() != 4) throw ParseError(lineno, "expected '<a> <b> <c> <N>'");
                Index a = label_at(fr, tok[0], lineno), b = label_at(fr, tok[1], lineno),
                      c = label_at(fr, tok[2], lineno);
                long long m = parse_int(tok[3], lineno);
                if (m < 0) throw ParseError(lineno, "multiplicity must be nonnegative");
                if (fr.radius && !fr.has_row(a, b)) throw ParseError(lineno, "rule lies outside the truncation");
                if (raw[{a, b}].count(c)) throw ParseError(lineno, "duplicate rule");
                raw[{a, b}][c] = static_cast<int>(m);
            }
            for (const auto& [ab, row] : raw)
                if (!raw.count({ab.second, ab.first})) raw[{ab.second, ab.first}] = row;
            for (const auto& [ab, row] : raw) {
                auto& out = fr.rules[ab];
                for (const auto& [c, m] : row)
                    if (m > 0) out.emplace_back(c, m);
            }
            ended = true;
            break;
        } else {
            throw ParseError(lineno, "unexpected line '" + line + "'");
        }
    }
    if (!ended) throw ParseError(lineno, "missing 'rules' section");
    validate_fusion(fr);
    return fr;
}

FusionRing load_fusion_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    return read_fusion(in);
}

void write_fusion(std::ostream& out, const FusionRing& fr) {
    out << "fusion v1\n";
    out << "name " << fr.name << "\n";
    out << "labels";
    for (const auto& l : fr.labels) out << ' ' << l;
    out << "\nconj";
    for (Index c : fr.conj) out << ' ' << fr.labels[c];
    out << "\nndims";
    for (int v : fr.n) out << ' ' << v;
    out << "\nddims";
    for (double v : fr.d) out << ' ' << format_double(v);
    out << "\n";
    if (fr.radius) out << "truncated " << *fr.radius << "\n";
    out << "rules\n";
    for (const auto& [ab, row] : fr.rules)
        for (const auto& [c, m] : row)
            out << fr.labels[ab.first] << ' ' << fr.labels[ab.second] << ' ' << fr.labels[c] << ' ' << m << "\n";
    out << "end\n";
}

void save_fusion_file(const std::string& path, const FusionRing& fr) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
    write_fusion(out, fr);
}

namespace {

HypergroupTable exact_fusion_table(const FusionRing& fr, const std::string& name) {
    const std::size_t k = fr.size();
    TableBuilder b(fr.labels);
    b.name(name).identity(fr.trivial).involution(fr.conj).generator(k > 1 ? 1 : 0);
    if (fr.radius) {
        b.truncated(*fr.radius).natural_indexed();
        std::vector<Rational> haar;
        for (int v : fr.n) haar.emplace_back(v * v);
        b.haar(haar);
    }
    for (const auto& [ab, row] : fr.rules)
        for (const auto& [c, m] : row)
            b.add(ab.first, ab.second, c, Rational(fr.n[c] * m, fr.n[ab.first] * fr.n[ab.second]));
    return b.build();
}

bool dims_equal(const FusionRing& fr) {
    for (std::size_t a = 0; a < fr.size(); ++a)
        if (fr.d[a] != static_cast<double>(fr.n[a])) return false;
    return true;
}

}  // namespace

HypergroupTable hypergroup_n(const FusionRing& fr) {
    validate_fusion(fr);
    return exact_fusion_table(fr, "(Irr(" + fr.name + "),n)");
}

HypergroupTable hypergroup_d(const FusionRing& fr) {
    validate_fusion(fr);
    const std::string name = "(Irr(" + fr.name + "),d)";
    if (dims_equal(fr)) return exact_fusion_table(fr, name);
    const std::size_t k = fr.size();
    TableBuilder b(fr.labels);
    b.name(name).identity(fr.trivial).involution(fr.conj).generator(k > 1 ? 1 : 0);
    if (fr.radius) {
        b.truncated(*fr.radius).natural_indexed();
        std::vector<double> haar;
        for (double v : fr.d) haar.push_back(v * v);
        b.haar(haar);
    }
    for (const auto& [ab, row] : fr.rules) {
        std::vector<Term> terms;
        for (const auto& [c, m] : row) terms.push_back({c, fr.d[c] * m / (fr.d[ab.first] * fr.d[ab.second])});
        b.set_row(ab.first, ab.second, terms);
    }
    return b.build();
}

bool is_kac(const FusionRing& fr, double tol) {
    double worst = 0.0;
    for (std::size_t a = 0; a < fr.size(); ++a) worst = std::max(worst, std::abs(fr.n[a] - fr.d[a]));
    return worst < tol || (tol == 0.0 && worst == 0.0);
}

std::map<Index, int> quantum_character_decomposition(const FusionRing& fr, Index a, Index b) {
    if (a >= fr.size() || b >= fr.size()) throw Error(ErrorCode::IndexOutOfRange, "label index out of range");
    if (!fr.has_row(a, b)) throw Error(ErrorCode::TruncationOverflow, "product lies outside the truncation");
    std::map<Index, int> out;
    auto it = fr.rules.find({a, b});
    if (it != fr.rules.end())
        for (const auto& [c, m] : it->second) out[c] = m;
    return out;
}

GroupCenter::GroupCenter(FiniteGroup g)
    : group_(std::move(g)), irr_(irreducible_data(group_)), irr_table_(irr_hypergroup(irr_, "Irr(" + group_.name() + ")")) {}

std::vector<Complex> GroupCenter::expand(const CentralFunction& f) const {
    if (f.size() != class_count()) throw Error(ErrorCode::InvalidParameter, "central function needs one value per class");
    std::vector<Complex> v(group_.order());
    for (Index x = 0; x < v.size(); ++x) v[x] = f[group_.class_of(x)];
    return v;
}

CentralFunction GroupCenter::collapse(const std::vector<Complex>& v) const {
    CentralFunction f(class_count());
    for (Index c = 0; c < f.size(); ++c) f[c] = v[group_.classes()[c].front()];
    return f;
}

HFunction GroupCenter::hat(const CentralFunction& f) const {
    if (f.size() != class_count()) throw Error(ErrorCode::InvalidParameter, "central function needs one value per class");
    const double order = static_cast<double>(group_.order());
    HFunction u(irr_.labels.size());
    for (Index a = 0; a < u.size(); ++a) {
        Complex s = 0.0;
        for (Index c = 0; c < f.size(); ++c)
            s += static_cast<double>(irr_.class_sizes[c]) * f[c] * std::conj(irr_.chars(a, c));
        u[a] = s / (order * irr_.dims[a]);
    }
    return u;
}

CentralFunction GroupCenter::inverse_hat(const HFunction& u) const {
    if (u.size() != irr_.labels.size()) throw Error(ErrorCode::InvalidParameter, "function is not on Irr(G)");
    CentralFunction f(class_count(), 0.0);
    for (Index c = 0; c < f.size(); ++c)
        for (Index a = 0; a < u.size(); ++a) f[c] += static_cast<double>(irr_.dims[a]) * u[a] * irr_.chars(a, c);
    return f;
}

double GroupCenter::zl1_norm(const CentralFunction& f) const {
    return zm_norm(f) / static_cast<double>(group_.order());
}

double GroupCenter::zm_norm(const CentralFunction& mu) const {
    if (mu.size() != class_count()) throw Error(ErrorCode::InvalidParameter, "central function needs one value per class");
    double s = 0.0;
    for (Index c = 0; c < mu.size(); ++c) s += static_cast<double>(irr_.class_sizes[c]) * std::abs(mu[c]);
    return s;
}

CentralFunction GroupCenter::convolve_measures(const CentralFunction& mu, const CentralFunction& nu) const {
    std::vector<Complex> a = expand(mu), b = expand(nu), out(group_.order(), 0.0);
    for (Index y = 0; y < a.size(); ++y)
        for (Index x = 0; x < a.size(); ++x) out[x] += a[y] * b[group_.mul(group_.inverse(y), x)];
    return collapse(out);
}

CentralFunction GroupCenter::convolve(const CentralFunction& f, const CentralFunction& g) const {
    CentralFunction r = convolve_measures(f, g);
    for (Complex& v : r) v /= static_cast<double>(group_.order());
    return r;
}

HFunction GroupCenter::zm_to_b(const CentralFunction& mu) const {
    if (mu.size() != class_count()) throw Error(ErrorCode::InvalidParameter, "central function needs one value per class");
    HFunction u(irr_.labels.size());
    for (Index a = 0; a < u.size(); ++a) {
        Complex s = 0.0;
        for (Index c = 0; c < mu.size(); ++c) s += static_cast<double>(irr_.class_sizes[c]) * irr_.chars(a, c) * mu[c];
        u[a] = s / static_cast<double>(irr_.dims[a]);
    }
    return u;
}

CentralFunction GroupCenter::character(Index a) const {
    CentralFunction f(class_count());
    for (Index c = 0; c < f.size(); ++c) f[c] = irr_.chars(a, c);
    return f;
}

HFunction hat_map(const FiniteGroup& g, const CentralFunction& f) { return GroupCenter(g).hat(f); }

}  // namespace hgroup
