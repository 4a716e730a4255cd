#include "hgroup/group.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include "hgroup/errors.hpp"

namespace hgroup {

FiniteGroup FiniteGroup::from_cayley_table(const CayleyTable& table, std::string name,
                                           std::vector<std::string> element_names) {
    const std::size_t n = table.size();
    if (n == 0) throw Error(ErrorCode::InvalidParameter, "empty Cayley table");
    for (const auto& r : table)
        if (r.size() != n) throw Error(ErrorCode::NotLatinSquare, "Cayley table is not square");
    for (Index a = 0; a < n; ++a) {
        std::vector<char> row_seen(n, 0), col_seen(n, 0);
        for (Index b = 0; b < n; ++b) {
            if (table[a][b] >= n) throw Error(ErrorCode::NotLatinSquare, "entry out of range");
            if (row_seen[table[a][b]]++) throw Error(ErrorCode::NotLatinSquare, "row " + std::to_string(a) + " repeats an entry");
            if (table[b][a] >= n) throw Error(ErrorCode::NotLatinSquare, "entry out of range");
            if (col_seen[table[b][a]]++) throw Error(ErrorCode::NotLatinSquare, "column " + std::to_string(a) + " repeats an entry");
        }
    }
    std::optional<Index> e;
    for (Index a = 0; a < n && !e; ++a) {
        bool ok = true;
        for (Index b = 0; b < n && ok; ++b) ok = table[a][b] == b && table[b][a] == b;
        if (ok) e = a;
    }
    if (!e) throw Error(ErrorCode::NoIdentity, "no two-sided identity");
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            for (Index c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw Error(ErrorCode::NotAssociative, "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                                               std::to_string(c) + ") fails");

    FiniteGroup g;
    g.name_ = std::move(name);
    g.table_ = table;
    g.identity_ = *e;
    if (element_names.empty())
        for (Index a = 0; a < n; ++a) element_names.push_back("g" + std::to_string(a));
    if (element_names.size() != n) throw Error(ErrorCode::InvalidParameter, "wrong number of element names");
    g.names_ = std::move(element_names);
    g.inverse_.resize(n);
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            if (table[a][b] == *e) g.inverse_[a] = b;
    g.abelian_ = true;
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) g.abelian_ = g.abelian_ && table[a][b] == table[b][a];

    g.class_of_.assign(n, n);
    std::vector<Index> order;
    order.push_back(*e);
    for (Index a = 0; a < n; ++a)
        if (a != *e) order.push_back(a);
    for (Index a : order) {
        if (g.class_of_[a] != n) continue;
        std::set<Index> cls;
        for (Index h = 0; h < n; ++h) cls.insert(table[table[h][a]][g.inverse_[h]]);
        std::vector<Index> members;
        // keep first-appearance order inside the class as well
        for (Index b : order)
            if (cls.count(b)) members.push_back(b);
        for (Index b : members) g.class_of_[b] = g.classes_.size();
        g.classes_.push_back(std::move(members));
    }
    return g;
}

std::vector<Index> FiniteGroup::derived_subgroup() const {
    const std::size_t n = order();
    std::set<Index> sub{identity_};
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) sub.insert(mul(mul(a, b), mul(inverse_[a], inverse_[b])));
    bool grown = true;
    while (grown) {
        grown = false;
        std::vector<Index> cur(sub.begin(), sub.end());
        for (Index a : cur)
            for (Index b : cur)
                if (sub.insert(mul(a, b)).second) grown = true;
    }
    return {sub.begin(), sub.end()};
}

namespace {

template <std::size_t K>
FiniteGroup from_permutations(const std::vector<std::array<int, K>>& perms, const std::string& name,
                              const std::vector<std::string>& names) {
    const std::size_t n = perms.size();
    CayleyTable t(n, std::vector<Index>(n));
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
            std::array<int, K> c{};
            for (std::size_t i = 0; i < K; ++i) c[i] = perms[a][perms[b][i]];
            auto it = std::find(perms.begin(), perms.end(), c);
            if (it == perms.end()) throw Error(ErrorCode::InvalidParameter, "permutation list is not closed");
            t[a][b] = static_cast<Index>(it - perms.begin());
        }
    return FiniteGroup::from_cayley_table(t, name, names);
}

}  // namespace

FiniteGroup cyclic_group(std::size_t n) {
    if (n < 1) throw Error(ErrorCode::InvalidParameter, "cyclic group order must be >= 1");
    CayleyTable t(n, std::vector<Index>(n));
    std::vector<std::string> names;
    for (Index a = 0; a < n; ++a) {
        names.push_back(std::to_string(a));
        for (Index b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    }
    return FiniteGroup::from_cayley_table(t, "Z" + std::to_string(n), names);
}

FiniteGroup symmetric_group_s3() {
    std::vector<std::array<int, 3>> p = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    return from_permutations(p, "S3", {"e", "(01)", "(02)", "(12)", "(012)", "(021)"});
}

FiniteGroup dihedral_group_d4() {
    auto rot = [](int k) {
        std::array<int, 4> a{};
        for (int i = 0; i < 4; ++i) a[i] = (i + k) % 4;
        return a;
    };
    auto refl = [](int k) {  // s r^k : i -> -(i + k)
        std::array<int, 4> a{};
        for (int i = 0; i < 4; ++i) a[i] = (8 - i - k) % 4;
        return a;
    };
    std::vector<std::array<int, 4>> p = {rot(0), rot(2), rot(1), rot(3), refl(0), refl(2), refl(1), refl(3)};
    return from_permutations(p, "D4", {"e", "r2", "r", "r3", "s", "sr2", "sr", "sr3"});
}

FiniteGroup quaternion_group_q8() {
    // unit u in {1,i,j,k} as 0..3, sign s; element index 2u + (s<0)
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    CayleyTable t(8, std::vector<Index>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ua = a / 2, ub = b / 2;
            int s = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * sign[ua][ub];
            t[a][b] = static_cast<Index>(2 * unit[ua][ub] + (s < 0 ? 1 : 0));
        }
    return FiniteGroup::from_cayley_table(t, "Q8", {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

FiniteGroup alternating_group_a4() {
    std::vector<std::array<int, 4>> p;
    std::array<int, 4> a = {0, 1, 2, 3};
    do {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) inv += a[i] > a[j];
        if (inv % 2 == 0) p.push_back(a);
    } while (std::next_permutation(a.begin(), a.end()));
    std::vector<std::string> names;
    for (const auto& q : p) names.push_back(std::string("p") + char('0' + q[0]) + char('0' + q[1]) + char('0' + q[2]) + char('0' + q[3]));
    return from_permutations(p, "A4", names);
}

FiniteGroup klein_four_group() {
    return direct_product(cyclic_group(2), cyclic_group(2));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const std::size_t na = a.order(), nb = b.order();
    CayleyTable t(na * nb, std::vector<Index>(na * nb));
    std::vector<std::string> names;
    for (Index x = 0; x < na; ++x)
        for (Index u = 0; u < nb; ++u) {
            names.push_back("(" + a.element_names()[x] + "," + b.element_names()[u] + ")");
            for (Index y = 0; y < na; ++y)
                for (Index v = 0; v < nb; ++v) t[x * nb + u][y * nb + v] = a.mul(x, y) * nb + b.mul(u, v);
        }
    return FiniteGroup::from_cayley_table(t, a.name() + "x" + b.name(), names);
}

FiniteGroup builtin_group(const std::string& name) {
    std::string s;
    for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "s3") return symmetric_group_s3();
    if (s == "d4") return dihedral_group_d4();
    if (s == "q8") return quaternion_group_q8();
    if (s == "a4") return alternating_group_a4();
    if (s == "klein" || s == "v4") return klein_four_group();
    if (s.size() > 1 && s[0] == 'z') {
        try {
            std::size_t pos = 0;
            long n = std::stol(s.substr(1), &pos);
            if (pos == s.size() - 1 && n >= 1 && n <= 1000) return cyclic_group(static_cast<std::size_t>(n));
        } catch (const std::exception&) {
        }
    }
    throw Error(ErrorCode::InvalidParameter, "unknown group '" + name + "'");
}

std::vector<std::string> builtin_group_names() { return {"z2", "z4", "s3", "d4", "q8", "a4", "klein"}; }

FiniteGroup read_group(std::istream& in) {
    std::string line, word;
    int lineno = 0;
    std::string name = "G";
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        if (!(ss >> word) || word[0] == '#') continue;
        if (word == "name") {
            if (!(ss >> name)) throw ParseError(lineno, "name needs a token");
            continue;
        }
        if (word != "cayley" || !(ss >> n) || n == 0) throw ParseError(lineno, "expected 'cayley <n>'");
        break;
    }
    if (n == 0) throw ParseError(lineno, "missing 'cayley' header");
    CayleyTable t;
    while (t.size() < n && std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::vector<Index> row;
        std::string tok;
        while (ss >> tok) {
            if (tok[0] == '#') break;
            try {
                std::size_t pos = 0;
                long v = std::stol(tok, &pos);
                if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
                row.push_back(static_cast<Index>(v));
            } catch (const std::exception&) {
                throw ParseError(lineno, "bad entry '" + tok + "'");
            }
        }
        if (row.empty()) continue;
        if (row.size() != n) throw ParseError(lineno, "row needs " + std::to_string(n) + " entries");
        t.push_back(std::move(row));
    }
    if (t.size() != n) throw ParseError(lineno, "expected " + std::to_string(n) + " rows");
    return FiniteGroup::from_cayley_table(t, name);
}

FiniteGroup load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    return read_group(in);
}

void write_group(std::ostream& out, const FiniteGroup& g) {
    out << "name " << g.name() << "\ncayley " << g.order() << "\n";
    for (const auto& r : g.cayley()) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? " " : "") << r[i];
        out << "\n";
    }
}

}  // namespace hgroup
