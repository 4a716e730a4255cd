#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace oracle {

Cube class_convolution(const hgroup::FiniteGroup& g) {
    const auto& cls = g.classes();
    const std::size_t k = cls.size();
    std::vector<std::size_t> where(g.order());
    for (std::size_t c = 0; c < k; ++c)
        for (auto x : cls[c]) where[x] = c;
    Cube out(k, std::vector<std::vector<Rational>>(k, std::vector<Rational>(k, 0)));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            for (auto a : cls[i])
                for (auto b : cls[j]) out[i][j][where[g.mul(a, b)]] += 1;
            for (auto& v : out[i][j]) v /= Rational(cls[i].size() * cls[j].size());
        }
    return out;
}

Rational tree_constant(int q, int m, int n, int k) {
    if (m > n) std::swap(m, n);
    if (m == 0) return k == n ? 1 : 0;
    int j2 = m + n - k;
    if (j2 < 0 || j2 % 2 || j2 > 2 * m) return 0;
    int j = j2 / 2;
    mpz_class count;
    auto pw = [&](int e) {
        mpz_class r = 1;
        for (int i = 0; i < e; ++i) r *= q;
        return r;
    };
    if (j == 0)
        count = pw(n);
    else if (j < m)
        count = (q - 1) * pw(n - j - 1);
    else
        count = n == m ? mpz_class(1) : pw(n - m);
    Rational r(count, (q + 1) * pw(n - 1));
    r.canonicalize();
    return r;
}

double sturm_top_eigenvalue(const std::vector<double>& diag, const std::vector<double>& off) {
    const std::size_t n = diag.size();
    // number of eigenvalues strictly below x
    auto below = [&](double x) {
        int count = 0;
        double d = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            double b2 = i ? off[i - 1] * off[i - 1] : 0.0;
            d = diag[i] - x - (i ? b2 / d : 0.0);
            if (d == 0.0) d = -1e-300;
            if (d < 0) ++count;
        }
        return count;
    };
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        r = std::max(r, std::abs(diag[i]) + (i ? std::abs(off[i - 1]) : 0.0) + (i + 1 < n ? std::abs(off[i]) : 0.0));
    double lo = -r, hi = r;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (below(mid) == static_cast<int>(n))
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

std::map<int, int> su2_multiplicities(int a, int b) {
    // weights of the a-dimensional irreducible: a-1, a-3, ..., 1-a
    std::map<int, int> w;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) w[(a - 1 - 2 * i) + (b - 1 - 2 * j)] += 1;
    std::map<int, int> out;
    while (!w.empty()) {
        auto top = std::prev(w.end());
        if (top->second == 0) {
            w.erase(top);
            continue;
        }
        int hw = top->first, m = top->second;
        out[hw + 1] += m;
        for (int t = hw; t >= -hw; t -= 2) w[t] -= m;
    }
    return out;
}

double q_integer_sum(int n, double q) {
    double s = 0.0;
    for (int e = 1 - n; e <= n - 1; e += 2) s += std::pow(q, e);
    return s;
}

KnownTable known_characters(const hgroup::FiniteGroup& g, const std::string& which) {
    using C = std::complex<double>;
    std::vector<std::function<C(std::size_t)>> fs;
    KnownTable t;
    if (which == "s3") {
        auto sign = [](std::size_t x) { return (x >= 1 && x <= 3) ? -1.0 : 1.0; };
        fs.push_back([](std::size_t) { return C(1); });
        fs.push_back([=](std::size_t x) { return C(sign(x)); });
        fs.push_back([](std::size_t x) { return C(x == 0 ? 2 : (x <= 3 ? 0 : -1)); });
        t.dims = {1, 1, 2};
    } else if (which == "d4") {
        const int kk[8] = {0, 2, 1, 3, 0, 2, 1, 3}, ff[8] = {0, 0, 0, 0, 1, 1, 1, 1};
        for (int al : {1, -1})
            for (int be : {1, -1})
                fs.push_back([=](std::size_t x) { return C(std::pow(al, kk[x]) * std::pow(be, ff[x])); });
        fs.push_back([=](std::size_t x) { return C(ff[x] ? 0.0 : std::round(2 * std::cos(M_PI * kk[x] / 2))); });
        t.dims = {1, 1, 1, 1, 2};
    } else if (which == "q8") {
        // 1,-1,i,-i,j,-j,k,-k
        for (int a : {1, -1})
            for (int b : {1, -1})
                fs.push_back([=](std::size_t x) {
                    int unit = static_cast<int>(x / 2);
                    return C(unit == 0 ? 1 : unit == 1 ? a : unit == 2 ? b : a * b);
                });
        fs.push_back([](std::size_t x) { return C(x == 0 ? 2 : x == 1 ? -2 : 0); });
        t.dims = {1, 1, 1, 1, 2};
    } else if (which == "cyclic") {
        const std::size_t n = g.order();
        for (std::size_t k = 0; k < n; ++k)
            fs.push_back([=](std::size_t x) { return std::polar(1.0, 2 * M_PI * double(k * x % n) / double(n)); });
        t.dims.assign(n, 1);
    } else {
        throw std::invalid_argument("no known table for " + which);
    }
    for (auto& f : fs) {
        std::vector<C> row;
        for (const auto& cls : g.classes()) row.push_back(f(cls.front()));
        t.chars.push_back(row);
    }
    return t;
}

std::vector<std::vector<std::vector<int>>> multiplicities(const hgroup::FiniteGroup& g, const KnownTable& t) {
    const std::size_t k = t.chars.size();
    std::vector<std::vector<std::vector<int>>> N(k, std::vector<std::vector<int>>(k, std::vector<int>(k)));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t c = 0; c < k; ++c) {
                std::complex<double> s = 0.0;
                for (std::size_t cl = 0; cl < g.classes().size(); ++cl)
                    s += double(g.classes()[cl].size()) * t.chars[a][cl] * t.chars[b][cl] * std::conj(t.chars[c][cl]);
                N[a][b][c] = static_cast<int>(std::lround(s.real() / double(g.order())));
            }
    return N;
}

}  // namespace oracle
