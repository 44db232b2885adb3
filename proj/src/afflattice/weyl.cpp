#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "lzb/afflattice.hpp"

namespace lzb {

namespace {

// Coroot coordinates -> epsilon coordinates (alpha_i^v = e_i - e_{i+1}).
std::vector<int> coroot_to_eps(const std::vector<int>& xi) {
    const std::size_t k = xi.size();
    std::vector<int> v(k + 1, 0);
    for (std::size_t a = 0; a <= k; ++a) v[a] = (a < k ? xi[a] : 0) - (a > 0 ? xi[a - 1] : 0);
    return v;
}

std::vector<int> eps_to_coroot(const std::vector<int>& v) {
    std::vector<int> xi(v.size() - 1, 0);
    int acc = 0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        acc += v[i];
        xi[i] = acc;
    }
    return xi;
}

// w^{-1}(xi) for w given by perm.
std::vector<int> perm_inverse_act(const std::vector<int>& perm, const std::vector<int>& xi) {
    std::vector<int> v = coroot_to_eps(xi);
    std::vector<int> u(v.size());
    for (std::size_t b = 0; b < v.size(); ++b) u[b] = v[static_cast<std::size_t>(perm[b] - 1)];
    return eps_to_coroot(u);
}

// Letters j_1, j_2, ... with w = ... s_{j_2} s_{j_1}; apply to weights in this order.
std::vector<int> perm_letters(std::vector<int> p) {
    std::vector<int> letters;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (p[i] > p[i + 1]) {
                std::swap(p[i], p[i + 1]);
                letters.push_back(static_cast<int>(i) + 1);
                changed = true;
            }
    }
    return letters;
}

}  // namespace

AffineWeylElt AffineWeylElt::identity(int rank) {
    AffineWeylElt x;
    x.rank = rank;
    x.perm.resize(static_cast<std::size_t>(rank) + 1);
    for (int a = 0; a <= rank; ++a) x.perm[static_cast<std::size_t>(a)] = a + 1;
    x.xi.assign(static_cast<std::size_t>(rank), 0);
    return x;
}

AffineWeylElt AffineWeylElt::simple(int rank, int i) {
    if (i < 0 || i > rank) throw std::out_of_range("simple reflection index");
    AffineWeylElt x = identity(rank);
    if (i == 0) {
        // s_0 = s_theta t_{-theta^v}
        std::swap(x.perm.front(), x.perm.back());
        x.xi.assign(static_cast<std::size_t>(rank), -1);
    } else {
        std::swap(x.perm[static_cast<std::size_t>(i - 1)], x.perm[static_cast<std::size_t>(i)]);
    }
    return x;
}

AffineWeylElt AffineWeylElt::translation(int rank, const std::vector<int>& xi) {
    if (static_cast<int>(xi.size()) != rank) throw std::invalid_argument("xi length must equal rank");
    AffineWeylElt x = identity(rank);
    x.xi = xi;
    return x;
}

AffineWeylElt AffineWeylElt::from_word(int rank, const std::vector<int>& word) {
    AffineWeylElt x = identity(rank);
    for (int i : word) x = x * simple(rank, i);
    return x;
}

AffineWeylElt operator*(const AffineWeylElt& a, const AffineWeylElt& b) {
    if (a.rank != b.rank) throw std::invalid_argument("rank mismatch");
    AffineWeylElt r;
    r.rank = a.rank;
    r.perm.resize(a.perm.size());
    for (std::size_t i = 0; i < a.perm.size(); ++i) r.perm[i] = a.perm[static_cast<std::size_t>(b.perm[i] - 1)];
    r.xi = perm_inverse_act(b.perm, a.xi);
    for (std::size_t i = 0; i < r.xi.size(); ++i) r.xi[i] += b.xi[i];
    return r;
}

std::string AffineWeylElt::to_string() const {
    std::ostringstream os;
    os << "{perm:[";
    for (std::size_t i = 0; i < perm.size(); ++i) os << (i ? "," : "") << perm[i];
    os << "],xi:[";
    for (std::size_t i = 0; i < xi.size(); ++i) os << (i ? "," : "") << xi[i];
    os << "]}";
    return os.str();
}

AffineWeight weyl_act(const AffineWeylElt& x, const AffineWeight& lam) {
    if (x.rank != lam.rank) throw std::invalid_argument("rank mismatch");
    AffineWeight r = translate(AffineCoweight::from_coroot_vector(x.rank, x.xi), lam);
    for (int i : perm_letters(x.perm)) r = simple_reflection(i, r);
    return r;
}

bool is_positive_real_root(const AffineWeight& beta) {
    if (sgn(beta.level()) != 0 || !beta.is_integral()) throw std::invalid_argument("not a real root");
    const int k = beta.rank;
    // Finite part sum_{j>=1} c_j varpi_j in epsilon coordinates.
    std::vector<BigRat> v(static_cast<std::size_t>(k) + 1, BigRat(0));
    BigRat acc = 0;
    for (int a = k; a >= 1; --a) {
        acc += beta.coords[static_cast<std::size_t>(a)];
        v[static_cast<std::size_t>(a - 1)] = acc;
    }
    auto mx = std::max_element(v.begin(), v.end());
    auto mn = std::min_element(v.begin(), v.end());
    if (*mx - *mn != 2) throw std::invalid_argument("not a real root");
    const BigRat mid = *mn + 1;
    for (auto it = v.begin(); it != v.end(); ++it)
        if (it != mx && it != mn && *it != mid) throw std::invalid_argument("not a real root");
    const BigRat& e = beta.delta_coord();
    if (sgn(e) != 0) return sgn(e) > 0;
    // e_a - e_b is positive iff a < b.
    return mx < mn;
}

int inversions(const std::vector<int>& perm) {
    int n = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++n;
    return n;
}

int ell_semi_infinite(const AffineWeylElt& x) {
    int ht = 0;
    for (int v : x.xi) ht += v;
    return inversions(x.perm) + 2 * ht;
}

std::vector<int> reduced_word(const AffineWeylElt& x) {
    std::vector<int> rev;
    AffineWeylElt cur = x;
    const AffineWeylElt e = AffineWeylElt::identity(x.rank);
    while (!(cur == e)) {
        int found = -1;
        for (int i = 0; i <= x.rank && found < 0; ++i)
            if (!is_positive_real_root(weyl_act(cur, AffineWeight::alpha(x.rank, i)))) found = i;
        if (found < 0) throw std::logic_error("no descent for a non-identity element");
        rev.push_back(found);
        cur = cur * AffineWeylElt::simple(x.rank, found);
    }
    return {rev.rbegin(), rev.rend()};
}

std::vector<int> phi_J(int rank, const std::vector<int>& xi, const std::vector<int>& J) {
    if (static_cast<int>(xi.size()) != rank) throw std::invalid_argument("xi length must equal rank");
    std::vector<bool> inJ(static_cast<std::size_t>(rank) + 2, false);
    for (int j : J) {
        if (j < 1 || j > rank) throw std::invalid_argument("J must lie in 1..rank");
        inJ[static_cast<std::size_t>(j)] = true;
    }
    int radius = static_cast<int>(J.size()) + 1;
    for (int v : xi) radius += std::abs(v);

    // zeta_0 = zeta_{rank+1} = 0 padding.
    std::vector<int> zeta(static_cast<std::size_t>(rank) + 2, 0);
    for (int i = 1; i <= rank; ++i) zeta[static_cast<std::size_t>(i)] = xi[static_cast<std::size_t>(i - 1)];
    auto pair_simple = [&zeta](int j) {
        return 2 * zeta[static_cast<std::size_t>(j)] - zeta[static_cast<std::size_t>(j - 1)] - zeta[static_cast<std::size_t>(j + 1)];
    };

    std::vector<int> phi(static_cast<std::size_t>(rank), 0);
    int lo = 1;
    while (lo <= rank) {
        if (!inJ[static_cast<std::size_t>(lo)]) {
            ++lo;
            continue;
        }
        int hi = lo;
        while (hi + 1 <= rank && inJ[static_cast<std::size_t>(hi + 1)]) ++hi;
        // Component [lo, hi]: every interval sum of <zeta, alpha_j> must lie in {0, -1}.
        auto interval_ok = [&](int end) {
            int s = 0;
            for (int a = end; a >= lo; --a) {
                s += pair_simple(a);
                if (s != 0 && s != -1) return false;
            }
            return true;
        };
        std::vector<int> base(zeta.begin(), zeta.end());
        std::vector<int> found;
        int solutions = 0;
        std::function<void(int)> rec = [&](int j) {
            if (j > hi) {
                if (!interval_ok(hi)) return;
                ++solutions;
                found.assign(zeta.begin() + lo, zeta.begin() + hi + 1);
                return;
            }
            const int b = base[static_cast<std::size_t>(j)];
            for (int p = -radius; p <= radius; ++p) {
                zeta[static_cast<std::size_t>(j)] = b + p;
                if (j > lo && !interval_ok(j - 1)) continue;
                rec(j + 1);
            }
            zeta[static_cast<std::size_t>(j)] = b;
        };
        rec(lo);
        if (solutions == 0) throw std::runtime_error("phi_J: search exhausted without a J-adjusted candidate");
        if (solutions > 1) throw std::logic_error("phi_J: J-adjusted candidate is not unique");
        for (int j = lo; j <= hi; ++j) {
            zeta[static_cast<std::size_t>(j)] = found[static_cast<std::size_t>(j - lo)];
            phi[static_cast<std::size_t>(j - 1)] = found[static_cast<std::size_t>(j - lo)] - base[static_cast<std::size_t>(j)];
        }
        lo = hi + 1;
    }
    return phi;
}

}  // namespace lzb
