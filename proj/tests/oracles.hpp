// Independent reference computations used only by tests.
#pragma once

#include <functional>
#include <map>
#include <vector>

#include "lzb/exactring.hpp"
#include "lzb/shapes.hpp"
#include "lzb/symfun.hpp"

namespace oracle {

using lzb::BigInt;
using lzb::Exponent;
using lzb::Partition;

/// Number of partitions of k whose parts come from the multiset of allowed sizes (one colour per entry).
inline BigInt restricted_partition_count(const std::vector<int>& sizes, int k) {
    std::function<BigInt(std::size_t, int)> rec = [&](std::size_t idx, int rest) -> BigInt {
        if (rest == 0) return 1;
        if (idx == sizes.size()) return 0;
        BigInt total = 0;
        for (int use = 0; use * sizes[idx] <= rest; ++use) total += rec(idx + 1, rest - use * sizes[idx]);
        return total;
    };
    return rec(0, k);
}

/// Coefficient list of the Gaussian binomial: partitions of k inside an r x (m-r) box.
inline std::map<int, BigInt> box_partition_counts(int m, int r) {
    std::map<int, BigInt> out;
    const int w = m - r;
    std::function<void(int, int, int)> rec = [&](int row, int cap, int sum) {
        if (row == r) {
            out[sum] += 1;
            return;
        }
        for (int v = 0; v <= cap; ++v) rec(row + 1, v, sum + v);
    };
    rec(0, w, 0);
    return out;
}

/// Horizontal strip test by cells: no two cells of outer minus inner share a column.
inline bool strip_by_cells(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner)) return false;
    std::map<int, int> per_column;
    for (int i = 1; i <= outer.length(); ++i)
        for (int c = inner.part(i) + 1; c <= outer.part(i); ++c)
            if (++per_column[c] > 1) return false;
    return true;
}

/// All partitions contained in outer.
inline std::vector<Partition> sub_partitions(const Partition& outer) {
    std::vector<Partition> out;
    std::vector<int> cur(static_cast<std::size_t>(outer.length()), 0);
    std::function<void(int, int)> rec = [&](int i, int cap) {
        if (i > outer.length()) {
            out.emplace_back(cur);
            return;
        }
        for (int v = std::min(cap, outer.part(i)); v >= 0; --v) {
            cur[static_cast<std::size_t>(i - 1)] = v;
            rec(i + 1, v);
        }
    };
    rec(1, outer.part(1));
    return out;
}

/// Schur polynomial by semistandard tableaux enumeration.
inline lzb::GLPolyT<BigInt> ssyt_schur(const Partition& shape, int n) {
    lzb::GLPolyT<BigInt> out(n);
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= shape.length(); ++i)
        for (int j = 1; j <= shape.part(i); ++j) cells.emplace_back(i, j);
    std::map<std::pair<int, int>, int> fill;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            Exponent e(static_cast<std::size_t>(n), 0);
            for (const auto& [cell, v] : fill) ++e[static_cast<std::size_t>(v - 1)];
            out.add_term(e, BigInt(1));
            return;
        }
        const auto [i, j] = cells[idx];
        int lo = 1;
        if (j > 1) lo = std::max(lo, fill[{i, j - 1}]);
        if (i > 1) lo = std::max(lo, fill[{i - 1, j}] + 1);
        for (int v = lo; v <= n; ++v) {
            fill[{i, j}] = v;
            rec(idx + 1);
        }
        fill.erase({i, j});
    };
    rec(0);
    return out;
}

/// prod over columns of e_{column length}: fillings strictly increasing down each column.
inline lzb::GLPolyT<BigInt> column_strict_fillings(const Partition& shape, int n) {
    std::vector<int> cols;
    for (int j = 1; j <= shape.part(1); ++j) {
        int len = 0;
        while (shape.part(len + 1) >= j) ++len;
        cols.push_back(len);
    }
    lzb::GLPolyT<BigInt> out(n);
    Exponent e(static_cast<std::size_t>(n), 0);
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t col, int placed, int next) {
        if (col == cols.size()) {
            out.add_term(e, BigInt(1));
            return;
        }
        if (placed == cols[col]) {
            rec(col + 1, 0, 1);
            return;
        }
        for (int v = next; v <= n; ++v) {
            ++e[static_cast<std::size_t>(v - 1)];
            rec(col, placed + 1, v + 1);
            --e[static_cast<std::size_t>(v - 1)];
        }
    };
    rec(0, 0, 1);
    return out;
}

/// Dense bivariate power series in (q,t) truncated at total degree D.
class QTSeries {
public:
    explicit QTSeries(int degree) : d_(degree), c_(static_cast<std::size_t>((degree + 1) * (degree + 1)), BigInt(0)) {
        at(0, 0) = 1;
    }
    BigInt& at(int i, int j) { return c_[static_cast<std::size_t>(i * (d_ + 1) + j)]; }
    const BigInt& at(int i, int j) const { return c_[static_cast<std::size_t>(i * (d_ + 1) + j)]; }
    int degree() const { return d_; }

    /// *= (1 - q^a t^b)
    void mul_one_minus(int a, int b) {
        for (int s = d_; s >= a + b; --s)
            for (int i = a; i <= s - b; ++i) at(i, s - i) -= at(i - a, s - i - b);
    }
    /// /= (1 - q^a t^b), (a,b) != (0,0)
    void div_one_minus(int a, int b) {
        for (int s = a + b; s <= d_; ++s)
            for (int i = a; i <= s - b; ++i) at(i, s - i) += at(i - a, s - i - b);
    }
    /// *= (q^x t^y; q)_inf^{power}
    void mul_pochhammer(int x, int y, int power) {
        for (int k = 0; x + k + y <= d_; ++k) {
            if (power > 0) mul_one_minus(x + k, y);
            else div_one_minus(x + k, y);
        }
    }
    /// *= f(q^x t^y)^{power} with f(z) = (zt)_inf / (zq)_inf
    void mul_f(int x, int y, int power) {
        mul_pochhammer(x, y + 1, power);
        mul_pochhammer(x + 1, y, -power);
    }
    /// Truncated product with a polynomial.
    QTSeries times(const lzb::PolyQT& p) const {
        QTSeries r(d_);
        r.at(0, 0) = 0;
        for (const auto& [e, c] : p.terms())
            for (int i = 0; i + e.first <= d_; ++i)
                for (int j = 0; i + j + e.first + e.second <= d_; ++j)
                    if (sgn(at(i, j)) != 0) r.at(i + e.first, j + e.second) += c * at(i, j);
        return r;
    }
    static QTSeries from_poly(const lzb::PolyQT& p, int degree) {
        QTSeries r(degree);
        r.at(0, 0) = 0;
        for (const auto& [e, c] : p.terms())
            if (e.first + e.second <= degree) r.at(e.first, e.second) += c;
        return r;
    }
    bool operator==(const QTSeries& o) const {
        for (int i = 0; i <= d_; ++i)
            for (int j = 0; i + j <= d_; ++j)
                if (at(i, j) != o.at(i, j)) return false;
        return true;
    }

private:
    int d_;
    std::vector<BigInt> c_;
};

/// psi_{lam/mu} from the infinite-product definition, truncated at total degree D.
inline QTSeries psi_series(const Partition& lam, const Partition& mu, int degree) {
    QTSeries s(degree);
    for (int i = 1; i <= mu.length(); ++i)
        for (int j = i; j <= mu.length(); ++j) {
            const int b = j - i;
            s.mul_f(mu.part(i) - mu.part(j), b, 1);
            s.mul_f(lam.part(i) - lam.part(j + 1), b, 1);
            s.mul_f(lam.part(i) - mu.part(j), b, -1);
            s.mul_f(mu.part(i) - lam.part(j + 1), b, -1);
        }
    return s;
}

}  // namespace oracle
