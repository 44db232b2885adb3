#include "lzb/shapes.hpp"

#include <functional>
#include <stdexcept>

namespace lzb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be nonnegative and weakly decreasing");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
    const int len = std::max(outer.length(), inner.length());
    for (int i = 1; i <= len; ++i) {
        if (outer.part(i) < inner.part(i) || inner.part(i) < outer.part(i + 1)) return false;
    }
    return true;
}

std::vector<Partition> horizontal_strips(const Partition& outer, int max_len) {
    if (max_len < 0) throw std::invalid_argument("max_len must be nonnegative");
    std::vector<Partition> out;
    // mu_i ranges over [lambda_{i+1}, lambda_i]; rows past max_len must be empty.
    if (outer.length() > max_len + 1) return out;
    std::vector<int> mu(static_cast<std::size_t>(outer.length()), 0);
    std::function<void(int)> rec = [&](int i) {
        if (i > outer.length()) {
            out.emplace_back(mu);
            return;
        }
        const int hi = i <= max_len ? outer.part(i) : 0;
        for (int v = hi; v >= outer.part(i + 1); --v) {
            mu[static_cast<std::size_t>(i - 1)] = v;
            rec(i + 1);
        }
    };
    rec(1);
    return out;
}

LaurentQ q_binomial(int m, int r) {
    if (r < 0 || r > m) throw std::invalid_argument("q_binomial needs 0 <= r <= m");
    LaurentQ num(1), den(1);
    for (int j = 0; j < r; ++j) {
        num *= LaurentQ(1) - LaurentQ::q_power(m - j);
        den *= LaurentQ(1) - LaurentQ::q_power(j + 1);
    }
    auto q = num.divide_exact(den);
    if (!q) throw ArithmeticError("Gaussian binomial division is not exact");
    return *q;
}

std::vector<Partition> partitions_of(int n, int max_len) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int cap) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= max_len) return;
        for (int v = std::min(rest, cap); v >= 1; --v) {
            cur.push_back(v);
            rec(rest - v, v);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_of(n, n); }

}  // namespace lzb
