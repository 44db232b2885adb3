#include "lzb/exactring.hpp"

#include <algorithm>
#include <sstream>

namespace lzb {

std::string rat_to_string(const BigRat& r) { return r.get_str(); }

LaurentQ::LaurentQ(long c) : LaurentQ(BigRat(c)) {}

LaurentQ::LaurentQ(const BigRat& c) {
    if (sgn(c) != 0) terms_.emplace_back(0, c);
}

LaurentQ LaurentQ::monomial(const BigRat& c, int e) {
    LaurentQ r;
    if (sgn(c) != 0) r.terms_.emplace_back(e, c);
    return r;
}

LaurentQ LaurentQ::q_int(int m) {
    LaurentQ r;
    int a = m < 0 ? -m : m;
    for (int e = -a + 1; e <= a - 1; e += 2) r.terms_.emplace_back(e, BigRat(m < 0 ? -1 : 1));
    return r;
}

LaurentQ LaurentQ::q_factorial(int m) {
    if (m < 0) throw ArithmeticError("q_factorial of a negative integer");
    LaurentQ r(1);
    for (int j = 2; j <= m; ++j) r *= q_int(j);
    return r;
}

int LaurentQ::min_exp() const {
    if (terms_.empty()) throw ArithmeticError("min_exp of zero");
    return terms_.front().first;
}

int LaurentQ::max_exp() const {
    if (terms_.empty()) throw ArithmeticError("max_exp of zero");
    return terms_.back().first;
}

BigRat LaurentQ::coeff(int e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, int x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) return it->second;
    return 0;
}

BigRat LaurentQ::eval_at_one() const {
    BigRat s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

LaurentQ LaurentQ::shifted(int e) const {
    LaurentQ r = *this;
    for (auto& t : r.terms_) t.first += e;
    return r;
}

LaurentQ LaurentQ::inverted_variable() const {
    LaurentQ r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.emplace_back(-it->first, it->second);
    return r;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
    if (o.terms_.empty()) return *this;
    if (&o == this) return *this = *this * LaurentQ(2);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first < a->first) {
            out.push_back(*b++);
        } else {
            BigRat s = a->second + b->second;
            if (sgn(s) != 0) out.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

LaurentQ LaurentQ::operator-() const {
    LaurentQ r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& o) { return *this += -o; }

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
    if (a.terms_.empty() || b.terms_.empty()) return {};
    if (b.terms_.size() == 1) {
        LaurentQ r = a;
        for (auto& t : r.terms_) {
            t.first += b.terms_[0].first;
            t.second *= b.terms_[0].second;
        }
        return r;
    }
    if (a.terms_.size() == 1) return b * a;
    std::map<int, BigRat> acc;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
    LaurentQ r;
    for (auto& [e, c] : acc)
        if (sgn(c) != 0) r.terms_.emplace_back(e, std::move(c));
    return r;
}

LaurentQ& LaurentQ::operator*=(const LaurentQ& o) { return *this = *this * o; }

LaurentQ LaurentQ::pow(unsigned k) const {
    LaurentQ r(1);
    for (unsigned i = 0; i < k; ++i) r *= *this;
    return r;
}

std::optional<LaurentQ> LaurentQ::divide_exact(const LaurentQ& d) const {
    if (d.is_zero()) throw ArithmeticError("division by zero Laurent polynomial");
    if (is_zero()) return LaurentQ{};
    if (d.is_monomial()) {
        LaurentQ r = *this;
        for (auto& t : r.terms_) {
            t.first -= d.terms_[0].first;
            t.second /= d.terms_[0].second;
        }
        return r;
    }
    // Long division from the top degree.
    std::map<int, BigRat> rem;
    for (const auto& t : terms_) rem.insert(t);
    const int dtop = d.max_exp();
    const int dlow = d.min_exp();
    const BigRat& lead = d.terms_.back().second;
    const int qmin = min_exp() - dlow;
    std::map<int, BigRat> quot;
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        const int e = top->first - dtop;
        if (e < qmin) return std::nullopt;
        BigRat c = top->second / lead;
        quot[e] = c;
        for (const auto& [de, dc] : d.terms_) {
            BigRat& slot = rem[e + de];
            slot -= c * dc;
            if (sgn(slot) == 0) rem.erase(e + de);
        }
    }
    LaurentQ r;
    for (auto& [e, c] : quot) r.terms_.emplace_back(e, std::move(c));
    return r;
}

namespace {
std::string power_str(const std::string& var, int e) {
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}
}  // namespace

std::string format_q_terms(const std::vector<LaurentQ::Term>& terms, const std::string& var) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        BigRat a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << a.get_str();
        } else if (a == 1) {
            os << power_str(var, e);
        } else {
            os << a.get_str() << "*" << power_str(var, e);
        }
    }
    return os.str();
}

std::string LaurentQ::to_string(const std::string& var) const { return format_q_terms(terms_, var); }

}  // namespace lzb
