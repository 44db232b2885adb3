#include <sstream>
#include <vector>

#include "lzb/exactring.hpp"

namespace lzb {

PolyQT::PolyQT(long c) : PolyQT(BigInt(c)) {}

PolyQT::PolyQT(const BigInt& c) {
    if (sgn(c) != 0) terms_.emplace(Exp{0, 0}, c);
}

PolyQT PolyQT::monomial(const BigInt& c, int qe, int te) {
    PolyQT p;
    if (sgn(c) != 0) p.terms_.emplace(Exp{qe, te}, c);
    return p;
}

PolyQT PolyQT::binomial(int a, int b) {
    if (a < 0 || b < 0 || (a == 0 && b == 0)) throw ArithmeticError("binomial exponent must be positive");
    PolyQT p;
    p.terms_.emplace(Exp{0, 0}, BigInt(-1));
    p.terms_.emplace(Exp{a, b}, BigInt(1));
    return p;
}

bool PolyQT::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exp{0, 0} && terms_.begin()->second == 1;
}

BigInt PolyQT::content() const {
    BigInt g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

PolyQT PolyQT::divided_by_integer(const BigInt& c) const {
    PolyQT r;
    for (const auto& [e, v] : terms_) {
        if (!mpz_divisible_p(v.get_mpz_t(), c.get_mpz_t())) throw ArithmeticError("inexact integer division");
        r.terms_.emplace_hint(r.terms_.end(), e, BigInt(v / c));
    }
    return r;
}

void PolyQT::add_term(const Exp& e, const BigInt& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

PolyQT& PolyQT::operator+=(const PolyQT& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

PolyQT& PolyQT::operator-=(const PolyQT& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

PolyQT PolyQT::operator-() const {
    PolyQT r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

PolyQT operator*(const PolyQT& a, const PolyQT& b) {
    PolyQT r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return r;
}

std::optional<PolyQT> PolyQT::divide_exact(const PolyQT& d) const {
    if (d.is_zero()) throw ArithmeticError("division by zero polynomial");
    for (const auto* p : {this, &d})
        for (const auto& [e, c] : p->terms_)
            if (e.first < 0 || e.second < 0) throw ArithmeticError("divide_exact needs nonnegative exponents");
    const auto [dl, dc] = d.leading();
    PolyQT rem = *this;
    PolyQT quot;
    while (!rem.is_zero()) {
        const auto [rl, rc] = rem.leading();
        if (rl.first < dl.first || rl.second < dl.second) return std::nullopt;
        if (!mpz_divisible_p(rc.get_mpz_t(), dc.get_mpz_t())) return std::nullopt;
        BigInt c = rc / dc;
        Exp shift{rl.first - dl.first, rl.second - dl.second};
        quot.add_term(shift, c);
        for (const auto& [e, v] : d.terms_) rem.add_term({e.first + shift.first, e.second + shift.second}, -c * v);
    }
    return quot;
}

std::optional<PolyQT> PolyQT::divide_binomial(int a, int b) const {
    // f = (q^a t^b - 1) g  <=>  g = sum_{j>=1} (q^a t^b)^{-j} f, read off from the top.
    if (is_zero()) return PolyQT{};
    PolyQT rem = *this;
    PolyQT quot;
    while (!rem.is_zero()) {
        auto top = std::prev(rem.terms_.end());
        const Exp e = top->first;
        const BigInt c = top->second;
        if (e.first < a || e.second < b) return std::nullopt;
        const Exp s{e.first - a, e.second - b};
        quot.add_term(s, c);
        rem.terms_.erase(top);
        rem.add_term(s, c);
    }
    return quot;
}

LaurentQ PolyQT::at_t_zero() const {
    LaurentQ r;
    for (const auto& [e, c] : terms_)
        if (e.second == 0) r += LaurentQ::monomial(BigRat(c), e.first);
    return r;
}

LaurentQ PolyQT::at_t_equals_q() const {
    std::map<int, BigInt> acc;
    for (const auto& [e, c] : terms_) acc[e.first + e.second] += c;
    LaurentQ r;
    for (const auto& [e, c] : acc) r += LaurentQ::monomial(BigRat(c), e);
    return r;
}

std::string PolyQT::to_string() const {
    if (terms_.empty()) return "0";
    // Graded display: total degree ascending, then higher q-power first.
    std::vector<std::pair<Exp, BigInt>> v(terms_.begin(), terms_.end());
    std::stable_sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
        int dx = x.first.first + x.first.second;
        int dy = y.first.first + y.first.second;
        if (dx != dy) return dx < dy;
        return x.first.first > y.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : v) {
        BigInt a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        std::string mono;
        auto var = [&mono](const char* name, int k) {
            if (k == 0) return;
            if (!mono.empty()) mono += "*";
            mono += name;
            if (k != 1) mono += "^" + std::to_string(k);
        };
        var("q", e.first);
        var("t", e.second);
        if (mono.empty()) {
            os << a.get_str();
        } else if (a == 1) {
            os << mono;
        } else {
            os << a.get_str() << "*" << mono;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

RatFuncQT::RatFuncQT(long c) : num_(c) {}

RatFuncQT::RatFuncQT(const PolyQT& num) : num_(num) { normalize(); }

RatFuncQT::RatFuncQT(const PolyQT& num, const PolyQT& den) : num_(num), extra_(den) {
    if (den.is_zero()) throw ArithmeticError("zero denominator");
    normalize();
}

RatFuncQT::RatFuncQT(const PolyQT& num, Binomials binomials) : num_(num), bins_(std::move(binomials)) {
    for (auto it = bins_.begin(); it != bins_.end();) {
        if (it->second < 0) throw ArithmeticError("negative binomial multiplicity");
        PolyQT::binomial(it->first.first, it->first.second);  // validates the exponent
        it = it->second == 0 ? bins_.erase(it) : std::next(it);
    }
    normalize();
}

namespace {
PolyQT binomial_power_product(const RatFuncQT::Binomials& bins, const RatFuncQT::Binomials* minus = nullptr) {
    PolyQT r(1);
    for (const auto& [ab, m] : bins) {
        int k = m;
        if (minus) {
            auto it = minus->find(ab);
            if (it != minus->end()) k -= it->second;
        }
        for (int j = 0; j < k; ++j) r = r * PolyQT::binomial(ab.first, ab.second);
    }
    return r;
}

RatFuncQT::Binomials binomial_lcm(const RatFuncQT::Binomials& a, const RatFuncQT::Binomials& b) {
    RatFuncQT::Binomials l = a;
    for (const auto& [ab, m] : b) {
        int& slot = l[ab];
        if (m > slot) slot = m;
    }
    return l;
}
}  // namespace

PolyQT RatFuncQT::den() const { return extra_ * binomial_power_product(bins_); }

void RatFuncQT::normalize() {
    if (num_.is_zero()) {
        extra_ = PolyQT(1);
        bins_.clear();
        return;
    }
    for (auto it = bins_.begin(); it != bins_.end();) {
        while (it->second > 0) {
            auto q = num_.divide_binomial(it->first.first, it->first.second);
            if (!q) break;
            num_ = std::move(*q);
            --it->second;
        }
        it = it->second == 0 ? bins_.erase(it) : std::next(it);
    }
    if (extra_.terms().size() > 1 || (!extra_.is_zero() && extra_.leading().first != PolyQT::Exp{0, 0})) {
        bool nonneg = true;
        for (const auto* p : {&num_, &extra_})
            for (const auto& [e, c] : p->terms())
                if (e.first < 0 || e.second < 0) nonneg = false;
        if (nonneg) {
            if (auto q = num_.divide_exact(extra_)) {
                num_ = std::move(*q);
                extra_ = PolyQT(1);
            }
        }
    }
    if (sgn(extra_.leading().second) < 0) {
        num_ = -num_;
        extra_ = -extra_;
    }
    BigInt g = num_.content();
    BigInt h = extra_.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), h.get_mpz_t());
    if (g != 1) {
        num_ = num_.divided_by_integer(g);
        extra_ = extra_.divided_by_integer(g);
    }
}

RatFuncQT RatFuncQT::inverse() const {
    if (is_zero()) throw ArithmeticError("inverse of zero rational function");
    RatFuncQT r;
    r.num_ = den();
    r.extra_ = num_;
    r.normalize();
    return r;
}

RatFuncQT RatFuncQT::operator-() const {
    RatFuncQT r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFuncQT& RatFuncQT::operator+=(const RatFuncQT& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    Binomials l = binomial_lcm(bins_, o.bins_);
    PolyQT a = num_ * binomial_power_product(l, &bins_);
    PolyQT b = o.num_ * binomial_power_product(l, &o.bins_);
    if (extra_ == o.extra_) {
        num_ = a + b;
    } else {
        num_ = a * o.extra_ + b * extra_;
        extra_ = extra_ * o.extra_;
    }
    bins_ = std::move(l);
    normalize();
    return *this;
}

RatFuncQT& RatFuncQT::operator-=(const RatFuncQT& o) { return *this += -o; }

RatFuncQT& RatFuncQT::operator*=(const RatFuncQT& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RatFuncQT{};
    num_ = num_ * o.num_;
    if (!o.extra_.is_one()) extra_ = extra_ * o.extra_;
    for (const auto& [ab, m] : o.bins_) bins_[ab] += m;
    normalize();
    return *this;
}

bool operator==(const RatFuncQT& a, const RatFuncQT& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    auto l = binomial_lcm(a.bins_, b.bins_);
    PolyQT lhs = a.num_ * b.extra_ * binomial_power_product(l, &a.bins_);
    PolyQT rhs = b.num_ * a.extra_ * binomial_power_product(l, &b.bins_);
    return lhs == rhs;
}

std::string RatFuncQT::to_string() const {
    PolyQT n = num_;
    PolyQT d = den();
    // Display with a positive constant term in the denominator when it has one.
    auto c0 = d.terms().find(PolyQT::Exp{0, 0});
    if (c0 != d.terms().end() && sgn(c0->second) < 0) {
        n = -n;
        d = -d;
    }
    if (d.is_one()) return n.to_string();
    return "(" + n.to_string() + ")/(" + d.to_string() + ")";
}

LaurentQ ratfunc_eval_t(const RatFuncQT& f, TValue t) {
    auto eval = [t](const PolyQT& p) { return t == TValue::Zero ? p.at_t_zero() : p.at_t_equals_q(); };
    LaurentQ num = eval(f.num());
    LaurentQ den = eval(f.den_extra());
    for (const auto& [ab, m] : f.den_binomials()) {
        LaurentQ b = eval(PolyQT::binomial(ab.first, ab.second));
        for (int j = 0; j < m; ++j) den *= b;
    }
    if (den.is_zero()) throw ArithmeticError("denominator vanishes under the t-substitution");
    auto q = num.divide_exact(den);
    if (!q) throw ArithmeticError("t-specialization does not divide exactly");
    return *q;
}

}  // namespace lzb
