#include "lzb/exactring.hpp"

namespace lzb {

TruncSeriesQinv::TruncSeriesQinv(int order, int shift) : shift_(shift) {
    if (order < 0) throw ArithmeticError("negative truncation order");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, BigRat(0));
}

TruncSeriesQinv TruncSeriesQinv::one(int order) {
    TruncSeriesQinv s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncSeriesQinv TruncSeriesQinv::from_laurent(const LaurentQ& p, int order) {
    TruncSeriesQinv s(order);
    for (const auto& [e, c] : p.terms()) {
        if (e > 0) throw ArithmeticError("positive q-power in a q^{-1} series; use a shift");
        if (-e <= order) s.coeffs_[static_cast<std::size_t>(-e)] = c;
    }
    return s;
}

bool TruncSeriesQinv::is_zero() const {
    for (const auto& c : coeffs_)
        if (sgn(c) != 0) return false;
    return true;
}

TruncSeriesQinv TruncSeriesQinv::shifted(int s) const {
    TruncSeriesQinv r = *this;
    r.shift_ += s;
    return r;
}

namespace {
void check_compatible(const TruncSeriesQinv& a, const TruncSeriesQinv& b) {
    if (a.order() != b.order()) throw ArithmeticError("series truncation orders differ");
}
}  // namespace

TruncSeriesQinv& TruncSeriesQinv::operator+=(const TruncSeriesQinv& o) {
    check_compatible(*this, o);
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (shift_ != o.shift_) throw ArithmeticError("adding series with different shifts");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

TruncSeriesQinv& TruncSeriesQinv::operator-=(const TruncSeriesQinv& o) {
    TruncSeriesQinv neg = o;
    for (auto& c : neg.coeffs_) c = -c;
    return *this += neg;
}

TruncSeriesQinv operator*(const TruncSeriesQinv& a, const TruncSeriesQinv& b) {
    check_compatible(a, b);
    const int n = a.order();
    TruncSeriesQinv r(n, a.shift_ + b.shift_);
    for (int i = 0; i <= n; ++i) {
        const BigRat& ai = a.coeffs_[static_cast<std::size_t>(i)];
        if (sgn(ai) == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            const BigRat& bj = b.coeffs_[static_cast<std::size_t>(j)];
            if (sgn(bj) != 0) r.coeffs_[static_cast<std::size_t>(i + j)] += ai * bj;
        }
    }
    return r;
}

bool operator==(const TruncSeriesQinv& a, const TruncSeriesQinv& b) {
    if (a.order() != b.order()) return false;
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.shift_ == b.shift_ && a.coeffs_ == b.coeffs_;
}

std::string TruncSeriesQinv::to_string() const {
    std::vector<LaurentQ::Term> terms;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (sgn(coeffs_[k]) != 0) terms.emplace_back(shift_ - static_cast<int>(k), coeffs_[k]);
    return format_q_terms(terms);
}

TruncSeriesQinv geometric_inverse(const std::vector<int>& factor_exponents, int order) {
    TruncSeriesQinv s = TruncSeriesQinv::one(order);
    std::vector<BigRat> c = s.coeffs();
    for (int e : factor_exponents) {
        if (e <= 0) throw ArithmeticError("geometric_inverse needs positive exponents");
        for (int k = e; k <= order; ++k) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - e)];
    }
    for (int k = 0; k <= order; ++k) s.set_coeff(k, c[static_cast<std::size_t>(k)]);
    return s;
}

}  // namespace lzb
