#include "lzb/demchar.hpp"

#include <sstream>
#include <stdexcept>

namespace lzb {

GradedCharacter::GradedCharacter(int nvars, int order) : nvars_(nvars), order_(order) {
    if (nvars < 0 || order < 0) throw std::invalid_argument("negative variable count or truncation order");
}

GradedCharacter GradedCharacter::one(int nvars, int order) {
    GradedCharacter c(nvars, order);
    c.add(Exponent(static_cast<std::size_t>(nvars), 0), TruncSeriesQinv::one(order));
    return c;
}

void GradedCharacter::add(const Exponent& e, const TruncSeriesQinv& s) {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("class length mismatch");
    if (s.order() != order_) throw std::invalid_argument("series order mismatch");
    if (s.is_zero()) return;
    const Exponent key = ClassPolyT<BigInt>::normalize(e);
    auto [it, inserted] = terms_.emplace(key, s);
    if (!inserted) {
        it->second += s;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GradedCharacter& GradedCharacter::operator+=(const GradedCharacter& o) {
    if (o.nvars_ != nvars_ || o.order_ != order_) throw std::invalid_argument("character shape mismatch");
    for (const auto& [e, s] : o.terms_) add(e, s);
    return *this;
}

GradedCharacter GradedCharacter::times(const TruncSeriesQinv& s) const {
    GradedCharacter r(nvars_, order_);
    for (const auto& [e, c] : terms_) r.add(e, c * s);
    return r;
}

GradedCharacter GradedCharacter::shifted(int s) const {
    GradedCharacter r(nvars_, order_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.shifted(s));
    return r;
}

std::map<std::pair<Exponent, int>, BigRat> GradedCharacter::coefficients() const {
    std::map<std::pair<Exponent, int>, BigRat> out;
    for (const auto& [e, s] : terms_)
        for (int k = 0; k <= order_; ++k)
            if (sgn(s.coeff(k)) != 0) out.emplace(std::make_pair(e, s.shift() - k), s.coeff(k));
    return out;
}

bool operator==(const GradedCharacter& a, const GradedCharacter& b) {
    return a.nvars_ == b.nvars_ && a.order_ == b.order_ && a.coefficients() == b.coefficients();
}

namespace {

std::string class_string(const Exponent& e) {
    std::string s = "x^(";
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    return s + ")";
}

std::vector<int> block_exponents(int len) {
    std::vector<int> v;
    for (int r = 1; r <= len; ++r) v.push_back(r);
    return v;
}

void append_block(std::vector<int>& v, int len) {
    for (int r = 1; r <= len; ++r) v.push_back(r);
}

}  // namespace

std::string GradedCharacter::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, s] : terms_) {
        os << (first ? "" : " + ") << class_string(e) << "*(" << s.to_string() << ")";
        first = false;
    }
    return os.str();
}

GradedCharacter theta(const GradedCharacter& c) {
    if (c.nvars() < 1) throw std::invalid_argument("theta needs at least one variable");
    GradedCharacter r(c.nvars() - 1, c.order());
    for (const auto& [e, s] : c.terms()) r.add(Exponent(e.begin(), e.end() - 1), s);
    return r;
}

GradedCharacter t0_class_character(const Partition& shape, int nvars, int order) {
    const GLPolyT<LaurentQ> p = macdonald_t0(shape, nvars);
    GradedCharacter r(nvars, order);
    for (const auto& [e, c] : p.terms()) r.add(e, TruncSeriesQinv::from_laurent(c.inverted_variable(), order));
    return r;
}

GradedCharacter gch_demazure_e(const LevelZeroDominant& lam, int order) {
    std::vector<int> exps;
    for (int mi : lam.m) append_block(exps, mi);
    return t0_class_character(lam.partition(), lam.rank + 1, order).times(geometric_inverse(exps, order));
}

GradedCharacter gch_demazure_txi(const LevelZeroDominant& lam, const std::vector<int>& xi, int order) {
    if (static_cast<int>(xi.size()) != lam.rank) throw std::invalid_argument("xi length must equal rank");
    int shift = 0;
    for (int i = 0; i < lam.rank; ++i) shift -= xi[static_cast<std::size_t>(i)] * lam.m[static_cast<std::size_t>(i)];
    return gch_demazure_e(lam, order).shifted(shift);
}

MpCharacter gch_Mp(const LevelZeroDominant& lam, int p, int order) {
    const int n = lam.rank;
    MpCharacter out{GradedCharacter(n, order), false};
    if (p < 0 || p > lam.total()) {
        out.out_of_range = true;
        return out;
    }
    const Partition big = lam.partition();
    for (const Partition& mu : horizontal_strips(big, n)) {
        if (big.size() - mu.size() != p) continue;
        std::vector<int> exps;
        for (int i = 1; i <= big.length(); ++i) {
            append_block(exps, big.part(i) - mu.part(i));
            append_block(exps, mu.part(i) - big.part(i + 1));
        }
        out.character += t0_class_character(mu, n, order).times(geometric_inverse(exps, order));
    }
    return out;
}

std::optional<Mismatch> compare_characters(const GradedCharacter& lhs, const GradedCharacter& rhs,
                                           const std::string& identity) {
    if (lhs.nvars() != rhs.nvars() || lhs.order() != rhs.order())
        throw std::invalid_argument("comparing characters of different shape");
    const auto a = lhs.coefficients();
    const auto b = rhs.coefficients();
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first))
            return Mismatch{identity, ia->first.first, ia->first.second, ia->second, BigRat(0)};
        if (ia == a.end() || ib->first < ia->first)
            return Mismatch{identity, ib->first.first, ib->first.second, BigRat(0), ib->second};
        if (ia->second != ib->second) return Mismatch{identity, ia->first.first, ia->first.second, ia->second, ib->second};
        ++ia;
        ++ib;
    }
    return std::nullopt;
}

namespace {

void check(VerifyReport& r, const GradedCharacter& lhs, const GradedCharacter& rhs, const std::string& identity,
           bool perturb = false) {
    ++r.checks;
    if (r.first_mismatch) return;
    r.first_mismatch = compare_characters(lhs, perturb ? perturbed(rhs) : rhs, identity);
}

std::string weights_string(const std::vector<int>& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
    return s;
}

}  // namespace

GradedCharacter perturbed(const GradedCharacter& c) {
    const Exponent zero(static_cast<std::size_t>(c.nvars()), 0);
    auto it = c.terms().find(zero);
    TruncSeriesQinv bump(c.order(), it == c.terms().end() ? 0 : it->second.shift());
    bump.set_coeff(c.order(), 1);
    GradedCharacter r = c;
    r.add(zero, bump);
    return r;
}

VerifyReport verify_sum_decomposition(const LevelZeroDominant& lam, int order, bool perturb) {
    VerifyReport r;
    r.kind = "sum";
    r.fields = {{"n", std::to_string(lam.rank)}, {"lam", weights_string(lam.m)}, {"trunc", std::to_string(order)}};
    GradedCharacter lhs(lam.rank, order);
    for (int p = 0; p <= lam.total(); ++p) lhs += gch_Mp(lam, p, order).character;
    check(r, lhs, theta(gch_demazure_e(lam, order)), "sum_p M_p = theta(V_e)", perturb);
    return r;
}

VerifyReport verify_branching(int n, int i, int m, int order, bool perturb) {
    if (n < 2 || i < 1 || i > n || m < 0) throw std::invalid_argument("need n >= 2, 1 <= i <= n, m >= 0");
    VerifyReport r;
    r.kind = "branching";
    r.fields = {{"n", std::to_string(n)}, {"i", std::to_string(i)}, {"m", std::to_string(m)}, {"trunc", std::to_string(order)}};
    const LevelZeroDominant big = LevelZeroDominant::fundamental_multiple(n, i, m);
    const int k = n - 1;  // rank of the smaller algebra
    GradedCharacter total(n, order);
    for (int p = 0; p <= m; ++p) {
        GradedCharacter summand(n, order);
        if (i >= 2 && i <= n - 1) {
            std::vector<int> w(static_cast<std::size_t>(k), 0);
            w[static_cast<std::size_t>(i - 2)] += p;
            w[static_cast<std::size_t>(i - 1)] += m - p;
            summand = gch_demazure_e(LevelZeroDominant(k, w), order);
        } else if (i == 1) {
            summand = gch_demazure_e(LevelZeroDominant::fundamental_multiple(k, 1, m - p), order)
                          .times(geometric_inverse(block_exponents(p), order));
        } else {
            summand = gch_demazure_e(LevelZeroDominant::fundamental_multiple(k, k, p), order)
                          .times(geometric_inverse(block_exponents(m - p), order));
        }
        check(r, gch_Mp(big, p, order).character, summand, "M_p = summand p=" + std::to_string(p), perturb && p == 0);
        total += summand;
    }
    check(r, theta(gch_demazure_e(big, order)), total, "theta(V_e) = sum of summands");
    return r;
}

VerifyReport verify_extremal_pieces(const LevelZeroDominant& lam, int order) {
    const int n = lam.rank;
    if (n < 2) throw std::invalid_argument("extremal pieces need rank >= 2");
    VerifyReport r;
    r.kind = "extremal";
    r.fields = {{"n", std::to_string(n)}, {"lam", weights_string(lam.m)}, {"trunc", std::to_string(order)}};
    const int m = lam.total();
    // p = 0: V(j*(lam)) with the partition series of the last multiplicity.
    const LevelZeroDominant head(n - 1, std::vector<int>(lam.m.begin(), lam.m.end() - 1));
    check(r, gch_Mp(lam, 0, order).character,
          gch_demazure_e(head, order).times(geometric_inverse(block_exponents(lam.m.back()), order)), "M_0");
    // p = m: V(sum m_{i+1} varpi_i) with the partition series of the first multiplicity.
    const LevelZeroDominant tail(n - 1, std::vector<int>(lam.m.begin() + 1, lam.m.end()));
    check(r, gch_Mp(lam, m, order).character,
          gch_demazure_e(tail, order).times(geometric_inverse(block_exponents(lam.m.front()), order)), "M_m");
    return r;
}

bool has_dimension_coefficients(const GradedCharacter& c) {
    for (const auto& [key, v] : c.coefficients())
        if (sgn(v) < 0 || v.get_den() != 1) return false;
    return true;
}

}  // namespace lzb
