// Exact coefficient rings: Laurent polynomials in q, bivariate polynomials and
// rational functions in (q,t), and truncated series in q^{-1}.
#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lzb {

using BigInt = mpz_class;
using BigRat = mpq_class;

struct ArithmeticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string rat_to_string(const BigRat& r);

/// Sparse Laurent polynomial in q with rational coefficients.
class LaurentQ {
public:
    using Term = std::pair<int, BigRat>;

    LaurentQ() = default;
    LaurentQ(long c);  // NOLINT: constants convert implicitly
    LaurentQ(const BigRat& c);  // NOLINT

    static LaurentQ monomial(const BigRat& c, int e);
    static LaurentQ q_power(int e) { return monomial(1, e); }
    /// Symmetric q-integer [m] = (q^m - q^-m)/(q - q^-1); [-m] = -[m].
    static LaurentQ q_int(int m);
    static LaurentQ q_factorial(int m);

    /// Terms in ascending exponent order, no zero coefficients.
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int min_exp() const;
    int max_exp() const;
    BigRat coeff(int e) const;
    BigRat eval_at_one() const;
    bool is_monomial() const { return terms_.size() == 1; }

    LaurentQ shifted(int e) const;
    LaurentQ inverted_variable() const;  // q -> q^{-1}
    /// Quotient when d divides *this in Q[q,q^-1], nullopt otherwise.
    std::optional<LaurentQ> divide_exact(const LaurentQ& d) const;

    LaurentQ& operator+=(const LaurentQ& o);
    LaurentQ& operator-=(const LaurentQ& o);
    LaurentQ& operator*=(const LaurentQ& o);
    LaurentQ operator-() const;
    LaurentQ pow(unsigned k) const;

    friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
    friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
    friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
    friend bool operator==(const LaurentQ& a, const LaurentQ& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentQ& a, const LaurentQ& b) { return !(a == b); }

    std::string to_string(const std::string& var = "q") const;

private:
    std::vector<Term> terms_;
};

/// Formats (exponent, coefficient) pairs in the given order, e.g. "1 + q^-1 + 2*q^-2".
std::string format_q_terms(const std::vector<LaurentQ::Term>& terms, const std::string& var = "q");

/// Polynomial in q and t with integer coefficients, ordered lexicographically on (qexp, texp).
class PolyQT {
public:
    using Exp = std::pair<int, int>;
    using Terms = std::map<Exp, BigInt>;

    PolyQT() = default;
    PolyQT(long c);  // NOLINT
    PolyQT(const BigInt& c);  // NOLINT
    static PolyQT monomial(const BigInt& c, int qe, int te);
    /// q^a t^b - 1
    static PolyQT binomial(int a, int b);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// Leading term in lex order; the polynomial must be nonzero.
    const Terms::value_type& leading() const { return *terms_.rbegin(); }
    BigInt content() const;
    PolyQT divided_by_integer(const BigInt& c) const;

    std::optional<PolyQT> divide_exact(const PolyQT& d) const;
    /// Fast exact division by q^a t^b - 1.
    std::optional<PolyQT> divide_binomial(int a, int b) const;

    LaurentQ at_t_zero() const;
    LaurentQ at_t_equals_q() const;

    PolyQT& operator+=(const PolyQT& o);
    PolyQT& operator-=(const PolyQT& o);
    PolyQT operator-() const;
    friend PolyQT operator+(PolyQT a, const PolyQT& b) { return a += b; }
    friend PolyQT operator-(PolyQT a, const PolyQT& b) { return a -= b; }
    friend PolyQT operator*(const PolyQT& a, const PolyQT& b);
    friend bool operator==(const PolyQT& a, const PolyQT& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const PolyQT& a, const PolyQT& b) { return !(a == b); }

    std::string to_string() const;

private:
    void add_term(const Exp& e, const BigInt& c);
    Terms terms_;
};

/// Rational function num/den in (q,t). The denominator is kept as
/// extra * prod (q^a t^b - 1)^m; no gcd is ever computed.
class RatFuncQT {
public:
    using Binomials = std::map<std::pair<int, int>, int>;

    RatFuncQT() = default;
    RatFuncQT(long c);  // NOLINT
    RatFuncQT(const PolyQT& num);  // NOLINT
    RatFuncQT(const PolyQT& num, const PolyQT& den);
    /// num / prod (q^a t^b - 1)^m
    RatFuncQT(const PolyQT& num, Binomials binomials);

    const PolyQT& num() const { return num_; }
    PolyQT den() const;
    const PolyQT& den_extra() const { return extra_; }
    const Binomials& den_binomials() const { return bins_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFuncQT inverse() const;

    RatFuncQT& operator+=(const RatFuncQT& o);
    RatFuncQT& operator-=(const RatFuncQT& o);
    RatFuncQT& operator*=(const RatFuncQT& o);
    RatFuncQT operator-() const;
    friend RatFuncQT operator+(RatFuncQT a, const RatFuncQT& b) { return a += b; }
    friend RatFuncQT operator-(RatFuncQT a, const RatFuncQT& b) { return a -= b; }
    friend RatFuncQT operator*(RatFuncQT a, const RatFuncQT& b) { return a *= b; }
    friend RatFuncQT operator/(const RatFuncQT& a, const RatFuncQT& b) { return a * b.inverse(); }
    friend bool operator==(const RatFuncQT& a, const RatFuncQT& b);
    friend bool operator!=(const RatFuncQT& a, const RatFuncQT& b) { return !(a == b); }

    /// "(num)/(den)" with expanded polynomials, or just "num" when den is 1.
    std::string to_string() const;

private:
    void normalize();
    PolyQT num_;
    PolyQT extra_{1};
    Binomials bins_;
};

enum class TValue { Zero, Q };

/// Substitutes t = 0 or t = q and divides exactly.
LaurentQ ratfunc_eval_t(const RatFuncQT& f, TValue t);

/// q^shift * sum_{k=0}^{N} c_k q^{-k}.
class TruncSeriesQinv {
public:
    explicit TruncSeriesQinv(int order = 0, int shift = 0);
    static TruncSeriesQinv one(int order);
    /// Requires every exponent of p to be <= 0.
    static TruncSeriesQinv from_laurent(const LaurentQ& p, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    int shift() const { return shift_; }
    const std::vector<BigRat>& coeffs() const { return coeffs_; }
    const BigRat& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    void set_coeff(int k, const BigRat& c) { coeffs_.at(static_cast<std::size_t>(k)) = c; }
    bool is_zero() const;
    TruncSeriesQinv shifted(int s) const;

    TruncSeriesQinv& operator+=(const TruncSeriesQinv& o);
    TruncSeriesQinv& operator-=(const TruncSeriesQinv& o);
    friend TruncSeriesQinv operator+(TruncSeriesQinv a, const TruncSeriesQinv& b) { return a += b; }
    friend TruncSeriesQinv operator-(TruncSeriesQinv a, const TruncSeriesQinv& b) { return a -= b; }
    friend TruncSeriesQinv operator*(const TruncSeriesQinv& a, const TruncSeriesQinv& b);
    friend bool operator==(const TruncSeriesQinv& a, const TruncSeriesQinv& b);
    friend bool operator!=(const TruncSeriesQinv& a, const TruncSeriesQinv& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::vector<BigRat> coeffs_;
    int shift_ = 0;
};

/// prod_r (1 - q^{-e_r})^{-1} truncated at q^{-N}.
TruncSeriesQinv geometric_inverse(const std::vector<int>& factor_exponents, int order);

}  // namespace lzb
