// Graded characters of level-zero Demazure submodules, the pieces M_p, and
// character-level checks of the branching identities.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lzb/afflattice.hpp"
#include "lzb/exactring.hpp"
#include "lzb/symfun.hpp"

namespace lzb {

/// Map from normalized classes (last coordinate 0) to q^{-1}-series of a common order.
class GradedCharacter {
public:
    GradedCharacter(int nvars, int order);
    static GradedCharacter one(int nvars, int order);

    int nvars() const { return nvars_; }
    int order() const { return order_; }
    const std::map<Exponent, TruncSeriesQinv>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds s to the class of e (e is normalized first).
    void add(const Exponent& e, const TruncSeriesQinv& s);
    GradedCharacter& operator+=(const GradedCharacter& o);
    friend GradedCharacter operator+(GradedCharacter a, const GradedCharacter& b) { return a += b; }
    GradedCharacter times(const TruncSeriesQinv& s) const;
    GradedCharacter shifted(int s) const;

    /// Nonzero coefficients keyed by (class, power of q).
    std::map<std::pair<Exponent, int>, BigRat> coefficients() const;
    friend bool operator==(const GradedCharacter& a, const GradedCharacter& b);
    friend bool operator!=(const GradedCharacter& a, const GradedCharacter& b) { return !(a == b); }

    std::string to_string() const;

private:
    int nvars_;
    int order_;
    std::map<Exponent, TruncSeriesQinv> terms_;
};

/// x_{n+1} := 1 on classes in n+1 variables.
GradedCharacter theta(const GradedCharacter& c);

/// Macdonald polynomial at t=0 with q -> q^{-1}, as classes with series coefficients.
GradedCharacter t0_class_character(const Partition& shape, int nvars, int order);

GradedCharacter gch_demazure_e(const LevelZeroDominant& lam, int order);
/// gch_demazure_e shifted by q^{-<xi,lam>}.
GradedCharacter gch_demazure_txi(const LevelZeroDominant& lam, const std::vector<int>& xi, int order);

struct MpCharacter {
    GradedCharacter character;
    bool out_of_range = false;  // p outside 0..m: the piece vanishes
};
/// Character of M_p inside V_e^-(lam), in rank(lam) variables.
MpCharacter gch_Mp(const LevelZeroDominant& lam, int p, int order);

struct Mismatch {
    std::string identity;
    Exponent cls;
    int qexp = 0;
    BigRat lhs;
    BigRat rhs;
};

struct VerifyReport {
    std::string kind;
    std::vector<std::pair<std::string, std::string>> fields;  // ordered case keys
    int checks = 0;
    std::optional<Mismatch> first_mismatch;
    bool pass() const { return !first_mismatch.has_value(); }
};

/// First coefficient where the two characters differ, if any.
std::optional<Mismatch> compare_characters(const GradedCharacter& lhs, const GradedCharacter& rhs,
                                           const std::string& identity);

/// Adds q^{-order} to the trivial class; used to exercise failure reporting.
GradedCharacter perturbed(const GradedCharacter& c);

/// sum_p gch_Mp(lam, p) against theta of gch_demazure_e(lam).
/// With perturb set, the right side of the first check goes through perturbed().
VerifyReport verify_sum_decomposition(const LevelZeroDominant& lam, int order, bool perturb = false);
/// Branching of m varpi_i from rank n to rank n-1, totals and every p-piece.
VerifyReport verify_branching(int n, int i, int m, int order, bool perturb = false);
/// The p = 0 and p = m pieces for an arbitrary level-zero dominant lam of rank >= 2.
VerifyReport verify_extremal_pieces(const LevelZeroDominant& lam, int order);

/// True when every coefficient is a nonnegative integer.
bool has_dimension_coefficients(const GradedCharacter& c);

}  // namespace lzb
