#pragma once

#include <compare>
#include <map>
#include <string>

#include <gmpxx.h>

#include "knotcalc/errors.hpp"

namespace knot {

/// Exact rational on the quarter-integer grid: value = num/4.
struct Quarter {
    int num = 0;

    friend auto operator<=>(const Quarter&, const Quarter&) = default;

    bool is_integer() const { return num % 4 == 0; }
    int as_integer() const;
    std::string str() const;
};

inline Quarter quarter_of_int(int e) { return Quarter{4 * e}; }

enum class VarTag { A, t };

inline const char* var_name(VarTag v) { return v == VarTag::A ? "A" : "t"; }

/// Integer-coefficient Laurent polynomial with exponents on the quarter grid.
/// Canonical form: terms sorted by exponent, no zero coefficients stored.
/// Coefficients are arbitrary-precision (GMP) so large state sums stay exact.
class QuarterLaurent {
public:
    explicit QuarterLaurent(VarTag var = VarTag::A) : var_(var) {}

    static QuarterLaurent zero(VarTag var) { return QuarterLaurent(var); }
    static QuarterLaurent one(VarTag var) { return monomial(var, 1, Quarter{0}); }
    static QuarterLaurent monomial(VarTag var, mpz_class coeff, Quarter exp);
    /// Monomial with an integer exponent (numerator 4*exp).
    static QuarterLaurent int_monomial(VarTag var, mpz_class coeff, int exp) {
        return monomial(var, std::move(coeff), quarter_of_int(exp));
    }

    VarTag var() const { return var_; }
    bool is_zero() const { return terms_.empty(); }
    /// Map from quarter-grid numerator to nonzero coefficient.
    const std::map<int, mpz_class>& terms() const { return terms_; }

    Quarter min_degree() const;
    Quarter max_degree() const;
    mpz_class coeff(Quarter exp) const;

    QuarterLaurent& operator+=(const QuarterLaurent& rhs);
    QuarterLaurent& operator-=(const QuarterLaurent& rhs);
    QuarterLaurent& operator*=(const QuarterLaurent& rhs);

    friend QuarterLaurent operator+(QuarterLaurent lhs, const QuarterLaurent& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend QuarterLaurent operator-(QuarterLaurent lhs, const QuarterLaurent& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend QuarterLaurent operator*(const QuarterLaurent& lhs, const QuarterLaurent& rhs);

    /// Multiply by coeff * var^exp.
    QuarterLaurent scaled(const mpz_class& coeff, Quarter exp) const;
    QuarterLaurent pow_u(unsigned e) const;

    friend bool operator==(const QuarterLaurent& a, const QuarterLaurent& b) {
        return a.var_ == b.var_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const QuarterLaurent& a, const QuarterLaurent& b) { return !(a == b); }

    /// Canonical rendering, terms by ascending exponent: "t + t^3 - t^4".
    std::string str() const;

private:
    void add_term(int num, const mpz_class& c);
    void require_same_var(const QuarterLaurent& rhs) const;

    VarTag var_;
    std::map<int, mpz_class> terms_;
};

/// (-A)^(-3w) * p with A replaced by t^(-1/4); p must be a polynomial in A.
QuarterLaurent substitute_A_to_t(const QuarterLaurent& p, int writhe_prefactor);

} // namespace knot
