#include "knotcalc/laurent.hpp"

#include <numeric>
#include <sstream>

namespace knot {

int Quarter::as_integer() const {
    if (num % 4 != 0)
        fail(errc::non_integer_result, "quarter-grid value " + str() + " is not an integer");
    return num / 4;
}

std::string Quarter::str() const {
    if (num % 4 == 0)
        return std::to_string(num / 4);
    int g = std::gcd(num < 0 ? -num : num, 4);
    return std::to_string(num / g) + "/" + std::to_string(4 / g);
}

QuarterLaurent QuarterLaurent::monomial(VarTag var, mpz_class coeff, Quarter exp) {
    QuarterLaurent p(var);
    if (coeff != 0)
        p.terms_.emplace(exp.num, std::move(coeff));
    return p;
}

Quarter QuarterLaurent::min_degree() const {
    if (terms_.empty())
        fail(errc::zero_polynomial, "degree of the zero polynomial");
    return Quarter{terms_.begin()->first};
}

Quarter QuarterLaurent::max_degree() const {
    if (terms_.empty())
        fail(errc::zero_polynomial, "degree of the zero polynomial");
    return Quarter{terms_.rbegin()->first};
}

mpz_class QuarterLaurent::coeff(Quarter exp) const {
    auto it = terms_.find(exp.num);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void QuarterLaurent::add_term(int num, const mpz_class& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(num, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void QuarterLaurent::require_same_var(const QuarterLaurent& rhs) const {
    if (var_ != rhs.var_)
        fail(errc::variable_mismatch,
             std::string("cannot combine a polynomial in ") + var_name(var_) +
                 " with one in " + var_name(rhs.var_));
}

QuarterLaurent& QuarterLaurent::operator+=(const QuarterLaurent& rhs) {
    require_same_var(rhs);
    for (const auto& [num, c] : rhs.terms_)
        add_term(num, c);
    return *this;
}

QuarterLaurent& QuarterLaurent::operator-=(const QuarterLaurent& rhs) {
    require_same_var(rhs);
    for (const auto& [num, c] : rhs.terms_)
        add_term(num, -c);
    return *this;
}

QuarterLaurent operator*(const QuarterLaurent& lhs, const QuarterLaurent& rhs) {
    lhs.require_same_var(rhs);
    QuarterLaurent out(lhs.var_);
    for (const auto& [na, ca] : lhs.terms_)
        for (const auto& [nb, cb] : rhs.terms_)
            out.add_term(na + nb, ca * cb);
    return out;
}

QuarterLaurent& QuarterLaurent::operator*=(const QuarterLaurent& rhs) {
    *this = *this * rhs;
    return *this;
}

QuarterLaurent QuarterLaurent::scaled(const mpz_class& coeff, Quarter exp) const {
    QuarterLaurent out(var_);
    if (coeff == 0)
        return out;
    for (const auto& [num, c] : terms_)
        out.terms_.emplace(num + exp.num, c * coeff);
    return out;
}

QuarterLaurent QuarterLaurent::pow_u(unsigned e) const {
    QuarterLaurent acc = one(var_);
    for (unsigned i = 0; i < e; ++i)
        acc *= *this;
    return acc;
}

std::string QuarterLaurent::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [num, c] : terms_) {
        mpz_class a = c < 0 ? mpz_class(-c) : c;
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (num == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1)
            os << a.get_str();
        os << var_name(var_);
        if (num != 4) {
            Quarter q{num};
            if (q.is_integer())
                os << "^" << q.num / 4;
            else
                os << "^(" << q.str() << ")";
        }
    }
    return os.str();
}

QuarterLaurent substitute_A_to_t(const QuarterLaurent& p, int writhe_prefactor) {
    if (p.var() != VarTag::A)
        fail(errc::variable_mismatch, "substitution expects a polynomial in A");
    // (-A)^(-3w) * p, then A -> t^(-1/4): a term c*A^e maps to
    // (-1)^w * c * t^((3w - e)/4).
    QuarterLaurent out(VarTag::t);
    bool negate = (writhe_prefactor % 2) != 0;
    for (const auto& [num, c] : p.terms()) {
        Quarter q{num};
        int e = q.as_integer();
        out += QuarterLaurent::monomial(VarTag::t, negate ? mpz_class(-c) : c,
                                        Quarter{3 * writhe_prefactor - e});
    }
    return out;
}

} // namespace knot
