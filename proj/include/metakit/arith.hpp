#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "metakit/errors.hpp"

namespace metakit {

// Prime field F_q with a fixed primitive root and a dense discrete-log table.
// q stays desk-scale (a few dozen) so the table is trivial.
class PrimeField {
  public:
    explicit PrimeField(int q);

    int q() const { return q_; }
    int generator() const { return g_; }

    int add(int a, int b) const { return norm(a + b); }
    int sub(int a, int b) const { return norm(a - b); }
    int neg(int a) const { return norm(-a); }
    int mul(int a, int b) const { return static_cast<int>(static_cast<std::int64_t>(norm(a)) * norm(b) % q_); }
    int inv(int a) const;
    int pow(int a, std::int64_t e) const;

    // Index of u with respect to the generator; u must be nonzero mod q.
    int dlog(int u) const;

    // Enforced before any metaplectic symbol computation.
    void require_divides(int m) const;  // m | q-1

  private:
    int norm(int a) const {
        a %= q_;
        return a < 0 ? a + q_ : a;
    }
    int q_;
    int g_;
    std::vector<int> dlog_;  // dlog_[u] for u in 1..q-1
};

// Element of mu_m inside F_q^x, stored as an exponent of zeta_m = g^{(q-1)/m}.
class MuElement {
  public:
    MuElement() : m_(1), e_(0) {}
    MuElement(int m, int e) : m_(m), e_(((e % m) + m) % m) {
        if (m <= 0) throw Error("MuElement: order must be positive");
    }

    int order() const { return m_; }
    int exponent() const { return e_; }
    bool is_identity() const { return e_ == 0; }

    MuElement inverse() const { return MuElement(m_, -e_); }
    MuElement pow(int k) const {
        return MuElement(m_, static_cast<int>((static_cast<std::int64_t>(e_) * k) % m_));
    }
    friend MuElement operator*(const MuElement& a, const MuElement& b) {
        if (a.m_ != b.m_) throw Error("MuElement: mixed orders");
        return MuElement(a.m_, a.e_ + b.e_);
    }
    friend bool operator==(const MuElement& a, const MuElement& b) {
        return a.m_ == b.m_ && a.e_ == b.e_;
    }
    friend bool operator!=(const MuElement& a, const MuElement& b) { return !(a == b); }

    // zeta_m = zeta_{2m}^2, so exponent e maps to exponent 2e downstairs.
    MuElement embed_double() const { return MuElement(2 * m_, 2 * e_); }

    // Residue value zeta_m^e in F_q (needs m | q-1).
    int value_in(const PrimeField& F) const;

    friend std::ostream& operator<<(std::ostream& os, const MuElement& z) {
        return os << "zeta_" << z.m_ << "^" << z.e_;
    }

  private:
    int m_;
    int e_;
};

// Truncated Laurent series over F_q in the uniformiser t; the desk-scale
// model of F = F_q((t)).  Nonzero values are normalized so coeff(0) != 0 and
// carry a precision = number of known coefficients from the valuation on.
// Literals with no O() term are exact (precision kExact) with all unwritten
// coefficients known to be zero.
class LaurentNumber {
  public:
    static constexpr int kExact = std::numeric_limits<int>::max() / 2;

    // Distinguished zero (exact).
    explicit LaurentNumber(const PrimeField* F) : field_(F), zero_(true), val_(0), prec_(kExact) {}

    // From coefficients c[i] = coefficient of t^{val+i}; normalizes leading
    // zeros away (reducing precision accordingly for truncated inputs).
    LaurentNumber(const PrimeField* F, int val, std::vector<int> coeffs, int prec);

    static LaurentNumber zero(const PrimeField& F) { return LaurentNumber(&F); }
    static LaurentNumber constant(const PrimeField& F, int c);
    // c * t^k, exact
    static LaurentNumber monomial(const PrimeField& F, int c, int k);
    static LaurentNumber one(const PrimeField& F) { return constant(F, 1); }

    const PrimeField& field() const { return *field_; }
    bool is_zero() const { return zero_; }
    bool is_exact() const { return prec_ == kExact; }
    int precision() const { return prec_; }

    // Valuation and leading residue; error on zero.
    int valuation() const;
    int leading_unit() const;

    // Coefficient of t^e if known; PrecisionError if beyond the window.
    int coeff_at(int e) const;

    friend LaurentNumber operator+(const LaurentNumber& a, const LaurentNumber& b);
    friend LaurentNumber operator-(const LaurentNumber& a, const LaurentNumber& b);
    friend LaurentNumber operator*(const LaurentNumber& a, const LaurentNumber& b);
    LaurentNumber operator-() const;

    // Multiplicative inverse truncated to the given precision; prec < 0 keeps
    // the operand's own precision (exact monomials invert exactly; any other
    // exact operand needs an explicit precision for its infinite expansion).
    LaurentNumber inv(int prec = -1) const;

    // Equality of the known parts (same valuation, coefficients agree on the
    // common window).  Exact values compare exactly.
    bool agrees_with(const LaurentNumber& b) const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const LaurentNumber& x) {
        return os << x.str();
    }

  private:
    void check_same_field(const LaurentNumber& b) const;

    const PrimeField* field_;
    bool zero_;
    int val_;
    std::vector<int> coeffs_;  // coeffs_[0] != 0 when nonzero
    int prec_;                 // number of known coefficients (kExact = all)
};

// Parses the literal grammar
//   term (('+'|'-') term)* ['+' 'O(' 't^' INT ')']
//   term = [COEFF '*'] 't' ['^' INT] | COEFF
// e.g. "3*t^-1 + 1 + 2*t + O(t^5)".  Coefficients reduce mod q.
LaurentNumber parse_laurent(const PrimeField& F, const std::string& text);

// u^{(q-1)/m} in mu_m; requires u nonzero and m | q-1.  Concretely the
// exponent is dlog_g(u) mod m.
MuElement unit_to_mu(const PrimeField& F, int u, int m);

// (valuation, leading residue) of a nonzero element.
std::pair<int, int> valuation_leading(const LaurentNumber& a);

}  // namespace metakit
