#pragma once

#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "metakit/rational.hpp"

namespace metakit {

// Half-power coefficient ring: finite formal sums  sum_k c_k v^k  with
// rational c_k and v a formal symbol satisfying v^2 = q.  Powers of q are
// represented as even powers of v, so statements like a_{ll} = q^{-l} are
// exact formal identities independent of any numeric q.
class VLaurent {
  public:
    VLaurent() = default;
    VLaurent(std::int64_t c) {
        if (c != 0) coeffs_[0] = Rational(c);
    }
    VLaurent(const Rational& c) {
        if (!c.is_zero()) coeffs_[0] = c;
    }

    // c * v^k
    static VLaurent monomial(const Rational& c, int k) {
        VLaurent r;
        if (!c.is_zero()) r.coeffs_[k] = c;
        return r;
    }
    static VLaurent v_pow(int k) { return monomial(Rational(1), k); }
    // q^k as v^{2k}
    static VLaurent q_pow(int k) { return v_pow(2 * k); }
    // 1 - q^{-1}
    static VLaurent one_minus_q_inv() { return VLaurent(1) - q_pow(-1); }

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, Rational>& coeffs() const { return coeffs_; }

    Rational coeff(int k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    friend VLaurent operator+(const VLaurent& a, const VLaurent& b) {
        VLaurent r = a;
        for (const auto& [k, c] : b.coeffs_) r.add_term(k, c);
        return r;
    }
    friend VLaurent operator-(const VLaurent& a, const VLaurent& b) {
        VLaurent r = a;
        for (const auto& [k, c] : b.coeffs_) r.add_term(k, -c);
        return r;
    }
    friend VLaurent operator*(const VLaurent& a, const VLaurent& b) {
        VLaurent r;
        for (const auto& [ka, ca] : a.coeffs_)
            for (const auto& [kb, cb] : b.coeffs_) r.add_term(ka + kb, ca * cb);
        return r;
    }
    VLaurent operator-() const {
        VLaurent r;
        for (const auto& [k, c] : coeffs_) r.coeffs_[k] = -c;
        return r;
    }
    VLaurent& operator+=(const VLaurent& b) { return *this = *this + b; }
    VLaurent& operator-=(const VLaurent& b) { return *this = *this - b; }
    VLaurent& operator*=(const VLaurent& b) { return *this = *this * b; }

    friend bool operator==(const VLaurent& a, const VLaurent& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const VLaurent& a, const VLaurent& b) { return !(a == b); }
    friend bool operator<(const VLaurent& a, const VLaurent& b) {
        if (a.coeffs_.size() != b.coeffs_.size())
            return a.coeffs_.size() < b.coeffs_.size();
        auto ia = a.coeffs_.begin();
        auto ib = b.coeffs_.begin();
        for (; ia != a.coeffs_.end(); ++ia, ++ib) {
            if (ia->first != ib->first) return ia->first < ib->first;
            if (ia->second != ib->second) return ia->second < ib->second;
        }
        return false;
    }

    // Numeric value at v = sqrt(q); only used for display sanity, never for
    // identity checks.
    double eval_sqrt(double q) const;

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : coeffs_) {
            if (!first) os << " + ";
            first = false;
            if (k == 0) {
                os << c.str();
            } else {
                if (!(c == Rational(1))) os << c.str() << "*";
                os << "v^" << k;
            }
        }
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const VLaurent& x) {
        return os << x.str();
    }

  private:
    void add_term(int k, const Rational& c) {
        auto it = coeffs_.find(k);
        if (it == coeffs_.end()) {
            if (!c.is_zero()) coeffs_[k] = c;
            return;
        }
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }

    std::map<int, Rational> coeffs_;  // exponent of v -> coefficient
};

// n-th cyclotomic polynomial, monic, as integer coefficient vector
// (index = degree).  Computed by the recursive division (x^n-1)/prod Phi_d.
std::vector<std::int64_t> cyclotomic_polynomial(int n);

// Element of VLaurent[zeta_n] with zeta_n reduced modulo Phi_n.  This is the
// coefficient domain for Satake/Iwahori enumeration sums, where shell classes
// contribute roots of unity through the faithful character.
class CycScalar {
  public:
    explicit CycScalar(int n = 1);
    CycScalar(int n, const VLaurent& c);  // scalar embedding

    // epsilon(zeta_n^e): the monomial zeta^e, e taken mod n.
    static CycScalar root_of_unity(int n, int e);

    int order() const { return n_; }
    bool is_zero() const;
    // True when the element lies in the scalar subring (no zeta part).
    bool is_scalar() const;
    const VLaurent& scalar_part() const { return comps_[0]; }
    const std::vector<VLaurent>& components() const { return comps_; }

    friend CycScalar operator+(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator-(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
    CycScalar& operator+=(const CycScalar& b) { return *this = *this + b; }
    CycScalar& operator*=(const CycScalar& b) { return *this = *this * b; }
    friend bool operator==(const CycScalar& a, const CycScalar& b);
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const CycScalar& x) {
        return os << x.str();
    }

  private:
    void reduce_power(int e, const VLaurent& c);  // add c * zeta^e, e >= 0

    int n_;
    std::vector<std::int64_t> modulus_;  // Phi_n
    std::vector<VLaurent> comps_;        // size deg(Phi_n)
};

}  // namespace metakit
