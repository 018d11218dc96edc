#pragma once

#include <vector>

#include "metakit/hilbert.hpp"
#include "metakit/metalattice.hpp"

namespace metakit {

// Point of the split torus (F^x)^r in the fixed coordinates on Y.
class TorusElement {
  public:
    explicit TorusElement(std::vector<LaurentNumber> coords);
    const std::vector<LaurentNumber>& coords() const { return coords_; }
    int rank() const { return static_cast<int>(coords_.size()); }
    IntVec valuation_vector() const;

  private:
    std::vector<LaurentNumber> coords_;
};

// sigma(s,t) = prod_{i<=j} (s_i, t_j)_{2n}^{q_ij} where the q_ij write the
// quadratic form of 2B as Q(sum y_i e_i) = sum_{i<=j} q_ij y_i y_j:
// q_ii = b_ii, q_ij = 2 b_ij for i < j.
MuElement torus_cocycle(const TorusElement& s, const TorusElement& t, const MetaplecticDatum& md);

// [s,t] = sigma(s,t) sigma(t,s)^{-1}, certified to land in mu_n inside
// mu_{2n} (even exponent) and returned downstairs.
MuElement torus_commutator(const TorusElement& s, const TorusElement& t,
                           const MetaplecticDatum& md);

// SL_2(F) with the determinant checked to available precision.
class SL2Element {
  public:
    SL2Element(LaurentNumber a, LaurentNumber b, LaurentNumber c, LaurentNumber d);

    const LaurentNumber& a() const { return a_; }
    const LaurentNumber& b() const { return b_; }
    const LaurentNumber& c() const { return c_; }
    const LaurentNumber& d() const { return d_; }
    const PrimeField& field() const { return a_.field(); }

    static SL2Element identity(const PrimeField& F);
    // (0 1; -1 0)
    static SL2Element w(const PrimeField& F);
    // (1 y; 0 1)
    static SL2Element e_upper(const LaurentNumber& y);
    // (1 0; x 1)
    static SL2Element f_lower(const LaurentNumber& x);
    // (u 0; 0 u^{-1}); exact for monomial u, otherwise truncated inverse
    static SL2Element diag(const LaurentNumber& u, int prec = -1);
    // diag(pi^l, pi^{-l})
    static SL2Element torus_power(const PrimeField& F, int l);

    friend SL2Element operator*(const SL2Element& g, const SL2Element& h);
    SL2Element inverse() const;  // (d -b; -c a)

    // x(g) = c when c != 0, else d.
    const LaurentNumber& x_of() const { return c_.is_zero() ? d_ : c_; }
    bool in_integral() const;  // all entries in O
    bool is_identity() const;

    std::string str() const;

  private:
    LaurentNumber a_, b_, c_, d_;
};

// Kubota cocycle (x(gh)/x(g), x(gh)/x(h))^{Q} valued in mu_n.
MuElement kubota_sigma(const SL2Element& g, const SL2Element& h, int n, std::int64_t q_val);

// Splitting over SL_2(O): (c,d)^{Q} when 0 < |c| < 1, else 1.  The lift
// kappa^*(k) = (k, kappa(k)) is a homomorphism on SL_2(O).
MuElement kubota_kappa(const SL2Element& k, int n, std::int64_t q_val);

// Element (g, zeta) of the degree-n cover of SL_2(F).
struct MetaSL2Element {
    SL2Element g;
    MuElement zeta;
};

MetaSL2Element meta_mul(const MetaSL2Element& x, const MetaSL2Element& y, int n,
                        std::int64_t q_val);
MetaSL2Element meta_inv(const MetaSL2Element& x, int n, std::int64_t q_val);
// kappa^* lift of k in SL_2(O).
MetaSL2Element kappa_lift(const SL2Element& k, int n, std::int64_t q_val);
// s-lift (g, 1).
MetaSL2Element s_lift(const SL2Element& g, int n);

}  // namespace metakit
