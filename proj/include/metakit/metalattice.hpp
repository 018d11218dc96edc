#pragma once

#include <vector>

#include "metakit/rootdata.hpp"

namespace metakit {

// n / gcd(n, Q); gcd(n, 0) := n.
std::int64_t n_alpha(std::int64_t q_val, std::int64_t n);

// HNF basis of Lambda = {x in Y : B x = 0 mod n coordinatewise}.
std::vector<IntVec> lambda_lattice(const BilinearForm& b, std::int64_t n);

// Root datum, form, and degree bundled with the derived structure constants.
class MetaplecticDatum {
  public:
    MetaplecticDatum(RootDatum datum, BilinearForm b, std::int64_t n);

    const RootDatum& datum() const { return datum_; }
    const BilinearForm& form() const { return b_; }
    std::int64_t n() const { return n_; }
    const WeylGroup& weyl() const { return weyl_; }
    const std::vector<CorootEntry>& coroots() const { return coroots_; }

    std::int64_t q_of(const IntVec& coroot) const { return b_.q_of(coroot); }
    std::int64_t n_of(const IntVec& coroot) const { return n_alpha(b_.q_of(coroot), n_); }

    const std::vector<IntVec>& lambda_basis() const { return lambda_basis_; }
    bool in_lambda(const IntVec& x) const;
    // [Y : Lambda]
    std::int64_t lattice_index() const;

  private:
    RootDatum datum_;
    BilinearForm b_;
    std::int64_t n_;
    WeylGroup weyl_;
    std::vector<CorootEntry> coroots_;
    std::vector<IntVec> lambda_basis_;
};

// The quadruple (X, Phi, X', Phi') with X = Lambda, Phi = {n_a a}, and
// Phi' = {a^vee / n_a} kept in rational Y*-coordinates.
struct DualRootDatum {
    std::vector<IntVec> lambda_basis;       // basis of X inside Y
    std::vector<IntVec> phi;                // modified coroots n_a a, in Y-coordinates
    std::vector<std::vector<Rational>> phi_dual;  // modified roots a^vee / n_a
    std::vector<int> signs;                 // per entry, +1 positive
    // Pairings of each phi_dual element against the lambda basis (the
    // integrality certificate for Phi' in X').
    std::vector<IntVec> phi_dual_pairings;
};

// Builds the dual datum and machine-checks its axioms: Phi inside Lambda,
// Phi' integral on Lambda, <a^vee/n_a, n_a a> = 2, W-stability of both sets,
// and reflection-closure of Phi.  Any failed axiom throws with a witness.
DualRootDatum dual_root_datum(const MetaplecticDatum& md);

// Cartan matrix of the dual datum on the positive simple entries: the
// modified coroots of the simple coroots, paired with modified roots.
IntMat dual_cartan(const MetaplecticDatum& md);

// Both the torus-representation dimension and the Whittaker dimension equal
// the lattice index [Y : Lambda].
std::pair<std::int64_t, std::int64_t> heisenberg_dimensions(const MetaplecticDatum& md);

// All dominant lambda in Lambda of height at most the bound, lexicographic.
// Height = sum of coordinates in the simple-coroot basis.
std::vector<IntVec> dominant_lambda(const MetaplecticDatum& md, int height_bound);

// <rho^vee, lambda> * 2 with rho^vee the half-sum of positive elements of
// Phi'; returned as an exponent of v so half-integers stay exact.
// Errors when lambda is outside Lambda.
int rho_dual_pairing(const MetaplecticDatum& md, const IntVec& lambda);

}  // namespace metakit
