#include "metakit/hilbert.hpp"

namespace metakit {

MuElement hilbert_symbol(const LaurentNumber& s, const LaurentNumber& t, int m) {
    if (s.is_zero() || t.is_zero()) throw Error("hilbert_symbol: zero argument");
    const PrimeField& F = s.field();
    if (F.q() != t.field().q()) throw InputError("hilbert_symbol: mismatched fields");
    F.require_divides(m);
    int vs = s.valuation();
    int vt = t.valuation();
    int su = s.leading_unit();
    int tu = t.leading_unit();
    // (-1)^{v(s)v(t)} * su^{v(t)} * tu^{-v(s)} in F_q
    int u = ((static_cast<std::int64_t>(vs) * vt) % 2 != 0) ? F.neg(1) : 1;
    u = F.mul(u, F.pow(su, vt));
    u = F.mul(u, F.pow(F.inv(tu), vs));
    return unit_to_mu(F, u, m);
}

}  // namespace metakit
