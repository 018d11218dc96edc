#pragma once

#include "metakit/arith.hpp"

namespace metakit {

// Tame Hilbert symbol (s,t) with values in mu_m, m | q-1:
//
//   (s,t) = ((-1)^{v(s)v(t)} s^{v(t)} / t^{v(s)})  reduced to the residue
//           field, then raised to (q-1)/m.
//
// Only the valuations and leading units of s and t are consumed.  The
// (-1)^{v(s)v(t)} factor is folded in over F_q before the final power, which
// matters for odd m.
MuElement hilbert_symbol(const LaurentNumber& s, const LaurentNumber& t, int m);

}  // namespace metakit
