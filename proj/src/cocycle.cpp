#include "metakit/cocycle.hpp"

#include <sstream>

namespace metakit {

TorusElement::TorusElement(std::vector<LaurentNumber> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw InputError("TorusElement: empty coordinate list");
    for (const auto& c : coords_)
        if (c.is_zero()) throw InputError("TorusElement: zero coordinate");
}

IntVec TorusElement::valuation_vector() const {
    IntVec v;
    for (const auto& c : coords_) v.push_back(c.valuation());
    return v;
}

MuElement torus_cocycle(const TorusElement& s, const TorusElement& t,
                        const MetaplecticDatum& md) {
    int r = md.datum().rank();
    if (s.rank() != r || t.rank() != r) throw InputError("torus_cocycle: rank mismatch");
    int two_n = static_cast<int>(2 * md.n());
    const IntMat& b = md.form().matrix();
    MuElement acc(two_n, 0);
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            std::int64_t qij = i == j ? b[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]
                                      : 2 * b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (qij == 0) continue;
            acc = acc * hilbert_symbol(s.coords()[static_cast<std::size_t>(i)],
                                       t.coords()[static_cast<std::size_t>(j)], two_n)
                            .pow(static_cast<int>(qij));
        }
    return acc;
}

MuElement torus_commutator(const TorusElement& s, const TorusElement& t,
                           const MetaplecticDatum& md) {
    MuElement c = torus_cocycle(s, t, md) * torus_cocycle(t, s, md).inverse();
    if (c.exponent() % 2 != 0)
        throw Error("torus_commutator: value escaped mu_n (odd mu_{2n} exponent)");
    return MuElement(static_cast<int>(md.n()), c.exponent() / 2);
}

SL2Element::SL2Element(LaurentNumber a, LaurentNumber b, LaurentNumber c, LaurentNumber d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    LaurentNumber det = a_ * d_ - b_ * c_;
    if (!det.agrees_with(LaurentNumber::one(a_.field())))
        throw InputError("SL2Element: determinant is not 1");
}

SL2Element SL2Element::identity(const PrimeField& F) {
    return SL2Element(LaurentNumber::one(F), LaurentNumber::zero(F), LaurentNumber::zero(F),
                      LaurentNumber::one(F));
}

SL2Element SL2Element::w(const PrimeField& F) {
    return SL2Element(LaurentNumber::zero(F), LaurentNumber::one(F),
                      -LaurentNumber::one(F), LaurentNumber::zero(F));
}

SL2Element SL2Element::e_upper(const LaurentNumber& y) {
    const PrimeField& F = y.field();
    return SL2Element(LaurentNumber::one(F), y, LaurentNumber::zero(F), LaurentNumber::one(F));
}

SL2Element SL2Element::f_lower(const LaurentNumber& x) {
    const PrimeField& F = x.field();
    return SL2Element(LaurentNumber::one(F), LaurentNumber::zero(F), x, LaurentNumber::one(F));
}

SL2Element SL2Element::diag(const LaurentNumber& u, int prec) {
    const PrimeField& F = u.field();
    return SL2Element(u, LaurentNumber::zero(F), LaurentNumber::zero(F), u.inv(prec));
}

SL2Element SL2Element::torus_power(const PrimeField& F, int l) {
    return SL2Element(LaurentNumber::monomial(F, 1, l), LaurentNumber::zero(F),
                      LaurentNumber::zero(F), LaurentNumber::monomial(F, 1, -l));
}

SL2Element operator*(const SL2Element& g, const SL2Element& h) {
    return SL2Element(g.a_ * h.a_ + g.b_ * h.c_, g.a_ * h.b_ + g.b_ * h.d_,
                      g.c_ * h.a_ + g.d_ * h.c_, g.c_ * h.b_ + g.d_ * h.d_);
}

SL2Element SL2Element::inverse() const {
    return SL2Element(d_, -b_, -c_, a_);
}

bool SL2Element::in_integral() const {
    for (const LaurentNumber* e : {&a_, &b_, &c_, &d_})
        if (!e->is_zero() && e->valuation() < 0) return false;
    return true;
}

bool SL2Element::is_identity() const {
    return b_.is_zero() && c_.is_zero() &&
           a_.agrees_with(LaurentNumber::one(field())) &&
           d_.agrees_with(LaurentNumber::one(field()));
}

std::string SL2Element::str() const {
    std::ostringstream os;
    os << "[" << a_.str() << ", " << b_.str() << "; " << c_.str() << ", " << d_.str() << "]";
    return os.str();
}

namespace {

// Leading-monomial quotient a/b; the tame symbol only reads the valuation
// and leading unit, so this loses nothing.
LaurentNumber leading_quotient(const LaurentNumber& a, const LaurentNumber& b) {
    const PrimeField& F = a.field();
    return LaurentNumber::monomial(F, F.mul(a.leading_unit(), F.inv(b.leading_unit())),
                                   a.valuation() - b.valuation());
}

}  // namespace

MuElement kubota_sigma(const SL2Element& g, const SL2Element& h, int n, std::int64_t q_val) {
    SL2Element gh = g * h;
    const LaurentNumber& xg = g.x_of();
    const LaurentNumber& xh = h.x_of();
    const LaurentNumber& xgh = gh.x_of();
    LaurentNumber first = leading_quotient(xgh, xg);
    LaurentNumber second = leading_quotient(xgh, xh);
    return hilbert_symbol(first, second, n).pow(static_cast<int>(q_val));
}

MuElement kubota_kappa(const SL2Element& k, int n, std::int64_t q_val) {
    if (!k.in_integral()) throw InputError("kubota_kappa: element outside SL_2(O)");
    if (k.c().is_zero() || k.c().valuation() == 0) return MuElement(n, 0);
    return hilbert_symbol(k.c(), k.d(), n).pow(static_cast<int>(q_val));
}

MetaSL2Element meta_mul(const MetaSL2Element& x, const MetaSL2Element& y, int n,
                        std::int64_t q_val) {
    return MetaSL2Element{x.g * y.g, x.zeta * y.zeta * kubota_sigma(x.g, y.g, n, q_val)};
}

MetaSL2Element meta_inv(const MetaSL2Element& x, int n, std::int64_t q_val) {
    SL2Element gi = x.g.inverse();
    return MetaSL2Element{gi, x.zeta.inverse() * kubota_sigma(x.g, gi, n, q_val).inverse()};
}

MetaSL2Element kappa_lift(const SL2Element& k, int n, std::int64_t q_val) {
    return MetaSL2Element{k, kubota_kappa(k, n, q_val)};
}

MetaSL2Element s_lift(const SL2Element& g, int n) {
    return MetaSL2Element{g, MuElement(n, 0)};
}

}  // namespace metakit
