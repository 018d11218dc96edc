#include "metakit/arith.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace metakit {

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

}  // namespace

PrimeField::PrimeField(int q) : q_(q) {
    if (!is_prime(q)) throw InputError("PrimeField: q = " + std::to_string(q) + " is not prime");
    // Smallest primitive root.
    g_ = 0;
    for (int g = 2; g < q_; ++g) {
        int x = 1;
        bool primitive = true;
        for (int k = 1; k < q_ - 1; ++k) {
            x = static_cast<int>(static_cast<std::int64_t>(x) * g % q_);
            if (x == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            g_ = g;
            break;
        }
    }
    if (g_ == 0 && q_ == 2) g_ = 1;
    dlog_.assign(q_, -1);
    int x = 1;
    for (int k = 0; k < q_ - 1; ++k) {
        dlog_[x] = k;
        x = static_cast<int>(static_cast<std::int64_t>(x) * g_ % q_);
    }
}

int PrimeField::inv(int a) const {
    a = norm(a);
    if (a == 0) throw Error("PrimeField: inverse of zero");
    return pow(a, q_ - 2);
}

int PrimeField::pow(int a, std::int64_t e) const {
    a = norm(a);
    if (a == 0) {
        if (e <= 0) throw Error("PrimeField: 0 to nonpositive power");
        return 0;
    }
    e %= (q_ - 1);
    if (e < 0) e += q_ - 1;
    int r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

int PrimeField::dlog(int u) const {
    u = norm(u);
    if (u == 0) throw Error("PrimeField: dlog of zero");
    return dlog_[u];
}

void PrimeField::require_divides(int m) const {
    if (m <= 0 || (q_ - 1) % m != 0)
        throw InputError("constraint " + std::to_string(m) + " | q-1 fails for q = " +
                         std::to_string(q_));
}

int MuElement::value_in(const PrimeField& F) const {
    F.require_divides(m_);
    int zeta = F.pow(F.generator(), (F.q() - 1) / m_);
    return F.pow(zeta, e_);
}

LaurentNumber::LaurentNumber(const PrimeField* F, int val, std::vector<int> coeffs, int prec)
    : field_(F), zero_(false), val_(val), coeffs_(std::move(coeffs)), prec_(prec) {
    if (prec_ < 0) throw Error("LaurentNumber: negative precision");
    for (int& c : coeffs_) {
        c %= F->q();
        if (c < 0) c += F->q();
    }
    if (prec_ != kExact && static_cast<int>(coeffs_.size()) > prec_)
        coeffs_.resize(prec_);
    // Normalize: strip leading zeros, consuming precision for truncated
    // values; a fully-cancelled truncated value is undecidable.
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
        if (prec_ == kExact) {
            zero_ = true;
            val_ = 0;
            coeffs_.clear();
            return;
        }
        throw PrecisionError("cannot decide zero: all known coefficients vanish");
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        val_ += static_cast<int>(lead);
        if (prec_ != kExact) prec_ -= static_cast<int>(lead);
    }
    // Trim trailing zeros on exact values (they are implicit).
    if (prec_ == kExact) {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    if (prec_ == 0) throw PrecisionError("zero precision after normalization");
}

LaurentNumber LaurentNumber::constant(const PrimeField& F, int c) {
    c %= F.q();
    if (c < 0) c += F.q();
    if (c == 0) return zero(F);
    return LaurentNumber(&F, 0, {c}, kExact);
}

LaurentNumber LaurentNumber::monomial(const PrimeField& F, int c, int k) {
    c %= F.q();
    if (c < 0) c += F.q();
    if (c == 0) return zero(F);
    return LaurentNumber(&F, k, {c}, kExact);
}

int LaurentNumber::valuation() const {
    if (zero_) throw Error("valuation of zero");
    return val_;
}

int LaurentNumber::leading_unit() const {
    if (zero_) throw Error("leading unit of zero");
    return coeffs_[0];
}

int LaurentNumber::coeff_at(int e) const {
    if (zero_) return 0;
    if (e < val_) return 0;
    int i = e - val_;
    if (i < static_cast<int>(coeffs_.size())) return coeffs_[i];
    if (prec_ == kExact || i < prec_) return 0;
    throw PrecisionError("coefficient beyond known precision");
}

void LaurentNumber::check_same_field(const LaurentNumber& b) const {
    if (field_->q() != b.field_->q())
        throw InputError("mismatched field moduli: q = " + std::to_string(field_->q()) +
                         " vs " + std::to_string(b.field_->q()));
}

LaurentNumber operator+(const LaurentNumber& a, const LaurentNumber& b) {
    a.check_same_field(b);
    if (a.zero_) return b;
    if (b.zero_) return a;
    const PrimeField& F = *a.field_;
    int val = std::min(a.val_, b.val_);
    // Known window: all exponents below min(va+pa, vb+pb).
    std::int64_t ka = a.prec_ == LaurentNumber::kExact
                          ? LaurentNumber::kExact
                          : static_cast<std::int64_t>(a.val_) + a.prec_;
    std::int64_t kb = b.prec_ == LaurentNumber::kExact
                          ? LaurentNumber::kExact
                          : static_cast<std::int64_t>(b.val_) + b.prec_;
    std::int64_t kmin = std::min(ka, kb);
    int prec;
    int len;
    if (kmin >= LaurentNumber::kExact) {
        prec = LaurentNumber::kExact;
        len = std::max(a.val_ + static_cast<int>(a.coeffs_.size()),
                       b.val_ + static_cast<int>(b.coeffs_.size())) -
              val;
    } else {
        prec = static_cast<int>(kmin - val);
        if (prec <= 0) throw PrecisionError("no overlapping precision window in sum");
        len = prec;
    }
    std::vector<int> c(static_cast<std::size_t>(std::max(len, 0)), 0);
    for (int i = 0; i < len; ++i)
        c[static_cast<std::size_t>(i)] = F.add(a.coeff_at(val + i), b.coeff_at(val + i));
    return LaurentNumber(&F, val, std::move(c), prec);
}

LaurentNumber LaurentNumber::operator-() const {
    if (zero_) return *this;
    std::vector<int> c = coeffs_;
    for (int& x : c) x = field_->neg(x);
    return LaurentNumber(field_, val_, std::move(c), prec_);
}

LaurentNumber operator-(const LaurentNumber& a, const LaurentNumber& b) { return a + (-b); }

LaurentNumber operator*(const LaurentNumber& a, const LaurentNumber& b) {
    a.check_same_field(b);
    const PrimeField& F = *a.field_;
    if (a.zero_ || b.zero_) return LaurentNumber::zero(F);
    int prec = std::min(a.prec_, b.prec_);
    int len;
    if (prec == LaurentNumber::kExact)
        len = static_cast<int>(a.coeffs_.size() + b.coeffs_.size()) - 1;
    else
        len = prec;
    std::vector<int> c(static_cast<std::size_t>(len), 0);
    int na = static_cast<int>(a.coeffs_.size());
    int nb = static_cast<int>(b.coeffs_.size());
    for (int i = 0; i < na && i < len; ++i) {
        if (a.coeffs_[static_cast<std::size_t>(i)] == 0) continue;
        std::int64_t ai = a.coeffs_[static_cast<std::size_t>(i)];
        for (int j = 0; j < nb && i + j < len; ++j) {
            std::size_t k = static_cast<std::size_t>(i + j);
            c[k] = static_cast<int>((c[k] + ai * b.coeffs_[static_cast<std::size_t>(j)]) % F.q());
        }
    }
    return LaurentNumber(&F, a.val_ + b.val_, std::move(c), prec);
}

LaurentNumber LaurentNumber::inv(int prec) const {
    if (zero_) throw Error("inverse of zero");
    const PrimeField& F = *field_;
    if (prec < 0) {
        if (prec_ != kExact) {
            prec = prec_;
        } else if (coeffs_.size() == 1) {
            return LaurentNumber(&F, -val_, {F.inv(coeffs_[0])}, kExact);
        } else {
            throw Error("inv: exact non-monomial needs an explicit precision");
        }
    }
    if (prec == 0) throw PrecisionError("inv: zero precision");
    int p = std::min(prec, prec_);
    // Power series inversion of the unit part.
    std::vector<int> b(static_cast<std::size_t>(p), 0);
    int u0 = F.inv(coeffs_[0]);
    b[0] = u0;
    for (int k = 1; k < p; ++k) {
        std::int64_t s = 0;
        for (int j = 1; j <= k; ++j) {
            int aj = j < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(j)] : 0;
            s = (s + static_cast<std::int64_t>(aj) * b[static_cast<std::size_t>(k - j)]) % F.q();
        }
        b[static_cast<std::size_t>(k)] = F.mul(F.neg(static_cast<int>(s)), u0);
    }
    return LaurentNumber(&F, -val_, std::move(b), p);
}

bool LaurentNumber::agrees_with(const LaurentNumber& b) const {
    check_same_field(b);
    if (zero_ || b.zero_) return zero_ == b.zero_;
    if (val_ != b.val_) return false;
    std::int64_t ka = prec_ == kExact ? kExact : static_cast<std::int64_t>(val_) + prec_;
    std::int64_t kb = b.prec_ == kExact ? kExact : static_cast<std::int64_t>(b.val_) + b.prec_;
    std::int64_t hi = std::min(ka, kb);
    std::int64_t end = hi >= kExact
                           ? val_ + static_cast<std::int64_t>(
                                        std::max(coeffs_.size(), b.coeffs_.size()))
                           : hi;
    for (std::int64_t e = val_; e < end; ++e)
        if (coeff_at(static_cast<int>(e)) != b.coeff_at(static_cast<int>(e))) return false;
    return true;
}

std::string LaurentNumber::str() const {
    if (zero_) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        int e = val_ + static_cast<int>(i);
        if (!first) os << " + ";
        first = false;
        if (e == 0) {
            os << coeffs_[i];
        } else {
            if (coeffs_[i] != 1) os << coeffs_[i] << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
    }
    if (first) os << "0";
    if (prec_ != kExact) os << " + O(t^" << (val_ + prec_) << ")";
    return os.str();
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool peek(char c) {
        skip();
        return i < s.size() && s[i] == c;
    }
    bool done() {
        skip();
        return i >= s.size();
    }
    long parse_int() {
        skip();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        std::size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) throw InputError("laurent literal: expected integer at position " +
                                          std::to_string(start));
        return std::stol(s.substr(start, i - start));
    }
};

}  // namespace

LaurentNumber parse_laurent(const PrimeField& F, const std::string& text) {
    Lexer lx{text};
    // exponent -> coefficient (accumulated mod q)
    std::map<int, int> terms;
    bool have_o = false;
    int o_exp = 0;
    bool first = true;
    while (!lx.done()) {
        int sign = 1;
        if (!first || lx.peek('+') || lx.peek('-')) {
            if (lx.eat('+')) {
                sign = 1;
            } else if (lx.eat('-')) {
                sign = -1;
            } else if (!first) {
                throw InputError("laurent literal: expected '+' or '-' near position " +
                                 std::to_string(lx.i));
            }
        }
        first = false;
        lx.skip();
        if (lx.i < text.size() && text[lx.i] == 'O') {
            ++lx.i;
            if (!lx.eat('(')) throw InputError("laurent literal: expected '(' after O");
            if (!lx.eat('t')) throw InputError("laurent literal: expected t inside O()");
            o_exp = lx.eat('^') ? static_cast<int>(lx.parse_int()) : 1;  // O(t) = O(t^1)
            if (!lx.eat(')')) throw InputError("laurent literal: expected ')'");
            have_o = true;
            if (!lx.done()) throw InputError("laurent literal: O() must be last");
            break;
        }
        long coeff = 1;
        bool saw_coeff = false;
        lx.skip();
        if (lx.i < text.size() && (std::isdigit(static_cast<unsigned char>(text[lx.i])))) {
            coeff = lx.parse_int();
            saw_coeff = true;
        }
        int expo = 0;
        lx.skip();
        bool saw_t = false;
        if (saw_coeff && lx.peek('*')) {
            lx.eat('*');
            lx.skip();
        }
        if (lx.i < text.size() && text[lx.i] == 't') {
            ++lx.i;
            saw_t = true;
            expo = 1;
            if (lx.eat('^')) expo = static_cast<int>(lx.parse_int());
        }
        if (!saw_coeff && !saw_t)
            throw InputError("laurent literal: empty term near position " + std::to_string(lx.i));
        long c = (coeff % F.q()) * sign;
        terms[expo] = static_cast<int>((((terms[expo] + c) % F.q()) + F.q()) % F.q());
    }
    if (terms.empty() && !have_o) throw InputError("laurent literal: empty input");
    // Assemble coefficient vector.
    bool all_zero = true;
    for (auto& [e, c] : terms)
        if (c != 0) all_zero = false;
    if (all_zero) {
        if (have_o) throw PrecisionError("laurent literal: zero up to O() is undecidable");
        return LaurentNumber::zero(F);
    }
    int lo = terms.begin()->first;
    int hi = terms.rbegin()->first;
    if (have_o && o_exp <= lo)
        throw InputError("laurent literal: O() exponent not above leading term");
    int end = have_o ? o_exp : hi + 1;
    std::vector<int> coeffs(static_cast<std::size_t>(end - lo), 0);
    for (auto& [e, c] : terms) {
        if (e >= end) throw InputError("laurent literal: term beyond O() window");
        coeffs[static_cast<std::size_t>(e - lo)] = c;
    }
    int prec = have_o ? end - lo : LaurentNumber::kExact;
    return LaurentNumber(&F, lo, std::move(coeffs), prec);
}

MuElement unit_to_mu(const PrimeField& F, int u, int m) {
    F.require_divides(m);
    u %= F.q();
    if (u < 0) u += F.q();
    if (u == 0) throw Error("unit_to_mu: zero is not a unit");
    return MuElement(m, F.dlog(u) % m);
}

std::pair<int, int> valuation_leading(const LaurentNumber& a) {
    return {a.valuation(), a.leading_unit()};
}

}  // namespace metakit
