#include "metakit/scalar_ring.hpp"

#include <cmath>

namespace metakit {

double VLaurent::eval_sqrt(double q) const {
    double s = std::sqrt(q);
    double acc = 0.0;
    for (const auto& [k, c] : coeffs_)
        acc += static_cast<double>(c.num()) / static_cast<double>(c.den()) *
               std::pow(s, k);
    return acc;
}

namespace {

// Divide a by b (both monic-leading integer polynomials, exact division),
// index = degree.
std::vector<std::int64_t> exact_div(std::vector<std::int64_t> a,
                                    const std::vector<std::int64_t>& b) {
    int da = static_cast<int>(a.size()) - 1;
    int db = static_cast<int>(b.size()) - 1;
    std::vector<std::int64_t> qt(da - db + 1, 0);
    for (int i = da - db; i >= 0; --i) {
        std::int64_t c = a[i + db] / b[db];
        qt[i] = c;
        for (int j = 0; j <= db; ++j) a[i + j] -= c * b[j];
    }
    for (std::int64_t r : a)
        if (r != 0) throw Error("cyclotomic: non-exact division");
    return qt;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int n) {
    if (n <= 0) throw Error("cyclotomic: order must be positive");
    // x^n - 1
    std::vector<std::int64_t> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        poly = exact_div(poly, cyclotomic_polynomial(d));
    }
    return poly;
}

CycScalar::CycScalar(int n) : n_(n), modulus_(cyclotomic_polynomial(n)) {
    comps_.resize(modulus_.size() - 1);
}

CycScalar::CycScalar(int n, const VLaurent& c) : CycScalar(n) { comps_[0] = c; }

CycScalar CycScalar::root_of_unity(int n, int e) {
    CycScalar r(n);
    e %= n;
    if (e < 0) e += n;
    r.reduce_power(e, VLaurent(1));
    return r;
}

void CycScalar::reduce_power(int e, const VLaurent& c) {
    int deg = static_cast<int>(comps_.size());
    if (e < deg) {
        comps_[e] += c;
        return;
    }
    // zeta^deg = -sum_{j<deg} modulus_[j] * zeta^j  (modulus_ is monic)
    for (int j = 0; j < deg; ++j) {
        if (modulus_[j] == 0) continue;
        reduce_power(e - deg + j, c * VLaurent(-modulus_[j]));
    }
}

bool CycScalar::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero()) return false;
    return true;
}

bool CycScalar::is_scalar() const {
    for (std::size_t i = 1; i < comps_.size(); ++i)
        if (!comps_[i].is_zero()) return false;
    return true;
}

CycScalar operator+(const CycScalar& a, const CycScalar& b) {
    if (a.n_ != b.n_) throw Error("CycScalar: mixed root orders");
    CycScalar r = a;
    for (std::size_t i = 0; i < r.comps_.size(); ++i) r.comps_[i] += b.comps_[i];
    return r;
}

CycScalar operator-(const CycScalar& a, const CycScalar& b) {
    if (a.n_ != b.n_) throw Error("CycScalar: mixed root orders");
    CycScalar r = a;
    for (std::size_t i = 0; i < r.comps_.size(); ++i) r.comps_[i] -= b.comps_[i];
    return r;
}

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
    if (a.n_ != b.n_) throw Error("CycScalar: mixed root orders");
    CycScalar r(a.n_);
    for (std::size_t i = 0; i < a.comps_.size(); ++i) {
        if (a.comps_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.comps_.size(); ++j) {
            if (b.comps_[j].is_zero()) continue;
            r.reduce_power(static_cast<int>(i + j), a.comps_[i] * b.comps_[j]);
        }
    }
    return r;
}

bool operator==(const CycScalar& a, const CycScalar& b) {
    return a.n_ == b.n_ && a.comps_ == b.comps_;
}

std::string CycScalar::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (comps_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << comps_[i].str() << ")";
        if (i == 1) os << "*z";
        if (i > 1) os << "*z^" << i;
    }
    if (first) return "0";
    return os.str();
}

}  // namespace metakit
