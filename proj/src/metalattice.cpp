#include "metakit/metalattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace metakit {

std::int64_t n_alpha(std::int64_t q_val, std::int64_t n) {
    if (n <= 0) throw InputError("n_alpha: n must be positive");
    std::int64_t g = std::gcd(n, q_val < 0 ? -q_val : q_val);
    if (g == 0) g = n;
    return n / g;
}

std::vector<IntVec> lambda_lattice(const BilinearForm& b, std::int64_t n) {
    if (n <= 0) throw InputError("lambda_lattice: n must be positive");
    int r = static_cast<int>(b.matrix().size());
    // U B V = S; x = V z solves B x = 0 mod n iff s_i z_i = 0 mod n, so the
    // lattice is spanned by the columns of V scaled by n / gcd(n, s_i).
    SmithResult snf = smith_normal_form(b.matrix());
    std::vector<IntVec> gens;
    for (int i = 0; i < r; ++i) {
        std::int64_t s = snf.s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        std::int64_t g = std::gcd(n, s);
        std::int64_t scale = g == 0 ? 1 : n / g;
        IntVec col(static_cast<std::size_t>(r));
        for (int k = 0; k < r; ++k)
            col[static_cast<std::size_t>(k)] = scale * snf.v[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
        gens.push_back(std::move(col));
    }
    return hnf_column_basis(r, std::move(gens));
}

MetaplecticDatum::MetaplecticDatum(RootDatum datum, BilinearForm b, std::int64_t n)
    : datum_(std::move(datum)), b_(std::move(b)), n_(n), weyl_(datum_),
      coroots_(coroot_set(datum_, weyl_)), lambda_basis_(lambda_lattice(b_, n)) {
    if (n_ <= 0) throw InputError("MetaplecticDatum: n must be positive");
    InvarianceReport rep = check_invariance(datum_, b_);
    if (!rep.ok) throw InputError("MetaplecticDatum: form rejected: " + rep.failure);
    for (const auto& q : rep.q_values)
        if (q < 1) throw InputError("MetaplecticDatum: Q(alpha) < 1 on a coroot");
}

bool MetaplecticDatum::in_lambda(const IntVec& x) const {
    const IntMat& b = b_.matrix();
    for (std::size_t i = 0; i < b.size(); ++i) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < x.size(); ++j) s += b[i][j] * x[j];
        if (s % n_ != 0) return false;
    }
    return true;
}

std::int64_t MetaplecticDatum::lattice_index() const {
    IntMat m;
    int r = datum_.rank();
    for (int i = 0; i < r; ++i) {
        IntVec row(static_cast<std::size_t>(r));
        for (int j = 0; j < r; ++j)
            row[static_cast<std::size_t>(j)] = lambda_basis_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        m.push_back(std::move(row));
    }
    std::int64_t d = mat_det(m);
    return d < 0 ? -d : d;
}

namespace {

std::string vec_str(const IntVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

}  // namespace

DualRootDatum dual_root_datum(const MetaplecticDatum& md) {
    DualRootDatum out;
    out.lambda_basis = md.lambda_basis();
    const auto& entries = md.coroots();
    for (const auto& e : entries) {
        std::int64_t na = md.n_of(e.coroot);
        IntVec phi(e.coroot);
        for (auto& c : phi) c *= na;
        if (!md.in_lambda(phi))
            throw Error("dual_root_datum: n_a * a outside Lambda at a = " + vec_str(e.coroot));
        if (pairing(e.root, e.coroot) != 2)
            throw Error("dual_root_datum: <a^vee, a> != 2 at a = " + vec_str(e.coroot));
        std::vector<Rational> phid;
        for (auto c : e.root) phid.push_back(Rational(c, na));
        IntVec cert;
        for (const auto& bcol : md.lambda_basis()) {
            std::int64_t p = pairing(e.root, bcol);
            if (p % na != 0)
                throw Error("dual_root_datum: a^vee/n_a not integral on Lambda at a = " +
                            vec_str(e.coroot));
            cert.push_back(p / na);
        }
        out.phi.push_back(std::move(phi));
        out.phi_dual.push_back(std::move(phid));
        out.signs.push_back(e.sign);
        out.phi_dual_pairings.push_back(std::move(cert));
    }
    // W-stability of Phi and reflection-closure: each r_beta for beta in Phi
    // is the reflection in the underlying coroot, so check that every such
    // reflection permutes Phi.
    auto phi_index = [&](const IntVec& v) {
        for (std::size_t i = 0; i < out.phi.size(); ++i)
            if (out.phi[i] == v) return static_cast<int>(i);
        return -1;
    };
    for (std::size_t bi = 0; bi < out.phi.size(); ++bi) {
        for (std::size_t xi = 0; xi < out.phi.size(); ++xi) {
            // r_beta(x) = x - <beta^vee, x> beta with beta^vee = a^vee/n_a.
            Rational coef(0);
            for (std::size_t k = 0; k < out.phi[xi].size(); ++k)
                coef += out.phi_dual[bi][k] * Rational(out.phi[xi][k]);
            if (!coef.is_integer())
                throw Error("dual_root_datum: non-integral reflection pairing");
            IntVec img(out.phi[xi]);
            for (std::size_t k = 0; k < img.size(); ++k)
                img[k] -= coef.num() * out.phi[bi][k];
            if (phi_index(img) < 0)
                throw Error("dual_root_datum: Phi not closed under reflection at beta = " +
                            vec_str(out.phi[bi]));
        }
    }
    // W-stability of Phi' under the dual simple reflections.
    const RootDatum& rd = md.datum();
    for (int k = 0; k < rd.num_simple(); ++k) {
        const IntMat& s = rd.simple_reflection_dual(k);
        for (std::size_t i = 0; i < out.phi_dual.size(); ++i) {
            std::vector<Rational> img(out.phi_dual[i].size(), Rational(0));
            for (std::size_t r = 0; r < img.size(); ++r)
                for (std::size_t c = 0; c < img.size(); ++c)
                    img[r] += Rational(s[r][c]) * out.phi_dual[i][c];
            bool found = false;
            for (const auto& cand : out.phi_dual)
                if (cand == img) {
                    found = true;
                    break;
                }
            if (!found) throw Error("dual_root_datum: Phi' not W-stable");
        }
    }
    return out;
}

IntMat dual_cartan(const MetaplecticDatum& md) {
    const RootDatum& rd = md.datum();
    int l = rd.num_simple();
    IntMat m(static_cast<std::size_t>(l), IntVec(static_cast<std::size_t>(l), 0));
    for (int i = 0; i < l; ++i) {
        std::int64_t ni = md.n_of(rd.simple_coroots()[static_cast<std::size_t>(i)]);
        for (int j = 0; j < l; ++j) {
            std::int64_t nj = md.n_of(rd.simple_coroots()[static_cast<std::size_t>(j)]);
            std::int64_t p = ni * pairing(rd.simple_roots()[static_cast<std::size_t>(j)],
                                          rd.simple_coroots()[static_cast<std::size_t>(i)]);
            if (p % nj != 0) throw Error("dual_cartan: non-integral entry");
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = p / nj;
        }
    }
    return m;
}

std::pair<std::int64_t, std::int64_t> heisenberg_dimensions(const MetaplecticDatum& md) {
    std::int64_t idx = md.lattice_index();
    return {idx, idx};
}

std::vector<IntVec> dominant_lambda(const MetaplecticDatum& md, int height_bound) {
    if (height_bound < 0) throw InputError("dominant_lambda: negative bound");
    const RootDatum& rd = md.datum();
    int r = rd.rank();
    std::int64_t radius = 0;
    for (const auto& cr : rd.simple_coroots())
        for (auto c : cr) radius = std::max<std::int64_t>(radius, c < 0 ? -c : c);
    radius *= height_bound;
    std::vector<IntVec> out;
    IntVec cur(static_cast<std::size_t>(r), -radius);
    bool done = r == 0;
    while (!done) {
        bool dominant = true;
        for (int i = 0; i < rd.num_simple() && dominant; ++i)
            if (pairing(rd.simple_roots()[static_cast<std::size_t>(i)], cur) < 0) dominant = false;
        if (dominant && md.in_lambda(cur)) {
            auto coords = solve_rational(rd.simple_coroots(), cur);
            if (coords) {
                Rational height(0);
                bool cone = true;
                for (const auto& c : *coords) {
                    if (c < Rational(0)) cone = false;
                    height += c;
                }
                if (cone && !(Rational(height_bound) < height)) out.push_back(cur);
            }
        }
        int k = r - 1;
        while (k >= 0) {
            if (cur[static_cast<std::size_t>(k)] < radius) {
                ++cur[static_cast<std::size_t>(k)];
                break;
            }
            cur[static_cast<std::size_t>(k)] = -radius;
            --k;
        }
        if (k < 0) done = true;
    }
    std::sort(out.begin(), out.end());
    return out;
}

int rho_dual_pairing(const MetaplecticDatum& md, const IntVec& lambda) {
    if (!md.in_lambda(lambda)) throw Error("rho_dual_pairing: lambda outside Lambda");
    // 2 <rho^vee, lambda> = sum over positive a of <a^vee, lambda> / n_a.
    Rational total(0);
    for (const auto& e : md.coroots()) {
        if (e.sign < 0) continue;
        total += Rational(pairing(e.root, lambda), md.n_of(e.coroot));
    }
    if (!total.is_integer()) throw Error("rho_dual_pairing: non-integral exponent");
    return static_cast<int>(total.num());
}

}  // namespace metakit
