#include "metakit/rootdata.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace metakit {

std::int64_t pairing(const IntVec& root, const IntVec& coroot) {
    if (root.size() != coroot.size()) throw Error("pairing: dimension mismatch");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < root.size(); ++i) s += root[i] * coroot[i];
    return s;
}

namespace {

// Finite type test for a generalized Cartan matrix: all leading principal
// minors of every principal submatrix... for symmetrizable GCMs it is enough
// that every leading principal minor of A is positive after an arbitrary
// simultaneous permutation; we check all principal minors directly (l <= 4).
bool all_principal_minors_positive(const IntMat& a) {
    int l = static_cast<int>(a.size());
    for (int mask = 1; mask < (1 << l); ++mask) {
        IntMat sub;
        for (int i = 0; i < l; ++i) {
            if (!(mask & (1 << i))) continue;
            IntVec row;
            for (int j = 0; j < l; ++j)
                if (mask & (1 << j)) row.push_back(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            sub.push_back(std::move(row));
        }
        if (mat_det(sub) <= 0) return false;
    }
    return true;
}

IntMat reflection_matrix(int rank, const IntVec& axis, const IntVec& functional) {
    // y -> y - <functional, y> * axis
    IntMat m = identity_matrix(rank);
    for (int r = 0; r < rank; ++r)
        for (int c = 0; c < rank; ++c)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                axis[static_cast<std::size_t>(r)] * functional[static_cast<std::size_t>(c)];
    return m;
}

}  // namespace

RootDatum::RootDatum(int rank, std::vector<IntVec> simple_coroots, std::vector<IntVec> simple_roots)
    : rank_(rank), coroots_(std::move(simple_coroots)), roots_(std::move(simple_roots)) {
    if (rank_ <= 0) throw InputError("RootDatum: rank must be positive");
    if (coroots_.size() != roots_.size())
        throw InputError("RootDatum: coroot/root count mismatch");
    for (const auto& v : coroots_)
        if (static_cast<int>(v.size()) != rank_) throw InputError("RootDatum: coroot dimension mismatch");
    for (const auto& v : roots_)
        if (static_cast<int>(v.size()) != rank_) throw InputError("RootDatum: root dimension mismatch");

    int l = num_simple();
    cartan_ = IntMat(static_cast<std::size_t>(l), IntVec(static_cast<std::size_t>(l), 0));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                pairing(roots_[static_cast<std::size_t>(j)], coroots_[static_cast<std::size_t>(i)]);
    for (int i = 0; i < l; ++i) {
        if (cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != 2)
            throw InputError("RootDatum: <alpha_i^vee, alpha_i> != 2");
        for (int j = 0; j < l; ++j) {
            if (i == j) continue;
            std::int64_t a = cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            std::int64_t b = cartan_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            if (a > 0 || b > 0) throw InputError("RootDatum: positive off-diagonal Cartan entry");
            if ((a == 0) != (b == 0)) throw InputError("RootDatum: asymmetric Cartan zero pattern");
        }
    }
    if (!all_principal_minors_positive(cartan_))
        throw InputError("RootDatum: Cartan matrix not of finite type");

    // Linear independence of the simple coroots over Q.
    {
        IntMat m;
        for (const auto& v : coroots_) m.push_back(v);  // rows = coroots
        SmithResult snf = smith_normal_form(m);
        for (int i = 0; i < l; ++i)
            if (snf.s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] == 0)
                throw InputError("RootDatum: simple coroots linearly dependent");
    }

    for (int i = 0; i < l; ++i) {
        refl_y_.push_back(reflection_matrix(rank_, coroots_[static_cast<std::size_t>(i)],
                                            roots_[static_cast<std::size_t>(i)]));
        refl_ystar_.push_back(reflection_matrix(rank_, roots_[static_cast<std::size_t>(i)],
                                                coroots_[static_cast<std::size_t>(i)]));
    }
}

WeylGroup::WeylGroup(const RootDatum& datum) {
    constexpr int kBound = 1000000;
    int l = datum.num_simple();
    std::map<IntMat, int> index;
    elements_.push_back(identity_matrix(datum.rank()));
    lengths_.push_back(0);
    index[elements_[0]] = 0;
    std::queue<int> work;
    work.push(0);
    gen_left_.push_back(std::vector<int>(static_cast<std::size_t>(l), -1));
    while (!work.empty()) {
        int i = work.front();
        work.pop();
        for (int k = 0; k < l; ++k) {
            IntMat next = mat_mul(datum.simple_reflection(k), elements_[static_cast<std::size_t>(i)]);
            auto it = index.find(next);
            if (it == index.end()) {
                int idx = static_cast<int>(elements_.size());
                if (idx >= kBound) throw Error("WeylGroup: enumeration bound exceeded");
                elements_.push_back(next);
                lengths_.push_back(lengths_[static_cast<std::size_t>(i)] + 1);
                gen_left_.push_back(std::vector<int>(static_cast<std::size_t>(l), -1));
                index[next] = idx;
                gen_left_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = idx;
                work.push(idx);
            } else {
                gen_left_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = it->second;
            }
        }
    }
    inverses_.resize(elements_.size());
    for (int i = 0; i < size(); ++i) {
        IntMat inv = unimodular_inverse(elements_[static_cast<std::size_t>(i)]);
        int j = find(inv);
        if (j < 0) throw Error("WeylGroup: inverse not found");
        inverses_[static_cast<std::size_t>(i)] = j;
    }
}

int WeylGroup::multiply(int i, int j) const {
    IntMat m = mat_mul(elements_[static_cast<std::size_t>(i)], elements_[static_cast<std::size_t>(j)]);
    int k = find(m);
    if (k < 0) throw Error("WeylGroup: product escaped the group");
    return k;
}

int WeylGroup::find(const IntMat& m) const {
    for (int i = 0; i < size(); ++i)
        if (elements_[static_cast<std::size_t>(i)] == m) return i;
    return -1;
}

int WeylGroup::longest_index() const {
    int best = 0;
    for (int i = 1; i < size(); ++i)
        if (lengths_[static_cast<std::size_t>(i)] > lengths_[static_cast<std::size_t>(best)]) best = i;
    return best;
}

std::vector<CorootEntry> coroot_set(const RootDatum& datum, const WeylGroup& w) {
    std::vector<CorootEntry> out;
    std::vector<IntVec> seen;
    std::vector<IntVec> cols(datum.simple_coroots());
    for (int wi = 0; wi < w.size(); ++wi) {
        for (int i = 0; i < datum.num_simple(); ++i) {
            IntVec cr = mat_vec(w.element(wi), datum.simple_coroots()[static_cast<std::size_t>(i)]);
            if (std::find(seen.begin(), seen.end(), cr) != seen.end()) continue;
            seen.push_back(cr);
            // Transport the root along the dual action of the same element.
            IntMat dual = unimodular_inverse(w.element(wi));
            // Dual action on Y*: (w f)(y) = f(w^{-1} y), i.e. f -> f * w^{-1}
            // as a row vector, which is (w^{-1})^T * f as a column.
            IntMat dual_t(static_cast<std::size_t>(datum.rank()),
                          IntVec(static_cast<std::size_t>(datum.rank()), 0));
            for (int r = 0; r < datum.rank(); ++r)
                for (int c = 0; c < datum.rank(); ++c)
                    dual_t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                        dual[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
            IntVec rt = mat_vec(dual_t, datum.simple_roots()[static_cast<std::size_t>(i)]);
            auto coords = solve_rational(cols, cr);
            if (!coords) throw Error("coroot_set: orbit element outside coroot span");
            int sign = 1;
            for (const auto& c : *coords)
                if (c < Rational(0)) {
                    sign = -1;
                    break;
                }
            out.push_back(CorootEntry{cr, rt, sign});
        }
    }
    std::sort(out.begin(), out.end(), [](const CorootEntry& a, const CorootEntry& b) {
        if (a.sign != b.sign) return a.sign > b.sign;
        return a.coroot < b.coroot;
    });
    return out;
}

BilinearForm::BilinearForm(IntMat b) : b_(std::move(b)) {
    std::size_t r = b_.size();
    for (std::size_t i = 0; i < r; ++i) {
        if (b_[i].size() != r) throw InputError("BilinearForm: matrix not square");
        for (std::size_t j = 0; j < r; ++j)
            if (b_[i][j] != b_[j][i]) throw InputError("BilinearForm: matrix not symmetric");
    }
}

std::int64_t BilinearForm::apply(const IntVec& x, const IntVec& y) const {
    if (x.size() != b_.size() || y.size() != b_.size())
        throw Error("BilinearForm: dimension mismatch");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) s += b_[i][j] * x[i] * y[j];
    return s;
}

std::int64_t BilinearForm::q_of(const IntVec& coroot) const {
    std::int64_t bb = apply(coroot, coroot);
    if (bb % 2 != 0) throw Error("BilinearForm: B(alpha,alpha) odd");
    return bb / 2;
}

InvarianceReport check_invariance(const RootDatum& datum, const BilinearForm& b) {
    InvarianceReport rep{true, "", {}};
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.failure = msg;
        return rep;
    };
    int r = datum.rank();
    if (static_cast<int>(b.matrix().size()) != r) return fail("dimension mismatch");
    // W-invariance on the simple reflections, basis vector pairs.
    for (int k = 0; k < datum.num_simple(); ++k) {
        const IntMat& s = datum.simple_reflection(k);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                IntVec ei(static_cast<std::size_t>(r), 0), ej(static_cast<std::size_t>(r), 0);
                ei[static_cast<std::size_t>(i)] = 1;
                ej[static_cast<std::size_t>(j)] = 1;
                if (b.apply(mat_vec(s, ei), mat_vec(s, ej)) != b.apply(ei, ej)) {
                    std::ostringstream os;
                    os << "B(s_" << k << " e_" << i << ", s_" << k << " e_" << j
                       << ") != B(e_" << i << ", e_" << j << ")";
                    return fail(os.str());
                }
            }
    }
    WeylGroup w(datum);
    for (const auto& entry : coroot_set(datum, w)) {
        std::int64_t bb = b.apply(entry.coroot, entry.coroot);
        if (bb % 2 != 0) {
            std::ostringstream os;
            os << "Q not integral on coroot (B(a,a) = " << bb << ")";
            return fail(os.str());
        }
        rep.q_values.push_back(bb / 2);
    }
    return rep;
}

bool dominance_leq(const RootDatum& datum, const IntVec& mu, const IntVec& lambda) {
    IntVec diff(lambda);
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= mu[i];
    auto coords = solve_rational(datum.simple_coroots(), diff);
    if (!coords) return false;
    for (const auto& c : *coords)
        if (!c.is_integer() || c < Rational(0)) return false;
    return true;
}

}  // namespace metakit
