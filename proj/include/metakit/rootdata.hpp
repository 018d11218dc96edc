#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metakit/intlinalg.hpp"

namespace metakit {

// Root datum of a split reductive group.  Coroots live in Y = Z^r, roots in
// Y* = Z^r, and the pairing is the standard dot product.
class RootDatum {
  public:
    RootDatum(int rank, std::vector<IntVec> simple_coroots, std::vector<IntVec> simple_roots);

    int rank() const { return rank_; }
    int num_simple() const { return static_cast<int>(coroots_.size()); }
    const std::vector<IntVec>& simple_coroots() const { return coroots_; }
    const std::vector<IntVec>& simple_roots() const { return roots_; }

    // Cartan matrix entry a_{ij} = <alpha_j^vee, alpha_i>.
    const IntMat& cartan() const { return cartan_; }

    // s_i as a matrix acting on Y: y -> y - <alpha_i^vee, y> alpha_i.
    const IntMat& simple_reflection(int i) const { return refl_y_[static_cast<std::size_t>(i)]; }
    // The same reflection acting on Y*: f -> f - f(alpha_i) alpha_i^vee.
    const IntMat& simple_reflection_dual(int i) const { return refl_ystar_[static_cast<std::size_t>(i)]; }

  private:
    int rank_;
    std::vector<IntVec> coroots_;
    std::vector<IntVec> roots_;
    IntMat cartan_;
    std::vector<IntMat> refl_y_;
    std::vector<IntMat> refl_ystar_;
};

std::int64_t pairing(const IntVec& root, const IntVec& coroot);

// Full Weyl group as matrices on Y, generated by breadth-first closure.
class WeylGroup {
  public:
    explicit WeylGroup(const RootDatum& datum);

    int size() const { return static_cast<int>(elements_.size()); }
    const IntMat& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
    int length(int i) const { return lengths_[static_cast<std::size_t>(i)]; }
    int inverse(int i) const { return inverses_[static_cast<std::size_t>(i)]; }
    // Index of element(i) * element(j) (matrix product order: i acts after j).
    int multiply(int i, int j) const;
    // Index of s_k * element(i).
    int left_multiply_gen(int k, int i) const { return gen_left_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]; }
    int find(const IntMat& m) const;  // -1 when absent
    int identity_index() const { return 0; }
    int longest_index() const;

  private:
    std::vector<IntMat> elements_;
    std::vector<int> lengths_;
    std::vector<int> inverses_;
    std::vector<std::vector<int>> gen_left_;  // gen_left_[i][k] = index of s_k * w_i
};

// A coroot together with its partner root, transported along the same Weyl
// word.  sign is +1 for positive coroots (nonnegative simple-coroot
// coordinates), -1 otherwise.
struct CorootEntry {
    IntVec coroot;
    IntVec root;
    int sign;
};

// W-orbit closure of the simple coroots, each paired with its root.
std::vector<CorootEntry> coroot_set(const RootDatum& datum, const WeylGroup& w);

// Symmetric W-invariant form with integral Q on coroots.
class BilinearForm {
  public:
    explicit BilinearForm(IntMat b);

    const IntMat& matrix() const { return b_; }
    std::int64_t apply(const IntVec& x, const IntVec& y) const;
    // B(alpha, alpha) / 2; error when odd.
    std::int64_t q_of(const IntVec& coroot) const;

  private:
    IntMat b_;
};

struct InvarianceReport {
    bool ok;
    std::string failure;            // first violated identity, empty when ok
    std::vector<std::int64_t> q_values;  // Q(alpha) over coroot_set order
};

InvarianceReport check_invariance(const RootDatum& datum, const BilinearForm& b);

// lambda - mu a nonnegative integer combination of simple coroots?
bool dominance_leq(const RootDatum& datum, const IntVec& mu, const IntVec& lambda);

}  // namespace metakit
