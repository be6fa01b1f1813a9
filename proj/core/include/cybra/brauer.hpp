#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "cybra/combinat.hpp"
#include "cybra/matrix.hpp"
#include "cybra/rational.hpp"

namespace cybra {

// Cyclotomic Brauer algebra B_{a,r}(u): generated by S_i, E_i (1 <= i < r)
// and X_j (1 <= j <= r) subject to the Nazarov-Wenzl-type relations with
// E_1 X_1^k E_1 = omega_k E_1 and the cyclotomic polynomial relation
// (X_1 - u_1)...(X_1 - u_a) = 0.  With u-admissible omega the dimension is
// a^r (2r-1)!!.
//
// The algebra is realized by its right regular module, built once by
// relation-driven linear closure: module states are created lazily as images
// of generators, every defining relation is imposed at every state, and the
// resulting linear coincidences are eliminated exactly.  Every reduction step
// is an instance of a defining relation, so the closure is the presented
// algebra itself; the computed dimension certifies completeness.

struct BrauerParams {
  int a = 1;
  int r = 1;
  std::vector<Rat> u;      // size a
  std::vector<Rat> omega;  // omega_0..omega_K, K >= a + 2r recommended
};

// The unique omega_0..omega_K making
//   u - 1/2 + sum_i omega_i u^{-i} = (u - (-1)^a/2) prod_i (u+u_i)/(u-u_i)
// hold through order u^{-K} (formal expansion at u = infinity).
std::vector<Rat> admissible_omega(const std::vector<Rat>& u, int K);

// Convenience: params with omega precomputed to order a + 2r + 2.
BrauerParams make_brauer_params(int a, int r, std::vector<Rat> u);

// Generator letters of a word in the algebra (indices 1-based).
struct BrauerLetter {
  enum class Kind { S, E, X };
  Kind kind = Kind::X;
  int index = 1;
};
using BrauerWord = std::vector<BrauerLetter>;

// Canonical monomial e^{-1} X^xi E^f X^beta w X^eta d with e, d in D_r^f,
// w in S_{r-2f}, arc-dot exponents xi, eta (< a) at positions r-2i+1 and
// through-strand exponents beta (< a).  There are a^r (2r-1)!! of these.
struct BrauerMono {
  int f = 0;
  Permutation e;
  std::vector<int> xi;    // size f
  std::vector<int> beta;  // size r - 2f
  Permutation w;          // degree r - 2f
  std::vector<int> eta;   // size f
  Permutation d;
  bool operator==(const BrauerMono&) const = default;
  auto operator<=>(const BrauerMono&) const = default;
  BrauerWord word(int r) const;
};

// Finite linear combination of canonical monomials; no zero coefficients.
struct BrauerElement {
  std::map<BrauerMono, Rat> terms;

  bool is_zero() const { return terms.empty(); }
  void add_term(const BrauerMono& m, const Rat& c);
  BrauerElement& operator+=(const BrauerElement& o);
  BrauerElement operator+(const BrauerElement& o) const;
  BrauerElement operator-(const BrauerElement& o) const;
  BrauerElement operator*(const Rat& c) const;
  bool operator==(const BrauerElement&) const = default;
};

class BrauerAlgebra {
 public:
  explicit BrauerAlgebra(BrauerParams p);

  const BrauerParams& params() const { return p_; }
  // a^r (2r-1)!! -- the dimension under u-admissibility.
  long long expected_dimension() const;
  // Dimension of the algebra actually presented by the relations (equals
  // expected_dimension() iff omega is consistent/admissible).
  std::size_t dimension() const;

  // ---- Regular-module-level primitives (internal state coordinates) ----
  std::size_t module_dim() const { return dimension(); }
  Vec module_unit() const;                                   // the identity
  Vec module_apply(const Vec& v, const BrauerWord& w) const;  // v * word
  Vec module_word(const BrauerWord& w) const;                 // 1 * word
  Vec module_mul(const Vec& x, const Vec& y) const;           // product
  Vec module_tau(const Vec& v) const;  // anti-involution fixing S, E, X
  // Two-sided ideal generated by the given elements, as a row space in
  // module coordinates (closed under left/right generator multiplication).
  RowSpace two_sided_ideal(const std::vector<Vec>& seeds) const;
  // E^f = E_{r-1} E_{r-3} ... E_{r-2f+1} as a word (empty for f = 0).
  BrauerWord ef_word(int f) const;
  // Defining word of each module basis element: basis[k] = 1 * word[k].
  const std::vector<BrauerWord>& module_basis_words() const;

  // ---- Canonical monomial coordinates (requires full rank; engaged for
  //      dimensions where exact inversion is cheap) ----
  const std::vector<BrauerMono>& monomials() const;
  // True iff the canonical monomials are a basis (exact rank check).
  bool monomials_independent() const;
  Vec monomial_coords(const Vec& module_vec) const;
  Vec to_module(const BrauerElement& e) const;
  BrauerElement from_module(const Vec& module_vec) const;

  BrauerElement one() const;
  BrauerElement S(int i) const;
  BrauerElement E(int i) const;
  BrauerElement X(int j) const;
  BrauerElement word_element(const BrauerWord& w) const;
  BrauerElement multiply(const BrauerElement& x, const BrauerElement& y) const;
  BrauerElement tau(const BrauerElement& x) const;

  // ---- Weakly cellular structure ----
  struct CellularEntry {
    int f = 0;
    Multipartition lambda;
    DeltaIndex left, right;
    Vec module_vec;  // e^{-1} X^xi E^f n_{st} X^eta d in module coordinates
  };
  // Entries listed stratum by stratum, higher strata (f, then dominance)
  // first; within a stratum, left index outer, right index inner.
  const std::vector<CellularEntry>& weakly_cellular_basis() const;
  // Coordinates of a module vector in the weakly cellular basis.
  Vec express_in_cellular(const Vec& module_vec) const;

  struct CellDatum {
    int f = 0;
    Multipartition lambda;
    std::vector<DeltaIndex> basis;  // delta(f, lambda)
    Mat gram;                       // invariant form; rank = dim D(f,lambda)
    bool classification_supported = true;  // false when omega_0 == 0
  };
  CellDatum cell_module(int f, const Multipartition& lambda) const;
  // Right action of h on C(f, lambda) in the delta(f, lambda) basis
  // (column j = image of basis vector j).
  Mat cell_action(int f, const Multipartition& lambda,
                  const BrauerElement& h) const;

  struct ModulePresentation {
    std::size_t dim = 0;
    std::vector<Mat> s_action;  // S_1..S_{r-1}
    std::vector<Mat> e_action;  // E_1..E_{r-1}
    std::vector<Mat> x_action;  // X_1..X_r
  };
  ModulePresentation cell_module_presentation(int f,
                                              const Multipartition&) const;
  // S^{f,lambda} = E^f m_lambda w_lambda n_{lambda'} B modulo the two-sided
  // ideal <E^{f+1}>; dim should equal |delta(f, lambda')|.
  ModulePresentation prop_bas_module(int f, const Multipartition&) const;

  struct Engine;  // the linear-closure machine; defined in brauer.cpp

 private:
  BrauerParams p_;
  std::shared_ptr<Engine> eng_;
};

}  // namespace cybra
