#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cybra/brauer.hpp"
#include "cybra/combinat.hpp"
#include "cybra/matrix.hpp"
#include "cybra/rational.hpp"
#include "cybra/weights.hpp"

namespace cybra {

// Degree-truncated exact realization of the tensor module
// M^p(lambda_{I,c}) (x) V^(x)r for g in {so_{2n+1}, sp_{2n}, so_{2n}}:
// the g-action on PBW monomials over the nilradical basis B_{I_i}, the
// Brauer-generator actions (Omega-based X_j, (signed) permutation S_i,
// evaluation/co-evaluation E_i), and the explicit singular vectors
// v_{t, xi, d} = v_lambda E^f w_lambda n_{lambda'} d(t) X^xi d.
//
// Signed index conventions: underline-N = (-n..-1, 1..n), with 0 included
// for so_{2n+1}.  f_{i,j} = e_{i,j} - theta_{i,j} e_{-j,-i} with theta = 1
// (orthogonal) or sgn(i) sgn(j) (symplectic); wt(f_{i,j}) = sgn(i) eps_|i|
// - sgn(j) eps_|j| (eps_0 = 0).

// A root/Cartan vector f_{i,j}, indexed by its signed pair.
struct LieLetter {
  int i = 0, j = 0;
  auto operator<=>(const LieLetter&) const = default;
  std::string to_string() const;
};

// PBW monomial: factors strictly decreasing in the fixed total order
// (lexicographic on (i, j)), exponents >= 1.  The empty monomial is 1.
struct PBWMonomial {
  std::vector<std::pair<LieLetter, int>> factors;
  int degree() const;
  auto operator<=>(const PBWMonomial&) const = default;
  std::string to_string() const;
};

// Sparse gl_N matrix over signed indices: entries (row, col) -> value.
using GMat = std::map<std::pair<int, int>, Rat>;

// The module datum: a root datum with cuts, the scalar vector c, the
// tensor power r and the PBW truncation bound D.  All derived quantities
// are exact.
struct TensorDatum {
  RootDatum rd;
  std::vector<Rat> c;
  int r = 0;
  int D = 0;  // hard truncation bound; overflow is an error, never silent

  // Derived.
  int k = 0;                    // number of cuts
  int a = 0;                    // 2k (i=1) or 2k-1 (i=2)
  int N = 0;                    // 2n or 2n+1
  int eps = 1;                  // epsilon_g: +1 orthogonal, -1 symplectic
  std::vector<Rat> u;           // cyclotomic parameters u_1..u_a
  Weight lic;                   // lambda_{I,c} in eps-coordinates
  std::vector<int> underline;   // underline-N in increasing order
  std::vector<LieLetter> bbasis;     // B_{I_i}, sorted by the total order
  std::vector<LieLetter> nplus;      // basis of n^+ per the type
  std::vector<LieLetter> all_basis;  // canonical basis of g (rtvec1)

  int p(int j) const { return j == 0 ? 0 : rd.p[j - 1]; }  // cut points
  int q(int j) const { return p(j) - p(j - 1); }           // block sizes
  bool is_b() const { return rd.phi == LieType::B; }
  // deg v_m: t-1 if m in p_t, a-t if -m in p_t, (a-1)/2 for m = 0.
  Rat deg_v(int m) const;
};

// Builds the datum; D < 0 selects the default r(a-1) + r.  Rejects type B
// with i = 1 (main-theorem hypothesis) and malformed root data.
TensorDatum make_tensor_datum(const RootDatum& rd, const std::vector<Rat>& c,
                              int r, int D = -1);

// f_{i,j} as a sparse matrix.
GMat f_matrix(const TensorDatum& td, LieLetter x);
// Matrix commutator AB - BA.
GMat g_bracket(const GMat& x, const GMat& y);
// Coordinates of a g-element in the canonical basis; throws if the matrix
// is not in the span (i.e. not in g).
std::map<LieLetter, Rat> g_decompose(const TensorDatum& td, GMat m);
// wt(f_{i,j}) in eps-coordinates.
Weight f_weight(const TensorDatum& td, LieLetter x);

// Element of the truncated module: finite combination of basis pairs
// (PBW monomial, tensor index k in underline-N^r).
struct TruncatedVector {
  std::map<std::pair<PBWMonomial, std::vector<int>>, Rat> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const PBWMonomial& m, const std::vector<int>& k, const Rat& c);
  TruncatedVector& operator+=(const TruncatedVector& o);
  TruncatedVector operator+(const TruncatedVector& o) const;
  TruncatedVector operator-(const TruncatedVector& o) const;
  TruncatedVector operator*(const Rat& c) const;
  bool operator==(const TruncatedVector&) const = default;
};

// Action of a g-element (sparse matrix) by the Leibniz rule: straightening
// on the PBW part, matrix action on each tensor factor.  Throws
// std::overflow_error when a straightened monomial would exceed D.
TruncatedVector act_lie(const TensorDatum& td, const GMat& x,
                        const TruncatedVector& v);

// Brauer generator actions (right operators, commuting with act_lie).
TruncatedVector act_X(const TensorDatum& td, int j, const TruncatedVector& v);
TruncatedVector act_S(const TensorDatum& td, int i, const TruncatedVector& v);
TruncatedVector act_E(const TensorDatum& td, int i, const TruncatedVector& v);
// Word of generators applied left to right; X letters may carry repeats.
TruncatedVector apply_word(const TensorDatum& td, const TruncatedVector& v,
                           const BrauerWord& w);
// v * w for a permutation w (embedded via its reduced word).
TruncatedVector apply_perm(const TensorDatum& td, const TruncatedVector& v,
                           const Permutation& w);

// Weight of a (weight-homogeneous) vector; throws std::invalid_argument on
// inhomogeneous or zero input.
Weight vector_weight(const TensorDatum& td, const TruncatedVector& v);

// The sequences of Definition vt / Lemma lc1 / eqs. (jc), (jxi):
// i_lambda, l = i_lambda w_lambda, the top pi-tilde exponents a_c, the
// tensor slots j_c and (when xi is supplied) j^xi.
struct VectorData {
  std::vector<int> i_lambda;  // length r - 2f
  std::vector<int> l;         // i_lambda permuted by w_lambda
  std::vector<int> a_vec;     // a_c, 1 <= c <= r - 2f
  std::vector<int> j_vec;     // j_c
  std::vector<int> j_xi;      // j^xi, length 2f
};
VectorData build_vector_data(const TensorDatum& td, int f,
                             const Multipartition& lambda,
                             const std::vector<int>& xi);

// The explicit lowering words y_{l_c, a_c, c} (eq. ylc with the z_c, A_c,
// B_c of eq. AB) and y_{xi, s} (eq. yxis); word() concatenates them in the
// product order.  Every letter lies in B_{I_i}.
struct YOperators {
  std::vector<std::vector<LieLetter>> y_l;   // c = 1..r-2f
  std::vector<std::vector<LieLetter>> y_xi;  // s = 1..f
  std::vector<LieLetter> word() const;
};
YOperators build_y_operators(const TensorDatum& td, int f,
                             const Multipartition& lambda,
                             const std::vector<int>& xi);

// v_lambda = m_i (x) v_{i_lambda} (x) (v_1 (x) v_{-1})^(x)f.
TruncatedVector v_lambda(const TensorDatum& td, int f,
                         const Multipartition& lambda);
// v_{t, xi, d} = v_lambda E^f w_lambda n_{lambda'} d(t) X^xi d, where
// n_{lambda'} = pi-tilde_{[lambda']} y_{lambda'} acts through X/S operators.
TruncatedVector singular_vector(const TensorDatum& td, int f,
                                const Multipartition& lambda,
                                const DeltaIndex& idx);

// Basis of the mu-weight space of the truncated module (all pairs with
// matching weight and PBW degree <= D), with coordinate extraction.
struct WeightSpace {
  Weight mu;
  std::vector<std::pair<PBWMonomial, std::vector<int>>> basis;
  std::map<std::pair<PBWMonomial, std::vector<int>>, std::size_t> index;

  std::size_t dim() const { return basis.size(); }
  // Coordinates of v; throws if v has a term outside this weight space.
  Vec coords(const TruncatedVector& v) const;
};
WeightSpace weight_space(const TensorDatum& td, const Weight& mu);

// Full verification of Theorem main123 at one stratum: the vectors
// v_{t, xi, d}, (t, xi, d) in delta(f, lambda'), have weight hat-lambda,
// are n^+-singular modulo the two-sided-ideal image M<E^{f+1}>, and are
// linearly independent modulo that image; count = |delta(f, lambda')|.
// Feasible at micro scale only (the ideal image is computed weight space
// by weight space).
struct SingularReport {
  int f = 0;
  Multipartition lambda;
  std::size_t expected = 0;  // |delta(f, lambda')|
  std::size_t count = 0;     // independent singular vectors found
  bool weights_ok = false;
  bool annihilated = false;
  bool independent = false;
  std::string witness;  // first failure, if any
  bool ok() const {
    return weights_ok && annihilated && independent && count == expected;
  }
};
SingularReport verify_singular(const TensorDatum& td, const BrauerAlgebra& B,
                               int f, const Multipartition& lambda);

// Operator-level certificate of Theorem thmA at micro scale: the map
// B_{a,r}(u) -> End(M) is injective.  Computes the images of the
// generating vectors m_i (x) v_k under every canonical monomial of B and
// returns the exact rank (full rank a^r (2r-1)!! certifies injectivity).
std::size_t operator_rank(const TensorDatum& td, const BrauerAlgebra& B);

}  // namespace cybra
