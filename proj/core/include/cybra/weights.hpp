#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cybra/combinat.hpp"
#include "cybra/rational.hpp"

namespace cybra {

// Type B/C/D root data with a parabolic subset I_1 or I_2, the weight
// dictionary lambda-hat between multipartition strata and parabolic-Verma
// highest weights, the u_j parameter formulas, and the saturation / linkage
// machinery (tensor-step sets, K_r, Jantzen coefficients).
//
// Conventions: weights live in the epsilon-basis with exact rational
// coordinates; (eps_i, eps_j) = delta_ij; the simple roots are
// alpha_i = eps_i - eps_{i+1} (i < n) and alpha_n = eps_n (B), 2 eps_n (C),
// eps_{n-1} + eps_n (D).

enum class LieType { B, C, D };

struct Weight {
  std::vector<Rat> coords;

  Weight() = default;
  explicit Weight(std::vector<Rat> c) : coords(std::move(c)) {}
  std::size_t rank() const { return coords.size(); }

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  bool operator==(const Weight&) const = default;
  std::string to_string() const;
};

// Strict total (lexicographic) order, for use as a set/map comparator.
bool weight_less(const Weight& x, const Weight& y);

// Root datum with cut points 0 = p_0 < p_1 < ... < p_k = n and the flavor
// i in {1, 2}:  I_1 = Pi \ {alpha_{p_1}, ..., alpha_{p_k}} and
// I_2 = I_1 union {alpha_n}.  Type D keeps the convention that the largest
// removed simple-root index is never n-1.
struct RootDatum {
  LieType phi = LieType::D;
  int n = 0;
  std::vector<int> p;  // p_1 < ... < p_k = n
  int i = 1;

  int k() const { return static_cast<int>(p.size()); }
  // p_j with p_0 = 0.
  int cut(int j) const { return j == 0 ? 0 : p[j - 1]; }
  // Indices of the removed simple roots Pi \ I_i, ascending.
  std::vector<int> removed_simples() const;
  bool alpha_n_in_I() const { return i == 2; }
  // Levi blocks [lo, hi] (1-based, inclusive) between consecutive removed
  // simple roots; the final block is empty exactly when i = 1.
  std::vector<std::pair<int, int>> blocks() const;
  // Throws std::invalid_argument on malformed data.  Note: i = 1 with type B
  // is allowed here (the appendix machinery covers it) but rejected by
  // compute_u_params / hat_lambda, which need the main theorem's hypothesis.
  void validate() const;
};

// A positive root: eps_k - eps_l (Diff, k < l), eps_k + eps_l (Sum, k < l),
// eps_k (Short, type B), 2 eps_k (Long, type C).
struct PosRoot {
  enum class Kind { Diff, Sum, Short, Long };
  Kind kind = Kind::Diff;
  int a = 0, b = 0;  // 1-based indices; b unused for Short/Long
  bool operator==(const PosRoot&) const = default;
};

std::vector<PosRoot> positive_roots(const RootDatum& rd);
// beta in Phi_I = Phi intersect ZI.
bool in_phi_I(const RootDatum& rd, const PosRoot& beta);
// <w, beta^vee> = 2 (w, beta) / (beta, beta).
Rat pairing(const Weight& w, const PosRoot& beta);
// s_beta(w) = w - <w, beta^vee> beta.
Weight reflect(const Weight& w, const PosRoot& beta);
// Dot action s_beta . w = s_beta(w + rho) - rho.
Weight dot_reflect(const RootDatum& rd, const Weight& w, const PosRoot& beta);

// Half-sum of positive roots: B: (n-1/2, ..., 1/2); C: (n, ..., 1);
// D: (n-1, ..., 1, 0).
Weight rho(const RootDatum& rd);

// Membership in Lambda^{p_I}: <w, alpha^vee> a nonnegative integer for all
// simple alpha in I_i.
bool is_p_dominant(const RootDatum& rd, const Weight& w);

// mu >= nu in the dominance order: mu - nu in N Pi.
bool dominance_ge(const RootDatum& rd, const Weight& mu, const Weight& nu);

// lambda_{I,c} = sum_j c_j (eps_{p_{j-1}+1} + ... + eps_{p_j}); requires
// c.size() == k and c_k = 0 when i = 2.
Weight lambda_Ic(const RootDatum& rd, const std::vector<Rat>& c);

// The cyclotomic parameters u_1..u_a with a = 2k (i=1) or 2k-1 (i=2),
// from the bar-u case analysis (sign epsilon = +1 for so, -1 for sp) and the
// i = 2 index shift.  Rejects i = 1 with type B.
std::vector<Rat> compute_u_params(const RootDatum& rd,
                                  const std::vector<Rat>& c);

// The I-dominant representative of v under the parabolic Weyl group W_I,
// together with det(w) = (-1)^{l(w)} of the unique w in W_I with
// w(v) = canonical.  Throws std::domain_error when the W_I-stabilizer of v
// is nontrivial (non-regular input).
std::pair<Weight, int> w_I_canonicalize(const RootDatum& rd, const Weight& v);

// The I-dominant representative only, defined for every v (no regularity
// requirement; the unique dominant point of the W_I-orbit).
Weight w_I_dominant(const RootDatum& rd, const Weight& v);

// ---------------------------------------------------------------------------
// The lambda-hat dictionary
// ---------------------------------------------------------------------------

// hat(lambda) = lambda_{I,c} + tilde(lambda) where tilde(lambda) places the
// parts of components 1..k positively at block starts and the parts of
// components k+1..a negatively at block ends.  Requires the block-size
// assumption p_t - p_{t-1} >= 2r for all t, level(lambda) = a and
// |lambda| = r - 2f.  Rejects i = 1 with type B.
Weight hat_lambda(const RootDatum& rd, const std::vector<Rat>& c, int f,
                  const Multipartition& lambda, int r);

// Inverse of hat_lambda on its image; throws std::invalid_argument when mu
// is not of the form hat(lambda) for any (f, lambda) with |lambda| = r - 2f.
std::pair<int, Multipartition> unhat(const RootDatum& rd,
                                     const std::vector<Rat>& c,
                                     const Weight& mu, int r);

// ---------------------------------------------------------------------------
// Appendix machinery: tensor steps, K_r, Jantzen coefficients, linkage
// ---------------------------------------------------------------------------

// S_mu: the p-dominant weights among mu + h eps_i with h = +-1, together
// with mu itself exactly in the type-B exception (alpha_n not in I, or
// mu_n != 0).  All multiplicities are 1.  Rejects non-p-dominant mu.
std::vector<Weight> tensor_step(const RootDatum& rd, const Weight& mu);

// K_r by breadth-first iteration K_r = union of S_mu over mu in K_{r-1},
// starting from K_0 = {0}; sorted by weight_less.
std::vector<Weight> K_r_bfs(const RootDatum& rd, int r);

// K_r by the closed forms: Y_r (type B, alpha_n not in I), Y'_r (C and D),
// and the type-B union Y'_r cup Y'_{r-2j-1, j} (alpha_n in I); sorted.
std::vector<Weight> K_r_closed(const RootDatum& rd, int r);

// Jantzen coefficient c(mu, xi) = sum over beta in Psi_{mu,xi} of
// (-1)^{l(w_beta)}, where Psi_{mu,xi} collects beta in Phi+ \ Phi_I with
// <mu+rho, beta^vee> a positive integer and xi = (w_beta s_beta) . mu for
// some w_beta in W_I.  Throws std::domain_error on non-regular reflections.
long long jantzen_coefficient(const RootDatum& rd, const Weight& mu,
                              const Weight& xi);

// All p-dominant nu = (w s_beta) . mu over beta in Phi+ \ Phi_I with
// <mu+rho, beta^vee> a positive integer (nu != mu); deduplicated, sorted.
std::vector<Weight> linkage_steps(const RootDatum& rd, const Weight& mu);

// True iff nu is reachable from mu by a chain of linkage steps (including
// the empty chain).  This is a *superset* of the paper's order "preceq"
// (a necessary condition for [M(mu) : L(nu)] != 0), so saturation checks
// built on it are sound certificates.
bool linkage_reachable(const RootDatum& rd, const Weight& nu,
                       const Weight& mu);

// <lambda_{I,c} + rho, beta^vee> not a positive integer for every
// beta in Phi+ \ Phi_I (the simplicity assumption for M^p(lambda_{I,c})).
bool assumption_simple11(const RootDatum& rd, const std::vector<Rat>& c);

struct SaturationReport {
  bool simple11_ok = false;
  bool saturated = true;
  // First failure, if any: level j and the witness pair (mu in S_j, linked
  // p-dominant nu outside S_j).
  int failed_level = -1;
  std::optional<Weight> witness_mu;
  std::optional<Weight> witness_nu;
};

// For every j <= r and every mu in S_j = lambda_{I,c} + K_j, checks that
// every single linkage step from mu stays inside S_j.  Runs even when the
// simplicity assumption fails (recorded in the report).
SaturationReport saturation_check(const RootDatum& rd,
                                  const std::vector<Rat>& c, int r);

// The parabolic Verma flag of M^p(lambda_{I,c}) tensor V: the ordered list
// of nonzero subquotient highest weights (with the i-dependent deletions)
// and the map from signed basis indices of V to the nominal flag stratum.
struct VermaFlagReport {
  int total_strata = 0;             // 2k (C, D) or 2k+1 (B), before deletions
  std::vector<int> flag_index;      // surviving nominal indices j
  std::vector<Weight> subquotients; // highest weight of N_j / N_{j-1}
  // v_j |-> t for keys +j, -j (and 0 in type B); deleted strata collapse,
  // so the effective container of v is the largest surviving index <= t.
  std::map<int, int> membership;
};

VermaFlagReport verma_flag_of_first_tensor(const RootDatum& rd,
                                           const std::vector<Rat>& c);

}  // namespace cybra
