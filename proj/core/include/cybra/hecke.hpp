#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "cybra/combinat.hpp"
#include "cybra/matrix.hpp"
#include "cybra/rational.hpp"

namespace cybra {

// Degenerate cyclotomic Hecke algebra H_{a,r}(u): generated by s_1..s_{r-1},
// x_1..x_r with the symmetric-group relations, x's commuting,
// s_i x_i - x_{i+1} s_i = -1, x_i s_i - s_i x_{i+1} = -1, distant letters
// commuting, and (x_1 - u_1)...(x_1 - u_a) = 0.
// Canonical basis: { x^alpha w : 0 <= alpha_i < a, w in S_r }.

struct HeckeParams {
  int a = 1;
  int r = 1;
  std::vector<Rat> u;
};

// Normal monomial x^alpha w (alpha unbounded in the affine algebra).
struct HeckeMono {
  std::vector<int> alpha;
  Permutation w;
  bool operator==(const HeckeMono&) const = default;
  auto operator<=>(const HeckeMono&) const = default;
};

// Finite linear combination of normal monomials; no zero coefficients stored.
struct HeckeElement {
  std::map<HeckeMono, Rat> terms;

  bool is_zero() const { return terms.empty(); }
  void add_term(const HeckeMono& m, const Rat& c);
  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement operator+(const HeckeElement& o) const;
  HeckeElement operator-(const HeckeElement& o) const;
  HeckeElement operator*(const Rat& c) const;
  bool operator==(const HeckeElement&) const = default;
};

class HeckeAlgebra {
 public:
  enum class Flavor { M, N };

  explicit HeckeAlgebra(HeckeParams p);

  const HeckeParams& params() const { return p_; }
  int dimension() const;  // a^r * r!

  // Elements.
  HeckeElement zero() const { return {}; }
  HeckeElement one() const;
  HeckeElement x(int j) const;       // 1 <= j <= r
  HeckeElement s(int i) const;       // 1 <= i <= r-1
  HeckeElement perm(const Permutation& w) const;
  HeckeElement scalar(const Rat& c) const;

  // Product, reduced to the canonical basis (all exponents < a).
  HeckeElement multiply(const HeckeElement& x, const HeckeElement& y) const;
  // Cyclotomic reduction of an affine element.
  HeckeElement reduce(const HeckeElement& e) const;
  // Anti-involution fixing x_1 and every s_i.
  HeckeElement tau(const HeckeElement& e) const;

  // Murphy-type elements.
  HeckeElement x_lambda(const Multipartition& lambda) const;
  HeckeElement y_lambda(const Multipartition& lambda) const;
  HeckeElement pi_bracket(const Multipartition& lambda) const;        // pi_[lambda]
  HeckeElement pi_bracket_tilde(const Multipartition& lambda) const;  // tilde version
  HeckeElement m_element(const Multipartition& lambda) const;
  HeckeElement n_element(const Multipartition& lambda) const;

  // Canonical monomial indexing (for exact linear algebra).
  const std::vector<HeckeMono>& basis() const;
  std::size_t basis_index(const HeckeMono& m) const;
  Vec to_vec(const HeckeElement& e) const;

  // Cellular basis m_st (Flavor::M) or n_st (Flavor::N).
  struct CellularEntry {
    Multipartition lambda;
    int s_index = 0;  // indices into standard_tableaux(lambda)
    int t_index = 0;
    HeckeElement element;
  };
  const std::vector<CellularEntry>& cellular_basis(Flavor f) const;
  // Coordinates of e in the cellular basis (requires the basis to span).
  Vec express_in_cellular(Flavor f, const HeckeElement& e) const;

  // Gram matrix of the invariant form on the cell module of shape lambda,
  // in the d(t) basis; rank = dim D(lambda).
  Mat cell_gram(const Multipartition& lambda, Flavor f) const;
  // Right action of h on the cell module of shape lambda in the d(t) basis.
  Mat cell_action(const Multipartition& lambda, Flavor f,
                  const HeckeElement& h) const;

  // Specht module S^lambda = m_lambda w_lambda n_{lambda'} H: spanning
  // vectors and generator action matrices on the computed basis.
  struct ModuleActions {
    std::size_t dim = 0;
    std::vector<Mat> s_action;  // s_1..s_{r-1}
    std::vector<Mat> x_action;  // x_1..x_r
  };
  ModuleActions specht_module(const Multipartition& lambda) const;
  ModuleActions cell_module_actions(const Multipartition& lambda,
                                    Flavor f) const;

  struct Cache;  // memoized rewriting data; defined in hecke.cpp

 private:
  HeckeParams p_;
  std::vector<Rat> x1_pow_a_;  // x_1^a = sum_m x1_pow_a_[m] x_1^m

  std::shared_ptr<Cache> cache_;

  // Canonical form of the pure commuting monomial x^alpha (memoized).
  const HeckeElement& reduce_poly(const std::vector<int>& alpha) const;
  const std::vector<CellularEntry>& cellular_entries(Flavor f) const;
  const Mat& cellular_inverse(Flavor f) const;
};

}  // namespace cybra
