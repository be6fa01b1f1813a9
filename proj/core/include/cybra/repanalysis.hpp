#pragma once

#include <map>
#include <vector>

#include "cybra/brauer.hpp"
#include "cybra/combinat.hpp"
#include "cybra/hecke.hpp"
#include "cybra/matrix.hpp"
#include "cybra/rational.hpp"

namespace cybra {

// Generic split-algebra analysis over exact rationals: Jacobson radical via
// the regular trace form (characteristic zero), simple modules as cell
// modules modulo Gram radicals, and composition multiplicities by the
// character method (trace functions of pairwise non-isomorphic simples are
// linearly independent in the split case).

// Multiplication table e_i e_j = sum_k table[i][j][k] e_k (sparse in k).
struct StructureConstants {
  std::size_t dim = 0;
  std::vector<std::vector<std::map<std::size_t, Rat>>> table;

  Vec mul(const Vec& x, const Vec& y) const;
  // Matrix of left multiplication by e_i (column j = e_i e_j).
  Mat left_mult_matrix(std::size_t i) const;
  // (e_i e_j) e_k == e_i (e_j e_k) for one triple.
  bool associative_at(std::size_t i, std::size_t j, std::size_t k) const;
};

// A right module presented by the action matrix of every algebra basis
// element (column j = image of module basis vector j).
struct ActionModule {
  std::size_t dim = 0;
  std::vector<Mat> action;
};

// Basis of the Jacobson radical: the radical of the symmetric form
// (x, y) -> trace of left multiplication by xy.  Verified nilpotent by
// powering the subspace to zero; a non-nilpotent result throws.
std::vector<Vec> trace_form_radical(const StructureConstants& A);

// Quotient of M by the submodule spanned by `sub` (must be action-stable).
ActionModule quotient_module(const ActionModule& M, const std::vector<Vec>& sub);

// t[k] = trace of the action of algebra basis element k.
Vec trace_vector(const ActionModule& M);

// Multiplicities [M : simples[c]] solved from the trace system; throws if
// the system is rank-deficient or the solution is not made of nonnegative
// integers (both would indicate a splitness or construction bug).
std::vector<long long> composition_multiplicities(
    const ActionModule& M, const std::vector<ActionModule>& simples);

struct DecompositionMatrix {
  // Cell labels (f, lambda) in the stratum order (higher strata first);
  // columns are the labels with D(f, lambda) != 0.
  std::vector<std::pair<int, Multipartition>> rows;
  std::vector<std::pair<int, Multipartition>> cols;
  std::vector<std::vector<long long>> entries;
};

// ---- Brauer instance adapters ----
StructureConstants brauer_structure_constants(const BrauerAlgebra& B);
// C(f, lambda) with the action of every algebra basis element.
ActionModule brauer_cell_action_module(const BrauerAlgebra& B, int f,
                                       const Multipartition& lambda);
// Brute-force [C(f,lambda) : D(h,mu)] table; requires omega_0 != 0.
DecompositionMatrix decomposition_matrix(const BrauerAlgebra& B);

// ---- Hecke instance adapters (independent code path for cross-checks) ----
StructureConstants hecke_structure_constants(const HeckeAlgebra& H);
ActionModule hecke_cell_action_module(const HeckeAlgebra& H,
                                      const Multipartition& lambda,
                                      HeckeAlgebra::Flavor flavor);
// Decomposition matrix of H with labels written as (0, lambda).
DecompositionMatrix hecke_decomposition_matrix(const HeckeAlgebra& H,
                                               HeckeAlgebra::Flavor flavor);

}  // namespace cybra
