#include "cybra/repanalysis.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace cybra {

// ---------------------------------------------------------------------------
// StructureConstants
// ---------------------------------------------------------------------------

Vec StructureConstants::mul(const Vec& x, const Vec& y) const {
  Vec z(dim, Rat(0));
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      const Rat c = x[i] * y[j];
      for (const auto& [k, ck] : table[i][j]) z[k] += c * ck;
    }
  }
  return z;
}

Mat StructureConstants::left_mult_matrix(std::size_t i) const {
  Mat m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (const auto& [k, ck] : table[i][j]) m(k, j) = ck;
  return m;
}

bool StructureConstants::associative_at(std::size_t i, std::size_t j,
                                        std::size_t k) const {
  Vec ei(dim, Rat(0)), ej(dim, Rat(0)), ek(dim, Rat(0));
  ei[i] = 1;
  ej[j] = 1;
  ek[k] = 1;
  return mul(mul(ei, ej), ek) == mul(ei, mul(ej, ek));
}

// ---------------------------------------------------------------------------
// Radical, quotients, traces
// ---------------------------------------------------------------------------

std::vector<Vec> trace_form_radical(const StructureConstants& A) {
  const std::size_t n = A.dim;
  // t[m] = trace of left multiplication by e_m.
  Vec t(n, Rat(0));
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t j = 0; j < n; ++j) {
      auto it = A.table[m][j].find(j);
      if (it != A.table[m][j].end()) t[m] += it->second;
    }
  Mat T(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat s = 0;
      for (const auto& [m, c] : A.table[i][j]) s += c * t[m];
      T(i, j) = s;
    }
  std::vector<Vec> rad = nullspace(T);
  // Verify nilpotency: J, J^2, ... must reach zero (Dickson: over a field of
  // characteristic zero the trace-form radical is the Jacobson radical).
  std::vector<Vec> power = rad;
  for (std::size_t step = 0; !power.empty(); ++step) {
    if (step > n)
      throw std::logic_error("trace_form_radical: radical is not nilpotent");
    RowSpace next(n);
    std::vector<Vec> nb;
    for (const auto& x : power)
      for (const auto& y : rad) {
        Vec z = A.mul(x, y);
        if (next.insert(z)) nb.push_back(std::move(z));
      }
    power = std::move(nb);
  }
  return rad;
}

namespace {

// Change of basis adapted to a submodule: quotient coordinates are the
// coordinates along chosen complement basis vectors e_I.
struct QuotientCoords {
  std::vector<std::size_t> complement;
  Mat finv;  // inverse of [sub basis | e_I]
  std::size_t sub_dim = 0;

  Vec coords(const Vec& v) const {
    Vec out(complement.size(), Rat(0));
    for (std::size_t i = 0; i < complement.size(); ++i) {
      Rat s = 0;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) s += finv(sub_dim + i, j) * v[j];
      out[i] = s;
    }
    return out;
  }
};

QuotientCoords make_quotient_coords(std::size_t dim,
                                    const std::vector<Vec>& sub) {
  RowSpace rs(dim);
  for (const auto& v : sub) rs.insert(v);
  QuotientCoords qc;
  qc.sub_dim = rs.dim();
  RowSpace probe = rs;
  for (std::size_t i = 0; i < dim; ++i) {
    Vec e(dim, Rat(0));
    e[i] = 1;
    if (probe.insert(e)) qc.complement.push_back(i);
  }
  Mat F(dim, dim);
  for (std::size_t c = 0; c < qc.sub_dim; ++c)
    for (std::size_t i = 0; i < dim; ++i) F(i, c) = rs.rows()[c][i];
  for (std::size_t c = 0; c < qc.complement.size(); ++c)
    F(qc.complement[c], qc.sub_dim + c) = 1;
  auto inv = mat_inverse(F);
  if (!inv) throw std::logic_error("quotient_module: degenerate basis");
  qc.finv = std::move(*inv);
  return qc;
}

}  // namespace

ActionModule quotient_module(const ActionModule& M,
                             const std::vector<Vec>& sub) {
  const QuotientCoords qc = make_quotient_coords(M.dim, sub);
  const std::size_t q = qc.complement.size();
  ActionModule Q;
  Q.dim = q;
  Q.action.reserve(M.action.size());
  for (const auto& A : M.action) {
    Mat B(q, q);
    for (std::size_t j = 0; j < q; ++j) {
      Vec col(M.dim, Rat(0));
      for (std::size_t i = 0; i < M.dim; ++i) col[i] = A(i, qc.complement[j]);
      const Vec c = qc.coords(col);
      for (std::size_t i = 0; i < q; ++i) B(i, j) = c[i];
    }
    Q.action.push_back(std::move(B));
  }
  return Q;
}

Vec trace_vector(const ActionModule& M) {
  Vec t(M.action.size(), Rat(0));
  for (std::size_t k = 0; k < M.action.size(); ++k)
    for (std::size_t i = 0; i < M.dim; ++i) t[k] += M.action[k](i, i);
  return t;
}

std::vector<long long> composition_multiplicities(
    const ActionModule& M, const std::vector<ActionModule>& simples) {
  const std::size_t n = M.action.size();
  const std::size_t c = simples.size();
  Mat T(n, c);
  for (std::size_t j = 0; j < c; ++j) {
    if (simples[j].action.size() != n)
      throw std::invalid_argument(
          "composition_multiplicities: spanning sets differ");
    const Vec tj = trace_vector(simples[j]);
    for (std::size_t i = 0; i < n; ++i) T(i, j) = tj[i];
  }
  if (rank_bareiss(T) != c)
    throw std::logic_error(
        "composition_multiplicities: simple characters are dependent");
  const auto sol = solve(T, trace_vector(M));
  if (!sol)
    throw std::logic_error("composition_multiplicities: inconsistent traces");
  std::vector<long long> out;
  out.reserve(c);
  for (const Rat& x : *sol) {
    if (!is_integer(x) || x < 0)
      throw std::logic_error(
          "composition_multiplicities: non-integer multiplicity");
    out.push_back(static_cast<long long>(numerator(x)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Brauer adapters
// ---------------------------------------------------------------------------

StructureConstants brauer_structure_constants(const BrauerAlgebra& B) {
  const std::size_t n = B.dimension();
  StructureConstants sc;
  sc.dim = n;
  sc.table.assign(n, std::vector<std::map<std::size_t, Rat>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Vec ei(n, Rat(0));
    ei[i] = 1;
    for (std::size_t j = 0; j < n; ++j) {
      const Vec prod = B.module_apply(ei, B.module_basis_words()[j]);
      for (std::size_t k = 0; k < n; ++k)
        if (prod[k] != 0) sc.table[i][j].emplace(k, prod[k]);
    }
  }
  return sc;
}

namespace {

Mat word_action(const BrauerAlgebra::ModulePresentation& mp,
                const BrauerWord& w) {
  Mat A = Mat::identity(mp.dim);
  for (const auto& l : w) {
    const Mat* g = nullptr;
    switch (l.kind) {
      case BrauerLetter::Kind::S:
        g = &mp.s_action[l.index - 1];
        break;
      case BrauerLetter::Kind::E:
        g = &mp.e_action[l.index - 1];
        break;
      case BrauerLetter::Kind::X:
        g = &mp.x_action[l.index - 1];
        break;
    }
    // Right action: v.(w l) = (v.w).l, so the matrix composes on the left.
    A = mat_mul(*g, A);
  }
  return A;
}

}  // namespace

ActionModule brauer_cell_action_module(const BrauerAlgebra& B, int f,
                                       const Multipartition& lambda) {
  const auto mp = B.cell_module_presentation(f, lambda);
  ActionModule M;
  M.dim = mp.dim;
  M.action.reserve(B.dimension());
  for (const auto& w : B.module_basis_words())
    M.action.push_back(word_action(mp, w));
  return M;
}

DecompositionMatrix decomposition_matrix(const BrauerAlgebra& B) {
  if (B.params().omega.empty() || B.params().omega[0] == 0)
    throw std::invalid_argument(
        "decomposition_matrix: classification needs omega_0 != 0");
  DecompositionMatrix dm;
  dm.rows = strata(B.params().a, B.params().r);
  std::vector<ActionModule> cells;
  std::vector<ActionModule> simples;
  for (const auto& [f, lambda] : dm.rows) {
    ActionModule M = brauer_cell_action_module(B, f, lambda);
    const Mat gram = B.cell_module(f, lambda).gram;
    const std::vector<Vec> rad = nullspace(gram);
    if (rad.size() < M.dim) {
      simples.push_back(quotient_module(M, rad));
      dm.cols.emplace_back(f, lambda);
    }
    cells.push_back(std::move(M));
  }
  for (const auto& M : cells)
    dm.entries.push_back(composition_multiplicities(M, simples));
  return dm;
}

// ---------------------------------------------------------------------------
// Hecke adapters (independent code path, used for cross-validation)
// ---------------------------------------------------------------------------

StructureConstants hecke_structure_constants(const HeckeAlgebra& H) {
  const auto& basis = H.basis();
  const std::size_t n = basis.size();
  StructureConstants sc;
  sc.dim = n;
  sc.table.assign(n, std::vector<std::map<std::size_t, Rat>>(n));
  std::vector<HeckeElement> els;
  els.reserve(n);
  for (const auto& m : basis) {
    HeckeElement e;
    e.add_term(m, Rat(1));
    els.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec prod = H.to_vec(H.multiply(els[i], els[j]));
      for (std::size_t k = 0; k < n; ++k)
        if (prod[k] != 0) sc.table[i][j].emplace(k, prod[k]);
    }
  return sc;
}

ActionModule hecke_cell_action_module(const HeckeAlgebra& H,
                                      const Multipartition& lambda,
                                      HeckeAlgebra::Flavor flavor) {
  ActionModule M;
  M.dim = static_cast<std::size_t>(num_standard_tableaux(lambda));
  M.action.reserve(H.basis().size());
  for (const auto& m : H.basis()) {
    HeckeElement e;
    e.add_term(m, Rat(1));
    M.action.push_back(H.cell_action(lambda, flavor, e));
  }
  return M;
}

DecompositionMatrix hecke_decomposition_matrix(const HeckeAlgebra& H,
                                               HeckeAlgebra::Flavor flavor) {
  DecompositionMatrix dm;
  auto shapes = multipartitions_of(H.params().a, H.params().r);
  std::sort(shapes.begin(), shapes.end(), total_order_less);
  std::vector<ActionModule> cells;
  std::vector<ActionModule> simples;
  for (const auto& lambda : shapes) {
    dm.rows.emplace_back(0, lambda);
    ActionModule M = hecke_cell_action_module(H, lambda, flavor);
    const Mat gram = H.cell_gram(lambda, flavor);
    const std::vector<Vec> rad = nullspace(gram);
    if (rad.size() < M.dim) {
      simples.push_back(quotient_module(M, rad));
      dm.cols.emplace_back(0, lambda);
    }
    cells.push_back(std::move(M));
  }
  for (const auto& M : cells)
    dm.entries.push_back(composition_multiplicities(M, simples));
  return dm;
}

}  // namespace cybra
