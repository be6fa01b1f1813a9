#include <utility>
#include <vector>

#include "cybra/repanalysis.hpp"
#include "doctest.h"

using namespace cybra;

namespace {

Multipartition mp(std::vector<std::vector<int>> comps) {
  std::vector<Partition> ps;
  for (auto& c : comps) ps.emplace_back(std::move(c));
  return Multipartition(std::move(ps));
}

BrauerAlgebra make_generic(int a, int r) {
  std::vector<Rat> u;
  if (a == 1) u = {Rat(1)};
  if (a == 2) u = {rat(1, 5), rat(1, 7)};
  return BrauerAlgebra(make_brauer_params(a, r, std::move(u)));
}

// Upper-triangular 2x2 matrices with basis (e11, e12, e22).
StructureConstants upper_triangular_2x2() {
  StructureConstants sc;
  sc.dim = 3;
  sc.table.assign(3, std::vector<std::map<std::size_t, Rat>>(3));
  sc.table[0][0][0] = 1;  // e11 e11 = e11
  sc.table[0][1][1] = 1;  // e11 e12 = e12
  sc.table[1][2][1] = 1;  // e12 e22 = e12
  sc.table[2][2][2] = 1;  // e22 e22 = e22
  return sc;
}

}  // namespace

TEST_CASE("repanalysis: structure constants are associative") {
  const auto sc = brauer_structure_constants(make_generic(2, 2));
  CHECK(sc.dim == 12);
  for (std::size_t i = 0; i < sc.dim; ++i)
    for (std::size_t j = 0; j < sc.dim; ++j)
      for (std::size_t k = 0; k < sc.dim; ++k)
        CHECK(sc.associative_at(i, j, k));
  // Basis element 0 is the unit (the closure starts from the identity).
  Vec e0(sc.dim, Rat(0));
  e0[0] = 1;
  Vec v(sc.dim, Rat(0));
  v[3] = rat(2, 3);
  v[7] = -1;
  CHECK(sc.mul(e0, v) == v);
  CHECK(sc.mul(v, e0) == v);

  const HeckeAlgebra H(HeckeParams{2, 2, {Rat(0), rat(1, 2)}});
  const auto hs = hecke_structure_constants(H);
  CHECK(hs.dim == 8);
  for (std::size_t i = 0; i < hs.dim; ++i)
    for (std::size_t j = 0; j < hs.dim; ++j)
      for (std::size_t k = 0; k < hs.dim; ++k)
        CHECK(hs.associative_at(i, j, k));
}

TEST_CASE("repanalysis: textbook radical of upper-triangular matrices") {
  const auto sc = upper_triangular_2x2();
  const auto rad = trace_form_radical(sc);
  REQUIRE(rad.size() == 1);
  // The strictly upper part: multiples of e12.
  CHECK(rad[0][0] == 0);
  CHECK(rad[0][1] != 0);
  CHECK(rad[0][2] == 0);
  // Two-sided ideal closure under the table.
  RowSpace span(3);
  for (const auto& v : rad) span.insert(v);
  for (std::size_t i = 0; i < 3; ++i) {
    Vec e(3, Rat(0));
    e[i] = 1;
    for (const auto& v : rad) {
      CHECK(span.contains(sc.mul(e, v)));
      CHECK(span.contains(sc.mul(v, e)));
    }
  }
}

TEST_CASE("repanalysis: generic Brauer algebra is semisimple") {
  const auto sc = brauer_structure_constants(make_generic(2, 2));
  CHECK(trace_form_radical(sc).empty());
}

TEST_CASE("repanalysis: dim A/J equals the sum of squared simple dimensions") {
  // Degenerate, orbit-descending parameters; omega_0 = 2 != 0.
  const std::vector<Rat> u = {Rat(1), Rat(0)};
  for (int r : {2, 3}) {
    BrauerAlgebra B(make_brauer_params(2, r, u));
    const auto sc = brauer_structure_constants(B);
    const auto rad = trace_form_radical(sc);
    // Radical is a two-sided ideal.
    RowSpace span(sc.dim);
    for (const auto& v : rad) span.insert(v);
    for (std::size_t i = 0; i < sc.dim; ++i) {
      Vec e(sc.dim, Rat(0));
      e[i] = 1;
      for (const auto& v : rad) {
        CHECK(span.contains(sc.mul(e, v)));
        CHECK(span.contains(sc.mul(v, e)));
      }
    }
    long long sum = 0;
    for (const auto& [f, lambda] : strata(2, r)) {
      const long long d =
          static_cast<long long>(rank_bareiss(B.cell_module(f, lambda).gram));
      sum += d * d;
    }
    CHECK(B.dimension() - rad.size() == static_cast<std::size_t>(sum));
    CHECK_FALSE(rad.empty());  // these parameters are genuinely degenerate
  }
}

TEST_CASE("repanalysis: simple modules have indicator multiplicity vectors") {
  const std::vector<Rat> u = {Rat(1), Rat(0)};
  BrauerAlgebra B(make_brauer_params(2, 2, u));
  std::vector<ActionModule> simples;
  std::vector<std::pair<int, Multipartition>> labels;
  for (const auto& [f, lambda] : strata(2, 2)) {
    ActionModule M = brauer_cell_action_module(B, f, lambda);
    const auto rad = nullspace(B.cell_module(f, lambda).gram);
    if (rad.size() < M.dim) {
      simples.push_back(quotient_module(M, rad));
      labels.emplace_back(f, lambda);
    }
  }
  for (std::size_t c = 0; c < simples.size(); ++c) {
    const auto m = composition_multiplicities(simples[c], simples);
    for (std::size_t j = 0; j < m.size(); ++j)
      CHECK(m[j] == (j == c ? 1 : 0));
  }
}

TEST_CASE("repanalysis: generic decomposition matrices are the identity") {
  for (auto [a, r] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}}) {
    const auto dm = decomposition_matrix(make_generic(a, r));
    REQUIRE(dm.rows.size() == dm.cols.size());
    for (std::size_t i = 0; i < dm.rows.size(); ++i) {
      CHECK(dm.rows[i] == dm.cols[i]);
      for (std::size_t j = 0; j < dm.cols.size(); ++j)
        CHECK(dm.entries[i][j] == (i == j ? 1 : 0));
    }
  }
}

TEST_CASE("repanalysis: degenerate decomposition matrices are unitriangular") {
  const std::vector<Rat> u = {Rat(1), Rat(0)};
  for (int r : {2, 3}) {
    BrauerAlgebra B(make_brauer_params(2, r, u));
    const auto dm = decomposition_matrix(B);
    CHECK(dm.cols.size() < dm.rows.size());  // genuinely non-semisimple
    for (std::size_t i = 0; i < dm.rows.size(); ++i) {
      long long row_sum = 0;
      for (std::size_t j = 0; j < dm.cols.size(); ++j) {
        row_sum += dm.entries[i][j];
        if (dm.entries[i][j] != 0) {
          // Nonzero entries need (f, lambda) = rows[i] above cols[j] in the
          // stratum order (or equal): with rows listed higher strata first
          // the matrix is lower unitriangular.
          CHECK((dm.cols[j] == dm.rows[i] || stratum_ge(dm.rows[i], dm.cols[j])));
        }
        if (dm.cols[j] == dm.rows[i]) CHECK(dm.entries[i][j] == 1);
      }
      const auto cd = B.cell_module(dm.rows[i].first, dm.rows[i].second);
      CHECK(row_sum <= static_cast<long long>(cd.basis.size()));
      // Dimension bookkeeping: sum m_mu dim D(mu) = dim C.
      long long dimsum = 0;
      for (std::size_t j = 0; j < dm.cols.size(); ++j)
        dimsum +=
            dm.entries[i][j] *
            static_cast<long long>(rank_bareiss(
                B.cell_module(dm.cols[j].first, dm.cols[j].second).gram));
      CHECK(dimsum == static_cast<long long>(cd.basis.size()));
    }
  }
}

TEST_CASE("repanalysis: hand-checked a=1, r=2 cases") {
  // omega_0 = 2u_1 + 1.  For u_1 = 1 (omega_0 = 3) the classical Brauer
  // algebra B_2(3) is semisimple: three one-dimensional cells.
  const auto dm = decomposition_matrix(
      BrauerAlgebra(make_brauer_params(1, 2, {Rat(1)})));
  CHECK(dm.rows.size() == 3);
  CHECK(dm.cols.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(dm.entries[i][j] == (i == j ? 1 : 0));
}

TEST_CASE("repanalysis: Brauer f=0 block agrees with the Hecke code path") {
  const std::vector<Rat> u = {Rat(1), Rat(0)};
  for (int r : {2, 3}) {
    BrauerAlgebra B(make_brauer_params(2, r, u));
    HeckeAlgebra H(HeckeParams{2, r, u});
    const auto bm = decomposition_matrix(B);
    const auto hm = hecke_decomposition_matrix(H, HeckeAlgebra::Flavor::N);
    // Restrict the Brauer matrix to f = 0 rows and f = 0 columns.
    std::vector<std::size_t> rsel, csel;
    for (std::size_t i = 0; i < bm.rows.size(); ++i)
      if (bm.rows[i].first == 0) rsel.push_back(i);
    for (std::size_t j = 0; j < bm.cols.size(); ++j)
      if (bm.cols[j].first == 0) csel.push_back(j);
    REQUIRE(rsel.size() == hm.rows.size());
    REQUIRE(csel.size() == hm.cols.size());
    for (std::size_t i = 0; i < rsel.size(); ++i) {
      CHECK(bm.rows[rsel[i]].second == hm.rows[i].second);
      for (std::size_t j = 0; j < csel.size(); ++j) {
        CHECK(bm.cols[csel[j]].second == hm.cols[j].second);
        CHECK(bm.entries[rsel[i]][csel[j]] == hm.entries[i][j]);
      }
    }
    // E_1 acts as zero on every f = 0 cell module, so no higher-stratum
    // simple can occur there: the f = 0 rows vanish outside f = 0 columns.
    for (std::size_t i : rsel)
      for (std::size_t j = 0; j < bm.cols.size(); ++j)
        if (bm.cols[j].first != 0) CHECK(bm.entries[i][j] == 0);
  }
}
