#include "cybra/hecke.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace cybra {

void HeckeElement::add_term(const HeckeMono& m, const Rat& c) {
  if (c == 0) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [m, c] : o.terms) add_term(m, c);
  return *this;
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
  HeckeElement z = *this;
  z += o;
  return z;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const {
  HeckeElement z = *this;
  for (const auto& [m, c] : o.terms) z.add_term(m, -c);
  return z;
}

HeckeElement HeckeElement::operator*(const Rat& c) const {
  HeckeElement z;
  if (c == 0) return z;
  for (const auto& [m, k] : terms) z.terms.emplace(m, k * c);
  return z;
}

struct HeckeAlgebra::Cache {
  // v * x_p expanded in normal monomials, keyed on (one-line image of v, p).
  std::map<std::pair<std::vector<int>, int>, HeckeElement> push_x;
  // Canonical form of the pure monomial x^alpha.
  std::map<std::vector<int>, HeckeElement> poly;
  std::vector<HeckeMono> basis;
  std::map<HeckeMono, std::size_t> index;
  std::vector<CellularEntry> cell[2];
  bool cell_done[2] = {false, false};
  Mat cell_inv[2];
};

HeckeAlgebra::HeckeAlgebra(HeckeParams p)
    : p_(std::move(p)), cache_(std::make_shared<Cache>()) {
  if (p_.a < 1 || p_.r < 1 || static_cast<int>(p_.u.size()) != p_.a)
    throw std::invalid_argument("HeckeAlgebra: need a >= 1, r >= 1, |u| = a");
  // Coefficients of prod_i (T - u_i) = T^a + sum_{m<a} coef[m] T^m, so that
  // x_1^a = -sum_{m<a} coef[m] x_1^m.
  std::vector<Rat> coef(p_.a + 1, Rat(0));
  coef[0] = 1;
  int deg = 0;
  for (const Rat& u : p_.u) {
    for (int m = deg + 1; m >= 1; --m) coef[m] = coef[m - 1] - u * coef[m];
    coef[0] = -u * coef[0];
    ++deg;
  }
  x1_pow_a_.assign(p_.a, Rat(0));
  for (int m = 0; m < p_.a; ++m) x1_pow_a_[m] = -coef[m];
}

int HeckeAlgebra::dimension() const {
  int d = 1;
  for (int i = 0; i < p_.r; ++i) d *= p_.a;
  for (int i = 2; i <= p_.r; ++i) d *= i;
  return d;
}

HeckeElement HeckeAlgebra::one() const {
  HeckeElement e;
  e.terms.emplace(
      HeckeMono{std::vector<int>(p_.r, 0), Permutation::identity(p_.r)},
      Rat(1));
  return e;
}

HeckeElement HeckeAlgebra::scalar(const Rat& c) const { return one() * c; }

HeckeElement HeckeAlgebra::x(int j) const {
  if (j < 1 || j > p_.r) throw std::invalid_argument("x: index out of range");
  std::vector<int> alpha(p_.r, 0);
  alpha[j - 1] = 1;
  HeckeElement e;
  e.terms.emplace(HeckeMono{alpha, Permutation::identity(p_.r)}, Rat(1));
  return reduce(e);
}

HeckeElement HeckeAlgebra::s(int i) const {
  if (i < 1 || i >= p_.r) throw std::invalid_argument("s: index out of range");
  return perm(Permutation::transposition(p_.r, i, i + 1));
}

HeckeElement HeckeAlgebra::perm(const Permutation& w) const {
  if (w.degree() != p_.r) throw std::invalid_argument("perm: wrong degree");
  HeckeElement e;
  e.terms.emplace(HeckeMono{std::vector<int>(p_.r, 0), w}, Rat(1));
  return e;
}

namespace {

HeckeElement rightmult_perm(const HeckeElement& e, const Permutation& w) {
  if (w.is_identity()) return e;
  HeckeElement out;
  for (const auto& [m, c] : e.terms) out.add_term({m.alpha, m.w * w}, c);
  return out;
}

}  // namespace

namespace detail {

// v * x_p in normal monomials, by peeling the last letter of a reduced word
// of v and moving x through it (s_j x_j = x_{j+1} s_j - 1 and its mirror).
const HeckeElement& push_x(const Permutation& v, int p, int r,
                           HeckeAlgebra::Cache& cache) {
  auto key = std::make_pair(v.img, p);
  auto it = cache.push_x.find(key);
  if (it != cache.push_x.end()) return it->second;

  HeckeElement out;
  if (v.is_identity()) {
    std::vector<int> alpha(r, 0);
    alpha[p - 1] = 1;
    out.terms.emplace(HeckeMono{alpha, v}, Rat(1));
  } else {
    const std::vector<int> word = v.reduced_word();
    const int j = word.back();
    const Permutation sj = Permutation::transposition(r, j, j + 1);
    const Permutation vp = v * sj;  // drops the last letter
    if (p != j && p != j + 1) {
      out = rightmult_perm(push_x(vp, p, r, cache), sj);
    } else if (p == j) {
      // v x_j = v' (s_j x_j) = (v' x_{j+1}) s_j - v'
      out = rightmult_perm(push_x(vp, j + 1, r, cache), sj);
      out.add_term({std::vector<int>(r, 0), vp}, Rat(-1));
    } else {
      // v x_{j+1} = (v' x_j) s_j + v'
      out = rightmult_perm(push_x(vp, j, r, cache), sj);
      out.add_term({std::vector<int>(r, 0), vp}, Rat(1));
    }
  }
  return cache.push_x.emplace(std::move(key), std::move(out)).first->second;
}

HeckeElement rightmult_x(const HeckeElement& e, int p, int r,
                         HeckeAlgebra::Cache& cache) {
  HeckeElement out;
  for (const auto& [m, c] : e.terms) {
    for (const auto& [m2, c2] : push_x(m.w, p, r, cache).terms) {
      std::vector<int> alpha = m.alpha;
      for (int i = 0; i < r; ++i) alpha[i] += m2.alpha[i];
      out.add_term({std::move(alpha), m2.w}, c * c2);
    }
  }
  return out;
}

}  // namespace detail

const HeckeElement& HeckeAlgebra::reduce_poly(
    const std::vector<int>& alpha) const {
  auto it = cache_->poly.find(alpha);
  if (it != cache_->poly.end()) return it->second;

  const int r = p_.r;
  const int a = p_.a;
  int j = 0;  // largest 1-based position with alpha_j >= a
  for (int q = r; q >= 1; --q)
    if (alpha[q - 1] >= a) {
      j = q;
      break;
    }

  HeckeElement out;
  if (j == 0) {
    out.terms.emplace(HeckeMono{alpha, Permutation::identity(r)}, Rat(1));
  } else if (j == 1) {
    // Substitute x_1^a from the cyclotomic relation; degree strictly drops.
    for (int m = 0; m < a; ++m) {
      if (x1_pow_a_[m] == 0) continue;
      std::vector<int> a2 = alpha;
      a2[0] += m - a;
      out += reduce_poly(a2) * x1_pow_a_[m];
    }
  } else {
    // x_j^m = s_{j-1} x_{j-1}^m s_{j-1} + sum_t x_{j-1}^t x_j^{m-1-t} s_{j-1}.
    const int m = alpha[j - 1];
    std::vector<int> ap = alpha;
    ap[j - 1] = 0;
    const Permutation sj = Permutation::transposition(r, j - 1, j);
    for (int t = 0; t < m; ++t) {
      std::vector<int> g = ap;
      g[j - 2] += t;
      g[j - 1] += m - 1 - t;
      out += rightmult_perm(reduce_poly(g), sj);
    }
    // Main term: x^{alpha'} s_{j-1} (x_{j-1}^m reduced) s_{j-1}. The inner
    // reduction only involves positions <= j-1 and permutations fixing j..r,
    // so s_{j-1} passes every inner x except x_{j-1} itself, handled by
    // s x_{j-1}^b = x_j^b s - sum_k x_{j-1}^{b-1-k} x_j^k.
    std::vector<int> inner_alpha(r, 0);
    inner_alpha[j - 2] = m;
    const HeckeElement inner = reduce_poly(inner_alpha);  // copy: memo may grow
    for (const auto& [mono, c] : inner.terms) {
      const int b = mono.alpha[j - 2];
      const Permutation tail = mono.w * sj;
      // Crossing term x_j^b s_{j-1}.
      {
        std::vector<int> g = ap;
        for (int q = 0; q < j - 2; ++q) g[q] += mono.alpha[q];
        g[j - 1] += b;
        out += rightmult_perm(reduce_poly(g), sj * tail) * c;
      }
      for (int k = 0; k < b; ++k) {
        std::vector<int> g = ap;
        for (int q = 0; q < j - 2; ++q) g[q] += mono.alpha[q];
        g[j - 2] += b - 1 - k;
        g[j - 1] += k;
        out += rightmult_perm(reduce_poly(g), tail) * (-c);
      }
    }
  }
  return cache_->poly.emplace(alpha, std::move(out)).first->second;
}

HeckeElement HeckeAlgebra::reduce(const HeckeElement& e) const {
  HeckeElement out;
  for (const auto& [m, c] : e.terms)
    out += rightmult_perm(reduce_poly(m.alpha), m.w) * c;
  return out;
}

HeckeElement HeckeAlgebra::multiply(const HeckeElement& x,
                                    const HeckeElement& y) const {
  HeckeElement out;
  for (const auto& [m2, c2] : y.terms) {
    HeckeElement cur = x;
    for (int p = 1; p <= p_.r; ++p)
      for (int k = 0; k < m2.alpha[p - 1]; ++k)
        cur = detail::rightmult_x(cur, p, p_.r, *cache_);
    cur = rightmult_perm(cur, m2.w);
    out += cur * c2;
  }
  return reduce(out);
}

HeckeElement HeckeAlgebra::tau(const HeckeElement& e) const {
  // tau(x^alpha w) = w^{-1} x^alpha (tau fixes every x_j and s_i).
  HeckeElement out;
  for (const auto& [m, c] : e.terms) {
    HeckeElement cur = perm(m.w.inverse());
    for (int p = 1; p <= p_.r; ++p)
      for (int k = 0; k < m.alpha[p - 1]; ++k)
        cur = detail::rightmult_x(cur, p, p_.r, *cache_);
    out += cur * c;
  }
  return reduce(out);
}

HeckeElement HeckeAlgebra::x_lambda(const Multipartition& lambda) const {
  HeckeElement e;
  for (const auto& w : young_subgroup(lambda, p_.r))
    e.add_term({std::vector<int>(p_.r, 0), w}, Rat(1));
  return e;
}

HeckeElement HeckeAlgebra::y_lambda(const Multipartition& lambda) const {
  HeckeElement e;
  for (const auto& w : young_subgroup(lambda, p_.r))
    e.add_term({std::vector<int>(p_.r, 0), w}, Rat(w.sign()));
  return e;
}

namespace {

// pi_c(u) = (x_1 - u)(x_2 - u)...(x_c - u).
HeckeElement pi_c(const HeckeAlgebra& H, int c, const Rat& u) {
  HeckeElement e = H.one();
  for (int i = 1; i <= c; ++i)
    e = H.multiply(e, H.x(i) - H.scalar(u));
  return e;
}

}  // namespace

HeckeElement HeckeAlgebra::pi_bracket(const Multipartition& lambda) const {
  const Profile pr = profile_of(lambda);
  HeckeElement e = one();
  for (int i = 1; i <= p_.a - 1; ++i)
    e = multiply(e, pi_c(*this, pr.b[i], p_.u[i]));  // u_{i+1}
  return e;
}

HeckeElement HeckeAlgebra::pi_bracket_tilde(
    const Multipartition& lambda) const {
  const Profile pr = profile_of(lambda);
  HeckeElement e = one();
  for (int i = 1; i <= p_.a - 1; ++i)
    e = multiply(e, pi_c(*this, pr.b[i], p_.u[p_.a - i - 1]));  // u_{a-i}
  return e;
}

HeckeElement HeckeAlgebra::m_element(const Multipartition& lambda) const {
  return multiply(pi_bracket(lambda), x_lambda(lambda));
}

HeckeElement HeckeAlgebra::n_element(const Multipartition& lambda) const {
  return multiply(pi_bracket_tilde(lambda), y_lambda(lambda));
}

const std::vector<HeckeMono>& HeckeAlgebra::basis() const {
  if (!cache_->basis.empty()) return cache_->basis;
  std::vector<int> alpha(p_.r, 0);
  const auto perms = all_permutations(p_.r);
  while (true) {
    for (const auto& w : perms) cache_->basis.push_back({alpha, w});
    int i = 0;
    while (i < p_.r && alpha[i] == p_.a - 1) alpha[i++] = 0;
    if (i == p_.r) break;
    ++alpha[i];
  }
  for (std::size_t i = 0; i < cache_->basis.size(); ++i)
    cache_->index.emplace(cache_->basis[i], i);
  return cache_->basis;
}

std::size_t HeckeAlgebra::basis_index(const HeckeMono& m) const {
  basis();
  auto it = cache_->index.find(m);
  if (it == cache_->index.end())
    throw std::invalid_argument("basis_index: monomial not canonical");
  return it->second;
}

Vec HeckeAlgebra::to_vec(const HeckeElement& e) const {
  Vec v(static_cast<std::size_t>(dimension()), Rat(0));
  for (const auto& [m, c] : e.terms) v[basis_index(m)] = c;
  return v;
}

const std::vector<HeckeAlgebra::CellularEntry>& HeckeAlgebra::cellular_entries(
    Flavor f) const {
  const int fi = f == Flavor::M ? 0 : 1;
  if (cache_->cell_done[fi]) return cache_->cell[fi];
  std::vector<CellularEntry> out;
  for (const auto& lambda : multipartitions_of(p_.a, p_.r)) {
    const HeckeElement ml =
        f == Flavor::M ? m_element(lambda) : n_element(lambda);
    const auto tabs = standard_tableaux(lambda);
    std::vector<Permutation> d(tabs.size());
    for (std::size_t i = 0; i < tabs.size(); ++i) d[i] = d_of(tabs[i]);
    for (std::size_t si = 0; si < tabs.size(); ++si) {
      const HeckeElement left = multiply(perm(d[si].inverse()), ml);
      for (std::size_t ti = 0; ti < tabs.size(); ++ti)
        out.push_back({lambda, static_cast<int>(si), static_cast<int>(ti),
                       multiply(left, perm(d[ti]))});
    }
  }
  cache_->cell[fi] = std::move(out);
  cache_->cell_done[fi] = true;
  return cache_->cell[fi];
}

const std::vector<HeckeAlgebra::CellularEntry>& HeckeAlgebra::cellular_basis(
    Flavor f) const {
  return cellular_entries(f);
}

const Mat& HeckeAlgebra::cellular_inverse(Flavor f) const {
  const int fi = f == Flavor::M ? 0 : 1;
  if (cache_->cell_inv[fi].rows != 0) return cache_->cell_inv[fi];
  const auto& entries = cellular_entries(f);
  const std::size_t n = static_cast<std::size_t>(dimension());
  if (entries.size() != n)
    throw std::runtime_error("cellular basis has wrong cardinality");
  Mat B(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vec col = to_vec(entries[j].element);
    for (std::size_t i = 0; i < n; ++i) B(i, j) = col[i];
  }
  auto inv = mat_inverse(B);
  if (!inv) throw std::runtime_error("cellular basis does not span");
  cache_->cell_inv[fi] = std::move(*inv);
  return cache_->cell_inv[fi];
}

Vec HeckeAlgebra::express_in_cellular(Flavor f, const HeckeElement& e) const {
  const Mat& inv = cellular_inverse(f);
  const Vec v = to_vec(e);
  Vec out(inv.rows, Rat(0));
  for (std::size_t i = 0; i < inv.rows; ++i)
    for (std::size_t j = 0; j < inv.cols; ++j)
      if (inv(i, j) != 0 && v[j] != 0) out[i] += inv(i, j) * v[j];
  return out;
}

namespace {

// Position of t^lambda (the tableau with trivial d) in standard_tableaux.
std::size_t initial_tableau_pos(const std::vector<StandardTableau>& tabs) {
  for (std::size_t i = 0; i < tabs.size(); ++i)
    if (d_of(tabs[i]).is_identity()) return i;
  throw std::logic_error("initial tableau missing");
}

}  // namespace

Mat HeckeAlgebra::cell_gram(const Multipartition& lambda, Flavor f) const {
  const auto tabs = standard_tableaux(lambda);
  const std::size_t n = tabs.size();
  const std::size_t t0 = initial_tableau_pos(tabs);
  const HeckeElement ml =
      f == Flavor::M ? m_element(lambda) : n_element(lambda);
  const auto& entries = cellular_entries(f);
  std::size_t target = entries.size();
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].lambda == lambda &&
        entries[i].s_index == static_cast<int>(t0) &&
        entries[i].t_index == static_cast<int>(t0)) {
      target = i;
      break;
    }
  if (target == entries.size()) throw std::logic_error("cell_gram: no target");

  Mat G(n, n);
  std::vector<HeckeElement> right(n);
  for (std::size_t j = 0; j < n; ++j)
    right[j] = multiply(perm(d_of(tabs[j]).inverse()), ml);
  for (std::size_t i = 0; i < n; ++i) {
    const HeckeElement left = multiply(ml, perm(d_of(tabs[i])));
    for (std::size_t j = 0; j < n; ++j) {
      const Vec coords = express_in_cellular(f, multiply(left, right[j]));
      G(i, j) = coords[target];
    }
  }
  return G;
}

Mat HeckeAlgebra::cell_action(const Multipartition& lambda, Flavor f,
                              const HeckeElement& h) const {
  const auto tabs = standard_tableaux(lambda);
  const std::size_t n = tabs.size();
  const std::size_t t0 = initial_tableau_pos(tabs);
  const HeckeElement ml =
      f == Flavor::M ? m_element(lambda) : n_element(lambda);
  const auto& entries = cellular_entries(f);
  // Coefficient extraction indices for m_{t^lambda, t_i}.
  std::vector<std::size_t> pos(n, entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].lambda == lambda &&
        entries[i].s_index == static_cast<int>(t0))
      pos[static_cast<std::size_t>(entries[i].t_index)] = i;

  Mat A(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const HeckeElement prod =
        multiply(multiply(ml, perm(d_of(tabs[j]))), h);
    const Vec coords = express_in_cellular(f, prod);
    for (std::size_t i = 0; i < n; ++i) A(i, j) = coords[pos[i]];
  }
  return A;
}

HeckeAlgebra::ModuleActions HeckeAlgebra::cell_module_actions(
    const Multipartition& lambda, Flavor f) const {
  ModuleActions out;
  out.dim = standard_tableaux(lambda).size();
  for (int i = 1; i < p_.r; ++i)
    out.s_action.push_back(cell_action(lambda, f, s(i)));
  for (int j = 1; j <= p_.r; ++j)
    out.x_action.push_back(cell_action(lambda, f, x(j)));
  return out;
}

HeckeAlgebra::ModuleActions HeckeAlgebra::specht_module(
    const Multipartition& lambda) const {
  const Multipartition lp = conjugate(lambda);
  const auto [t_init, t_final] = initial_and_final_tableaux(lambda);
  const Permutation wl = d_of(t_final);
  const HeckeElement gen =
      multiply(multiply(m_element(lambda), perm(wl)), n_element(lp));

  const std::size_t n = static_cast<std::size_t>(dimension());
  std::vector<HeckeElement> bas;
  RowSpace span(n);
  for (const auto& t : standard_tableaux(lp)) {
    HeckeElement v = multiply(gen, perm(d_of(t)));
    if (span.insert(to_vec(v))) bas.push_back(std::move(v));
  }
  // Close under the generator action in case the spanning set fell short.
  std::vector<HeckeElement> gens;
  for (int i = 1; i < p_.r; ++i) gens.push_back(s(i));
  for (int j = 1; j <= p_.r; ++j) gens.push_back(x(j));
  for (std::size_t k = 0; k < bas.size(); ++k)
    for (const auto& g : gens) {
      HeckeElement prod = multiply(bas[k], g);
      if (span.insert(to_vec(prod))) bas.push_back(std::move(prod));
    }

  const std::size_t d = bas.size();
  Mat B(n, d);
  for (std::size_t j = 0; j < d; ++j) {
    const Vec col = to_vec(bas[j]);
    for (std::size_t i = 0; i < n; ++i) B(i, j) = col[i];
  }
  ModuleActions out;
  out.dim = d;
  auto action_of = [&](const HeckeElement& g) {
    Mat A(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      auto c = solve(B, to_vec(multiply(bas[j], g)));
      if (!c) throw std::logic_error("specht_module: span not closed");
      for (std::size_t i = 0; i < d; ++i) A(i, j) = (*c)[i];
    }
    return A;
  };
  for (int i = 1; i < p_.r; ++i) out.s_action.push_back(action_of(s(i)));
  for (int j = 1; j <= p_.r; ++j) out.x_action.push_back(action_of(x(j)));
  return out;
}

}  // namespace cybra
