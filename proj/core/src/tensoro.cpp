#include "cybra/tensoro.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace cybra {

// ---------------------------------------------------------------------------
// Letters, monomials
// ---------------------------------------------------------------------------

std::string LieLetter::to_string() const {
  return "f_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

int PBWMonomial::degree() const {
  int d = 0;
  for (const auto& [l, e] : factors) d += e;
  return d;
}

std::string PBWMonomial::to_string() const {
  if (factors.empty()) return "1";
  std::string s;
  for (const auto& [l, e] : factors) {
    s += l.to_string();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

namespace {

int sgn(int x) { return x < 0 ? -1 : 1; }

Rat theta(const TensorDatum& td, int i, int j) {
  return td.eps == 1 ? Rat(1) : Rat(sgn(i) * sgn(j));
}

// Flattened letter word of a monomial (canonical order preserved).
std::vector<LieLetter> letters_of(const PBWMonomial& m) {
  std::vector<LieLetter> w;
  for (const auto& [l, e] : m.factors)
    for (int t = 0; t < e; ++t) w.push_back(l);
  return w;
}

// Canonical monomial from a non-increasing word.
PBWMonomial mono_of(const std::vector<LieLetter>& w) {
  PBWMonomial m;
  for (const LieLetter& l : w) {
    if (!m.factors.empty() && m.factors.back().first == l)
      ++m.factors.back().second;
    else
      m.factors.push_back({l, 1});
  }
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// Datum
// ---------------------------------------------------------------------------

Rat TensorDatum::deg_v(int m) const {
  if (m == 0) return Rat(a - 1) / 2;
  const int j = std::abs(m);
  int t = 0;
  for (int s = 1; s <= k; ++s)
    if (p(s - 1) < j && j <= p(s)) t = s;
  if (t == 0) throw std::invalid_argument("deg_v: index outside 1..n");
  return m > 0 ? Rat(t - 1) : Rat(a - t);
}

TensorDatum make_tensor_datum(const RootDatum& rd, const std::vector<Rat>& c,
                              int r, int D) {
  rd.validate();
  if (rd.phi == LieType::B && rd.i == 1)
    throw std::invalid_argument(
        "make_tensor_datum: type B requires i = 2 (main-theorem hypothesis)");
  TensorDatum td;
  td.rd = rd;
  td.c = c;
  td.r = r;
  td.k = rd.k();
  td.a = rd.i == 1 ? 2 * td.k : 2 * td.k - 1;
  td.N = rd.phi == LieType::B ? 2 * rd.n + 1 : 2 * rd.n;
  td.eps = rd.phi == LieType::C ? -1 : 1;
  td.u = compute_u_params(rd, c);
  td.lic = lambda_Ic(rd, c);
  td.D = D < 0 ? r * (td.a - 1) + r : D;

  for (int m = -rd.n; m <= rd.n; ++m) {
    if (m == 0 && rd.phi != LieType::B) continue;
    td.underline.push_back(m);
  }

  // Canonical basis of g (the rtvec1 list).
  for (int i = 1; i <= rd.n; ++i) td.all_basis.push_back({i, i});
  for (int i = 1; i <= rd.n; ++i)
    for (int j = i + 1; j <= rd.n; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) td.all_basis.push_back({si * i, sj * j});
  if (rd.phi == LieType::B)
    for (int i = 1; i <= rd.n; ++i) {
      td.all_basis.push_back({0, i});
      td.all_basis.push_back({0, -i});
    }
  if (rd.phi == LieType::C)
    for (int i = 1; i <= rd.n; ++i) {
      td.all_basis.push_back({-i, i});
      td.all_basis.push_back({i, -i});
    }

  // B_{I_i}: lowering vectors for Phi+ \ Phi_I (eq. bii), sorted by the
  // fixed total order (lexicographic on (i, j)).
  for (int j = 1; j <= rd.n; ++j)
    for (int l = j + 1; l <= rd.n; ++l) {
      if (!in_phi_I(rd, {PosRoot::Kind::Sum, j, l}))
        td.bbasis.push_back({-j, l});
      if (!in_phi_I(rd, {PosRoot::Kind::Diff, j, l}))
        td.bbasis.push_back({-j, -l});
    }
  if (rd.phi == LieType::B)
    for (int j = 1; j <= rd.n; ++j)
      if (!in_phi_I(rd, {PosRoot::Kind::Short, j, 0}))
        td.bbasis.push_back({0, j});
  if (rd.phi == LieType::C)
    for (int j = 1; j <= rd.n; ++j)
      if (!in_phi_I(rd, {PosRoot::Kind::Long, j, 0}))
        td.bbasis.push_back({-j, j});
  std::sort(td.bbasis.begin(), td.bbasis.end());

  // n^+ basis (posrv).
  for (int i = 1; i <= rd.n; ++i)
    for (int j = i + 1; j <= rd.n; ++j) {
      td.nplus.push_back({i, j});
      td.nplus.push_back({i, -j});
    }
  if (rd.phi == LieType::B)
    for (int i = 1; i <= rd.n; ++i) td.nplus.push_back({0, -i});
  if (rd.phi == LieType::C)
    for (int i = 1; i <= rd.n; ++i) td.nplus.push_back({i, -i});
  return td;
}

// ---------------------------------------------------------------------------
// Lie-algebra matrices
// ---------------------------------------------------------------------------

GMat f_matrix(const TensorDatum& td, LieLetter x) {
  GMat m;
  m[{x.i, x.j}] += 1;
  m[{-x.j, -x.i}] -= theta(td, x.i, x.j);
  for (auto it = m.begin(); it != m.end();)
    it = it->second == 0 ? m.erase(it) : std::next(it);
  return m;
}

GMat g_bracket(const GMat& x, const GMat& y) {
  GMat z;
  for (const auto& [px, cx] : x)
    for (const auto& [py, cy] : y) {
      if (px.second == py.first) z[{px.first, py.second}] += cx * cy;
      if (py.second == px.first) z[{py.first, px.second}] -= cx * cy;
    }
  for (auto it = z.begin(); it != z.end();)
    it = it->second == 0 ? z.erase(it) : std::next(it);
  return z;
}

std::map<LieLetter, Rat> g_decompose(const TensorDatum& td, GMat m) {
  std::map<LieLetter, Rat> out;
  for (const LieLetter& b : td.all_basis) {
    auto it = m.find({b.i, b.j});
    if (it == m.end() || it->second == 0) continue;
    const GMat fb = f_matrix(td, b);
    const Rat lead = fb.at({b.i, b.j});
    const Rat coef = it->second / lead;
    for (const auto& [pos, val] : fb) {
      m[pos] -= coef * val;
      if (m[pos] == 0) m.erase(pos);
    }
    out[b] = coef;
  }
  if (!m.empty())
    throw std::invalid_argument("g_decompose: matrix is not in g");
  return out;
}

Weight f_weight(const TensorDatum& td, LieLetter x) {
  Weight w;
  w.coords.assign(td.rd.n, Rat(0));
  if (x.i != 0) w.coords[std::abs(x.i) - 1] += sgn(x.i);
  if (x.j != 0) w.coords[std::abs(x.j) - 1] -= sgn(x.j);
  return w;
}

// ---------------------------------------------------------------------------
// TruncatedVector
// ---------------------------------------------------------------------------

void TruncatedVector::add(const PBWMonomial& m, const std::vector<int>& k,
                          const Rat& c) {
  if (c == 0) return;
  auto key = std::make_pair(m, k);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

TruncatedVector& TruncatedVector::operator+=(const TruncatedVector& o) {
  for (const auto& [key, c] : o.terms) add(key.first, key.second, c);
  return *this;
}

TruncatedVector TruncatedVector::operator+(const TruncatedVector& o) const {
  TruncatedVector v = *this;
  v += o;
  return v;
}

TruncatedVector TruncatedVector::operator-(const TruncatedVector& o) const {
  TruncatedVector v = *this;
  for (const auto& [key, c] : o.terms) v.add(key.first, key.second, -c);
  return v;
}

TruncatedVector TruncatedVector::operator*(const Rat& c) const {
  TruncatedVector v;
  if (c == 0) return v;
  for (const auto& [key, x] : terms) v.terms.emplace(key, x * c);
  return v;
}

// ---------------------------------------------------------------------------
// PBW straightening and the m_i action
// ---------------------------------------------------------------------------

namespace {

using MonoCombo = std::map<PBWMonomial, Rat>;

void combo_add(MonoCombo& m, const PBWMonomial& key, const Rat& c) {
  if (c == 0) return;
  auto it = m.find(key);
  if (it == m.end()) {
    m.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

bool in_bbasis(const TensorDatum& td, const LieLetter& l) {
  return std::binary_search(td.bbasis.begin(), td.bbasis.end(), l);
}

// Straighten an arbitrary word over B_{I_i} into canonical monomials,
// using [a, b] rewrites (the bracket of two u^- letters stays in u^-).
MonoCombo straighten(const TensorDatum& td, std::vector<LieLetter> word,
                     const Rat& coef) {
  MonoCombo out;
  std::vector<std::pair<std::vector<LieLetter>, Rat>> stack;
  stack.emplace_back(std::move(word), coef);
  while (!stack.empty()) {
    auto [w, c] = std::move(stack.back());
    stack.pop_back();
    std::size_t t = 0;
    while (t + 1 < w.size() && !(w[t] < w[t + 1])) ++t;
    if (t + 1 >= w.size()) {
      if (static_cast<int>(w.size()) > td.D)
        throw std::overflow_error(
            "straighten: PBW degree exceeds the truncation bound D");
      combo_add(out, mono_of(w), c);
      continue;
    }
    // w[t] w[t+1] = w[t+1] w[t] + [w[t], w[t+1]].
    const auto br =
        g_decompose(td, g_bracket(f_matrix(td, w[t]), f_matrix(td, w[t + 1])));
    std::swap(w[t], w[t + 1]);
    for (const auto& [l, bc] : br) {
      if (!in_bbasis(td, l))
        throw std::logic_error("straighten: bracket left u^-");
      std::vector<LieLetter> shorter;
      shorter.reserve(w.size() - 1);
      shorter.insert(shorter.end(), w.begin(), w.begin() + t);
      shorter.push_back(l);
      shorter.insert(shorter.end(), w.begin() + t + 2, w.end());
      stack.emplace_back(std::move(shorter), c * bc);
    }
    stack.emplace_back(std::move(w), c);
  }
  return out;
}

// alpha . (word m_i) for a general g-element alpha, recursively commuting
// alpha through the u^- word; base case: B-letters create, Cartan letters
// act by lambda_{I,c}, everything else kills m_i (dim F = 1).
MonoCombo act_on_m(const TensorDatum& td, const GMat& alpha,
                   const std::vector<LieLetter>& word, std::size_t from) {
  MonoCombo out;
  if (alpha.empty()) return out;
  if (from == word.size()) {
    for (const auto& [l, c] : g_decompose(td, alpha)) {
      if (in_bbasis(td, l)) {
        if (td.D < 1)
          throw std::overflow_error(
              "act_on_m: PBW degree exceeds the truncation bound D");
        PBWMonomial m;
        m.factors.push_back({l, 1});
        combo_add(out, m, c);
      } else if (l.i == l.j && l.i > 0) {
        combo_add(out, PBWMonomial{}, c * td.lic.coords[l.i - 1]);
      }
    }
    return out;
  }
  const LieLetter y = word[from];
  // alpha y rest = y (alpha rest) + [alpha, y] rest.
  const MonoCombo tail = act_on_m(td, alpha, word, from + 1);
  for (const auto& [m, c] : tail) {
    std::vector<LieLetter> w;
    w.push_back(y);
    for (const LieLetter& l : letters_of(m)) w.push_back(l);
    for (const auto& [m2, c2] : straighten(td, std::move(w), c))
      combo_add(out, m2, c2);
  }
  const MonoCombo br =
      act_on_m(td, g_bracket(alpha, f_matrix(td, y)), word, from + 1);
  for (const auto& [m, c] : br) combo_add(out, m, c);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Actions
// ---------------------------------------------------------------------------

TruncatedVector act_lie(const TensorDatum& td, const GMat& x,
                        const TruncatedVector& v) {
  TruncatedVector out;
  for (const auto& [key, c] : v.terms) {
    const auto& [mono, k] = key;
    const auto word = letters_of(mono);
    for (const auto& [m2, c2] : act_on_m(td, x, word, 0))
      out.add(m2, k, c * c2);
    for (std::size_t t = 0; t < k.size(); ++t)
      for (const auto& [pos, val] : x)
        if (pos.second == k[t]) {
          std::vector<int> k2 = k;
          k2[t] = pos.first;
          out.add(mono, k2, c * val);
        }
  }
  return out;
}

TruncatedVector act_S(const TensorDatum& td, int i, const TruncatedVector& v) {
  if (i < 1 || i >= td.r) throw std::invalid_argument("act_S: index range");
  TruncatedVector out;
  const Rat s(td.eps);  // sign permutation in type C
  for (const auto& [key, c] : v.terms) {
    std::vector<int> k = key.second;
    std::swap(k[i - 1], k[i]);
    out.add(key.first, k, c * s);
  }
  return out;
}

TruncatedVector act_E(const TensorDatum& td, int i, const TruncatedVector& v) {
  if (i < 1 || i >= td.r) throw std::invalid_argument("act_E: index range");
  TruncatedVector out;
  for (const auto& [key, c] : v.terms) {
    const std::vector<int>& k = key.second;
    const int p = k[i - 1], q = k[i];
    if (q != -p) continue;
    // (v_p, v_q) with (x, y) = eps (y, x); then re-insert sum v_t (x) v_t^*.
    const Rat form = p >= 0 ? Rat(1) : Rat(td.eps);
    const Rat scal = Rat(td.eps) * form * c;
    for (int t : td.underline) {
      std::vector<int> k2 = k;
      k2[i - 1] = t;
      k2[i] = -t;
      const Rat dual = td.eps == 1 ? Rat(1) : Rat(sgn(t));
      out.add(key.first, k2, scal * dual);
    }
  }
  return out;
}

namespace {

// First leg of Omega: alpha acts on the m_i-part and on factors 1..j-1,
// with factor j already replaced by the second-leg image.
void first_leg(const TensorDatum& td, const GMat& alpha,
               const PBWMonomial& mono, const std::vector<int>& k, int j,
               int target, const Rat& coef, TruncatedVector& out) {
  if (coef == 0 || alpha.empty()) return;
  std::vector<int> k2 = k;
  k2[j - 1] = target;
  const auto word = letters_of(mono);
  for (const auto& [m2, c2] : act_on_m(td, alpha, word, 0))
    out.add(m2, k2, coef * c2);
  for (int t = 0; t + 1 < j; ++t)
    for (const auto& [pos, val] : alpha)
      if (pos.second == k[t]) {
        std::vector<int> k3 = k2;
        k3[t] = pos.first;
        out.add(mono, k3, coef * val);
      }
}

}  // namespace

TruncatedVector act_X(const TensorDatum& td, int j, const TruncatedVector& v) {
  if (j < 1 || j > td.r) throw std::invalid_argument("act_X: index range");
  const Rat eps(td.eps);
  const Rat half = rat(1, 2);
  // X_j = eps (Omega_{cut} + (N - eps)/2), Omega = 1/2 sum f_{x,y} (x) f_{y,x}.
  TruncatedVector out = v * (eps * (Rat(td.N) - eps) * half);
  for (const auto& [key, c] : v.terms) {
    const auto& [mono, k] = key;
    const int m = k[j - 1];
    // Second leg f_{y,x} on v_m: e_{y,x} picks x = m (image v_y);
    // -theta_{y,x} e_{-x,-y} picks y = -m (image v_{-x}).
    for (int y : td.underline)
      first_leg(td, f_matrix(td, {m, y}), mono, k, j, y, c * eps * half, out);
    for (int x : td.underline)
      first_leg(td, f_matrix(td, {x, -m}), mono, k, j, -x,
                -c * eps * half * theta(td, -m, x), out);
  }
  return out;
}

TruncatedVector apply_word(const TensorDatum& td, const TruncatedVector& v,
                           const BrauerWord& w) {
  TruncatedVector cur = v;
  for (const BrauerLetter& l : w) {
    switch (l.kind) {
      case BrauerLetter::Kind::S:
        cur = act_S(td, l.index, cur);
        break;
      case BrauerLetter::Kind::E:
        cur = act_E(td, l.index, cur);
        break;
      case BrauerLetter::Kind::X:
        cur = act_X(td, l.index, cur);
        break;
    }
  }
  return cur;
}

TruncatedVector apply_perm(const TensorDatum& td, const TruncatedVector& v,
                           const Permutation& w) {
  // The algebra action of w: the product of S-generators along a reduced
  // word (carries the sign permutation's (-1)^{l(w)} in type C).
  TruncatedVector cur = v;
  for (int l : w.reduced_word()) cur = act_S(td, l, cur);
  return cur;
}

Weight vector_weight(const TensorDatum& td, const TruncatedVector& v) {
  if (v.is_zero())
    throw std::invalid_argument("vector_weight: zero vector");
  bool have = false;
  Weight wt;
  for (const auto& [key, c] : v.terms) {
    Weight w = td.lic;
    for (const auto& [l, e] : key.first.factors)
      for (int t = 0; t < e; ++t) w = w + f_weight(td, l);
    for (int m : key.second) {
      if (m > 0) w.coords[m - 1] += 1;
      if (m < 0) w.coords[-m - 1] -= 1;
    }
    if (!have) {
      wt = w;
      have = true;
    } else if (!(w == wt)) {
      throw std::invalid_argument("vector_weight: inhomogeneous vector");
    }
  }
  return wt;
}

// ---------------------------------------------------------------------------
// Vector data (Defn vt, Lemma lc1, eqs. jc / jxi)
// ---------------------------------------------------------------------------

namespace {

// Permutation of degree m extended to degree r by fixed points.
Permutation extend_perm(const Permutation& w, int r) {
  std::vector<int> img = w.img;
  for (int t = w.degree(); t < r; ++t) img.push_back(t);
  return Permutation(std::move(img));
}

// Right place action: (k . w)_{w(c)} = k_c.
std::vector<int> place_act(const std::vector<int>& k, const Permutation& w) {
  std::vector<int> out(k.size(), 0);
  for (std::size_t c = 0; c < k.size(); ++c)
    out[static_cast<std::size_t>(w.apply(static_cast<int>(c) + 1)) - 1] = k[c];
  return out;
}

}  // namespace

VectorData build_vector_data(const TensorDatum& td, int f,
                             const Multipartition& lambda,
                             const std::vector<int>& xi) {
  const int m = td.r - 2 * f;
  if (lambda.level() != td.a || lambda.size() != m)
    throw std::invalid_argument("build_vector_data: shape mismatch");
  if (!xi.empty() && static_cast<int>(xi.size()) != td.r)
    throw std::invalid_argument("build_vector_data: xi must have length r");
  const int di1 = td.rd.i == 1 ? 1 : 0;
  VectorData vd;
  // i_lambda (Defn vt).
  for (int j = 1; j <= td.a; ++j) {
    const Partition& comp = lambda.comps[j - 1];
    for (int s = 1; s <= comp.rows(); ++s)
      for (int t = 0; t < comp.part(s); ++t)
        vd.i_lambda.push_back(j <= td.k ? td.p(j - 1) + s
                                        : -td.p(2 * td.k - j + di1) + s - 1);
  }
  // l = i_lambda w_lambda.
  const auto [tinit, tfinal] = initial_and_final_tableaux(lambda);
  vd.l = place_act(vd.i_lambda, d_of(tfinal));
  // a_c via accond with [lambda] = [b_0..b_a].
  const Profile pr = profile_of(lambda);
  const auto& b = pr.b;
  for (int c = 1; c <= m; ++c) {
    int ac = -1;
    for (int j = 1; j <= td.a; ++j)
      if (b[td.a] - b[td.a - j] >= c && c > b[td.a] - b[td.a - j + 1])
        ac = td.a - j;
    if (ac < 0) throw std::logic_error("build_vector_data: accond failed");
    vd.a_vec.push_back(ac);
  }
  // j_c (eq. jc).
  for (int c = 1; c <= m; ++c) {
    const int lc = vd.l[c - 1], ac = vd.a_vec[c - 1];
    vd.j_vec.push_back(ac < td.k
                           ? lc - td.p(ac) + b[ac]
                           : 1 + lc + td.p(2 * td.k - ac - 1 + di1) + b[ac]);
  }
  // j^xi (eq. jxi).
  if (!xi.empty()) {
    vd.j_xi.assign(2 * f, 0);
    for (int s = 1; s <= f; ++s) {
      const int xrs = xi[td.r - 2 * f + 2 * s - 1 - 1];
      vd.j_xi[2 * s - 1] = td.r - 2 * f + s;  // l = 0
      vd.j_xi[2 * s - 2] =
          xrs <= td.k - 1
              ? -td.p(xrs) - td.r + 2 * f - s
              : td.r - f + s + td.p(2 * td.k - 1 - (1 - di1) - xrs);
    }
  }
  return vd;
}

// ---------------------------------------------------------------------------
// Y-operators (eqs. ylc / AB / yxis)
// ---------------------------------------------------------------------------

std::vector<LieLetter> YOperators::word() const {
  std::vector<LieLetter> w;
  for (const auto& v : y_l) w.insert(w.end(), v.begin(), v.end());
  for (const auto& v : y_xi) w.insert(w.end(), v.begin(), v.end());
  return w;
}

YOperators build_y_operators(const TensorDatum& td, int f,
                             const Multipartition& lambda,
                             const std::vector<int>& xi) {
  const VectorData vd = build_vector_data(td, f, lambda, xi);
  const int m = td.r - 2 * f;
  const int di1 = td.rd.i == 1 ? 1 : 0;
  const int di2 = 1 - di1;
  YOperators ops;
  for (int c = 1; c <= m; ++c) {
    const int lc = vd.l[c - 1], ac = vd.a_vec[c - 1], jc = vd.j_vec[c - 1];
    std::vector<LieLetter> w;
    if (ac == 0) {
      // y = 1
    } else if (ac < td.k) {
      // Partial sums sum_{t=1}^{s} q_{a_c - t + 1}.
      auto qs = [&](int s) {
        int acc = 0;
        for (int t = 1; t <= s; ++t) acc += td.q(ac - t + 1);
        return acc;
      };
      w.push_back({lc - qs(ac - 1), jc});
      for (int s = ac - 1; s >= 1; --s) w.push_back({lc - qs(s - 1), lc - qs(s)});
    } else {
      const int zc = 1 + lc + td.p(2 * td.k - (ac + 1) + di1);
      // Partial sums sum_{s=0}^{t} q_{2k - a_c + delta_{i,1} + s}.  The
      // second index of B_c uses the same subscript family; the printed
      // "-delta_{i,1}" there breaks the telescoping chain for a_c >= k+2
      // and is treated as a typo.
      auto qsum = [&](int t) {
        int acc = 0;
        for (int s = 0; s <= t; ++s) acc += td.q(2 * td.k - ac + di1 + s);
        return acc;
      };
      w.push_back({-jc, -(zc + td.p(1))});
      for (int s = td.k - 2; s >= 1; --s)
        w.push_back({-(zc + td.p(td.k - s - 1)), -(zc + td.p(td.k - s))});
      w.push_back({-(zc + td.p(td.k - 1)), -lc + qsum(ac - td.k - 1)});  // A_c
      for (int t = ac - td.k - 1; t >= 0; --t)                           // B_c
        w.push_back({-lc + qsum(t), -lc + qsum(t - 1)});
    }
    ops.y_l.push_back(std::move(w));
  }
  for (int s = 1; s <= f; ++s) {
    const int xrs = xi.empty() ? 0 : xi[td.r - 2 * f + 2 * s - 1 - 1];
    const int z = td.r - f + s;
    std::vector<LieLetter> w;
    if (xrs == 0) {
      // y = 1
    } else if (xrs <= td.k - 1) {
      for (int t = xrs; t >= 1; --t)
        w.push_back({td.p(t) + z - f, td.p(t - 1) + z - f});
    } else {
      for (int t = xrs - td.k; t >= 1; --t)  // A
        w.push_back(
            {td.p(td.k - t - di2) + z, td.p(td.k - t - 1 - di2) + z});
      w.push_back({-td.p(td.k - 1) - z + f, td.p(td.k - 1 - di2) + z});
      for (int t = td.k - 1; t >= 1; --t)  // B
        w.push_back({td.p(t) + z - f, td.p(t - 1) + z - f});
    }
    ops.y_xi.push_back(std::move(w));
  }
  return ops;
}

// ---------------------------------------------------------------------------
// Singular vectors
// ---------------------------------------------------------------------------

TruncatedVector v_lambda(const TensorDatum& td, int f,
                         const Multipartition& lambda) {
  const VectorData vd = build_vector_data(td, f, lambda, {});
  std::vector<int> k = vd.i_lambda;
  for (int s = 0; s < f; ++s) {
    k.push_back(1);
    k.push_back(-1);
  }
  TruncatedVector v;
  v.add(PBWMonomial{}, k, Rat(1));
  return v;
}

TruncatedVector singular_vector(const TensorDatum& td, int f,
                                const Multipartition& lambda,
                                const DeltaIndex& idx) {
  TruncatedVector v = v_lambda(td, f, lambda);
  // E^f = E_{r-1} E_{r-3} ... E_{r-2f+1}.
  for (int j = 1; j <= f; ++j) v = act_E(td, td.r - 2 * j + 1, v);
  // w_lambda.
  const auto [tinit, tfinal] = initial_and_final_tableaux(lambda);
  v = apply_perm(td, v, extend_perm(d_of(tfinal), td.r));
  // n_{lambda'} = pi-tilde_{[lambda']} y_{lambda'}.
  const Multipartition lp = conjugate(lambda);
  const Profile pr = profile_of(lp);
  for (int i = 1; i <= td.a - 1; ++i)
    for (int t = 1; t <= pr.b[i]; ++t)
      v = act_X(td, t, v) - v * td.u[td.a - i - 1];  // (X_t - u_{a-i})
  TruncatedVector sum;
  for (const Permutation& w : young_subgroup(lp, td.r))
    sum += apply_perm(td, v, w) * Rat(w.sign());
  v = std::move(sum);
  // d(t) X^xi d.
  v = apply_perm(td, v, extend_perm(d_of(idx.t), td.r));
  for (int j = 1; j <= td.r; ++j)
    for (int t = 0; t < idx.xi[j - 1]; ++t) v = act_X(td, j, v);
  v = apply_perm(td, v, idx.d);
  return v;
}

// ---------------------------------------------------------------------------
// Weight spaces and verification
// ---------------------------------------------------------------------------

Vec WeightSpace::coords(const TruncatedVector& v) const {
  Vec out(basis.size(), Rat(0));
  for (const auto& [key, c] : v.terms) {
    auto it = index.find(key);
    if (it == index.end())
      throw std::invalid_argument("WeightSpace: term outside weight space");
    out[it->second] = c;
  }
  return out;
}

namespace {

// All canonical PBW monomials of degree <= D with letter-weight sum equal
// to target (DFS over the ordered basis).
void enum_monos(const TensorDatum& td, std::size_t from,
                std::vector<std::pair<LieLetter, int>>& cur, int deg_left,
                const std::vector<Rat>& target, std::vector<Rat>& acc,
                std::vector<PBWMonomial>& out) {
  if (from == td.bbasis.size()) {
    if (acc == target) {
      PBWMonomial m;
      m.factors.assign(cur.rbegin(), cur.rend());  // decreasing order
      out.push_back(std::move(m));
    }
    return;
  }
  const LieLetter l = td.bbasis[from];
  const Weight w = f_weight(td, l);
  // Exponent 0 first, then 1..deg_left.
  enum_monos(td, from + 1, cur, deg_left, target, acc, out);
  int added = 0;
  for (int e = 1; e <= deg_left; ++e) {
    for (int t = 0; t < td.rd.n; ++t) acc[t] += w.coords[t];
    ++added;
    cur.push_back({l, e});
    enum_monos(td, from + 1, cur, deg_left - e, target, acc, out);
    cur.pop_back();
  }
  while (added-- > 0)
    for (int t = 0; t < td.rd.n; ++t) acc[t] -= w.coords[t];
}

}  // namespace

WeightSpace weight_space(const TensorDatum& td, const Weight& mu) {
  WeightSpace ws;
  ws.mu = mu;
  // Enumerate tensor indices k, then monomials of weight mu - lic - wt(v_k).
  std::vector<int> k(td.r, td.underline.front());
  const int nn = static_cast<int>(td.underline.size());
  std::vector<int> pos(td.r, 0);
  while (true) {
    for (int t = 0; t < td.r; ++t) k[t] = td.underline[pos[t]];
    std::vector<Rat> target(td.rd.n, Rat(0));
    for (int t = 0; t < td.rd.n; ++t)
      target[t] = mu.coords[t] - td.lic.coords[t];
    for (int m : k) {
      if (m > 0) target[m - 1] -= 1;
      if (m < 0) target[-m - 1] += 1;
    }
    std::vector<std::pair<LieLetter, int>> cur;
    std::vector<Rat> acc(td.rd.n, Rat(0));
    std::vector<PBWMonomial> monos;
    enum_monos(td, 0, cur, td.D, target, acc, monos);
    for (PBWMonomial& m : monos) ws.basis.emplace_back(std::move(m), k);
    int t = 0;
    while (t < td.r && pos[t] == nn - 1) pos[t++] = 0;
    if (t == td.r) break;
    ++pos[t];
  }
  std::sort(ws.basis.begin(), ws.basis.end());
  for (std::size_t i = 0; i < ws.basis.size(); ++i)
    ws.index.emplace(ws.basis[i], i);
  return ws;
}

namespace {

// v * b for a Brauer element in canonical-monomial coordinates.
TruncatedVector apply_element(const TensorDatum& td, const TruncatedVector& v,
                              const BrauerElement& b, int r) {
  TruncatedVector out;
  for (const auto& [mono, c] : b.terms)
    out += apply_word(td, v, mono.word(r)) * c;
  return out;
}

// Basis of the two-sided ideal <E^{f+1}> as elements (empty when f+1 arcs
// do not fit into r strands).
std::vector<BrauerElement> ideal_elements(const TensorDatum& td,
                                          const BrauerAlgebra& B, int f) {
  std::vector<BrauerElement> els;
  if (2 * (f + 1) > td.r) return els;  // <E^{f+1}> = 0
  const RowSpace ideal = B.two_sided_ideal({B.module_word(B.ef_word(f + 1))});
  els.reserve(ideal.rows().size());
  for (const Vec& row : ideal.rows()) els.push_back(B.from_module(row));
  return els;
}

// The weight-mu slice of M<E^{f+1}>: images of the weight-space basis
// under the two-sided ideal generated by E^{f+1}.
RowSpace ideal_image(const TensorDatum& td,
                     const std::vector<BrauerElement>& els,
                     const WeightSpace& ws) {
  RowSpace rs(ws.dim());
  for (const auto& pair : ws.basis) {
    TruncatedVector y;
    y.add(pair.first, pair.second, Rat(1));
    for (const BrauerElement& b : els)
      rs.insert(ws.coords(apply_element(td, y, b, td.r)));
  }
  return rs;
}

}  // namespace

SingularReport verify_singular(const TensorDatum& td, const BrauerAlgebra& B,
                               int f, const Multipartition& lambda) {
  SingularReport rep;
  rep.f = f;
  rep.lambda = lambda;
  const Multipartition lp = conjugate(lambda);
  const auto delta = enumerate_delta(f, lp, td.r, td.a);
  rep.expected = delta.size();
  rep.weights_ok = rep.annihilated = rep.independent = true;

  const Weight hat = vector_weight(td, v_lambda(td, f, lambda));
  const WeightSpace ws = weight_space(td, hat);
  const std::vector<BrauerElement> els = ideal_elements(td, B, f);
  RowSpace span = ideal_image(td, els, ws);

  // Cache of (weight space, ideal image) per n^+ weight.
  std::map<std::string, std::pair<WeightSpace, RowSpace>> up;

  for (const DeltaIndex& idx : delta) {
    const TruncatedVector v = singular_vector(td, f, lambda, idx);
    if (v.is_zero() || !(vector_weight(td, v) == hat)) {
      rep.weights_ok = false;
      if (rep.witness.empty()) rep.witness = "weight mismatch";
      continue;
    }
    if (span.insert(ws.coords(v))) {
      ++rep.count;
    } else {
      rep.independent = false;
      if (rep.witness.empty())
        rep.witness = "dependent vector modulo the ideal image";
    }
    for (const LieLetter& x : td.nplus) {
      const TruncatedVector xv = act_lie(td, f_matrix(td, x), v);
      if (xv.is_zero()) continue;
      const Weight mu2 = hat + f_weight(td, x);
      const std::string key = mu2.to_string();
      auto it = up.find(key);
      if (it == up.end()) {
        WeightSpace w2 = weight_space(td, mu2);
        RowSpace r2 = ideal_image(td, els, w2);
        it = up.emplace(key, std::make_pair(std::move(w2), std::move(r2)))
                 .first;
      }
      if (!it->second.second.contains(it->second.first.coords(xv))) {
        rep.annihilated = false;
        if (rep.witness.empty())
          rep.witness = "not annihilated by " + x.to_string();
      }
    }
  }
  return rep;
}

std::size_t operator_rank(const TensorDatum& td, const BrauerAlgebra& B) {
  // The map b -> (action of b on the generators m_i (x) v_k); injectivity
  // on generators implies injectivity on M (the operators commute with
  // U(g), which generates M from the generators).
  std::vector<std::vector<int>> gens;
  const int nn = static_cast<int>(td.underline.size());
  std::vector<int> pos(td.r, 0);
  while (true) {
    std::vector<int> k(td.r);
    for (int t = 0; t < td.r; ++t) k[t] = td.underline[pos[t]];
    gens.push_back(std::move(k));
    int t = 0;
    while (t < td.r && pos[t] == nn - 1) pos[t++] = 0;
    if (t == td.r) break;
    ++pos[t];
  }
  std::map<std::tuple<std::size_t, PBWMonomial, std::vector<int>>, std::size_t>
      dict;
  std::vector<std::map<std::size_t, Rat>> rows;
  for (const BrauerMono& bm : B.monomials()) {
    std::map<std::size_t, Rat> row;
    const BrauerWord w = bm.word(td.r);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      TruncatedVector v;
      v.add(PBWMonomial{}, gens[g], Rat(1));
      for (const auto& [key, c] : apply_word(td, v, w).terms) {
        auto t = std::make_tuple(g, key.first, key.second);
        auto it = dict.find(t);
        if (it == dict.end())
          it = dict.emplace(std::move(t), dict.size()).first;
        row[it->second] += c;
      }
    }
    rows.push_back(std::move(row));
  }
  RowSpace rs(dict.size());
  for (const auto& row : rows) {
    Vec v(dict.size(), Rat(0));
    for (const auto& [i, c] : row) v[i] = c;
    rs.insert(std::move(v));
  }
  return rs.dim();
}

}  // namespace cybra
