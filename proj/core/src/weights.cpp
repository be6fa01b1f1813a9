#include "cybra/weights.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace cybra {

// ---------------------------------------------------------------------------
// Weight
// ---------------------------------------------------------------------------

Weight Weight::operator+(const Weight& o) const {
  if (coords.size() != o.coords.size())
    throw std::invalid_argument("Weight: rank mismatch");
  Weight w = *this;
  for (std::size_t j = 0; j < coords.size(); ++j) w.coords[j] += o.coords[j];
  return w;
}

Weight Weight::operator-(const Weight& o) const {
  if (coords.size() != o.coords.size())
    throw std::invalid_argument("Weight: rank mismatch");
  Weight w = *this;
  for (std::size_t j = 0; j < coords.size(); ++j) w.coords[j] -= o.coords[j];
  return w;
}

std::string Weight::to_string() const {
  std::string s = "(";
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (j) s += ",";
    s += rat_to_string(coords[j]);
  }
  return s + ")";
}

bool weight_less(const Weight& x, const Weight& y) {
  return std::lexicographical_compare(x.coords.begin(), x.coords.end(),
                                      y.coords.begin(), y.coords.end());
}

namespace {
struct WeightLess {
  bool operator()(const Weight& x, const Weight& y) const {
    return weight_less(x, y);
  }
};
using WeightSet = std::set<Weight, WeightLess>;
}  // namespace

// ---------------------------------------------------------------------------
// RootDatum
// ---------------------------------------------------------------------------

std::vector<int> RootDatum::removed_simples() const {
  std::vector<int> out(p.begin(), p.end());
  if (i == 2) out.pop_back();  // alpha_n = alpha_{p_k} returns to I
  return out;
}

std::vector<std::pair<int, int>> RootDatum::blocks() const {
  std::vector<std::pair<int, int>> out;
  int lo = 1;
  for (int cutpt : removed_simples()) {
    out.emplace_back(lo, cutpt);
    lo = cutpt + 1;
  }
  if (lo <= n) out.emplace_back(lo, n);
  return out;
}

void RootDatum::validate() const {
  if (n < 1 || (phi == LieType::D && n < 2))
    throw std::invalid_argument("RootDatum: rank too small");
  if (i != 1 && i != 2) throw std::invalid_argument("RootDatum: i must be 1 or 2");
  if (p.empty() || p.back() != n)
    throw std::invalid_argument("RootDatum: cut points must end at n");
  int prev = 0;
  for (int q : p) {
    if (q <= prev) throw std::invalid_argument("RootDatum: cuts not increasing");
    prev = q;
  }
  if (phi == LieType::D && i == 2) {
    const auto rem = removed_simples();
    if (!rem.empty() && rem.back() == n - 1)
      throw std::invalid_argument(
          "RootDatum: type D keeps the convention p_k != n-1");
  }
}

// ---------------------------------------------------------------------------
// Roots, pairings, reflections
// ---------------------------------------------------------------------------

std::vector<PosRoot> positive_roots(const RootDatum& rd) {
  std::vector<PosRoot> out;
  for (int a = 1; a <= rd.n; ++a)
    for (int b = a + 1; b <= rd.n; ++b) {
      out.push_back({PosRoot::Kind::Diff, a, b});
      out.push_back({PosRoot::Kind::Sum, a, b});
    }
  for (int a = 1; a <= rd.n; ++a) {
    if (rd.phi == LieType::B) out.push_back({PosRoot::Kind::Short, a, 0});
    if (rd.phi == LieType::C) out.push_back({PosRoot::Kind::Long, a, 0});
  }
  return out;
}

namespace {

// Index of the Levi block containing position j (0-based block index).
int block_of(const std::vector<std::pair<int, int>>& blocks, int j) {
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (blocks[b].first <= j && j <= blocks[b].second)
      return static_cast<int>(b);
  throw std::logic_error("block_of: index outside all blocks");
}

}  // namespace

bool in_phi_I(const RootDatum& rd, const PosRoot& beta) {
  const auto bl = rd.blocks();
  const int last = static_cast<int>(bl.size()) - 1;
  switch (beta.kind) {
    case PosRoot::Kind::Diff:
      return block_of(bl, beta.a) == block_of(bl, beta.b);
    case PosRoot::Kind::Sum:
      return rd.alpha_n_in_I() && block_of(bl, beta.a) == last &&
             block_of(bl, beta.b) == last;
    case PosRoot::Kind::Short:
    case PosRoot::Kind::Long:
      return rd.alpha_n_in_I() && block_of(bl, beta.a) == last;
  }
  return false;
}

Rat pairing(const Weight& w, const PosRoot& beta) {
  switch (beta.kind) {
    case PosRoot::Kind::Diff:
      return w.coords[beta.a - 1] - w.coords[beta.b - 1];
    case PosRoot::Kind::Sum:
      return w.coords[beta.a - 1] + w.coords[beta.b - 1];
    case PosRoot::Kind::Short:
      return 2 * w.coords[beta.a - 1];
    case PosRoot::Kind::Long:
      return w.coords[beta.a - 1];
  }
  return Rat(0);
}

Weight reflect(const Weight& w, const PosRoot& beta) {
  Weight v = w;
  Rat& x = v.coords[beta.a - 1];
  switch (beta.kind) {
    case PosRoot::Kind::Diff:
      std::swap(x, v.coords[beta.b - 1]);
      break;
    case PosRoot::Kind::Sum: {
      Rat& y = v.coords[beta.b - 1];
      const Rat nx = -y, ny = -x;
      x = nx;
      y = ny;
      break;
    }
    case PosRoot::Kind::Short:
    case PosRoot::Kind::Long:
      x = -x;
      break;
  }
  return v;
}

Weight dot_reflect(const RootDatum& rd, const Weight& w, const PosRoot& beta) {
  const Weight r = rho(rd);
  return reflect(w + r, beta) - r;
}

Weight rho(const RootDatum& rd) {
  Weight w;
  w.coords.resize(rd.n);
  for (int j = 1; j <= rd.n; ++j) {
    switch (rd.phi) {
      case LieType::B:
        w.coords[j - 1] = Rat(2 * (rd.n - j) + 1, 2);
        break;
      case LieType::C:
        w.coords[j - 1] = Rat(rd.n - j + 1);
        break;
      case LieType::D:
        w.coords[j - 1] = Rat(rd.n - j);
        break;
    }
  }
  return w;
}

bool is_p_dominant(const RootDatum& rd, const Weight& w) {
  if (static_cast<int>(w.rank()) != rd.n)
    throw std::invalid_argument("is_p_dominant: rank mismatch");
  const auto bl = rd.blocks();
  for (std::size_t b = 0; b < bl.size(); ++b) {
    for (int j = bl[b].first; j < bl[b].second; ++j) {
      const Rat d = w.coords[j - 1] - w.coords[j];
      if (!is_integer(d) || d < 0) return false;
    }
  }
  if (rd.alpha_n_in_I()) {
    Rat d;
    switch (rd.phi) {
      case LieType::B:
        d = 2 * w.coords[rd.n - 1];
        break;
      case LieType::C:
        d = w.coords[rd.n - 1];
        break;
      case LieType::D:
        d = w.coords[rd.n - 2] + w.coords[rd.n - 1];
        break;
    }
    if (!is_integer(d) || d < 0) return false;
  }
  return true;
}

bool dominance_ge(const RootDatum& rd, const Weight& mu, const Weight& nu) {
  const int n = rd.n;
  Weight d = mu - nu;
  // Partial sums s_j of the difference.
  std::vector<Rat> s(n);
  Rat acc = 0;
  for (int j = 0; j < n; ++j) {
    acc += d.coords[j];
    s[j] = acc;
  }
  // Solve d = sum m_i alpha_i and require every m_i to be in N.
  std::vector<Rat> m(n);
  switch (rd.phi) {
    case LieType::B:
      for (int j = 0; j < n; ++j) m[j] = s[j];
      break;
    case LieType::C:
      for (int j = 0; j + 1 < n; ++j) m[j] = s[j];
      m[n - 1] = s[n - 1] / 2;
      break;
    case LieType::D:
      for (int j = 0; j + 2 < n; ++j) m[j] = s[j];
      m[n - 1] = s[n - 1] / 2;
      m[n - 2] = s[n - 2] - m[n - 1];
      break;
  }
  for (const Rat& x : m)
    if (!is_integer(x) || x < 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// lambda_{I,c} and the u parameters
// ---------------------------------------------------------------------------

namespace {

void check_c(const RootDatum& rd, const std::vector<Rat>& c) {
  if (static_cast<int>(c.size()) != rd.k())
    throw std::invalid_argument("c must have one entry per cut point");
  if (rd.i == 2 && c.back() != 0)
    throw std::invalid_argument("c_k must be 0 when i = 2");
}

}  // namespace

Weight lambda_Ic(const RootDatum& rd, const std::vector<Rat>& c) {
  rd.validate();
  check_c(rd, c);
  Weight w;
  w.coords.assign(rd.n, Rat(0));
  for (int j = 1; j <= rd.k(); ++j)
    for (int t = rd.cut(j - 1) + 1; t <= rd.cut(j); ++t)
      w.coords[t - 1] = c[j - 1];
  return w;
}

std::vector<Rat> compute_u_params(const RootDatum& rd,
                                  const std::vector<Rat>& c) {
  rd.validate();
  check_c(rd, c);
  if (rd.phi == LieType::B && rd.i == 1)
    throw std::invalid_argument(
        "compute_u_params: i = 1 is not supported in type B");
  const int k = rd.k();
  const Rat n = rd.n;
  std::vector<Rat> bar;
  if (rd.phi == LieType::B) {
    // bar_u_1..bar_u_{2k+1}
    bar.resize(2 * k + 2);  // 1-based
    for (int j = 1; j <= k; ++j) bar[j] = c[j - 1] - rd.cut(j - 1) + n;
    bar[k + 1] = 0;
    for (int j = k + 2; j <= 2 * k + 1; ++j)
      bar[j] = -c[2 * k - j + 2 - 1] + rd.cut(2 * k - j + 2) - n;
  } else {
    const Rat eps = rd.phi == LieType::C ? -1 : 1;
    bar.resize(2 * k + 1);  // 1-based, bar_u_1..bar_u_{2k}
    for (int j = 1; j <= k; ++j)
      bar[j] = eps * (c[j - 1] - rd.cut(j - 1) + n - eps / 2);
    for (int j = k + 1; j <= 2 * k; ++j)
      bar[j] = eps * (-c[2 * k - j + 1 - 1] + rd.cut(2 * k - j + 1) - n + eps / 2);
  }
  std::vector<Rat> u;
  if (rd.i == 1) {
    for (int j = 1; j <= 2 * k; ++j) u.push_back(bar[j]);
  } else {
    const int shift = 1 + (rd.phi == LieType::B ? 1 : 0);
    for (int j = 1; j <= k; ++j) u.push_back(bar[j]);
    for (int j = k + 1; j <= 2 * k - 1; ++j) u.push_back(bar[j + shift]);
  }
  return u;
}

// ---------------------------------------------------------------------------
// W_I canonicalization
// ---------------------------------------------------------------------------

namespace {

// Sort values descending in place; returns the sign of the sorting
// permutation.  In strict mode, throws on duplicates (nontrivial stabilizer).
int sort_desc_signed(std::vector<Rat>& v, bool strict) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && v[j] > v[j - 1]; --j) {
      std::swap(v[j], v[j - 1]);
      sign = -sign;
    }
  if (strict)
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i] == v[i - 1])
        throw std::domain_error("w_I_canonicalize: non-regular input");
  return sign;
}

std::pair<Weight, int> dominant_rep(const RootDatum& rd, const Weight& v,
                                    bool strict) {
  if (static_cast<int>(v.rank()) != rd.n)
    throw std::invalid_argument("w_I_canonicalize: rank mismatch");
  Weight out = v;
  int det = 1;
  const auto bl = rd.blocks();
  for (std::size_t b = 0; b < bl.size(); ++b) {
    const bool sign_block = rd.alpha_n_in_I() && b + 1 == bl.size();
    std::vector<Rat> vals(out.coords.begin() + (bl[b].first - 1),
                          out.coords.begin() + bl[b].second);
    if (sign_block) {
      if (rd.phi == LieType::B || rd.phi == LieType::C) {
        for (Rat& x : vals) {
          if (strict && x == 0)
            throw std::domain_error("w_I_canonicalize: non-regular input");
          if (x < 0) {
            x = -x;
            det = -det;
          }
        }
      } else {
        // Type D: even numbers of sign changes only; det from flips is +1.
        int flips = 0;
        std::size_t minpos = 0;
        for (std::size_t t = 0; t < vals.size(); ++t) {
          if (vals[t] < 0) {
            vals[t] = -vals[t];
            ++flips;
          }
          if (abs(vals[t]) < abs(vals[minpos])) minpos = t;
        }
        if (flips % 2 == 1 && vals[minpos] != 0) vals[minpos] = -vals[minpos];
        if (strict) {
          // Regularity: distinct absolute values, at most one zero.
          std::vector<Rat> av;
          for (const Rat& x : vals) av.push_back(abs(x));
          std::sort(av.begin(), av.end());
          for (std::size_t t = 1; t < av.size(); ++t)
            if (av[t] == av[t - 1])
              throw std::domain_error("w_I_canonicalize: non-regular input");
        }
      }
    }
    det *= sort_desc_signed(vals, strict);
    std::copy(vals.begin(), vals.end(), out.coords.begin() + (bl[b].first - 1));
  }
  return {out, det};
}

}  // namespace

std::pair<Weight, int> w_I_canonicalize(const RootDatum& rd, const Weight& v) {
  return dominant_rep(rd, v, true);
}

Weight w_I_dominant(const RootDatum& rd, const Weight& v) {
  return dominant_rep(rd, v, false).first;
}

// ---------------------------------------------------------------------------
// hat_lambda and unhat
// ---------------------------------------------------------------------------

namespace {

int level_a(const RootDatum& rd) { return rd.i == 1 ? 2 * rd.k() : 2 * rd.k() - 1; }

void check_keyassu(const RootDatum& rd, int r) {
  for (int t = 1; t <= rd.k(); ++t)
    if (rd.cut(t) - rd.cut(t - 1) < 2 * r)
      throw std::invalid_argument("block sizes must satisfy p_t - p_{t-1} >= 2r");
}

// For component index j > k, the epsilon-index anchor p_{2k - j + [i=1]}.
int negative_anchor(const RootDatum& rd, int j) {
  const int t = 2 * rd.k() - j + (rd.i == 1 ? 1 : 0);
  return rd.cut(t);
}

}  // namespace

Weight hat_lambda(const RootDatum& rd, const std::vector<Rat>& c, int f,
                  const Multipartition& lambda, int r) {
  rd.validate();
  check_c(rd, c);
  if (rd.phi == LieType::B && rd.i == 1)
    throw std::invalid_argument("hat_lambda: i = 1 is not supported in type B");
  check_keyassu(rd, r);
  const int a = level_a(rd);
  if (lambda.level() != a)
    throw std::invalid_argument("hat_lambda: level(lambda) != a");
  if (f < 0 || 2 * f > r || lambda.size() != r - 2 * f)
    throw std::invalid_argument("hat_lambda: |lambda| != r - 2f");
  Weight w = lambda_Ic(rd, c);
  for (int j = 1; j <= rd.k(); ++j) {
    const Partition& part = lambda.comps[j - 1];
    for (int l = 1; l <= part.rows(); ++l)
      w.coords[rd.cut(j - 1) + l - 1] += part.part(l);
  }
  for (int j = rd.k() + 1; j <= a; ++j) {
    const Partition& part = lambda.comps[j - 1];
    const int anchor = negative_anchor(rd, j);
    for (int l = 1; l <= part.rows(); ++l)
      w.coords[anchor - l + 1 - 1] -= part.part(l);
  }
  return w;
}

std::pair<int, Multipartition> unhat(const RootDatum& rd,
                                     const std::vector<Rat>& c,
                                     const Weight& mu, int r) {
  rd.validate();
  check_c(rd, c);
  if (rd.phi == LieType::B && rd.i == 1)
    throw std::invalid_argument("unhat: i = 1 is not supported in type B");
  check_keyassu(rd, r);
  const int a = level_a(rd);
  const int k = rd.k();
  const Weight d = mu - lambda_Ic(rd, c);
  for (const Rat& x : d.coords)
    if (!is_integer(x)) throw std::invalid_argument("unhat: not in the image");
  std::vector<Partition> comps(a);
  auto bad = [] { throw std::invalid_argument("unhat: not in the image"); };
  for (int t = 1; t <= k; ++t) {
    const int lo = rd.cut(t - 1) + 1, hi = rd.cut(t);
    // Positive prefix -> component t.
    std::vector<int> pos;
    int j = lo;
    for (; j <= hi && d.coords[j - 1] > 0; ++j)
      pos.push_back(static_cast<int>(numerator(d.coords[j - 1])));
    // Negative suffix (read upward from the block end).
    std::vector<int> neg;
    int e = hi;
    for (; e >= j && d.coords[e - 1] < 0; --e)
      neg.push_back(static_cast<int>(-numerator(d.coords[e - 1])));
    for (int m = j; m <= e; ++m)
      if (d.coords[m - 1] != 0) bad();
    for (std::size_t m = 1; m < pos.size(); ++m)
      if (pos[m] > pos[m - 1]) bad();
    for (std::size_t m = 1; m < neg.size(); ++m)
      if (neg[m] > neg[m - 1]) bad();
    comps[t - 1] = Partition(pos);
    if (!neg.empty()) {
      // The component whose negative anchor is p_t.
      const int jneg = 2 * k - t + (rd.i == 1 ? 1 : 0);
      if (jneg <= k || jneg > a) bad();
      comps[jneg - 1] = Partition(neg);
    }
  }
  Multipartition lambda{std::move(comps)};
  const int total = lambda.size();
  if (total > r || (r - total) % 2 != 0)
    throw std::invalid_argument("unhat: not in the image for this r");
  return {(r - total) / 2, std::move(lambda)};
}

// ---------------------------------------------------------------------------
// Tensor steps and K_r
// ---------------------------------------------------------------------------

std::vector<Weight> tensor_step(const RootDatum& rd, const Weight& mu) {
  if (!is_p_dominant(rd, mu))
    throw std::invalid_argument("tensor_step: mu is not p-dominant");
  WeightSet out;
  for (int j = 0; j < rd.n; ++j)
    for (int h : {1, -1}) {
      Weight nu = mu;
      nu.coords[j] += h;
      if (is_p_dominant(rd, nu)) out.insert(std::move(nu));
    }
  if (rd.phi == LieType::B &&
      (!rd.alpha_n_in_I() || mu.coords[rd.n - 1] != 0))
    out.insert(mu);
  return {out.begin(), out.end()};
}

std::vector<Weight> K_r_bfs(const RootDatum& rd, int r) {
  rd.validate();
  if (r < 0) throw std::invalid_argument("K_r_bfs: r < 0");
  WeightSet cur;
  Weight zero;
  zero.coords.assign(rd.n, Rat(0));
  cur.insert(zero);
  for (int step = 0; step < r; ++step) {
    WeightSet next;
    for (const Weight& mu : cur)
      for (Weight& nu : tensor_step(rd, mu)) next.insert(std::move(nu));
    cur = std::move(next);
  }
  return {cur.begin(), cur.end()};
}

std::vector<Weight> K_r_closed(const RootDatum& rd, int r) {
  rd.validate();
  if (r < 0) throw std::invalid_argument("K_r_closed: r < 0");
  const auto rem = rd.removed_simples();
  const int last_cut = rem.empty() ? 0 : rem.back();
  const int q = rd.n - last_cut;
  WeightSet out;
  // Enumerate all integer vectors with sum |a_i| <= r.
  std::vector<long long> a(rd.n, 0);
  auto member = [&](long long norm, long long sum) -> bool {
    Weight w;
    w.coords.reserve(rd.n);
    for (long long x : a) w.coords.emplace_back(x);
    if (!is_p_dominant(rd, w)) return false;
    const bool parity_r = ((sum % 2 + 2) % 2) == ((r % 2 + 2) % 2);
    if (rd.phi == LieType::C || rd.phi == LieType::D) return parity_r;
    if (!rd.alpha_n_in_I()) return true;  // type B, Y_r
    if (parity_r) return true;            // Y'_r
    // Exceptional strata Y'_{r-2j-1, j}, 0 <= j <= q.
    for (int j = 0; j <= q; ++j) {
      const int s = r - 2 * j - 1;
      if (s < 0) continue;
      if (norm > s) continue;
      // sum == s (mod 2) is automatic: s and r have opposite parity.
      if (j < q && a[rd.n - j - 1] == 0) continue;
      return true;
    }
    return false;
  };
  // Depth-first enumeration.
  std::function<void(int, int)> rec = [&](int pos, int budget) {
    if (pos == rd.n) {
      long long norm = 0, sum = 0;
      for (long long x : a) {
        norm += x < 0 ? -x : x;
        sum += x;
      }
      if (member(norm, sum)) {
        Weight w;
        for (long long x : a) w.coords.emplace_back(x);
        out.insert(std::move(w));
      }
      return;
    }
    for (int v = -budget; v <= budget; ++v) {
      a[pos] = v;
      rec(pos + 1, budget - (v < 0 ? -v : v));
    }
    a[pos] = 0;
  };
  rec(0, r);
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// Jantzen coefficients, linkage, saturation
// ---------------------------------------------------------------------------

long long jantzen_coefficient(const RootDatum& rd, const Weight& mu,
                              const Weight& xi) {
  if (!is_p_dominant(rd, mu) || !is_p_dominant(rd, xi))
    throw std::invalid_argument("jantzen_coefficient: inputs must be p-dominant");
  const Weight r = rho(rd);
  const Weight target = xi + r;
  long long coeff = 0;
  for (const PosRoot& beta : positive_roots(rd)) {
    if (in_phi_I(rd, beta)) continue;
    if (!is_positive_integer(pairing(mu + r, beta))) continue;
    const auto [canon, det] = w_I_canonicalize(rd, reflect(mu + r, beta));
    if (canon == target) coeff += det;
  }
  return coeff;
}

std::vector<Weight> linkage_steps(const RootDatum& rd, const Weight& mu) {
  if (!is_p_dominant(rd, mu))
    throw std::invalid_argument("linkage_steps: mu is not p-dominant");
  const Weight r = rho(rd);
  WeightSet out;
  for (const PosRoot& beta : positive_roots(rd)) {
    if (in_phi_I(rd, beta)) continue;
    if (!is_positive_integer(pairing(mu + r, beta))) continue;
    Weight nu = w_I_dominant(rd, reflect(mu + r, beta)) - r;
    if (nu == mu) continue;
    if (is_p_dominant(rd, nu)) out.insert(std::move(nu));
  }
  return {out.begin(), out.end()};
}

bool linkage_reachable(const RootDatum& rd, const Weight& nu,
                       const Weight& mu) {
  WeightSet seen;
  std::deque<Weight> queue;
  seen.insert(mu);
  queue.push_back(mu);
  while (!queue.empty()) {
    Weight cur = std::move(queue.front());
    queue.pop_front();
    if (cur == nu) return true;
    for (Weight& next : linkage_steps(rd, cur))
      if (seen.insert(next).second) queue.push_back(std::move(next));
  }
  return false;
}

bool assumption_simple11(const RootDatum& rd, const std::vector<Rat>& c) {
  const Weight lam = lambda_Ic(rd, c);
  const Weight r = rho(rd);
  for (const PosRoot& beta : positive_roots(rd)) {
    if (in_phi_I(rd, beta)) continue;
    if (is_positive_integer(pairing(lam + r, beta))) return false;
  }
  return true;
}

SaturationReport saturation_check(const RootDatum& rd,
                                  const std::vector<Rat>& c, int r) {
  rd.validate();
  check_c(rd, c);
  SaturationReport rep;
  rep.simple11_ok = assumption_simple11(rd, c);
  const Weight lam = lambda_Ic(rd, c);
  // Walk K_0, K_1, ..., K_r incrementally.
  WeightSet K;
  Weight zero;
  zero.coords.assign(rd.n, Rat(0));
  K.insert(zero);
  for (int j = 0; j <= r; ++j) {
    if (j > 0) {
      WeightSet next;
      for (const Weight& mu : K)
        for (Weight& nu : tensor_step(rd, mu)) next.insert(std::move(nu));
      K = std::move(next);
    }
    WeightSet S;
    for (const Weight& mu : K) S.insert(lam + mu);
    for (const Weight& mu : S) {
      for (const Weight& nu : linkage_steps(rd, mu)) {
        if (!S.count(nu)) {
          rep.saturated = false;
          if (rep.failed_level < 0) {
            rep.failed_level = j;
            rep.witness_mu = mu;
            rep.witness_nu = nu;
          }
        }
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// The Verma flag of M^p(lambda_{I,c}) tensor V
// ---------------------------------------------------------------------------

VermaFlagReport verma_flag_of_first_tensor(const RootDatum& rd,
                                           const std::vector<Rat>& c) {
  rd.validate();
  check_c(rd, c);
  const int k = rd.k();
  const Weight lam = lambda_Ic(rd, c);
  auto eps = [&](int idx, int sgn) {
    Weight w = lam;
    w.coords[idx - 1] += sgn;
    return w;
  };
  VermaFlagReport rep;
  const bool typeB = rd.phi == LieType::B;
  rep.total_strata = typeB ? 2 * k + 1 : 2 * k;
  for (int j = 1; j <= rep.total_strata; ++j) {
    std::optional<Weight> w;
    if (j <= k) {
      w = eps(rd.cut(j - 1) + 1, +1);
    } else if (!typeB) {
      if (j == k + 1) {
        if (rd.i == 1) w = eps(rd.cut(k), -1);
      } else {
        w = eps(rd.cut(2 * k + 1 - j), -1);
      }
    } else {
      if (j == k + 1) {
        if (rd.i == 1) w = lam;
      } else if (j == k + 2) {
        if (rd.i == 1) w = eps(rd.cut(k), -1);
      } else {
        w = eps(rd.cut(2 * k + 2 - j), -1);
      }
    }
    if (w) {
      rep.flag_index.push_back(j);
      rep.subquotients.push_back(std::move(*w));
    }
  }
  for (int t = 1; t <= k; ++t)
    for (int j = rd.cut(t - 1) + 1; j <= rd.cut(t); ++j) {
      rep.membership[j] = t;
      rep.membership[-j] = (typeB ? 2 * k + 2 : 2 * k + 1) - t;
    }
  if (typeB) rep.membership[0] = k + 1;
  return rep;
}

}  // namespace cybra
