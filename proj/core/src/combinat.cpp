#include "cybra/combinat.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cybra {

// ----------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0 || (i + 1 < parts.size() && parts[i] < parts[i + 1]))
      throw std::invalid_argument("Partition: parts must be weakly decreasing positive");
  }
}

int Partition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

int Partition::part(int i) const {
  return (i >= 1 && i <= rows()) ? parts[i - 1] : 0;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (!parts.empty()) {
    out.resize(parts[0], 0);
    for (int p : parts)
      for (int j = 0; j < p; ++j) ++out[j];
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts.size(); ++i)
    os << (i ? "," : "") << parts[i];
  os << ')';
  return os.str();
}

int Multipartition::size() const {
  int s = 0;
  for (const auto& p : comps) s += p.size();
  return s;
}

std::string Multipartition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < comps.size(); ++i)
    os << (i ? "," : "") << comps[i].to_string();
  os << ')';
  return os.str();
}

Multipartition conjugate(const Multipartition& lambda) {
  std::vector<Partition> out(lambda.comps.size());
  const int a = lambda.level();
  for (int i = 0; i < a; ++i) out[i] = lambda.comps[a - 1 - i].conjugate();
  return Multipartition(std::move(out));
}

bool dominance_ge(const Multipartition& lambda, const Multipartition& mu) {
  if (lambda.level() != mu.level())
    throw std::invalid_argument("dominance_ge: level mismatch");
  if (lambda.size() != mu.size())
    throw std::invalid_argument("dominance_ge: size mismatch");
  // Prefix sums over components s and rows h.
  int before_l = 0, before_m = 0;
  for (int s = 0; s < lambda.level(); ++s) {
    const auto& pl = lambda.comps[s];
    const auto& pm = mu.comps[s];
    const int hmax = std::max(pl.rows(), pm.rows());
    int suml = before_l, summ = before_m;
    for (int h = 1; h <= hmax; ++h) {
      suml += pl.part(h);
      summ += pm.part(h);
      if (suml < summ) return false;
    }
    before_l += pl.size();
    before_m += pm.size();
  }
  return true;
}

Profile profile_of(const Multipartition& lambda) {
  Profile p;
  p.b.push_back(0);
  for (const auto& c : lambda.comps) p.b.push_back(p.b.back() + c.size());
  return p;
}

bool total_order_less(const Multipartition& lambda, const Multipartition& mu) {
  if (lambda == mu) return false;
  const bool lgm = dominance_ge(lambda, mu);
  const bool mgl = dominance_ge(mu, lambda);
  if (lgm && !mgl) return true;
  if (mgl && !lgm) return false;
  // Incomparable (or would-be-equal): lexicographic on concatenated parts.
  std::vector<int> cl, cm;
  for (const auto& c : lambda.comps) {
    cl.insert(cl.end(), c.parts.begin(), c.parts.end());
    cl.push_back(-1);  // component separator
  }
  for (const auto& c : mu.comps) {
    cm.insert(cm.end(), c.parts.begin(), c.parts.end());
    cm.push_back(-1);
  }
  return cl > cm;  // larger-first lexicographic to keep big shapes early
}

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(m, m == 0 ? 1 : m);
  return out;
}

std::vector<Multipartition> multipartitions_of(int a, int m) {
  std::vector<Multipartition> out;
  std::vector<Partition> cur;
  std::function<void(int, int)> rec = [&](int comp, int rest) {
    if (comp == a) {
      if (rest == 0) out.emplace_back(cur);
      return;
    }
    for (int s = rest; s >= 0; --s) {
      for (const auto& p : partitions_of(s)) {
        cur.push_back(p);
        rec(comp + 1, rest - s);
        cur.pop_back();
      }
    }
  };
  rec(0, m);
  std::sort(out.begin(), out.end(),
            [](const Multipartition& x, const Multipartition& y) {
              return total_order_less(x, y);
            });
  return out;
}

// --------------------------------------------------------------- Permutation

Permutation Permutation::identity(int r) {
  std::vector<int> img(r);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int r, int i, int j) {
  Permutation w = identity(r);
  std::swap(w.img[i - 1], w.img[j - 1]);
  return w;
}

Permutation Permutation::operator*(const Permutation& w) const {
  assert(degree() == w.degree());
  std::vector<int> out(img.size());
  for (std::size_t i = 0; i < img.size(); ++i) out[i] = w.img[img[i]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(img.size());
  for (std::size_t i = 0; i < img.size(); ++i) out[img[i]] = static_cast<int>(i);
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img.size(); ++i)
    if (img[i] != static_cast<int>(i)) return false;
  return true;
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < img.size(); ++i)
    for (std::size_t j = i + 1; j < img.size(); ++j)
      if (img[i] > img[j]) ++inv;
  return inv;
}

std::vector<int> Permutation::reduced_word() const {
  // Bubble-sort word: repeatedly apply s_i on the right to remove descents.
  std::vector<int> word;
  std::vector<int> v = img;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] > v[i + 1]) {
        // Swapping positions i, i+1 replaces v by s_{i+1} * v (apply the
        // transposition first). Once v is the identity, w equals the product
        // of the recorded letters applied left to right, in recorded order.
        std::swap(v[i], v[i + 1]);
        word.push_back(static_cast<int>(i) + 1);
        changed = true;
      }
    }
  }
  return word;
}

std::vector<Permutation> all_permutations(int r) {
  std::vector<int> img(r);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Permutation w_bracket(const Profile& profile, int r) {
  const auto& b = profile.b;
  if (b.back() != r) throw std::invalid_argument("w_bracket: b_a != r");
  std::vector<int> img(r, -1);
  const int a = static_cast<int>(b.size()) - 1;
  for (int i = 1; i <= a; ++i) {
    for (int l = 1; l <= b[i] - b[i - 1]; ++l)
      img[b[i - 1] + l - 1] = r - b[i] + l - 1;
  }
  return Permutation(std::move(img));
}

// ------------------------------------------------------------------ Tableaux

bool StandardTableau::is_row_standard() const {
  std::vector<bool> seen(static_cast<std::size_t>(shape.size()) + 1, false);
  for (const auto& comp : rows)
    for (const auto& row : comp)
      for (std::size_t j = 0; j < row.size(); ++j) {
        const int e = row[j];
        if (e < 1 || e > shape.size() || seen[e]) return false;
        seen[e] = true;
        if (j > 0 && row[j - 1] >= e) return false;
      }
  return true;
}

bool StandardTableau::is_standard() const {
  if (!is_row_standard()) return false;
  for (const auto& comp : rows)
    for (std::size_t i = 1; i < comp.size(); ++i)
      for (std::size_t j = 0; j < comp[i].size(); ++j)
        if (comp[i - 1][j] >= comp[i][j]) return false;
  return true;
}

StandardTableau StandardTableau::acted_by(const Permutation& w) const {
  StandardTableau out = *this;
  for (auto& comp : out.rows)
    for (auto& row : comp)
      for (auto& e : row) e = w.apply(e);
  return out;
}

std::string StandardTableau::to_string() const {
  std::ostringstream os;
  for (std::size_t c = 0; c < rows.size(); ++c) {
    os << (c ? " | " : "");
    for (std::size_t i = 0; i < rows[c].size(); ++i) {
      os << (i ? " / " : "");
      for (std::size_t j = 0; j < rows[c][i].size(); ++j)
        os << (j ? " " : "") << rows[c][i][j];
    }
  }
  return os.str();
}

std::pair<StandardTableau, StandardTableau> initial_and_final_tableaux(
    const Multipartition& lambda) {
  StandardTableau tup, tdown;
  tup.shape = tdown.shape = lambda;
  const int a = lambda.level();
  tup.rows.resize(a);
  tdown.rows.resize(a);
  // t^lambda: components left to right, each row-wise.
  int next = 1;
  for (int c = 0; c < a; ++c) {
    for (int p : lambda.comps[c].parts) {
      std::vector<int> row(p);
      for (int j = 0; j < p; ++j) row[j] = next++;
      tup.rows[c].push_back(std::move(row));
    }
  }
  // t_lambda: components right to left, each down its columns.
  next = 1;
  for (int c = a - 1; c >= 0; --c) {
    const auto& part = lambda.comps[c];
    tdown.rows[c].assign(part.rows(), {});
    for (int i = 0; i < part.rows(); ++i)
      tdown.rows[c][i].assign(part.parts[i], 0);
    const Partition conj = part.conjugate();
    for (int col = 0; col < conj.rows(); ++col)
      for (int i = 0; i < conj.parts[col]; ++i)
        tdown.rows[c][i][col] = next++;
  }
  return {tup, tdown};
}

Permutation d_of(const StandardTableau& s) {
  const auto [tup, tdown] = initial_and_final_tableaux(s.shape);
  (void)tdown;
  const int m = s.shape.size();
  std::vector<int> img(m, -1);
  for (std::size_t c = 0; c < s.rows.size(); ++c)
    for (std::size_t i = 0; i < s.rows[c].size(); ++i)
      for (std::size_t j = 0; j < s.rows[c][i].size(); ++j)
        img[tup.rows[c][i][j] - 1] = s.rows[c][i][j] - 1;
  return Permutation(std::move(img));
}

std::vector<StandardTableau> standard_tableaux(const Multipartition& lambda) {
  // Grow the tableau by placing 1..m in addable corner cells.
  const int m = lambda.size();
  StandardTableau t;
  t.shape = lambda;
  t.rows.resize(lambda.level());
  for (int c = 0; c < lambda.level(); ++c) {
    t.rows[c].resize(lambda.comps[c].rows());
    for (int i = 0; i < lambda.comps[c].rows(); ++i)
      t.rows[c][i].assign(lambda.comps[c].parts[i], 0);
  }
  std::vector<StandardTableau> out;
  std::function<void(int)> rec = [&](int e) {
    if (e > m) {
      out.push_back(t);
      return;
    }
    for (int c = 0; c < lambda.level(); ++c)
      for (std::size_t i = 0; i < t.rows[c].size(); ++i) {
        // next empty cell in the row
        std::size_t j = 0;
        while (j < t.rows[c][i].size() && t.rows[c][i][j] != 0) ++j;
        if (j == t.rows[c][i].size()) continue;
        // column constraint: cell above must be filled
        if (i > 0 && (j >= t.rows[c][i - 1].size() || t.rows[c][i - 1][j] == 0))
          continue;
        t.rows[c][i][j] = e;
        rec(e + 1);
        t.rows[c][i][j] = 0;
      }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

long long num_standard_tableaux(const Multipartition& lambda) {
  return static_cast<long long>(standard_tableaux(lambda).size());
}

std::vector<Permutation> young_subgroup(const Multipartition& lambda, int r) {
  // Row sets of t^lambda; the subgroup is the direct product of the symmetric
  // groups on those sets.
  const auto [tup, tdown] = initial_and_final_tableaux(lambda);
  (void)tdown;
  std::vector<std::vector<int>> rowsets;
  for (const auto& comp : tup.rows)
    for (const auto& row : comp)
      if (row.size() > 1) rowsets.push_back(row);
  std::vector<Permutation> out{Permutation::identity(r)};
  for (const auto& set : rowsets) {
    std::vector<int> idx(set.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Permutation> next;
    do {
      Permutation w = Permutation::identity(r);
      for (std::size_t i = 0; i < set.size(); ++i)
        w.img[set[i] - 1] = set[idx[i]] - 1;
      for (const auto& prev : out) next.push_back(prev * w);
    } while (std::next_permutation(idx.begin(), idx.end()));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------- delta sets

namespace {

// t^tau * d for tau = ((r-2f), (2^f)); returns (row1, pairs).
void tau_action(int r, int f, const Permutation& d, std::vector<int>& row1,
                std::vector<std::pair<int, int>>& pairs) {
  row1.clear();
  pairs.clear();
  const int m = r - 2 * f;
  for (int e = 1; e <= m; ++e) row1.push_back(d.apply(e));
  for (int i = 0; i < f; ++i)
    pairs.emplace_back(d.apply(m + 2 * i + 1), d.apply(m + 2 * i + 2));
}

}  // namespace

std::vector<Permutation> d_r_f_filter(int r, int f) {
  std::vector<Permutation> out;
  std::vector<int> row1;
  std::vector<std::pair<int, int>> pairs;
  for (const auto& d : all_permutations(r)) {
    tau_action(r, f, d, row1, pairs);
    bool ok = std::is_sorted(row1.begin(), row1.end());
    for (std::size_t i = 0; ok && i < pairs.size(); ++i) {
      if (pairs[i].first >= pairs[i].second) ok = false;
      if (i > 0 && pairs[i - 1].first >= pairs[i].first) ok = false;
    }
    if (ok) out.push_back(d);
  }
  return out;
}

std::vector<Permutation> d_r_f_constructive(int r, int f) {
  // Choose f disjoint ordered pairs (p_i < q_i) with p_1 < p_2 < ... < p_f;
  // the remaining entries fill row 1 in increasing order.
  std::vector<Permutation> out;
  const int m = r - 2 * f;
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> used(r + 1, false);
  std::function<void(int)> rec = [&](int k) {
    if (k == f) {
      std::vector<int> img(r);
      std::vector<int> rest;
      for (int e = 1; e <= r; ++e)
        if (!used[e]) rest.push_back(e);
      for (int i = 0; i < m; ++i) img[i] = rest[i] - 1;
      for (int i = 0; i < f; ++i) {
        img[m + 2 * i] = pairs[i].first - 1;
        img[m + 2 * i + 1] = pairs[i].second - 1;
      }
      out.emplace_back(std::move(img));
      return;
    }
    const int pmin = k == 0 ? 1 : pairs.back().first + 1;
    for (int p = pmin; p <= r; ++p) {
      if (used[p]) continue;
      for (int q = p + 1; q <= r; ++q) {
        if (used[q]) continue;
        used[p] = used[q] = true;
        pairs.emplace_back(p, q);
        rec(k + 1);
        pairs.pop_back();
        used[p] = used[q] = false;
      }
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> d_r_f(int r, int f) {
  if (2 * f > r) throw std::invalid_argument("d_r_f: 2f > r");
  if (r <= 8) return d_r_f_filter(r, f);
  return d_r_f_constructive(r, f);
}

std::vector<std::vector<int>> n_a_f(int a, int r, int f) {
  std::vector<std::vector<int>> out;
  std::vector<int> xi(r, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == f) {
      out.push_back(xi);
      return;
    }
    const int pos = r - 2 * i - 1;  // positions r-1, r-3, ..., r-2f+1 (1-based)
    for (int v = 0; v < a; ++v) {
      xi[pos - 1] = v;
      rec(i + 1);
    }
    xi[pos - 1] = 0;
  };
  rec(0);
  return out;
}

std::vector<DeltaIndex> enumerate_delta(int f, const Multipartition& lambda,
                                        int r, int a) {
  if (lambda.size() != r - 2 * f)
    throw std::invalid_argument("enumerate_delta: |lambda| != r - 2f");
  std::vector<DeltaIndex> out;
  const auto tabs = standard_tableaux(lambda);
  const auto xis = n_a_f(a, r, f);
  const auto ds = d_r_f(r, f);
  for (const auto& t : tabs)
    for (const auto& xi : xis)
      for (const auto& d : ds) out.push_back(DeltaIndex{t, xi, d});
  return out;
}

// ------------------------------------------------------------- restrictedness

bool u_restricted(const Multipartition& lambda, const std::vector<Rat>& u) {
  const int a = lambda.level();
  if (static_cast<int>(u.size()) != a)
    throw std::invalid_argument("u_restricted: arity mismatch");
  std::vector<bool> assigned(a, false);
  for (int i = 0; i < a; ++i) {
    if (assigned[i]) continue;
    // Collect the integer-difference orbit of u[i] and sort it descending.
    std::vector<int> orbit;
    for (int j = i; j < a; ++j)
      if (!assigned[j] && integer_difference(u[i], u[j])) {
        orbit.push_back(j);
        assigned[j] = true;
      }
    std::stable_sort(orbit.begin(), orbit.end(),
                     [&](int x, int y) { return u[x] > u[y]; });
    for (std::size_t k = 0; k + 1 < orbit.size(); ++k) {
      const int i1 = orbit[k], i2 = orbit[k + 1];
      const Rat diff = u[i1] - u[i2];
      assert(is_integer(diff) && diff >= 0);
      const long long shift = static_cast<long long>(numerator(diff));
      const auto& l1 = lambda.comps[i1];
      const auto& l2 = lambda.comps[i2];
      const int jmax = std::max(l1.rows(), l2.rows()) + 1;
      for (int j = 1; j <= jmax; ++j)
        if (l1.part(static_cast<int>(shift) + j) > l2.part(j)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------- strata

std::vector<std::pair<int, Multipartition>> strata(int a, int r) {
  std::vector<std::pair<int, Multipartition>> out;
  for (int f = r / 2; f >= 0; --f)
    for (const auto& lambda : multipartitions_of(a, r - 2 * f))
      out.emplace_back(f, lambda);
  return out;
}

bool stratum_ge(const std::pair<int, Multipartition>& x,
                const std::pair<int, Multipartition>& y) {
  if (x.first != y.first) return x.first > y.first;
  if (x.second == y.second) return true;
  return dominance_ge(x.second, y.second);
}

}  // namespace cybra
