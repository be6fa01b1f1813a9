#include "cybra/brauer.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <memory>
#include <stdexcept>
#include <utility>

#include "cybra/hecke.hpp"

namespace cybra {

// ---------------------------------------------------------------------------
// Admissible omega
// ---------------------------------------------------------------------------

std::vector<Rat> admissible_omega(const std::vector<Rat>& u, int K) {
  if (K < 0) throw std::invalid_argument("admissible_omega: K < 0");
  const int a = static_cast<int>(u.size());
  // Expand both sides at u = infinity in t = 1/u.  The right-hand side is
  //   (1/t) * (1 - (-1)^a t/2) prod_i (1 + u_i t) / prod_i (1 - u_i t)
  //     = c_0/t + c_1 + c_2 t + ...
  // and the left-hand side is 1/t - 1/2 + sum_i omega_i t^i, so
  // omega_0 = c_1 + 1/2 and omega_i = c_{i+1} for i >= 1.
  const int L = K + 2;
  std::vector<Rat> num(L, Rat(0)), den(L, Rat(0));
  num[0] = 1;
  den[0] = 1;
  auto times_linear = [&](std::vector<Rat>& p, const Rat& c) {
    for (int i = L - 1; i >= 1; --i) p[i] += c * p[i - 1];
  };
  for (const Rat& ui : u) {
    times_linear(num, ui);
    times_linear(den, -ui);
  }
  times_linear(num, a % 2 == 0 ? Rat(-1, 2) : Rat(1, 2));
  std::vector<Rat> q(L, Rat(0));
  for (int i = 0; i < L; ++i) {
    Rat s = num[i];
    for (int j = 1; j <= i; ++j) s -= den[j] * q[i - j];
    q[i] = s;  // den[0] == 1
  }
  if (q[0] != 1) throw std::logic_error("admissible_omega: leading term");
  std::vector<Rat> w(K + 1, Rat(0));
  w[0] = q[1] + Rat(1, 2);
  for (int i = 1; i <= K; ++i) w[i] = q[i + 1];
  return w;
}

BrauerParams make_brauer_params(int a, int r, std::vector<Rat> u) {
  BrauerParams p;
  p.a = a;
  p.r = r;
  p.u = std::move(u);
  p.omega = admissible_omega(p.u, a + 2 * r + 2);
  return p;
}

// ---------------------------------------------------------------------------
// Words and monomials
// ---------------------------------------------------------------------------

namespace {

BrauerLetter Sl(int i) { return {BrauerLetter::Kind::S, i}; }
BrauerLetter El(int i) { return {BrauerLetter::Kind::E, i}; }
BrauerLetter Xl(int j) { return {BrauerLetter::Kind::X, j}; }

void append_perm_word(BrauerWord& w, const Permutation& p) {
  for (int l : p.reduced_word()) w.push_back(Sl(l));
}

// Lift of a Hecke monomial x^alpha w on the first strands: X letters then
// the reduced word of w.
BrauerWord lift_hecke_mono(const HeckeMono& m) {
  BrauerWord w;
  for (std::size_t j = 0; j < m.alpha.size(); ++j)
    for (int c = 0; c < m.alpha[j]; ++c) w.push_back(Xl(static_cast<int>(j) + 1));
  append_perm_word(w, m.w);
  return w;
}

}  // namespace

BrauerWord BrauerMono::word(int r) const {
  BrauerWord out;
  append_perm_word(out, e.inverse());
  for (int i = 1; i <= f; ++i)
    for (int c = 0; c < xi[i - 1]; ++c) out.push_back(Xl(r - 2 * i + 1));
  for (int i = 1; i <= f; ++i) out.push_back(El(r - 2 * i + 1));
  for (std::size_t j = 0; j < beta.size(); ++j)
    for (int c = 0; c < beta[j]; ++c) out.push_back(Xl(static_cast<int>(j) + 1));
  append_perm_word(out, w);
  for (int i = 1; i <= f; ++i)
    for (int c = 0; c < eta[i - 1]; ++c) out.push_back(Xl(r - 2 * i + 1));
  append_perm_word(out, d);
  return out;
}

void BrauerElement::add_term(const BrauerMono& m, const Rat& c) {
  if (c == 0) return;
  auto [it, ins] = terms.emplace(m, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

BrauerElement& BrauerElement::operator+=(const BrauerElement& o) {
  for (const auto& [m, c] : o.terms) add_term(m, c);
  return *this;
}
BrauerElement BrauerElement::operator+(const BrauerElement& o) const {
  BrauerElement z = *this;
  z += o;
  return z;
}
BrauerElement BrauerElement::operator-(const BrauerElement& o) const {
  BrauerElement z = *this;
  for (const auto& [m, c] : o.terms) z.add_term(m, -c);
  return z;
}
BrauerElement BrauerElement::operator*(const Rat& c) const {
  BrauerElement z;
  if (c == 0) return z;
  for (const auto& [m, cc] : terms) z.terms.emplace(m, cc * c);
  return z;
}

// ---------------------------------------------------------------------------
// The linear-closure engine
// ---------------------------------------------------------------------------

struct BrauerAlgebra::Engine {
  int a = 1, r = 1, ngen = 1;
  std::vector<Rat> u, omega;

  // Sparse module vector over raw state ids.
  using SVec = std::map<int, Rat>;
  struct Rel {
    std::vector<std::pair<Rat, BrauerWord>> terms;  // sum c * (state . word) = 0
  };

  std::vector<std::vector<std::optional<SVec>>> act;  // act[state][gen]
  std::vector<std::optional<SVec>> subs;              // dead-state rewrites
  std::vector<char> dead;
  std::vector<std::pair<int, int>> def;  // (parent state, gen); root (-1,-1)
  std::vector<Rel> rels;

  // Build-phase scheduling.  A task is either a relation instance at a state
  // (rel >= 0) or a row-carry check for a dead state (rel == -1): the stored
  // row act[p][gen] of a dead state p must agree with (subs[p]) * gen.
  // Tasks whose trace needs an undefined row are parked in waiters_ keyed by
  // that (state, generator) and resumed when the row appears or the state
  // dies.
  struct Task {
    int rel = -1;
    int state = 0;
    int gen = 0;
  };
  std::deque<Task> queue_;
  std::map<std::pair<int, int>, std::vector<Task>> waiters_;

  // Frozen after build():
  SVec unit_;
  std::vector<int> live_of_state;     // raw -> compressed (-1 if dead)
  std::vector<int> state_of_live;     // compressed -> raw
  std::vector<BrauerWord> live_word;  // defining word per live state
  std::size_t nlive = 0;

  // Lazy caches.
  std::vector<std::optional<Vec>> tau_live;
  std::vector<std::optional<Mat>> lmat;  // left multiplication per generator

  bool coords_built = false;
  std::vector<BrauerMono> monos;
  std::map<BrauerMono, std::size_t> mono_index;
  Mat mono_mat;  // columns = module vectors of monomials
  std::optional<Mat> mono_inv;

  bool cells_built = false;
  struct Stratum {
    int f = 0;
    Multipartition lambda;
    std::vector<DeltaIndex> delta;
    std::size_t offset = 0;
  };
  std::vector<Stratum> strat;
  std::vector<CellularEntry> cells;
  std::optional<Mat> cell_inv;
  std::map<int, std::unique_ptr<HeckeAlgebra>> hecke_by_strands;

  // ---- generator encoding ----
  // Raw table generators are S_1..S_{r-1}, E_1..E_{r-1} and X_1 only; the
  // higher X_j are handled as the derived rewriting
  //   X_{j+1} = S_j X_j S_j - E_j S_j + S_j
  // (relation (10) multiplied by S_j), which keeps the enumeration from
  // pumping unbounded X_j-chains of states.
  int gid(const BrauerLetter& l) const {
    switch (l.kind) {
      case BrauerLetter::Kind::S:
        if (l.index < 1 || l.index > r - 1) throw std::invalid_argument("S index");
        return l.index - 1;
      case BrauerLetter::Kind::E:
        if (l.index < 1 || l.index > r - 1) throw std::invalid_argument("E index");
        return (r - 1) + l.index - 1;
      case BrauerLetter::Kind::X:
        if (l.index != 1) throw std::invalid_argument("raw X index");
        return 2 * (r - 1);
    }
    throw std::logic_error("gid");
  }
  BrauerLetter letter_of(int g) const {
    if (g < r - 1) return Sl(g + 1);
    if (g < 2 * (r - 1)) return El(g - (r - 1) + 1);
    return Xl(1);
  }

  // ---- sparse vector helpers ----
  static void addmul(SVec& acc, const SVec& v, const Rat& c) {
    if (c == 0) return;
    for (const auto& [s, cc] : v) {
      auto [it, ins] = acc.emplace(s, cc * c);
      if (!ins) {
        it->second += cc * c;
        if (it->second == 0) acc.erase(it);
      }
    }
  }

  SVec reduced(SVec v) const {
    bool again = true;
    while (again) {
      again = false;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!dead[it->first]) continue;
        const int s = it->first;
        const Rat c = it->second;
        v.erase(it);
        addmul(v, *subs[s], c);
        again = true;
        break;
      }
    }
    return v;
  }

  int new_state(int parent, int gen) {
    if (act.size() % 10000 == 0 && std::getenv("CYBRA_BRAUER_DEBUG")) {
      std::size_t alive = 0;
      for (std::size_t s = 0; s < act.size(); ++s)
        if (!dead[s]) ++alive;
      std::fprintf(stderr, "states=%zu alive=%zu\n", act.size(), alive);
    }
    act.emplace_back(ngen);
    subs.emplace_back();
    dead.push_back(0);
    def.emplace_back(parent, gen);
    return static_cast<int>(act.size()) - 1;
  }

  const SVec& row(int s, int g) {
    if (!act[s][g]) {
      const int t = new_state(s, g);  // may reallocate act
      act[s][g] = SVec{{t, Rat(1)}};
      return *act[s][g];
    }
    for (const auto& [t, c] : *act[s][g])
      if (dead[t]) {
        act[s][g] = reduced(*act[s][g]);
        break;
      }
    return *act[s][g];
  }

  SVec apply_gen(const SVec& v, int g) {
    SVec acc;
    for (const auto& [s, c] : v) addmul(acc, row(s, g), c);
    return reduced(acc);
  }

  // Right multiplication by X_j via the derived rewriting above.
  SVec apply_x(const SVec& v, int j) {
    if (j == 1) return apply_gen(v, gid(Xl(1)));
    const int sg = gid(Sl(j - 1));
    const int eg = gid(El(j - 1));
    const SVec vs = apply_gen(v, sg);
    SVec acc = apply_gen(apply_x(vs, j - 1), sg);       // v S X_{j-1} S
    addmul(acc, apply_gen(apply_gen(v, eg), sg), -1);   // - v E S
    addmul(acc, vs, 1);                                 // + v S
    return reduced(std::move(acc));
  }

  SVec apply_letter(SVec v, const BrauerLetter& l) {
    if (l.kind == BrauerLetter::Kind::X && l.index > 1)
      return apply_x(v, l.index);
    return apply_gen(v, gid(l));
  }

  SVec apply_word(SVec v, const BrauerWord& w) {
    for (const auto& l : w) v = apply_letter(std::move(v), l);
    return v;
  }

  // ---- non-defining (build-phase) application: traces never create states;
  // a trace that needs an undefined row reports it in `stall` instead ----
  const SVec* row_if(int s, int g) {
    if (!act[s][g]) return nullptr;
    for (const auto& [t, c] : *act[s][g])
      if (dead[t]) {
        act[s][g] = reduced(*act[s][g]);
        break;
      }
    return &*act[s][g];
  }

  std::optional<SVec> try_gen(const SVec& v, int g, std::pair<int, int>& stall) {
    SVec acc;
    for (const auto& [s, c] : v) {
      const SVec* rw = row_if(s, g);
      if (!rw) {
        stall = {s, g};
        return std::nullopt;
      }
      addmul(acc, *rw, c);
    }
    return reduced(std::move(acc));
  }

  std::optional<SVec> try_x(const SVec& v, int j, std::pair<int, int>& stall) {
    if (j == 1) return try_gen(v, gid(Xl(1)), stall);
    const int sg = gid(Sl(j - 1));
    const int eg = gid(El(j - 1));
    auto vs = try_gen(v, sg, stall);
    if (!vs) return std::nullopt;
    auto mid = try_x(*vs, j - 1, stall);
    if (!mid) return std::nullopt;
    auto acc = try_gen(*mid, sg, stall);  // v S X_{j-1} S
    if (!acc) return std::nullopt;
    auto ve = try_gen(v, eg, stall);
    if (!ve) return std::nullopt;
    auto ves = try_gen(*ve, sg, stall);  // v E S
    if (!ves) return std::nullopt;
    addmul(*acc, *ves, -1);
    addmul(*acc, *vs, 1);  // + v S
    return reduced(std::move(*acc));
  }

  std::optional<SVec> try_word(SVec v, const BrauerWord& w,
                               std::pair<int, int>& stall) {
    for (const auto& l : w) {
      std::optional<SVec> nxt;
      if (l.kind == BrauerLetter::Kind::X && l.index > 1)
        nxt = try_x(v, l.index, stall);
      else
        nxt = try_gen(v, gid(l), stall);
      if (!nxt) return std::nullopt;
      v = std::move(*nxt);
    }
    return v;
  }

  // Resume everything parked on rows of state s (gen < 0: all of them).
  void resume(int s, int gen) {
    if (gen >= 0) {
      auto it = waiters_.find({s, gen});
      if (it == waiters_.end()) return;
      for (auto& t : it->second) queue_.push_back(t);
      waiters_.erase(it);
      return;
    }
    auto it = waiters_.lower_bound({s, 0});
    while (it != waiters_.end() && it->first.first == s) {
      for (auto& t : it->second) queue_.push_back(t);
      it = waiters_.erase(it);
    }
  }

  void coincide(SVec v) {
    v = reduced(std::move(v));
    if (v.empty()) return;
    auto it = std::prev(v.end());
    const int p = it->first;
    const Rat c = it->second;
    v.erase(it);
    SVec rhs;
    for (const auto& [s, cc] : v) rhs.emplace(s, -cc / c);
    subs[p] = std::move(rhs);
    dead[p] = 1;
    // Anything waiting on a row of p can proceed (p now expands), and the
    // rows p already had must be re-imposed on its replacement.
    resume(p, -1);
    for (int g = 0; g < ngen; ++g)
      if (act[p][g]) queue_.push_back(Task{-1, p, g});
  }

  // Run one task; park it again if its trace stalls.
  void run_task(const Task& t) {
    std::pair<int, int> stall{-1, -1};
    if (t.rel >= 0) {
      if (dead[t.state]) return;  // follows from instances at the expansion
      SVec acc;
      for (const auto& [c, w] : rels[t.rel].terms) {
        auto part = try_word(SVec{{t.state, Rat(1)}}, w, stall);
        if (!part) {
          waiters_[stall].push_back(t);
          return;
        }
        addmul(acc, *part, c);
      }
      coincide(std::move(acc));
    } else {
      // Row carry for dead state p = t.state: (subs[p]) * gen == act[p][gen].
      auto lhs = try_gen(reduced(SVec{{t.state, Rat(1)}}), t.gen, stall);
      if (!lhs) {
        waiters_[stall].push_back(t);
        return;
      }
      addmul(*lhs, reduced(*act[t.state][t.gen]), -1);
      coincide(std::move(*lhs));
    }
  }

  void drain() {
    while (!queue_.empty()) {
      Task t = queue_.front();
      queue_.pop_front();
      run_task(t);
    }
  }

  // ---- relations ----
  void build_relations() {
    auto rel2 = [&](BrauerWord lhs, BrauerWord rhs) {
      Rel rl;
      rl.terms.emplace_back(Rat(1), std::move(lhs));
      rl.terms.emplace_back(Rat(-1), std::move(rhs));
      rels.push_back(std::move(rl));
    };
    auto cat = [](std::initializer_list<BrauerLetter> ls) {
      return BrauerWord(ls);
    };
    for (int i = 1; i <= r - 1; ++i) {
      rel2(cat({Sl(i), Sl(i)}), {});                              // (1)
      rel2(cat({El(i), Sl(i)}), cat({El(i)}));                    // (12)
      rel2(cat({Sl(i), El(i)}), cat({El(i)}));                    // (12)
      rel2(cat({El(i), El(i)}), BrauerWord{El(i)});               // E_i^2 = w0 E_i
      rels.back().terms[1].first = -omega[0];
      {
        Rel rl;  // (10) S_i X_i - X_{i+1} S_i - E_i + 1 = 0
        rl.terms.emplace_back(Rat(1), cat({Sl(i), Xl(i)}));
        rl.terms.emplace_back(Rat(-1), cat({Xl(i + 1), Sl(i)}));
        rl.terms.emplace_back(Rat(-1), cat({El(i)}));
        rl.terms.emplace_back(Rat(1), BrauerWord{});
        rels.push_back(std::move(rl));
      }
      {
        Rel rl;  // (11) X_i S_i - S_i X_{i+1} - E_i + 1 = 0
        rl.terms.emplace_back(Rat(1), cat({Xl(i), Sl(i)}));
        rl.terms.emplace_back(Rat(-1), cat({Sl(i), Xl(i + 1)}));
        rl.terms.emplace_back(Rat(-1), cat({El(i)}));
        rl.terms.emplace_back(Rat(1), BrauerWord{});
        rels.push_back(std::move(rl));
      }
      {
        Rel rl;  // (17) E_i (X_i + X_{i+1}) = 0
        rl.terms.emplace_back(Rat(1), cat({El(i), Xl(i)}));
        rl.terms.emplace_back(Rat(1), cat({El(i), Xl(i + 1)}));
        rels.push_back(std::move(rl));
      }
      {
        Rel rl;  // (17) (X_i + X_{i+1}) E_i = 0
        rl.terms.emplace_back(Rat(1), cat({Xl(i), El(i)}));
        rl.terms.emplace_back(Rat(1), cat({Xl(i + 1), El(i)}));
        rels.push_back(std::move(rl));
      }
    }
    for (int i = 1; i <= r - 2; ++i) {
      rel2(cat({Sl(i), Sl(i + 1), Sl(i)}), cat({Sl(i + 1), Sl(i), Sl(i + 1)}));
      rel2(cat({Sl(i), El(i + 1), El(i)}), cat({Sl(i + 1), El(i)}));      // (13)
      rel2(cat({El(i), El(i + 1), Sl(i)}), cat({El(i), Sl(i + 1)}));      // (14)
      rel2(cat({El(i), El(i + 1), El(i)}), cat({El(i)}));                 // (15)
      rel2(cat({El(i + 1), El(i), El(i + 1)}), cat({El(i + 1)}));         // (16)
      rel2(cat({El(i), Sl(i + 1), El(i)}), cat({El(i)}));
      rel2(cat({El(i + 1), Sl(i), El(i + 1)}), cat({El(i + 1)}));
    }
    for (int i = 1; i <= r - 1; ++i)
      for (int j = 1; j <= r - 1; ++j) {
        if (j - i <= 1) continue;
        rel2(cat({Sl(i), Sl(j)}), cat({Sl(j), Sl(i)}));  // (2)
        rel2(cat({Sl(i), El(j)}), cat({El(j), Sl(i)}));  // (6)
        rel2(cat({El(i), Sl(j)}), cat({Sl(j), El(i)}));  // (6)
        rel2(cat({El(i), El(j)}), cat({El(j), El(i)}));  // (7)
      }
    for (int i = 1; i <= r - 1; ++i)
      for (int j = 1; j <= r; ++j) {
        if (j == i || j == i + 1) continue;
        rel2(cat({Sl(i), Xl(j)}), cat({Xl(j), Sl(i)}));  // (4)
        rel2(cat({El(i), Xl(j)}), cat({Xl(j), El(i)}));  // (8)
      }
    for (int i = 1; i <= r; ++i)
      for (int j = i + 1; j <= r; ++j)
        rel2(cat({Xl(i), Xl(j)}), cat({Xl(j), Xl(i)}));  // (9)
    {
      // (18): prod_j (X_1 - u_j) = 0.
      std::vector<Rat> coef{Rat(1)};
      for (const Rat& uj : u) {
        std::vector<Rat> nxt(coef.size() + 1, Rat(0));
        for (std::size_t m = 0; m < coef.size(); ++m) {
          nxt[m + 1] += coef[m];
          nxt[m] -= uj * coef[m];
        }
        coef = std::move(nxt);
      }
      Rel rl;
      for (std::size_t m = 0; m < coef.size(); ++m) {
        if (coef[m] == 0) continue;
        BrauerWord w(m, Xl(1));
        rl.terms.emplace_back(coef[m], std::move(w));
      }
      rels.push_back(std::move(rl));
    }
    if (r >= 2) {
      // (5): E_1 X_1^k E_1 = omega_k E_1.  Instances with k >= a are implied
      // by (18) when omega satisfies the admissibility recurrence; imposing a
      // couple of them doubles as a consistency guard.
      const int kmax = std::min(a + 1, static_cast<int>(omega.size()) - 1);
      for (int k = 0; k <= kmax; ++k) {
        Rel rl;
        BrauerWord w{El(1)};
        w.insert(w.end(), static_cast<std::size_t>(k), Xl(1));
        w.push_back(El(1));
        rl.terms.emplace_back(Rat(1), std::move(w));
        rl.terms.emplace_back(-omega[k], BrauerWord{El(1)});
        rels.push_back(std::move(rl));
      }
    }
  }

  // ---- closure ----
  void build() {
    new_state(-1, -1);
    build_relations();
    for (std::size_t k = 0; k < rels.size(); ++k)
      queue_.push_back(Task{static_cast<int>(k), 0, 0});
    drain();
    // Define rows one at a time (oldest state first) and propagate each
    // definition to a fixpoint before the next; rows are never un-defined
    // and dead states need none, so the scan frontier is monotone.
    std::size_t fs = 0;
    int fg = 0;
    while (fs < act.size()) {
      if (dead[fs] || fg == ngen) {
        ++fs;
        fg = 0;
        continue;
      }
      if (!act[fs][fg]) {
        const int s = static_cast<int>(fs);
        const int t = new_state(s, fg);
        act[s][fg] = SVec{{t, Rat(1)}};
        for (std::size_t k = 0; k < rels.size(); ++k)
          queue_.push_back(Task{static_cast<int>(k), t, 0});
        resume(s, fg);
        drain();
        continue;  // row now defined (or fs died); re-check advances
      }
      ++fg;
    }
    if (!waiters_.empty())
      throw std::logic_error("brauer: tasks left waiting after closure");
    // Verify: all relations vanish at all live states.
    for (std::size_t s = 0; s < act.size(); ++s) {
      if (dead[s]) continue;
      for (const auto& rel : rels) {
        SVec acc;
        for (const auto& [c, w] : rel.terms)
          addmul(acc, apply_word(SVec{{static_cast<int>(s), Rat(1)}}, w), c);
        if (!reduced(std::move(acc)).empty())
          throw std::logic_error("brauer: closure verification failed");
      }
    }
    // Compress.
    live_of_state.assign(act.size(), -1);
    for (std::size_t s = 0; s < act.size(); ++s)
      if (!dead[s]) {
        live_of_state[s] = static_cast<int>(state_of_live.size());
        state_of_live.push_back(static_cast<int>(s));
      }
    nlive = state_of_live.size();
    unit_ = reduced(SVec{{0, Rat(1)}});
    // Defining words (valid identities even through dead ancestors).
    std::vector<BrauerWord> word_of(act.size());
    for (std::size_t s = 1; s < act.size(); ++s) {
      word_of[s] = word_of[def[s].first];
      word_of[s].push_back(letter_of(def[s].second));
    }
    live_word.resize(nlive);
    for (std::size_t k = 0; k < nlive; ++k)
      live_word[k] = word_of[state_of_live[k]];
    tau_live.assign(nlive, std::nullopt);
    lmat.assign(ngen, std::nullopt);
  }

  // ---- dense coordinates ----
  Vec compress(const SVec& v) const {
    Vec out(nlive, Rat(0));
    for (const auto& [s, c] : v) {
      assert(live_of_state[s] >= 0);
      out[live_of_state[s]] = c;
    }
    return out;
  }
  SVec decompress(const Vec& v) const {
    SVec out;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) out.emplace(state_of_live[k], v[k]);
    return out;
  }

  Vec vec_apply(const Vec& v, const BrauerWord& w) {
    return compress(apply_word(decompress(v), w));
  }
  Vec vec_unit() { return compress(unit_); }
  Vec vec_word(const BrauerWord& w) { return compress(apply_word(unit_, w)); }

  Vec vec_mul(const Vec& x, const Vec& y) {
    Vec out(nlive, Rat(0));
    const SVec xs = decompress(x);
    for (std::size_t j = 0; j < nlive; ++j) {
      if (y[j] == 0) continue;
      const SVec prod = apply_word(xs, live_word[j]);
      for (const auto& [s, c] : prod) out[live_of_state[s]] += c * y[j];
    }
    return out;
  }

  const Vec& tau_of_live(std::size_t j) {
    if (!tau_live[j]) {
      BrauerWord wrev(live_word[j].rbegin(), live_word[j].rend());
      tau_live[j] = vec_word(wrev);
    }
    return *tau_live[j];
  }
  Vec vec_tau(const Vec& v) {
    Vec out(nlive, Rat(0));
    for (std::size_t j = 0; j < nlive; ++j) {
      if (v[j] == 0) continue;
      const Vec& t = tau_of_live(j);
      for (std::size_t k = 0; k < nlive; ++k) out[k] += v[j] * t[k];
    }
    return out;
  }

  const Mat& left_matrix(int g) {
    if (!lmat[g]) {
      Mat m(nlive, nlive);
      const SVec gv = apply_gen(unit_, g);
      for (std::size_t j = 0; j < nlive; ++j) {
        const SVec col = apply_word(gv, live_word[j]);
        for (const auto& [s, c] : col) m(live_of_state[s], j) = c;
      }
      lmat[g] = std::move(m);
    }
    return *lmat[g];
  }

  RowSpace ideal(const std::vector<Vec>& seeds) {
    RowSpace rs(nlive);
    std::vector<Vec> todo = seeds;
    while (!todo.empty()) {
      Vec v = std::move(todo.back());
      todo.pop_back();
      if (!rs.insert(v)) continue;
      for (int g = 0; g < ngen; ++g) {
        todo.push_back(compress(apply_gen(decompress(v), g)));
        const Mat& L = left_matrix(g);
        Vec lv(nlive, Rat(0));
        for (std::size_t j = 0; j < nlive; ++j) {
          if (v[j] == 0) continue;
          for (std::size_t i = 0; i < nlive; ++i)
            if (L(i, j) != 0) lv[i] += L(i, j) * v[j];
        }
        todo.push_back(std::move(lv));
      }
    }
    return rs;
  }

  // ---- canonical monomials ----
  void ensure_coords() {
    if (coords_built) return;
    for (int f = 0; 2 * f <= r; ++f) {
      const int m = r - 2 * f;
      const auto reps = d_r_f(r, f);
      const auto perms = all_permutations(m);
      std::vector<std::vector<int>> dots;  // all vectors in [0,a)^f
      {
        std::vector<int> cur(f, 0);
        for (;;) {
          dots.push_back(cur);
          int i = 0;
          while (i < f && ++cur[i] == a) cur[i++] = 0;
          if (i == f) break;
        }
      }
      std::vector<std::vector<int>> betas;
      {
        std::vector<int> cur(m, 0);
        for (;;) {
          betas.push_back(cur);
          int i = 0;
          while (i < m && ++cur[i] == a) cur[i++] = 0;
          if (i == m) break;
        }
      }
      for (const auto& e : reps)
        for (const auto& xi : dots)
          for (const auto& beta : betas)
            for (const auto& w : perms)
              for (const auto& eta : dots)
                for (const auto& d : reps) {
                  BrauerMono mo;
                  mo.f = f;
                  mo.e = e;
                  mo.xi = xi;
                  mo.beta = beta;
                  mo.w = w;
                  mo.eta = eta;
                  mo.d = d;
                  monos.push_back(std::move(mo));
                }
    }
    for (std::size_t k = 0; k < monos.size(); ++k) mono_index[monos[k]] = k;
    mono_mat = Mat(nlive, monos.size());
    for (std::size_t k = 0; k < monos.size(); ++k) {
      const Vec v = vec_word(monos[k].word(r));
      for (std::size_t i = 0; i < nlive; ++i) mono_mat(i, k) = v[i];
    }
    if (monos.size() == nlive) mono_inv = mat_inverse(mono_mat);
    coords_built = true;
  }

  Vec coords_of(const Vec& module_vec) {
    ensure_coords();
    if (!mono_inv)
      throw std::runtime_error(
          "brauer: canonical monomials do not form a basis here");
    Vec out(monos.size(), Rat(0));
    for (std::size_t i = 0; i < monos.size(); ++i) {
      Rat s = 0;
      for (std::size_t j = 0; j < nlive; ++j)
        if (module_vec[j] != 0) s += (*mono_inv)(i, j) * module_vec[j];
      out[i] = s;
    }
    return out;
  }

  // ---- cellular layer ----
  HeckeAlgebra& hecke(int strands) {
    auto it = hecke_by_strands.find(strands);
    if (it == hecke_by_strands.end()) {
      HeckeParams hp;
      hp.a = a;
      hp.r = strands;
      hp.u = u;
      it = hecke_by_strands
               .emplace(strands, std::make_unique<HeckeAlgebra>(hp))
               .first;
    }
    return *it->second;
  }

  BrauerWord ef_word_of(int f) const {
    BrauerWord w;
    for (int i = 1; i <= f; ++i) w.push_back(El(r - 2 * i + 1));
    return w;
  }

  // Apply a lifted Hecke element (on strands 1..m) on the right of v.
  Vec apply_lifted(const Vec& v, const HeckeElement& h) {
    Vec out(nlive, Rat(0));
    for (const auto& [m, c] : h.terms) {
      const Vec t = vec_apply(v, lift_hecke_mono(m));
      for (std::size_t i = 0; i < nlive; ++i) out[i] += c * t[i];
    }
    return out;
  }

  void ensure_cells() {
    if (cells_built) return;
    for (const auto& [f, lambda] : strata(a, r)) {
      Stratum st;
      st.f = f;
      st.lambda = lambda;
      st.delta = enumerate_delta(f, lambda, r, a);
      st.offset = cells.size();
      const int m = r - 2 * f;
      // n_{st} elements on the through strands, indexed by tableau pairs.
      std::map<StandardTableau, int> tab_index;
      std::vector<std::vector<const HeckeElement*>> nst;
      if (m >= 1) {
        const auto tabs = standard_tableaux(lambda);
        for (std::size_t i = 0; i < tabs.size(); ++i) tab_index[tabs[i]] = static_cast<int>(i);
        nst.assign(tabs.size(), std::vector<const HeckeElement*>(tabs.size(), nullptr));
        for (const auto& ent : hecke(m).cellular_basis(HeckeAlgebra::Flavor::N))
          if (ent.lambda == lambda) nst[ent.s_index][ent.t_index] = &ent.element;
      }
      const BrauerWord efw = ef_word_of(f);
      for (const auto& L : st.delta) {
        // Prefix e^{-1} X^{xi_L} E^f.
        BrauerWord pre;
        append_perm_word(pre, L.d.inverse());
        for (int pos = 1; pos <= r; ++pos)
          for (int c = 0; c < L.xi[pos - 1]; ++c) pre.push_back(Xl(pos));
        pre.insert(pre.end(), efw.begin(), efw.end());
        const Vec vpre = vec_word(pre);
        for (const auto& R : st.delta) {
          Vec v = vpre;
          if (m >= 1) v = apply_lifted(v, *nst[tab_index[L.t]][tab_index[R.t]]);
          BrauerWord suf;
          for (int pos = 1; pos <= r; ++pos)
            for (int c = 0; c < R.xi[pos - 1]; ++c) suf.push_back(Xl(pos));
          append_perm_word(suf, R.d);
          v = vec_apply(v, suf);
          CellularEntry ce;
          ce.f = f;
          ce.lambda = lambda;
          ce.left = L;
          ce.right = R;
          ce.module_vec = std::move(v);
          cells.push_back(std::move(ce));
        }
      }
      strat.push_back(std::move(st));
    }
    Mat M(nlive, cells.size());
    for (std::size_t k = 0; k < cells.size(); ++k)
      for (std::size_t i = 0; i < nlive; ++i) M(i, k) = cells[k].module_vec[i];
    if (cells.size() == nlive) cell_inv = mat_inverse(M);
    cells_built = true;
  }

  Vec cellular_coords(const Vec& module_vec) {
    ensure_cells();
    if (!cell_inv)
      throw std::runtime_error("brauer: weakly cellular basis is not a basis");
    Vec out(cells.size(), Rat(0));
    for (std::size_t i = 0; i < cells.size(); ++i) {
      Rat s = 0;
      for (std::size_t j = 0; j < nlive; ++j)
        if (module_vec[j] != 0) s += (*cell_inv)(i, j) * module_vec[j];
      out[i] = s;
    }
    return out;
  }

  const Stratum& stratum_of(int f, const Multipartition& lambda) {
    ensure_cells();
    for (const auto& st : strat)
      if (st.f == f && st.lambda == lambda) return st;
    throw std::invalid_argument("brauer: unknown stratum");
  }

  // Index of the distinguished delta element (t^lambda, 0, id).
  std::size_t s0_index(const Stratum& st) const {
    DeltaIndex want;
    want.t = initial_and_final_tableaux(st.lambda).first;
    want.xi.assign(r, 0);
    want.d = Permutation::identity(r);
    for (std::size_t i = 0; i < st.delta.size(); ++i)
      if (st.delta[i] == want) return i;
    throw std::logic_error("brauer: distinguished delta index missing");
  }

  const Vec& cell_vec(const Stratum& st, std::size_t li, std::size_t ri) const {
    return cells[st.offset + li * st.delta.size() + ri].module_vec;
  }
};

// ---------------------------------------------------------------------------
// Public interface
// ---------------------------------------------------------------------------

BrauerAlgebra::BrauerAlgebra(BrauerParams p) : p_(std::move(p)) {
  if (p_.a < 1 || p_.r < 1) throw std::invalid_argument("brauer: a, r >= 1");
  if (static_cast<int>(p_.u.size()) != p_.a)
    throw std::invalid_argument("brauer: need exactly a parameters u");
  if (static_cast<int>(p_.omega.size()) < p_.a)
    throw std::invalid_argument("brauer: omega must be given to order >= a");
  eng_ = std::make_shared<Engine>();
  eng_->a = p_.a;
  eng_->r = p_.r;
  eng_->u = p_.u;
  eng_->omega = p_.omega;
  eng_->ngen = 2 * (p_.r - 1) + 1;
  eng_->build();
}

long long BrauerAlgebra::expected_dimension() const {
  long long d = 1;
  for (int i = 0; i < p_.r; ++i) d *= p_.a;
  for (int k = 2 * p_.r - 1; k >= 1; k -= 2) d *= k;
  return d;
}

std::size_t BrauerAlgebra::dimension() const { return eng_->nlive; }

Vec BrauerAlgebra::module_unit() const { return eng_->vec_unit(); }
Vec BrauerAlgebra::module_apply(const Vec& v, const BrauerWord& w) const {
  return eng_->vec_apply(v, w);
}
Vec BrauerAlgebra::module_word(const BrauerWord& w) const {
  return eng_->vec_word(w);
}
Vec BrauerAlgebra::module_mul(const Vec& x, const Vec& y) const {
  return eng_->vec_mul(x, y);
}
Vec BrauerAlgebra::module_tau(const Vec& v) const { return eng_->vec_tau(v); }
RowSpace BrauerAlgebra::two_sided_ideal(const std::vector<Vec>& seeds) const {
  return eng_->ideal(seeds);
}
const std::vector<BrauerWord>& BrauerAlgebra::module_basis_words() const {
  return eng_->live_word;
}

BrauerWord BrauerAlgebra::ef_word(int f) const {
  if (f < 0 || 2 * f > p_.r) throw std::invalid_argument("ef_word: bad f");
  return eng_->ef_word_of(f);
}

const std::vector<BrauerMono>& BrauerAlgebra::monomials() const {
  eng_->ensure_coords();
  return eng_->monos;
}

bool BrauerAlgebra::monomials_independent() const {
  eng_->ensure_coords();
  return eng_->monos.size() == eng_->nlive && eng_->mono_inv.has_value();
}

Vec BrauerAlgebra::monomial_coords(const Vec& module_vec) const {
  return eng_->coords_of(module_vec);
}

Vec BrauerAlgebra::to_module(const BrauerElement& e) const {
  eng_->ensure_coords();
  Vec out(eng_->nlive, Rat(0));
  for (const auto& [m, c] : e.terms) {
    auto it = eng_->mono_index.find(m);
    if (it == eng_->mono_index.end())
      throw std::invalid_argument("brauer: unknown monomial");
    for (std::size_t i = 0; i < eng_->nlive; ++i)
      out[i] += c * eng_->mono_mat(i, it->second);
  }
  return out;
}

BrauerElement BrauerAlgebra::from_module(const Vec& module_vec) const {
  const Vec coords = eng_->coords_of(module_vec);
  BrauerElement e;
  for (std::size_t k = 0; k < coords.size(); ++k)
    e.add_term(eng_->monos[k], coords[k]);
  return e;
}

BrauerElement BrauerAlgebra::one() const {
  return from_module(eng_->vec_unit());
}
BrauerElement BrauerAlgebra::S(int i) const {
  return from_module(eng_->vec_word({Sl(i)}));
}
BrauerElement BrauerAlgebra::E(int i) const {
  return from_module(eng_->vec_word({El(i)}));
}
BrauerElement BrauerAlgebra::X(int j) const {
  return from_module(eng_->vec_word({Xl(j)}));
}
BrauerElement BrauerAlgebra::word_element(const BrauerWord& w) const {
  return from_module(eng_->vec_word(w));
}
BrauerElement BrauerAlgebra::multiply(const BrauerElement& x,
                                      const BrauerElement& y) const {
  return from_module(eng_->vec_mul(to_module(x), to_module(y)));
}
BrauerElement BrauerAlgebra::tau(const BrauerElement& x) const {
  return from_module(eng_->vec_tau(to_module(x)));
}

const std::vector<BrauerAlgebra::CellularEntry>&
BrauerAlgebra::weakly_cellular_basis() const {
  eng_->ensure_cells();
  return eng_->cells;
}

Vec BrauerAlgebra::express_in_cellular(const Vec& module_vec) const {
  return eng_->cellular_coords(module_vec);
}

BrauerAlgebra::CellDatum BrauerAlgebra::cell_module(
    int f, const Multipartition& lambda) const {
  const auto& st = eng_->stratum_of(f, lambda);
  const std::size_t n = st.delta.size();
  const std::size_t s0 = eng_->s0_index(st);
  CellDatum cd;
  cd.f = f;
  cd.lambda = lambda;
  cd.basis = st.delta;
  cd.classification_supported = (p_.omega.empty() ? false : p_.omega[0] != 0);
  cd.gram = Mat(n, n);
  const std::size_t target = st.offset + s0 * n + s0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      // phi(x, y): coefficient of C_{s0,s0} in C_{s0,x} * C_{y,s0}.
      const Vec prod =
          eng_->vec_mul(eng_->cell_vec(st, s0, x), eng_->cell_vec(st, y, s0));
      cd.gram(x, y) = eng_->cellular_coords(prod)[target];
    }
  return cd;
}

Mat BrauerAlgebra::cell_action(int f, const Multipartition& lambda,
                               const BrauerElement& h) const {
  const auto& st = eng_->stratum_of(f, lambda);
  const std::size_t n = st.delta.size();
  const std::size_t s0 = eng_->s0_index(st);
  const Vec hv = to_module(h);
  Mat A(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    const Vec coords =
        eng_->cellular_coords(eng_->vec_mul(eng_->cell_vec(st, s0, x), hv));
    for (std::size_t y = 0; y < n; ++y) A(y, x) = coords[st.offset + s0 * n + y];
  }
  return A;
}

BrauerAlgebra::ModulePresentation BrauerAlgebra::cell_module_presentation(
    int f, const Multipartition& lambda) const {
  ModulePresentation mp;
  mp.dim = eng_->stratum_of(f, lambda).delta.size();
  for (int i = 1; i <= p_.r - 1; ++i)
    mp.s_action.push_back(cell_action(f, lambda, word_element({Sl(i)})));
  for (int i = 1; i <= p_.r - 1; ++i)
    mp.e_action.push_back(cell_action(f, lambda, word_element({El(i)})));
  for (int j = 1; j <= p_.r; ++j)
    mp.x_action.push_back(cell_action(f, lambda, word_element({Xl(j)})));
  return mp;
}

BrauerAlgebra::ModulePresentation BrauerAlgebra::prop_bas_module(
    int f, const Multipartition& lambda) const {
  const int r = p_.r;
  const int m = r - 2 * f;
  if (static_cast<int>(lambda.size()) != m || lambda.level() != p_.a)
    throw std::invalid_argument("prop_bas_module: shape/stratum mismatch");
  Engine& eng = *eng_;
  // Generator E^f m_lambda w_lambda n_{lambda'}.
  Vec v0 = eng.vec_word(eng.ef_word_of(f));
  if (m >= 1) {
    HeckeAlgebra& hk = eng.hecke(m);
    v0 = eng.apply_lifted(v0, hk.m_element(lambda));
    const Permutation wl = d_of(initial_and_final_tableaux(lambda).second);
    BrauerWord ww;
    append_perm_word(ww, wl);
    v0 = eng.vec_apply(v0, ww);
    v0 = eng.apply_lifted(v0, hk.n_element(conjugate(lambda)));
  }
  // Ideal <E^{f+1}> (zero when r - 2(f+1) < 0).
  RowSpace idl(eng.nlive);
  if (r - 2 * (f + 1) >= 0)
    idl = eng.ideal({eng.vec_word(eng.ef_word_of(f + 1))});
  // Span of v0 * B modulo the ideal.
  RowSpace span = idl;
  std::vector<Vec> basis;
  std::vector<Vec> todo{v0};
  while (!todo.empty()) {
    Vec v = std::move(todo.back());
    todo.pop_back();
    if (!span.insert(v)) continue;
    basis.push_back(v);
    for (int g = 0; g < eng.ngen; ++g)
      todo.push_back(eng.compress(eng.apply_gen(eng.decompress(v), g)));
  }
  ModulePresentation mp;
  mp.dim = basis.size();
  Mat B(eng.nlive, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Vec red = idl.reduce(basis[j]);
    for (std::size_t i = 0; i < eng.nlive; ++i) B(i, j) = red[i];
  }
  auto action_of = [&](const BrauerLetter& l) {
    Mat A(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Vec w =
          idl.reduce(eng.compress(eng.apply_letter(eng.decompress(basis[j]), l)));
      const auto sol = solve(B, w);
      if (!sol) throw std::logic_error("prop_bas_module: action not closed");
      for (std::size_t i = 0; i < basis.size(); ++i) A(i, j) = (*sol)[i];
    }
    return A;
  };
  for (int i = 1; i <= r - 1; ++i) mp.s_action.push_back(action_of(Sl(i)));
  for (int i = 1; i <= r - 1; ++i) mp.e_action.push_back(action_of(El(i)));
  for (int j = 1; j <= r; ++j) mp.x_action.push_back(action_of(Xl(j)));
  return mp;
}

}  // namespace cybra
