#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cybra/rational.hpp"

namespace cybra {

// ---------------------------------------------------------------------------
// Partitions and multipartitions
// ---------------------------------------------------------------------------

// Weakly decreasing positive parts; no trailing zeros stored.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;
  int rows() const { return static_cast<int>(parts.size()); }
  // parts[i-1] with 1-based i; 0 beyond the last row.
  int part(int i) const;
  Partition conjugate() const;
  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;
  std::string to_string() const;
};

// Level-a tuple of partitions.
struct Multipartition {
  std::vector<Partition> comps;

  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> c) : comps(std::move(c)) {}

  int level() const { return static_cast<int>(comps.size()); }
  int size() const;
  bool operator==(const Multipartition&) const = default;
  auto operator<=>(const Multipartition&) const = default;
  std::string to_string() const;
};

// Component i of the result is the transpose of component a-i+1 of lambda.
Multipartition conjugate(const Multipartition& lambda);

// Dominance order via prefix sums; requires equal level and size.
bool dominance_ge(const Multipartition& lambda, const Multipartition& mu);

// Cumulative component sizes [b_0, ..., b_a].
struct Profile {
  std::vector<int> b;
};
Profile profile_of(const Multipartition& lambda);

// Deterministic total order refining dominance: lambda before mu if
// lambda |> mu strictly, ties broken lexicographically on concatenated parts.
bool total_order_less(const Multipartition& lambda, const Multipartition& mu);

// All partitions of m.
std::vector<Partition> partitions_of(int m);
// All a-multipartitions of m (level a, total size m), in deterministic order.
std::vector<Multipartition> multipartitions_of(int a, int m);

// ---------------------------------------------------------------------------
// Permutations
// ---------------------------------------------------------------------------

// One-line notation on {1,...,r}, stored 0-indexed: img[i] = w(i+1) - 1.
// Products compose left-to-right: (v*w)(i) = w(v(i)), matching right actions.
struct Permutation {
  std::vector<int> img;

  Permutation() = default;
  explicit Permutation(std::vector<int> images) : img(std::move(images)) {}
  static Permutation identity(int r);
  static Permutation transposition(int r, int i, int j);  // 1-based points

  int degree() const { return static_cast<int>(img.size()); }
  int apply(int p) const { return img[p - 1] + 1; }  // 1-based
  Permutation operator*(const Permutation& w) const;  // this first, then w
  Permutation inverse() const;
  bool is_identity() const;
  int length() const;  // inversion count
  int sign() const { return length() % 2 == 0 ? 1 : -1; }
  // Reduced word as a list of adjacent transposition indices s_i (1-based i).
  std::vector<int> reduced_word() const;
  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;
};

std::vector<Permutation> all_permutations(int r);

// Block-reversing permutation of eq-style (b_{i-1}+l) |-> r - b_i + l.
Permutation w_bracket(const Profile& profile, int r);

// ---------------------------------------------------------------------------
// Tableaux
// ---------------------------------------------------------------------------

// Standard tableau: entries 1..m fill the diagram of a multipartition, rows
// and columns strictly increasing within each component.
struct StandardTableau {
  Multipartition shape;
  // rows[c][i][j] = entry in component c, row i, column j (0-indexed).
  std::vector<std::vector<std::vector<int>>> rows;

  bool is_standard() const;
  bool is_row_standard() const;
  // Entry-permuting right action: each entry e becomes w(e).
  StandardTableau acted_by(const Permutation& w) const;
  bool operator==(const StandardTableau&) const = default;
  auto operator<=>(const StandardTableau&) const = default;
  std::string to_string() const;
};

// (t^lambda, t_lambda): the row-filled initial tableau and the final tableau
// (components filled last-to-first, each down its columns).
std::pair<StandardTableau, StandardTableau> initial_and_final_tableaux(
    const Multipartition& lambda);

// The permutation d(s) with t^shape * d(s) = s.
Permutation d_of(const StandardTableau& s);

// All standard tableaux of shape lambda, ordered by their d(s) word.
std::vector<StandardTableau> standard_tableaux(const Multipartition& lambda);

// Number of standard tableaux (by enumeration; sizes here are small).
long long num_standard_tableaux(const Multipartition& lambda);

// Elements of the row stabilizer (Young subgroup) of t^lambda.
std::vector<Permutation> young_subgroup(const Multipartition& lambda, int r);

// ---------------------------------------------------------------------------
// The index set delta(f, lambda)
// ---------------------------------------------------------------------------

struct DeltaIndex {
  StandardTableau t;        // standard lambda-tableau
  std::vector<int> xi;      // length r, entries in [0, a), nonzero only at
                            // positions r-1, r-3, ..., r-2f+1 (1-based)
  Permutation d;            // element of D_r^f
  bool operator==(const DeltaIndex&) const = default;
  auto operator<=>(const DeltaIndex&) const = default;
};

// Coset representatives D_r^f: d such that t^tau * d is row standard with the
// first column of the second component increasing, tau = ((r-2f), (2^f)).
// Filter-based for small r; constructive generator above r = 8 (both agree
// where both run; tested).
std::vector<Permutation> d_r_f(int r, int f);
std::vector<Permutation> d_r_f_filter(int r, int f);       // exposed for tests
std::vector<Permutation> d_r_f_constructive(int r, int f);  // exposed for tests

// All xi in N_a^f (as length-r vectors).
std::vector<std::vector<int>> n_a_f(int a, int r, int f);

// Complete duplicate-free enumeration of delta(f, lambda).
std::vector<DeltaIndex> enumerate_delta(int f, const Multipartition& lambda,
                                        int r, int a);

// ---------------------------------------------------------------------------
// Restrictedness
// ---------------------------------------------------------------------------

// Orbit-split Kleshchev-style condition: split u into integer-difference
// orbits, sort each orbit descending, and require
// lambda^{(i)}_{u_i - u_{i+1} + j} <= lambda^{(i+1)}_j within each orbit.
bool u_restricted(const Multipartition& lambda, const std::vector<Rat>& u);

// ---------------------------------------------------------------------------
// Strata
// ---------------------------------------------------------------------------

// All (f, lambda) with 0 <= f <= r/2 and |lambda| = r - 2f, listed so that
// bigger strata (order: f greater, then dominance) come first.
std::vector<std::pair<int, Multipartition>> strata(int a, int r);

// (f,lambda) |> (h,mu): f > h, or f == h and lambda |> mu.
bool stratum_ge(const std::pair<int, Multipartition>& x,
                const std::pair<int, Multipartition>& y);

}  // namespace cybra
