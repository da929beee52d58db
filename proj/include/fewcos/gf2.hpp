#pragma once

#include <cstdint>
#include <optional>
#include <vector>

// Exact linear algebra over F2 on bit words of length <= 64.
// Bit i of a word is coordinate i (bit 0 least significant).

namespace fewcos::gf2 {

using Word = std::uint64_t;

inline int weight(Word w) { return __builtin_popcountll(w); }

struct Matrix {
  std::vector<Word> rows;
  int ncols = 0;

  Matrix() = default;
  Matrix(std::vector<Word> r, int n) : rows(std::move(r)), ncols(n) {}
};

// A subspace of F2^ambient_dim held as a canonical reduced echelon basis.
// Pivots are the highest set bits, each eliminated from all other rows and
// rows sorted by descending pivot.  Reducing any vector against the basis
// yields the smallest integer in its coset, so representatives are canonical.
struct Subspace {
  std::vector<Word> basis;
  int ambient_dim = 0;

  int dim() const { return static_cast<int>(basis.size()); }
  std::uint64_t size() const { return std::uint64_t{1} << basis.size(); }

  // Smallest member of v + this, as an integer.
  Word reduce(Word v) const {
    for (Word b : basis) {
      Word pivot = Word{1} << (63 - __builtin_clzll(b));
      if (v & pivot) v ^= b;
    }
    return v;
  }

  bool contains(Word v) const { return reduce(v) == 0; }

  // Enumerate all 2^dim members in a deterministic order.
  std::vector<Word> elements() const;
};

Subspace rref(const Matrix& m);
Subspace span(const std::vector<Word>& gens, int ncols);
int rank(const Matrix& m);

bool subspace_leq(const Subspace& b, const Subspace& a);

// x with x * m = t (row combination), if t lies in the row space of m.
std::optional<Word> solve(const Matrix& m, Word t);

// Canonical representatives of the cosets of b in a (b <= a required).
// Each representative is the smallest integer in its coset.
std::vector<Word> coset_reps(const Subspace& a, const Subspace& b);

// A fixed lift basis for a/b: rows of a's basis that are independent mod b,
// reduced mod b.  Deterministic given a and b.
std::vector<Word> quotient_basis(const Subspace& a, const Subspace& b);

// Coordinates of v + b in the quotient_basis of a/b, packed as a word.
// Requires v in a.
Word quotient_coords(const Subspace& a, const Subspace& b, Word v);

// Value of quotient coordinates, back in a (canonical coset rep).
Word quotient_lift(const Subspace& a, const Subspace& b, Word coords);

// Small dense square-matrix helpers used by the cocycle solver.
// Matrices act on row vectors from the right: image of v is v * m.
Word mat_apply(const std::vector<Word>& m, Word v);
std::vector<Word> mat_mul(const std::vector<Word>& x, const std::vector<Word>& y);
std::vector<Word> mat_identity(int n);
std::optional<std::vector<Word>> mat_inverse(const std::vector<Word>& m);

// Basis of {x : x * m = 0}.
std::vector<Word> nullspace(const Matrix& m);

}  // namespace fewcos::gf2
