#include "fewcos/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace fewcos::gf2 {

namespace {

int highbit(Word w) { return 63 - __builtin_clzll(w); }

}  // namespace

std::vector<Word> Subspace::elements() const {
  std::vector<Word> out;
  out.reserve(std::size_t{1} << basis.size());
  out.push_back(0);
  for (Word b : basis) {
    std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] ^ b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subspace rref(const Matrix& m) {
  Subspace s;
  s.ambient_dim = m.ncols;
  std::vector<Word> rows;
  for (Word r : m.rows) {
    for (Word b : rows) {
      if (r & (Word{1} << highbit(b))) r ^= b;
    }
    if (r) rows.push_back(r);
  }
  // Back-eliminate so every pivot occurs in exactly one row.
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (i != j && (rows[j] & (Word{1} << highbit(rows[i])))) rows[j] ^= rows[i];
    }
  }
  std::sort(rows.begin(), rows.end(), std::greater<Word>());
  s.basis = std::move(rows);
  return s;
}

Subspace span(const std::vector<Word>& gens, int ncols) {
  return rref(Matrix{gens, ncols});
}

int rank(const Matrix& m) { return rref(m).dim(); }

bool subspace_leq(const Subspace& b, const Subspace& a) {
  return std::all_of(b.basis.begin(), b.basis.end(),
                     [&](Word v) { return a.contains(v); });
}

std::optional<Word> solve(const Matrix& m, Word t) {
  if (m.rows.size() > 64) throw std::invalid_argument("solve: too many rows");
  // Row-reduce [m | e_i] keeping track of combinations.
  std::vector<Word> rows, combos;
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    Word r = m.rows[i], c = Word{1} << i;
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (r & (Word{1} << highbit(rows[j]))) {
        r ^= rows[j];
        c ^= combos[j];
      }
    }
    if (r) {
      rows.push_back(r);
      combos.push_back(c);
    }
  }
  Word c = 0;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (t & (Word{1} << highbit(rows[j]))) {
      t ^= rows[j];
      c ^= combos[j];
    }
  }
  if (t) return std::nullopt;
  return c;
}

std::vector<Word> quotient_basis(const Subspace& a, const Subspace& b) {
  std::vector<Word> lifted;
  std::vector<Word> acc = b.basis;
  Subspace grow = b;
  for (Word r : a.basis) {
    Word red = grow.reduce(r);
    if (red) {
      lifted.push_back(b.reduce(r));
      acc.push_back(red);
      grow = span(acc, a.ambient_dim);
    }
  }
  return lifted;
}

std::vector<Word> coset_reps(const Subspace& a, const Subspace& b) {
  if (!subspace_leq(b, a)) throw std::invalid_argument("coset_reps: b not within a");
  std::vector<Word> qb = quotient_basis(a, b);
  std::vector<Word> reps{b.reduce(0)};
  for (Word v : qb) {
    std::size_t n = reps.size();
    for (std::size_t i = 0; i < n; ++i) reps.push_back(b.reduce(reps[i] ^ v));
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

Word quotient_coords(const Subspace& a, const Subspace& b, Word v) {
  if (!a.contains(v)) throw std::invalid_argument("quotient_coords: v not in a");
  std::vector<Word> qb = quotient_basis(a, b);
  // Solve v = sum coords_i * qb_i modulo b: express v in the basis
  // (qb, b.basis) and keep the qb coefficients.
  Matrix m;
  m.ncols = a.ambient_dim;
  m.rows = qb;
  m.rows.insert(m.rows.end(), b.basis.begin(), b.basis.end());
  auto x = solve(m, v);
  if (!x) throw std::logic_error("quotient_coords: inconsistent subspaces");
  return *x & ((Word{1} << qb.size()) - 1);
}

Word quotient_lift(const Subspace& a, const Subspace& b, Word coords) {
  std::vector<Word> qb = quotient_basis(a, b);
  Word acc = 0;
  for (std::size_t i = 0; i < qb.size(); ++i)
    if (coords & (Word{1} << i)) acc ^= qb[i];
  return b.reduce(acc);
}

Word mat_apply(const std::vector<Word>& m, Word v) {
  Word out = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (v & (Word{1} << i)) out ^= m[i];
  return out;
}

std::vector<Word> mat_mul(const std::vector<Word>& x, const std::vector<Word>& y) {
  std::vector<Word> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = mat_apply(y, x[i]);
  return out;
}

std::vector<Word> mat_identity(int n) {
  std::vector<Word> id(n);
  for (int i = 0; i < n; ++i) id[i] = Word{1} << i;
  return id;
}

std::optional<std::vector<Word>> mat_inverse(const std::vector<Word>& m) {
  int n = static_cast<int>(m.size());
  std::vector<Word> a = m, inv = mat_identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (a[r] & (Word{1} << col)) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return std::nullopt;
    std::swap(a[col], a[piv]);
    std::swap(inv[col], inv[piv]);
    for (int r = 0; r < n; ++r) {
      if (r != col && (a[r] & (Word{1} << col))) {
        a[r] ^= a[col];
        inv[r] ^= inv[col];
      }
    }
  }
  return inv;
}

std::vector<Word> nullspace(const Matrix& m) {
  // Transpose-free: find all x with sum_i x_i * row_i = 0 by echelonizing
  // rows with combination tracking; free combinations give the nullspace.
  std::vector<Word> rows, combos;
  std::vector<Word> null_basis;
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    Word r = m.rows[i], c = Word{1} << i;
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (r && (r & (Word{1} << highbit(rows[j])))) {
        r ^= rows[j];
        c ^= combos[j];
      }
    }
    if (r) {
      rows.push_back(r);
      combos.push_back(c);
    } else {
      null_basis.push_back(c);
    }
  }
  return null_basis;
}

}  // namespace fewcos::gf2
