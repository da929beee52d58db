#include "fewcos/rm.hpp"

#include <stdexcept>

namespace fewcos::rm {

RMCode build_rm(int r, int d) {
  if (r < 0 || d < 0 || r > d || d > 6)
    throw std::invalid_argument("build_rm: need 0 <= r <= d <= 6");
  int n = 1 << d;
  std::vector<Word> gens;
  for (int s = 0; s < (1 << d); ++s) {
    if (gf2::weight(static_cast<Word>(s)) > r) continue;
    Word tt = 0;
    for (int i = 0; i < n; ++i) {
      if ((i & s) == s) tt |= Word{1} << i;  // monomial prod_{j in s} x_j
    }
    gens.push_back(tt);
  }
  RMCode code;
  code.r = r;
  code.d = d;
  code.space = gf2::span(gens, n);
  return code;
}

Word anf(Word tt, int d) {
  for (int j = 0; j < d; ++j) {
    int n = 1 << d;
    for (int i = 0; i < n; ++i) {
      if (i & (1 << j)) {
        if (tt & (Word{1} << (i ^ (1 << j)))) tt ^= Word{1} << i;
      }
    }
  }
  return tt;
}

DefectClass defect(const RMCode& code, Word a) {
  if (code.r != 2) throw std::invalid_argument("defect: needs an RM(2,d) code");
  if (!code.space.contains(a)) throw std::invalid_argument("defect: word not in RM(2,d)");
  int d = code.d;
  Word coeffs = anf(a, d);
  // Alternating form from the degree-2 coefficients.
  std::vector<Word> form(d, 0);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      if (coeffs & (Word{1} << ((1 << i) | (1 << j)))) {
        form[i] |= Word{1} << j;
        form[j] |= Word{1} << i;
      }
    }
  }
  int rk = gf2::rank(gf2::Matrix{form, d});
  DefectClass dc;
  dc.k = rk / 2;
  dc.clean = gf2::weight(a) != (1 << (d - 1));
  return dc;
}

Subspace rm1_avoiding_origin(int d) {
  RMCode rm1 = build_rm(1, d);
  std::vector<Word> gens;
  for (Word b : rm1.space.basis) {
    if (!(b & 1)) gens.push_back(b);
  }
  // Basis rows containing point 0 pair up: their sums avoid it.
  Word with0 = 0;
  for (Word b : rm1.space.basis) {
    if (b & 1) {
      if (with0) gens.push_back(with0 ^ b);
      with0 = b;
    }
  }
  return gf2::span(gens, 1 << d);
}

int coset_clean_count(const RMCode& code, Word a) {
  if (!code.space.contains(a) || build_rm(1, code.d).space.contains(a))
    throw std::invalid_argument("coset_clean_count: need a in RM(2,d) outside RM(1,d)");
  Subspace anchor = rm1_avoiding_origin(code.d);
  int half = 1 << (code.d - 1);
  int count = 0;
  for (Word l : anchor.elements()) {
    if (gf2::weight(l ^ a) != half) ++count;
  }
  return count;
}

}  // namespace fewcos::rm
