#pragma once

#include "fewcos/gf2.hpp"

namespace fewcos::rm {

using gf2::Subspace;
using gf2::Word;

// Reed-Muller code RM(r,d) over the point set Omega = F2^d.  Point i of the
// length-2^d truth table is the vector whose coordinates are the binary
// digits of i.
struct RMCode {
  int r = 0;
  int d = 0;
  Subspace space;

  int length() const { return 1 << d; }
};

struct DefectClass {
  int k = 0;
  bool clean = false;
};

// Spanned by the truth tables of the monomials of degree <= r.
RMCode build_rm(int r, int d);

// Algebraic normal form of a truth table: coefficient of the monomial
// prod_{j in S} x_j lands at bit S.  Involutive (Moebius transform).
Word anf(Word truth_table, int d);

// Defect of a codeword of RM(2,d): half the rank of the alternating bilinear
// form of its degree-2 normal form.  Clean iff weight != 2^{d-1}.
DefectClass defect(const RMCode& code, Word a);

// Number of clean words in the coset anchor + a, where anchor is the space
// of RM(1,d) words avoiding point 0.  Equals 2^{2k} for a of defect k.
int coset_clean_count(const RMCode& code, Word a);

// Trace of the sign change at a: 2^d - 2*weight(a).
inline int trace_of_sign(Word a, int d) { return (1 << d) - 2 * gf2::weight(a); }

// RM(1,d) words avoiding point 0 (dimension d).
Subspace rm1_avoiding_origin(int d);

}  // namespace fewcos::rm
