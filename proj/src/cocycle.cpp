#include "fewcos/cocycle.hpp"

#include <algorithm>
#include <stdexcept>

#include "fewcos/rm.hpp"

namespace fewcos::coc {

namespace {

std::string perm_key(const CoordPerm& p) {
  return std::string(reinterpret_cast<const char*>(p.img.data()), p.img.size());
}

// Kernel basis of a list of linear forms over nvars <= 64 variables:
// all k with <form, k> = 0 for every form.
std::vector<Word> kernel_of_forms(std::vector<Word> forms, int nvars) {
  std::vector<Word> pivot_rows;
  std::vector<int> pivot_cols;
  for (Word f : forms) {
    for (std::size_t j = 0; j < pivot_rows.size(); ++j) {
      if (f & (Word{1} << pivot_cols[j])) f ^= pivot_rows[j];
    }
    if (f) {
      pivot_rows.push_back(f);
      pivot_cols.push_back(__builtin_ctzll(f));
    }
  }
  // Back-eliminate.
  for (std::size_t i = 0; i < pivot_rows.size(); ++i) {
    for (std::size_t j = 0; j < pivot_rows.size(); ++j) {
      if (i != j && (pivot_rows[j] & (Word{1} << pivot_cols[i])))
        pivot_rows[j] ^= pivot_rows[i];
    }
  }
  std::vector<bool> is_pivot(nvars, false);
  for (int c : pivot_cols) is_pivot[c] = true;
  std::vector<Word> basis;
  for (int free = 0; free < nvars; ++free) {
    if (is_pivot[free]) continue;
    Word k = Word{1} << free;
    for (std::size_t j = 0; j < pivot_rows.size(); ++j) {
      if (pivot_rows[j] & (Word{1} << free)) k |= Word{1} << pivot_cols[j];
    }
    basis.push_back(k);
  }
  return basis;
}

}  // namespace

void ModuleAction::enumerate(std::uint64_t cap) {
  if (!elements.empty()) return;
  if (gens.empty()) throw std::invalid_argument("ModuleAction: no generators");
  int n = gens[0].size();
  elements.push_back(CoordPerm::identity(n));
  matrices.push_back(gf2::mat_identity(module_dim));
  index_[perm_key(elements[0])] = 0;
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      CoordPerm next = elements[head].then(gens[s]);
      auto mat = gf2::mat_mul(matrices[head], gen_matrices[s]);
      auto [it, fresh] = index_.try_emplace(perm_key(next),
                                            static_cast<int>(elements.size()));
      if (fresh) {
        if (elements.size() + 1 > cap)
          throw mono::ClosureCap("ModuleAction: enumeration cap exceeded");
        elements.push_back(std::move(next));
        matrices.push_back(std::move(mat));
      } else if (matrices[it->second] != mat) {
        throw std::logic_error("ModuleAction: inconsistent generator matrices");
      }
    }
  }
}

int ModuleAction::index_of(const CoordPerm& p) const {
  auto it = index_.find(perm_key(p));
  if (it == index_.end()) throw std::invalid_argument("ModuleAction: element not in group");
  return it->second;
}

ModuleAction quotient_codeword_action(const std::vector<CoordPerm>& gens,
                                      const Subspace& a, const Subspace& b) {
  ModuleAction act;
  act.gens = gens;
  auto qb = gf2::quotient_basis(a, b);
  act.module_dim = static_cast<int>(qb.size());
  for (const CoordPerm& g : gens) {
    std::vector<Word> mat(qb.size());
    for (std::size_t j = 0; j < qb.size(); ++j) {
      Word img = g.image_of_set(qb[j]);
      mat[j] = gf2::quotient_coords(a, b, img);
    }
    act.gen_matrices.push_back(std::move(mat));
  }
  return act;
}

bool Derivation::is_zero() const {
  return std::all_of(table.begin(), table.end(), [](Word w) { return w == 0; });
}

Derivation derivation_from_gen_values(const ModuleAction& action,
                                      const std::vector<Word>& gen_values) {
  Derivation f;
  f.action = &action;
  f.gen_values = gen_values;
  f.table.assign(action.elements.size(), 0);
  std::vector<bool> known(action.elements.size(), false);
  known[0] = true;
  // f(x s) = f(x) + f(s) * x^{-1}
  for (std::size_t head = 0; head < action.elements.size(); ++head) {
    auto inv = gf2::mat_inverse(action.matrices[head]);
    for (std::size_t s = 0; s < action.gens.size(); ++s) {
      int z = action.index_of(action.elements[head].then(action.gens[s]));
      Word v = f.table[head] ^ gf2::mat_apply(*inv, gen_values[s]);
      if (!known[z]) {
        f.table[z] = v;
        known[z] = true;
      }
    }
  }
  return f;
}

std::vector<Derivation> z1_basis(ModuleAction& action) {
  action.enumerate();
  const int n = action.module_dim;
  const int ngens = static_cast<int>(action.gens.size());
  const int nvars = ngens * n;
  if (nvars > 64) throw std::invalid_argument("z1_basis: too many unknowns");

  // Symbolic BFS: expr[x][c] is the linear form (over the unknown generator
  // values) of component c of f(x).  Cayley edges to known elements yield
  // constraints.
  std::vector<std::vector<Word>> expr(action.elements.size(),
                                      std::vector<Word>(n, 0));
  std::vector<bool> known(action.elements.size(), false);
  known[0] = true;
  std::vector<Word> constraints;
  for (std::size_t head = 0; head < action.elements.size(); ++head) {
    auto inv = gf2::mat_inverse(action.matrices[head]);
    for (int s = 0; s < ngens; ++s) {
      int z = action.index_of(action.elements[head].then(action.gens[s]));
      // f(s) * M(x)^{-1}: component c picks unknown (s,r) when row r of the
      // inverse has bit c.
      std::vector<Word> e = expr[head];
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          if ((*inv)[r] & (Word{1} << c)) e[c] ^= Word{1} << (s * n + r);
        }
      }
      if (!known[z]) {
        expr[z] = std::move(e);
        known[z] = true;
      } else {
        for (int c = 0; c < n; ++c) {
          Word diff = e[c] ^ expr[z][c];
          if (diff) constraints.push_back(diff);
        }
      }
    }
  }
  std::vector<Word> sols = kernel_of_forms(std::move(constraints), nvars);
  std::vector<Derivation> basis;
  for (Word k : sols) {
    std::vector<Word> gv(ngens, 0);
    for (int s = 0; s < ngens; ++s) gv[s] = (k >> (s * n)) & ((Word{1} << n) - 1);
    basis.push_back(derivation_from_gen_values(action, gv));
  }
  return basis;
}

Derivation inner_derivation(const ModuleAction& action, Word a) {
  Derivation f;
  f.action = &action;
  f.table.resize(action.elements.size());
  for (std::size_t i = 0; i < action.elements.size(); ++i) {
    auto inv = gf2::mat_inverse(action.matrices[i]);
    f.table[i] = a ^ gf2::mat_apply(*inv, a);
  }
  for (const CoordPerm& g : action.gens)
    f.gen_values.push_back(f.table[action.index_of(g)]);
  return f;
}

std::vector<Derivation> b1_basis(ModuleAction& action) {
  action.enumerate();
  std::vector<Derivation> out;
  std::vector<std::vector<Word>> indep;  // gen-value tuples seen so far
  gf2::Subspace seen;                    // packed gen values, for independence
  seen.ambient_dim = 64;
  std::vector<Word> acc;
  for (int c = 0; c < action.module_dim; ++c) {
    Derivation f = inner_derivation(action, Word{1} << c);
    Word packed = 0;
    for (std::size_t s = 0; s < f.gen_values.size(); ++s)
      packed |= f.gen_values[s] << (s * action.module_dim);
    if (!seen.contains(packed)) {
      acc.push_back(packed);
      seen = gf2::span(acc, 64);
      out.push_back(std::move(f));
    }
  }
  return out;
}

int h1_dim(ModuleAction& action) {
  return static_cast<int>(z1_basis(action).size() - b1_basis(action).size());
}

Derivation add(const Derivation& f, const Derivation& g) {
  Derivation h = f;
  for (std::size_t i = 0; i < h.table.size(); ++i) h.table[i] ^= g.table[i];
  for (std::size_t s = 0; s < h.gen_values.size(); ++s)
    h.gen_values[s] ^= g.gen_values[s];
  return h;
}

std::vector<int> kernel(const Derivation& f) {
  std::vector<int> ker;
  for (std::size_t i = 0; i < f.table.size(); ++i)
    if (f.table[i] == 0) ker.push_back(static_cast<int>(i));
  // Closure check (sampled for large kernels).
  const ModuleAction& act = *f.action;
  std::size_t step = ker.size() > 600 ? ker.size() / 600 + 1 : 1;
  for (std::size_t i = 0; i < ker.size(); i += step) {
    for (std::size_t j = 0; j < ker.size(); j += step) {
      int z = act.index_of(act.elements[ker[i]].then(act.elements[ker[j]]));
      if (f.table[z] != 0) throw std::logic_error("kernel: not closed");
    }
  }
  return ker;
}

bool is_inner(const Derivation& f, ModuleAction& action) {
  // Solve f(s) = a + a * M(s)^{-1} for a over the generators.
  const int n = action.module_dim;
  std::vector<Word> rows;  // equations: <coeff, a> = rhs, packed rhs at bit n
  std::vector<Word> eq_coeff;
  std::vector<int> eq_rhs;
  for (std::size_t s = 0; s < action.gens.size(); ++s) {
    auto inv = gf2::mat_inverse(action.gen_matrices[s]);
    for (int c = 0; c < n; ++c) {
      Word coeff = Word{1} << c;  // a_c from the identity part
      for (int r = 0; r < n; ++r)
        if ((*inv)[r] & (Word{1} << c)) coeff ^= Word{1} << r;
      eq_coeff.push_back(coeff);
      eq_rhs.push_back((f.gen_values[s] >> c) & 1);
    }
  }
  // Gaussian elimination on the affine system.
  std::vector<std::pair<Word, int>> pivots;
  for (std::size_t i = 0; i < eq_coeff.size(); ++i) {
    Word c = eq_coeff[i];
    int r = eq_rhs[i];
    for (auto& [pc, pr] : pivots) {
      if (c & (Word{1} << __builtin_ctzll(pc))) {
        c ^= pc;
        r ^= pr;
      }
    }
    if (c) {
      pivots.emplace_back(c, r);
    } else if (r) {
      return false;
    }
  }
  return true;
}

std::optional<Derivation> select_noninner_with_kernel_index(
    ModuleAction& action, const Derivation& noninner_rep, std::uint64_t index) {
  auto b1 = b1_basis(action);
  std::uint64_t target = action.order() / index;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << b1.size()); ++c) {
    Derivation cand = noninner_rep;
    for (std::size_t i = 0; i < b1.size(); ++i)
      if (c & (std::uint64_t{1} << i)) cand = add(cand, b1[i]);
    std::uint64_t ker = 0;
    for (Word v : cand.table)
      if (v == 0) ++ker;
    if (ker == target) return cand;
  }
  return std::nullopt;
}

int count_with_kernel_index(ModuleAction& action, const Derivation& noninner_rep,
                            std::uint64_t index) {
  auto b1 = b1_basis(action);
  std::uint64_t target = action.order() / index;
  int count = 0;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << b1.size()); ++c) {
    Derivation cand = noninner_rep;
    for (std::size_t i = 0; i < b1.size(); ++i)
      if (c & (std::uint64_t{1} << i)) cand = add(cand, b1[i]);
    std::uint64_t ker = 0;
    for (Word v : cand.table)
      if (v == 0) ++ker;
    if (ker == target) ++count;
  }
  return count;
}

NearDerivation lift_to_near_derivation(const Derivation& fbar, const Subspace& a,
                                       const Subspace& b) {
  NearDerivation nd;
  nd.quotient = fbar;
  nd.a = a;
  nd.b = b;
  nd.lifted.reserve(fbar.table.size());
  for (Word coords : fbar.table)
    nd.lifted.push_back(gf2::quotient_lift(a, b, coords));
  return nd;
}

UnidefectReport unidefect_check(const std::vector<Word>& diag_parts, int d, int k) {
  rm::RMCode rm2 = rm::build_rm(2, d);
  rm::RMCode rm1 = rm::build_rm(1, d);
  const int half = 1 << (d - 1);
  const int off = 1 << (d - k - 1);
  bool strong = true;
  for (Word part : diag_parts) {
    bool s_ok = rm1.space.contains(part) ||
                (rm2.space.contains(part) && rm::defect(rm2, part).k == k);
    if (s_ok) continue;
    strong = false;
    int w = gf2::weight(part);
    bool w_ok = w == 0 || w == (1 << d) || w == half || w == half - off || w == half + off;
    if (!w_ok) {
      return {Unidefect::kFail, part};
    }
  }
  return {strong ? Unidefect::kStrong : Unidefect::kWeak, std::nullopt};
}

std::vector<Word> diagonal_parts(const Subspace& lower_space, const NearDerivation& nd) {
  std::vector<Word> values(nd.lifted);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<Word> parts;
  for (Word l : lower_space.elements())
    for (Word v : values) parts.push_back(l ^ v);
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  return parts;
}

BuiltGroup group_from_near_derivation(const Subspace& lower_space,
                                      const NearDerivation& nd, int omega_dim) {
  BuiltGroup bg;
  const ModuleAction& act = *nd.quotient.action;
  int n = 1 << omega_dim;
  for (Word b : lower_space.basis) bg.generators.push_back(mono::MonoElt::diag(b, n));
  for (const CoordPerm& s : act.gens) {
    Word lift = nd.lifted[act.index_of(s)];
    bg.generators.push_back(
        mono::compose(mono::MonoElt::diag(lift, n), mono::MonoElt::of_perm(s)));
  }
  std::uint64_t ker = 0;
  for (Word v : nd.quotient.table)
    if (v == 0) ++ker;
  bg.order = lower_space.size() * act.order();
  bg.predicted_orbit = lower_space.size() * (act.order() / ker);
  return bg;
}

}  // namespace fewcos::coc
