#include "fewcos/sphere.hpp"

#include <algorithm>
#include <stdexcept>

namespace fewcos::sphere {

std::int64_t inner(const std::vector<int>& x, const std::vector<int>& y) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::int64_t{x[i]} * y[i];
  return s;
}

SphericalCode make_code(std::vector<std::vector<int>> vectors) {
  if (vectors.empty()) throw std::invalid_argument("make_code: empty");
  SphericalCode c;
  c.dim = static_cast<int>(vectors[0].size());
  c.norm_sq = inner(vectors[0], vectors[0]);
  if (c.norm_sq <= 0) throw std::invalid_argument("make_code: zero vector");
  std::sort(vectors.begin(), vectors.end());
  for (std::size_t i = 0; i + 1 < vectors.size(); ++i) {
    if (vectors[i] == vectors[i + 1])
      throw std::invalid_argument("make_code: duplicate vector");
  }
  for (const auto& v : vectors) {
    if (inner(v, v) != c.norm_sq)
      throw std::invalid_argument("make_code: mixed norms");
  }
  c.vectors = std::move(vectors);
  return c;
}

std::set<Rat> cosine_set(const SphericalCode& c) {
  std::set<std::int64_t> ips;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      ips.insert(inner(c.vectors[i], c.vectors[j]));
  std::set<Rat> out;
  for (std::int64_t ip : ips) out.insert(Rat(ip, c.norm_sq));
  return out;
}

SphericalCode reduce(const SphericalCode& c, const std::vector<int>& drop) {
  std::vector<bool> dropped(c.dim, false);
  for (int d : drop) dropped[d] = true;
  for (int d : drop) {
    for (const auto& v : c.vectors) {
      if (v[d] != c.vectors[0][d])
        throw std::invalid_argument("reduce: vectors disagree on dropped coordinate " +
                                    std::to_string(d));
    }
  }
  std::vector<std::vector<int>> vecs;
  for (const auto& v : c.vectors) {
    std::vector<int> w;
    for (int i = 0; i < c.dim; ++i)
      if (!dropped[i]) w.push_back(v[i]);
    vecs.push_back(std::move(w));
  }
  return make_code(std::move(vecs));
}

IpInvariantReport orbit_ip_invariants(
    const SphericalCode& c, const std::vector<std::vector<std::size_t>>& parts) {
  IpInvariantReport rep;
  std::vector<int> part_of(c.size(), -1);
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (std::size_t i : parts[p]) part_of[i] = static_cast<int>(p);
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      std::int64_t ip = inner(c.vectors[i], c.vectors[j]);
      if (part_of[i] == part_of[j])
        rep.within.insert(ip);
      else
        rep.cross.insert(ip);
    }
  }
  return rep;
}

BinaryCode to_binary(const SphericalCode& c) {
  if (c.dim > 32) throw std::invalid_argument("to_binary: dimension too large");
  BinaryCode b;
  b.length = c.dim;
  for (const auto& v : c.vectors) {
    std::uint32_t w = 0;
    for (int i = 0; i < c.dim; ++i) {
      if (v[i] == -1)
        w |= 1u << i;
      else if (v[i] != 1)
        throw std::invalid_argument("to_binary: non +-1 coordinate");
    }
    b.words.push_back(w);
  }
  std::sort(b.words.begin(), b.words.end());
  b.words.erase(std::unique(b.words.begin(), b.words.end()), b.words.end());
  if (b.words.size() != c.size()) throw std::logic_error("to_binary: collision");
  return b;
}

SphericalCode from_binary(const BinaryCode& b) {
  std::vector<std::vector<int>> vecs;
  for (std::uint32_t w : b.words) {
    std::vector<int> v(b.length);
    for (int i = 0; i < b.length; ++i) v[i] = (w & (1u << i)) ? -1 : 1;
    vecs.push_back(std::move(v));
  }
  return make_code(std::move(vecs));
}

int min_distance(const BinaryCode& b) {
  int best = b.length + 1;
  for (std::size_t i = 0; i < b.words.size(); ++i)
    for (std::size_t j = i + 1; j < b.words.size(); ++j)
      best = std::min(best, __builtin_popcount(b.words[i] ^ b.words[j]));
  return best;
}

std::map<int, std::int64_t> distance_distribution_from(const BinaryCode& b,
                                                       std::uint32_t word) {
  std::map<int, std::int64_t> hist;
  for (std::uint32_t w : b.words) ++hist[__builtin_popcount(w ^ word)];
  return hist;
}

std::map<int, std::int64_t> distance_distribution(const BinaryCode& b) {
  std::map<int, std::int64_t> hist;
  for (std::size_t i = 0; i < b.words.size(); ++i)
    for (std::size_t j = 0; j < b.words.size(); ++j)
      ++hist[__builtin_popcount(b.words[i] ^ b.words[j])];
  return hist;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> nonlinearity_witness(
    const BinaryCode& b) {
  std::vector<bool> member(std::size_t{1} << b.length, false);
  for (std::uint32_t w : b.words) member[w] = true;
  for (std::uint32_t u : b.words)
    for (std::uint32_t w : b.words)
      if (!member[u ^ w]) return std::make_pair(u, w);
  return std::nullopt;
}

SchemeReport association_scheme_check(const SphericalCode& c) {
  SchemeReport rep;
  const std::size_t n = c.size();
  // Relation index per ordered pair; identity relation is 0.
  std::vector<std::int64_t> values{c.norm_sq};
  std::set<std::int64_t> others;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      others.insert(inner(c.vectors[i], c.vectors[j]));
  values.insert(values.end(), others.begin(), others.end());
  rep.relation_values = values;
  const std::size_t nr = values.size();
  auto rel_of = [&](std::int64_t ip) {
    for (std::size_t r = 0; r < nr; ++r)
      if (values[r] == ip) return r;
    throw std::logic_error("scheme: unknown inner product");
  };
  std::vector<std::vector<std::uint8_t>> rel(n, std::vector<std::uint8_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rel[i][j] = static_cast<std::uint8_t>(rel_of(inner(c.vectors[i], c.vectors[j])));

  rep.numbers.assign(nr, std::vector<std::vector<std::int64_t>>(
                             nr, std::vector<std::int64_t>(nr, -1)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t cidx = rel[i][j];
      std::vector<std::vector<std::int64_t>> counts(
          nr, std::vector<std::int64_t>(nr, 0));
      for (std::size_t z = 0; z < n; ++z) ++counts[rel[i][z]][rel[z][j]];
      for (std::size_t a = 0; a < nr; ++a) {
        for (std::size_t b2 = 0; b2 < nr; ++b2) {
          std::int64_t& slot = rep.numbers[cidx][a][b2];
          if (slot < 0) {
            slot = counts[a][b2];
          } else if (slot != counts[a][b2]) {
            rep.is_scheme = false;
            rep.violation = std::make_pair(i, j);
            return rep;
          }
        }
      }
    }
  }
  rep.is_scheme = true;
  return rep;
}

bool is_binary_automorphism(const BinaryCode& b, const std::vector<int>& perm) {
  std::vector<bool> member(std::size_t{1} << b.length, false);
  for (std::uint32_t w : b.words) member[w] = true;
  for (std::uint32_t w : b.words) {
    std::uint32_t img = 0;
    for (int i = 0; i < b.length; ++i)
      if (w & (1u << i)) img |= 1u << perm[i];
    if (!member[img]) return false;
  }
  return true;
}

namespace {

struct AutSearch {
  const BinaryCode& code;
  int n;
  std::vector<bool> member;
  // Pair invariant: number of minimum-weight words containing both i and j
  // (i == j gives the point count).
  std::vector<std::vector<int>> pair_inv;
  std::vector<int> coord_order;  // branch order, rarest class first
  std::uint64_t nodes = 0, budget;
  std::vector<std::vector<int>> autos;

  AutSearch(const BinaryCode& b, std::uint64_t nb) : code(b), n(b.length), budget(nb) {
    member.assign(std::size_t{1} << n, false);
    for (std::uint32_t w : code.words) member[w] = true;
    int minw = n + 1;
    for (std::uint32_t w : code.words)
      if (w && __builtin_popcount(w) < minw) minw = __builtin_popcount(w);
    pair_inv.assign(n, std::vector<int>(n, 0));
    for (std::uint32_t w : code.words) {
      if (__builtin_popcount(w) != minw) continue;
      for (int i = 0; i < n; ++i) {
        if (!(w & (1u << i))) continue;
        for (int j = 0; j < n; ++j)
          if (w & (1u << j)) ++pair_inv[i][j];
      }
    }
    coord_order.resize(n);
    for (int i = 0; i < n; ++i) coord_order[i] = i;
    // Branch first on coordinates whose diagonal invariant class is rarest.
    std::vector<int> freq(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (pair_inv[j][j] == pair_inv[i][i]) ++freq[i];
    std::stable_sort(coord_order.begin(), coord_order.end(),
                     [&](int a, int b) { return freq[a] < freq[b]; });
  }

  bool full_check(const std::vector<int>& perm) {
    for (std::uint32_t w : code.words) {
      std::uint32_t img = 0;
      for (int i = 0; i < n; ++i)
        if (w & (1u << i)) img |= 1u << perm[i];
      if (!member[img]) return false;
    }
    return true;
  }

  // Projection refinement: a partial map extends to an automorphism only if
  // the words project onto the assigned source coordinates with the same
  // (pattern, weight) multiset as onto the assigned target coordinates.
  bool projection_ok(int depth, const std::vector<int>& perm) {
    std::map<std::pair<std::uint32_t, int>, int> delta;
    for (std::uint32_t w : code.words) {
      int wt = __builtin_popcount(w);
      std::uint32_t a = 0, b = 0;
      for (int t = 0; t < depth; ++t) {
        int j = coord_order[t];
        if (w >> j & 1) a |= 1u << t;
        if (w >> perm[j] & 1) b |= 1u << t;
      }
      ++delta[{a, wt}];
      --delta[{b, wt}];
    }
    for (const auto& [k, v] : delta)
      if (v != 0) return false;
    return true;
  }

  void dfs(int depth, std::vector<int>& perm, std::vector<bool>& used) {
    if (++nodes > budget) throw std::runtime_error("automorphism search: node budget exceeded");
    if (depth == n) {
      if (full_check(perm)) autos.push_back(perm);
      return;
    }
    int i = coord_order[depth];
    for (int img = 0; img < n; ++img) {
      if (used[img]) continue;
      if (pair_inv[img][img] != pair_inv[i][i]) continue;
      bool ok = true;
      for (int d2 = 0; d2 < depth && ok; ++d2) {
        int j = coord_order[d2];
        if (pair_inv[img][perm[j]] != pair_inv[i][j]) ok = false;
      }
      if (!ok) continue;
      perm[i] = img;
      used[img] = true;
      if (projection_ok(depth + 1, perm)) dfs(depth + 1, perm, used);
      used[img] = false;
    }
  }
};

}  // namespace

AutGroupResult binary_automorphism_group(const BinaryCode& b, std::uint64_t node_budget) {
  AutSearch search(b, node_budget);
  std::vector<int> perm(b.length, -1);
  std::vector<bool> used(b.length, false);
  search.dfs(0, perm, used);
  AutGroupResult res;
  res.order = search.autos.size();
  res.nodes = search.nodes;
  // Generating set: sweep the automorphisms, adding any element not yet in
  // the running closure.
  std::vector<std::vector<int>> gens;
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  std::vector<int> id(b.length);
  for (int i = 0; i < b.length; ++i) id[i] = i;
  seen.insert(id);
  queue.push_back(id);
  for (const auto& a : search.autos) {
    if (seen.size() == res.order) break;
    if (seen.contains(a)) continue;
    gens.push_back(a);
    // Re-close from scratch over the enlarged generator list.
    seen.clear();
    queue.assign(1, id);
    seen.insert(id);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (const auto& g : gens) {
        std::vector<int> next(b.length);
        for (int i = 0; i < b.length; ++i) next[i] = g[queue[h][i]];
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
  }
  res.generators = std::move(gens);
  return res;
}

}  // namespace fewcos::sphere
