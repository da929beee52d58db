// Command-line front end: catalog builds, published-table verification,
// cohomology reports, the orbit-union scan, the (16,256,6) binary code, and
// association-scheme checking.
//
// Exit codes: 0 success, 1 usage error, 2 verification failure, 3 resource
// cap exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fewcos/forge.hpp"
#include "fewcos/rm.hpp"

using namespace fewcos;
using gf2::Word;

namespace {

constexpr int kOk = 0, kUsage = 1, kVerify = 2, kResource = 3;

std::string cosine_string(const std::set<Rat>& cs) {
  std::string out = "{";
  for (const Rat& r : cs) {
    if (out.size() > 1) out += ", ";
    out += r.str();
  }
  return out + "}";
}

void write_or_print(const std::string& text, const std::string& out) {
  if (out.empty()) return;
  std::ofstream f(out);
  f << text;
  if (!f) throw std::runtime_error("cannot write " + out);
  std::printf("wrote %s\n", out.c_str());
}

struct Built {
  sphere::SphericalCode code;
  std::string construction;  // JSON description
  bool pass = true;
  std::vector<std::string> report;
};

void expect(Built& b, bool ok, const std::string& what) {
  b.report.push_back(std::string(ok ? "  ok: " : "  FAIL: ") + what);
  b.pass = b.pass && ok;
}

Built build_dsc_entry(int d, int m, int sel) {
  Built b;
  auto r = forge::build_dsc(d, m, sel);
  b.code = r.code;
  nlohmann::json c;
  c["recipe"] = "diagonal";
  c["d"] = d;
  c["m"] = m;
  c["constituent"] = sel;
  c["defect"] = r.k;
  b.construction = c.dump();
  expect(b, r.pure, "single defect over the sign space");
  expect(b, r.both_signs, "both clean weights occur");
  std::set<Rat> want{Rat(0), Rat(1, 1 << r.k), Rat(-1, 1 << r.k)};
  expect(b, sphere::cosine_set(r.code) == want,
         "cosines " + cosine_string(want));
  expect(b, r.code.size() == std::size_t{1} << (m + d),
         std::to_string(std::size_t{1} << (m + d)) + " vectors");
  return b;
}

const forge::NscFamily& family() {
  static forge::NscFamily f = forge::build_nsc_family();
  return f;
}

Built build_nsc_entry(const std::string& name) {
  const auto& f = family();
  std::map<std::string, const sphere::SphericalCode*> codes = {
      {"NSC_16_64", &f.nsc16_64},   {"NSC_15_64", &f.nsc15_64},
      {"NSC_14_64", &f.nsc14_64},   {"NSC_16_128", &f.nsc16_128},
      {"NSC_15_128", &f.nsc15_128},
  };
  std::map<std::string, std::set<Rat>> want = {
      {"NSC_16_64", {Rat(-1, 4), Rat(0), Rat(1, 4)}},
      {"NSC_15_64", {Rat(-1, 3), Rat(-1, 15), Rat(1, 5)}},
      {"NSC_14_64", {Rat(-3, 7), Rat(-1, 7), Rat(1, 7)}},
      {"NSC_16_128", {Rat(-1, 4), Rat(0), Rat(1, 4)}},
      {"NSC_15_128", {Rat(-1, 3), Rat(-1, 15), Rat(1, 5)}},
  };
  Built b;
  b.code = *codes.at(name);
  nlohmann::json c;
  c["recipe"] = "nondiagonal";
  c["entry"] = name;
  b.construction = c.dump();
  expect(b, sphere::cosine_set(b.code) == want.at(name),
         "cosines " + cosine_string(want.at(name)));
  expect(b, b.code.size() == (name.find("128") != std::string::npos ? 128u : 64u),
         "vector count");
  return b;
}

Built build_opticode_entry(bool as_binary) {
  auto r = forge::build_big_code(&family().nsc16_64);
  Built b;
  b.code = r.code;
  nlohmann::json c;
  c["recipe"] = as_binary ? "sign-rule binary image of the 256-point code"
                          : "orbit of the all-ones vector under the big group";
  c["group_order"] = r.group.order;
  b.construction = c.dump();
  std::set<Rat> want{Rat(-1), Rat(-1, 4), Rat(0), Rat(1, 4)};
  expect(b, r.code.size() == 256, "256 vectors");
  expect(b, sphere::cosine_set(r.code) == want, "cosines " + cosine_string(want));
  expect(b, r.group.stabilizer_order == 40320, "stabilizer order 40320");
  expect(b, r.alternate_route_equal, "alternate construction gives the same set");
  if (as_binary) {
    expect(b, sphere::min_distance(r.binary) == 6, "minimum distance 6");
    expect(b, sphere::nonlinearity_witness(r.binary).has_value(),
           "nonlinearity witness");
  }
  return b;
}

int cmd_build(const std::string& entry, const std::string& out,
              const std::string& format) {
  std::optional<Built> b;
  if (entry == "DSC_8_64") b = build_dsc_entry(3, 3, 0);
  else if (entry == "DSC_32_1024_a") b = build_dsc_entry(5, 5, 0);
  else if (entry == "DSC_32_1024_b") b = build_dsc_entry(5, 5, 1);
  else if (entry == "DSC_16_128_a") b = build_dsc_entry(4, 3, 0);
  else if (entry == "DSC_16_128_b") b = build_dsc_entry(4, 3, 1);
  else if (entry.rfind("NSC_", 0) == 0) b = build_nsc_entry(entry);
  else if (entry == "OPTICODE") b = build_opticode_entry(false);
  else if (entry == "BC_16_256_6") b = build_opticode_entry(true);
  else {
    std::fprintf(stderr, "unknown entry %s\n", entry.c_str());
    return kUsage;
  }
  std::printf("%s: %zu vectors in dimension %d, cosines %s\n", entry.c_str(),
              b->code.size(), b->code.dim,
              cosine_string(sphere::cosine_set(b->code)).c_str());
  for (const auto& line : b->report) std::printf("%s\n", line.c_str());
  if (!out.empty()) {
    if (entry == "BC_16_256_6")
      write_or_print(forge::binary_to_hex(sphere::to_binary(b->code)), out);
    else if (format == "csv")
      write_or_print(forge::code_to_csv(b->code), out);
    else
      write_or_print(forge::code_to_json(entry, b->code, b->construction), out);
  }
  return b->pass ? kOk : kVerify;
}

int cmd_verify() {
  bool ok = true;
  for (const auto& r : forge::verify_published_table()) {
    const char* tag = r.pass ? "PASS" : r.erratum ? "ERRATUM" : "FAIL";
    std::printf("%-16s %-8s %s\n", r.name.c_str(), tag, r.detail.c_str());
    ok = ok && (r.pass || r.erratum);
  }
  return ok ? kOk : kVerify;
}

coc::ModuleAction preset_action(const std::string& preset) {
  if (preset == "gl32-std3" || preset == "gl32-trivial") {
    coc::ModuleAction act;
    act.gens = mono::gl_generators(3);
    act.module_dim = preset == "gl32-trivial" ? 1 : 3;
    for (const auto& g : act.gens) {
      if (preset == "gl32-trivial") {
        act.gen_matrices.push_back({Word{1}});
      } else {
        std::vector<Word> m(3);
        for (int i = 0; i < 3; ++i) m[i] = static_cast<Word>(g(1 << i));
        act.gen_matrices.push_back(m);
      }
    }
    act.enumerate();
    return act;
  }
  if (preset == "gl42-m6") {
    auto rm2 = rm::build_rm(2, 4);
    auto rm1 = rm::build_rm(1, 4);
    auto act = coc::quotient_codeword_action(mono::gl_generators(4), rm2.space,
                                             rm1.space);
    return act;
  }
  throw CLI::ValidationError("preset", "unknown preset " + preset);
}

int cmd_cohomology(const std::string& preset) {
  auto act = preset_action(preset);
  auto z1 = coc::z1_basis(act);
  auto b1 = coc::b1_basis(act);
  std::printf("group order %llu, module dimension %d\n",
              static_cast<unsigned long long>(act.order()), act.module_dim);
  std::printf("dim Z1 = %zu, dim B1 = %zu, dim H1 = %zu\n", z1.size(), b1.size(),
              z1.size() - b1.size());
  std::set<std::size_t> inner_k, outer_k;
  for (Word c = 1; c < (Word{1} << z1.size()); ++c) {
    coc::Derivation f = z1[__builtin_ctzll(c)];
    for (std::size_t i = __builtin_ctzll(c) + 1; i < z1.size(); ++i)
      if (c >> i & 1) f = coc::add(f, z1[i]);
    (coc::is_inner(f, act) ? inner_k : outer_k).insert(coc::kernel(f).size());
  }
  auto show = [](const char* label, const std::set<std::size_t>& ks) {
    std::string s;
    for (auto k : ks) s += (s.empty() ? "" : ", ") + std::to_string(k);
    std::printf("%s kernel orders: {%s}\n", label, s.c_str());
  };
  show("inner", inner_k);
  show("noninner", outer_k);
  return kOk;
}

int cmd_search(int d, const std::string& subgroup, int max_cosines,
               const std::string& antipodal, int jobs) {
  (void)jobs;  // scan is deterministic and fast enough single-threaded
  if (d != 4 || subgroup != "nsc") {
    std::fprintf(stderr, "only --d 4 --subgroup nsc is available\n");
    return kUsage;
  }
  forge::SearchConfig cfg;
  cfg.d = d;
  cfg.max_cosines = max_cosines;
  cfg.include_antipodal = antipodal == "include";
  auto res = forge::orbit_union_search(cfg, forge::nsc_search_subgroup(family()));
  std::fprintf(stderr, "universe %zu vectors, %zu orbits\n", res.universe_size,
               res.orbit_sizes.size());
  for (const auto& h : res.hits) {
    nlohmann::json j;
    j["orbits"] = h.orbits;
    j["vectors"] = h.vector_count;
    std::vector<std::string> cs;
    for (const Rat& r : h.cosines) cs.push_back(r.str());
    j["cosines"] = cs;
    std::cout << j.dump() << "\n";
  }
  return kOk;
}

int cmd_binary(bool aut) {
  auto grp = forge::build_big_group();
  auto orbit = mono::orbit_vectors(std::vector<int>(16, 1), grp.generators, 1 << 10);
  auto code = sphere::make_code(orbit);
  auto bin = sphere::to_binary(code);
  std::printf("%s", forge::binary_to_hex(bin).c_str());
  std::printf("minimum distance %d\n", sphere::min_distance(bin));
  std::string dist;
  for (auto [w, n] : sphere::distance_distribution_from(bin, bin.words[0]))
    dist += (dist.empty() ? "" : ", ") + std::to_string(w) + ":" + std::to_string(n);
  std::printf("distance distribution {%s}\n", dist.c_str());
  auto wit = sphere::nonlinearity_witness(bin);
  if (wit)
    std::printf("nonlinearity witness: %04x + %04x not in the code\n", wit->first,
                wit->second);
  bool ok = sphere::min_distance(bin) == 6 && bin.words.size() == 256 && wit;
  if (aut) {
    auto res = sphere::binary_automorphism_group(bin);
    std::printf("automorphism group order %llu (%llu nodes)\n",
                static_cast<unsigned long long>(res.order),
                static_cast<unsigned long long>(res.nodes));
    for (const auto& g : res.generators) {
      std::string s;
      for (int i : g) s += (s.empty() ? "" : " ") + std::to_string(i);
      std::printf("generator: %s\n", s.c_str());
    }
    ok = ok && res.order == 40320;
  }
  return ok ? kOk : kVerify;
}

int cmd_scheme(const std::string& path) {
  std::ifstream f(path);
  if (!f) {
    std::fprintf(stderr, "cannot read %s\n", path.c_str());
    return kUsage;
  }
  std::string text((std::istreambuf_iterator<char>(f)),
                   std::istreambuf_iterator<char>());
  auto code = forge::code_from_json(text);
  auto rep = sphere::association_scheme_check(code);
  std::printf("%zu vectors in dimension %d\n", code.size(), code.dim);
  if (!rep.is_scheme) {
    if (rep.violation)
      std::printf("not an association scheme (violation at vector pair %zu, %zu)\n",
                  rep.violation->first, rep.violation->second);
    else
      std::printf("not an association scheme\n");
    return kVerify;
  }
  std::printf("association scheme with %zu classes\n", rep.relation_values.size() - 1);
  std::string vals;
  for (auto v : rep.relation_values)
    vals += (vals.empty() ? "" : ", ") + std::to_string(v);
  std::printf("relation inner products: {%s}\n", vals.c_str());
  for (std::size_t c = 0; c < rep.numbers.size(); ++c) {
    std::printf("p^%zu:\n", c);
    for (const auto& row : rep.numbers[c]) {
      std::string s;
      for (auto v : row) s += (s.empty() ? "" : " ") + std::to_string(v);
      std::printf("  %s\n", s.c_str());
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"few-cosine spherical code constructor"};
  app.require_subcommand(1);

  std::string entry, out, format = "json";
  auto* build = app.add_subcommand("build", "build a catalog entry");
  build->add_option("entry", entry,
                    "DSC_8_64, DSC_32_1024_{a,b}, DSC_16_128_{a,b}, NSC_16_64, "
                    "NSC_15_64, NSC_14_64, NSC_16_128, NSC_15_128, OPTICODE, "
                    "BC_16_256_6")
      ->required();
  build->add_option("--out", out, "output file");
  build->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string target;
  auto* verify = app.add_subcommand("verify", "verify the published table");
  verify->add_option("target", target, "table1")->required();

  std::string preset;
  auto* coh = app.add_subcommand("cohomology", "cocycle space report");
  coh->add_option("preset", preset, "gl32-std3, gl32-trivial, gl42-m6")->required();

  int d = 4, max_cosines = 3, jobs = 1;
  std::string subgroup = "nsc", antipodal = "exclude";
  auto* search = app.add_subcommand("search", "orbit-union scan");
  search->add_option("--d", d, "ambient log-dimension (4)");
  search->add_option("--subgroup", subgroup, "subgroup preset (nsc)");
  search->add_option("--max-cosines", max_cosines, "cosine budget");
  search->add_option("--antipodal", antipodal, "include or exclude")
      ->check(CLI::IsMember({"include", "exclude"}));
  search->add_option("--jobs", jobs, "worker count");

  std::string kind;
  bool aut = false;
  auto* binary = app.add_subcommand("binary", "binary code emission");
  binary->add_option("kind", kind, "nordstrom")->required();
  binary->add_flag("--aut", aut, "run the automorphism backtrack");

  std::string codefile;
  auto* scheme = app.add_subcommand("scheme", "association-scheme report");
  scheme->add_option("codefile", codefile, "JSON code file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*build) return cmd_build(entry, out, format);
    if (*verify) {
      if (target != "table1") {
        std::fprintf(stderr, "unknown verify target %s\n", target.c_str());
        return kUsage;
      }
      return cmd_verify();
    }
    if (*coh) return cmd_cohomology(preset);
    if (*search) return cmd_search(d, subgroup, max_cosines, antipodal, jobs);
    if (*binary) {
      if (kind != "nordstrom") {
        std::fprintf(stderr, "unknown binary code %s\n", kind.c_str());
        return kUsage;
      }
      return cmd_binary(aut);
    }
    if (*scheme) return cmd_scheme(codefile);
  } catch (const mono::ClosureCap& e) {
    std::fprintf(stderr, "resource cap: %s\n", e.what());
    return kResource;
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    std::string what = e.what();
    if (what.find("budget") != std::string::npos) {
      std::fprintf(stderr, "resource cap: %s\n", what.c_str());
      return kResource;
    }
    std::fprintf(stderr, "error: %s\n", what.c_str());
    return kVerify;
  }
  return kUsage;
}
