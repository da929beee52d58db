// Python bindings for the exact-arithmetic core: Reed-Muller facts, cocycle
// space dimensions, and the catalog code constructions.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fewcos/forge.hpp"
#include "fewcos/rm.hpp"

namespace py = pybind11;
using namespace fewcos;
using gf2::Word;

namespace {

py::dict code_dict(const sphere::SphericalCode& c) {
  py::dict d;
  d["dimension"] = c.dim;
  d["norm_squared"] = c.norm_sq;
  d["vectors"] = c.vectors;
  std::vector<std::string> cos;
  for (const Rat& r : sphere::cosine_set(c)) cos.push_back(r.str());
  d["cosines"] = cos;
  return d;
}

coc::ModuleAction action_from_preset(const std::string& preset) {
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
    return coc::quotient_codeword_action(mono::gl_generators(4), rm2.space,
                                         rm1.space);
  }
  throw std::invalid_argument("unknown preset " + preset);
}

}  // namespace

PYBIND11_MODULE(fewcos_core, m) {
  m.doc() = "few-cosine spherical codes from Reed-Muller codes and 1-cocycles";

  m.def("rm_dimension", [](int r, int d) { return rm::build_rm(r, d).space.dim(); },
        py::arg("r"), py::arg("d"), "dimension of RM(r, d)");

  m.def("defect",
        [](int d, Word truth_table) {
          auto rm2 = rm::build_rm(2, d);
          auto cls = rm::defect(rm2, truth_table);
          return py::make_tuple(cls.k, cls.clean);
        },
        py::arg("d"), py::arg("truth_table"),
        "(defect, clean) of a degree-2 codeword given as a truth-table word");

  m.def("cohomology",
        [](const std::string& preset) {
          auto act = action_from_preset(preset);
          auto z1 = coc::z1_basis(act);
          auto b1 = coc::b1_basis(act);
          py::dict d;
          d["group_order"] = act.order();
          d["z1"] = z1.size();
          d["b1"] = b1.size();
          d["h1"] = z1.size() - b1.size();
          return d;
        },
        py::arg("preset"), "cocycle space dimensions for a named module");

  m.def("build_dsc",
        [](int d, int m2, int selector) {
          auto r = forge::build_dsc(d, m2, selector);
          py::dict out = code_dict(r.code);
          out["defect"] = r.k;
          out["constituents"] = r.constituent_count;
          out["pure"] = r.pure;
          out["both_signs"] = r.both_signs;
          return out;
        },
        py::arg("d"), py::arg("m"), py::arg("selector") = 0,
        "diagonal code from a Mersenne-prime order permutation");

  m.def("nordstrom_robinson",
        []() {
          auto grp = forge::build_big_group();
          auto orbit =
              mono::orbit_vectors(std::vector<int>(16, 1), grp.generators, 1 << 10);
          auto code = sphere::make_code(orbit);
          auto bin = sphere::to_binary(code);
          py::dict d;
          d["words"] = bin.words;
          d["min_distance"] = sphere::min_distance(bin);
          d["group_order"] = grp.order;
          return d;
        },
        "the (16,256,6) binary code from the 256-point spherical code");

  m.def("verify_published_table", []() {
    py::list rows;
    for (const auto& r : forge::verify_published_table()) {
      py::dict d;
      d["name"] = r.name;
      d["pass"] = r.pass;
      d["erratum"] = r.erratum;
      d["detail"] = r.detail;
      rows.append(d);
    }
    return rows;
  });
}
