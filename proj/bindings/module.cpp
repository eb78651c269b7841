#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pastelab/computad.hpp"
#include "pastelab/corpus.hpp"

namespace py = pybind11;
using namespace pastelab;

namespace {

std::vector<int> edge_indices(const PastingScheme& ps,
                              const std::vector<std::string>& ids) {
  std::vector<int> out;
  for (const std::string& id : ids) {
    int e = ps.graph.edge_index(id);
    if (e < 0) throw Error("NotAnEdge", "no edge named '" + id + "'");
    out.push_back(e);
  }
  return out;
}

py::dict report_to_dict(const PastingScheme& ps, const HomwiseReport& r) {
  py::dict d;
  d["all_certified"] = r.all_certified;
  d["subcomputad"] = r.subcomputad;
  py::list pairs;
  for (const PairReport& pr : r.pairs) {
    py::dict p;
    p["pair"] = py::make_tuple(ps.object_name(pr.a), ps.object_name(pr.z));
    p["g_chain_count"] = pr.g_chains;
    p["nf_chain_count"] = pr.nf_chains;
    if (pr.certified)
      p["certificate_length"] = pr.certificate_length;
    else
      p["certificate_length"] = "unknown";
    p["verified"] = pr.verified;
    pairs.append(p);
  }
  d["pairs"] = pairs;
  return d;
}

}  // namespace

PYBIND11_MODULE(_pastelab, m) {
  m.doc() = "pasting schemes, hom lattices, and pasting certificates";

  // translators run newest first, so the derived class goes second
  auto base_exc = py::register_exception<Error>(m, "PastingError");
  py::register_exception<ValidationError>(m, "SchemeInvalid", base_exc.ptr());

  py::class_<Path>(m, "Path")
      .def_readonly("start", &Path::start)
      .def_readonly("end", &Path::end)
      .def_readonly("edges", &Path::edges)
      .def("__eq__", [](const Path& a, const Path& b) { return a == b; })
      .def("__hash__", [](const Path& p) {
        size_t h = std::hash<int>()(p.start);
        for (int e : p.edges) h = h * 1000003u + e;
        return h;
      });

  py::class_<PastingScheme>(m, "PastingScheme")
      .def_property_readonly("objects",
                             [](const PastingScheme& ps) { return ps.graph.objects; })
      .def_property_readonly("n_objects", &PastingScheme::n_objects)
      .def_property_readonly("n_edges", &PastingScheme::n_edges)
      .def_property_readonly("n_faces", &PastingScheme::n_interior_faces)
      .def_property_readonly("source", [](const PastingScheme& ps) { return ps.source; })
      .def_property_readonly("sink", [](const PastingScheme& ps) { return ps.sink; })
      .def_property_readonly("dom", [](const PastingScheme& ps) { return ps.dom; })
      .def_property_readonly("cod", [](const PastingScheme& ps) { return ps.cod; })
      .def("object_name", &PastingScheme::object_name)
      .def("object_index",
           [](const PastingScheme& ps, const std::string& name) {
             return ps.graph.object_index(name);
           })
      .def("edge_id", &PastingScheme::edge_id)
      .def("edge_index",
           [](const PastingScheme& ps, const std::string& id) {
             return ps.graph.edge_index(id);
           })
      .def("faces",
           [](const PastingScheme& ps) {
             py::list out;
             for (int fi : ps.interior) {
               const Face& f = ps.faces[fi];
               py::dict d;
               d["name"] = f.name;
               d["src"] = f.src;
               d["tgt"] = f.tgt;
               d["dom"] = make_path(ps, f.src, f.dom);
               d["cod"] = make_path(ps, f.src, f.cod);
               out.append(d);
             }
             return out;
           })
      .def("__repr__", [](const PastingScheme& ps) {
        return "<PastingScheme " + std::to_string(ps.n_objects()) + "v/" +
               std::to_string(ps.n_edges()) + "e/" +
               std::to_string(ps.n_interior_faces()) + "f>";
      });

  m.def("load_scheme", [](const std::string& text) {
    return validate_pasting_scheme(parse_scheme(text));
  });
  m.def("dump_scheme",
        [](const PastingScheme& ps) { return serialize_scheme(ps.graph); });
  m.def("theta2", &build_theta2, py::arg("widths"));
  m.def("generate_corpus", &generate_corpus, py::arg("seed"), py::arg("count"),
        py::arg("max_faces"));

  m.def("make_path",
        [](const PastingScheme& ps, int start, const std::vector<std::string>& edges) {
          return make_path(ps, start, edge_indices(ps, edges));
        });
  m.def("path_str", [](const PastingScheme& ps, const Path& p) {
    return path_to_string(ps, p);
  });
  m.def("enumerate_paths", &enumerate_paths);
  m.def("lies_above", &lies_above);
  m.def("hom", [](const PastingScheme& ps, int x, int y) {
    HomPoset h = hom_poset(ps, x, y);
    py::dict d;
    d["elements"] = h.elements;
    d["leq"] = h.leq;
    return d;
  });
  m.def("hom_meet", &hom_meet);
  m.def("hom_join", &hom_join);
  m.def("coordinatize", &coordinatize);
  m.def("pathify", &pathify);
  m.def("cube_points", &enumerate_cube_points);
  m.def("cube_constraints", [](const PastingScheme& ps) {
    return cube_structure(ps).constraints;
  });
  m.def("power_composite", &power_composite, py::arg("ps"),
        py::arg("uniqueness_cap") = 32);

  m.def("top_cells", &top_cells);
  m.def("bottom_cells", &bottom_cells);
  m.def("delete_top_cell", &delete_top_cell);
  m.def("delete_bottom_cell", &delete_bottom_cell);
  m.def("presentation", [](const PastingScheme& ps) {
    py::list out;
    for (const PresentationEntry& pe : presentation(ps)) {
      py::dict d;
      d["face"] = pe.face;
      d["prefix"] = pe.prefix;
      d["suffix"] = pe.suffix;
      out.append(d);
    }
    return out;
  });
  m.def("attach_bottom", &attach_bottom);
  m.def("subdivide_edge", &subdivide_edge);

  m.def("atomic_arrows", &atomic_arrows);
  m.def("factor_atomic", &factor_atomic);
  m.def("is_subcomputad", &is_subcomputad, py::arg("ps"), py::arg("level") = 4);
  m.def("verify_hom_pushouts", &verify_hom_pushouts);
  m.def("verify_edge_subdivision", &verify_edge_subdivision, py::arg("ps"),
        py::arg("edge"), py::arg("pieces"), py::arg("level") = 4);
  m.def(
      "certify",
      [](const PastingScheme& ps, int level, std::size_t budget, int threads) {
        return report_to_dict(ps,
                              verify_uniqueness_homwise(ps, level, budget, threads));
      },
      py::arg("ps"), py::arg("level") = 4, py::arg("budget") = 1000000,
      py::arg("threads") = 1);
}
