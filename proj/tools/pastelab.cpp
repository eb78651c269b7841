#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "pastelab/computad.hpp"
#include "pastelab/corpus.hpp"

using nlohmann::json;
using namespace pastelab;

namespace {

// 0 ok, 1 invalid scheme, 2 unparseable input, 3 certification unknown
enum ExitCode { kOk = 0, kInvalid = 1, kParse = 2, kUnknown = 3 };

std::string slurp(const std::string& file) {
  std::ifstream is(file);
  if (!is) throw Error("ParseError", "cannot read '" + file + "'");
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

PastingScheme load(const std::string& file) {
  return validate_pasting_scheme(parse_scheme(slurp(file)));
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out);
  if (!os) throw Error("ParseError", "cannot write '" + out + "'");
  os << text;
}

int threads_from_env() {
  const char* env = std::getenv("PASTELAB_THREADS");
  if (!env) return 1;
  int n = std::atoi(env);
  return n < 1 ? 1 : n;
}

int vertex_or_throw(const PastingScheme& ps, const std::string& name) {
  int v = ps.graph.object_index(name);
  if (v < 0) throw Error("UnknownVertex", "no vertex named '" + name + "'");
  return v;
}

int cmd_validate(const std::string& file, const std::string& format,
                 const std::string& out) {
  PlaneGraph g = parse_scheme(slurp(file));
  try {
    PastingScheme ps = validate_pasting_scheme(g);
    std::ostringstream os;
    if (format == "json") {
      json j;
      j["valid"] = true;
      j["objects"] = ps.n_objects();
      j["edges"] = ps.n_edges();
      j["interior_faces"] = ps.n_interior_faces();
      j["source"] = ps.object_name(ps.source);
      j["sink"] = ps.object_name(ps.sink);
      j["dom"] = path_to_string(ps, ps.dom);
      j["cod"] = path_to_string(ps, ps.cod);
      json faces = json::array();
      for (int fi : ps.interior) {
        const Face& f = ps.faces[fi];
        faces.push_back({{"name", f.name},
                         {"dom", path_to_string(ps, make_path(ps, f.src, f.dom))},
                         {"cod", path_to_string(ps, make_path(ps, f.src, f.cod))}});
      }
      j["faces"] = faces;
      os << j.dump(2) << "\n";
    } else {
      os << ps.n_objects() << " objects, " << ps.n_edges() << " edges, "
         << ps.n_interior_faces() << " interior faces\n";
      os << "source: " << ps.object_name(ps.source)
         << "  sink: " << ps.object_name(ps.sink) << "\n";
      os << "dom: " << path_to_string(ps, ps.dom) << "\n";
      os << "cod: " << path_to_string(ps, ps.cod) << "\n";
      for (int fi : ps.interior) {
        const Face& f = ps.faces[fi];
        os << "face " << f.name << ": "
           << path_to_string(ps, make_path(ps, f.src, f.dom)) << " => "
           << path_to_string(ps, make_path(ps, f.src, f.cod)) << "\n";
      }
      os << "valid\n";
    }
    emit(out, os.str());
    return kOk;
  } catch (const ValidationError& e) {
    std::ostringstream os;
    if (format == "json") {
      json j;
      j["valid"] = false;
      json vs = json::array();
      for (const Violation& v : e.violations)
        vs.push_back({{"code", v.code}, {"message", v.message}});
      j["violations"] = vs;
      os << j.dump(2) << "\n";
    } else {
      for (const Violation& v : e.violations)
        os << v.code << ": " << v.message << "\n";
      os << "invalid\n";
    }
    emit(out, os.str());
    return kInvalid;
  }
}

// hom data plus the coordinate cube; for proper pairs below (s,t) the cube
// lives on the sub-scheme spanned between the extremal x -> y paths
int cmd_hom(const std::string& file, const std::string& xname,
            const std::string& yname, const std::string& format,
            const std::string& out) {
  PastingScheme ps = load(file);
  int x = vertex_or_throw(ps, xname), y = vertex_or_throw(ps, yname);
  HomPoset h = hom_poset(ps, x, y);

  bool spans = x != y && reachable(ps, x, y);
  PastingScheme sub;
  CubeStructure cube;
  std::vector<CubePoint> coords, points;
  if (spans) {
    sub = (x == ps.source && y == ps.sink) ? ps : sub_scheme_between(ps, x, y);
    cube = cube_structure(sub);
    points = enumerate_cube_points(sub);
    for (const Path& p : h.elements)
      coords.push_back(coordinatize(sub, translate_path(ps, sub, p)));
    // the coordinatization must be an order isomorphism onto the cube points
    if (points.size() != coords.size())
      throw Error("StructureError", "coordinate count mismatch");
    for (int i = 0; i < h.size(); ++i) {
      Path back = translate_path(sub, ps, pathify(sub, coords[i]));
      if (!(back == h.elements[i]))
        throw Error("StructureError", "pathify does not invert coordinatize");
      for (int j = 0; j < h.size(); ++j) {
        bool le_coord = true;
        for (size_t k = 0; k < coords[i].size(); ++k)
          le_coord = le_coord && coords[i][k] <= coords[j][k];
        if (h.le(i, j) != le_coord)
          throw Error("StructureError", "coordinate order mismatch");
      }
    }
  }

  std::ostringstream os;
  if (format == "dot") {
    FinPoset fp = hom_as_finposet(ps, h);
    os << "digraph hom {\n  rankdir=TB;\n";
    for (int i = 0; i < fp.size(); ++i)
      os << "  n" << i << " [label=\"" << fp.elements[i] << "\"];\n";
    for (auto [i, j] : fp.covers()) os << "  n" << i << " -> n" << j << ";\n";
    os << "}\n";
  } else if (format == "text") {
    for (int i = 0; i < h.size(); ++i)
      os << i << ": " << path_to_string(ps, h.elements[i]) << "\n";
    FinPoset fp = hom_as_finposet(ps, h);
    for (auto [i, j] : fp.covers())
      os << fp.elements[i] << " >= " << fp.elements[j] << "\n";
  } else {
    json j;
    j["x"] = xname;
    j["y"] = yname;
    json elems = json::array(), rel = json::array();
    for (int i = 0; i < h.size(); ++i) {
      elems.push_back(path_to_string(ps, h.elements[i]));
      json row = json::array();
      for (int k = 0; k < h.size(); ++k) row.push_back(h.le(i, k));
      rel.push_back(row);
    }
    j["elements"] = elems;
    j["relation"] = rel;
    json jc;
    jc["faces"] = cube.faces;
    json cons = json::array();
    for (auto [a, b] : cube.constraints) cons.push_back({a, b});
    jc["constraints"] = cons;
    json pts = json::array();
    for (const CubePoint& p : points) pts.push_back(std::vector<int>(p.begin(), p.end()));
    jc["points"] = pts;
    j["cube"] = jc;
    json table = json::array();
    for (const CubePoint& c : coords)
      table.push_back(std::vector<int>(c.begin(), c.end()));
    j["coordinates"] = table;
    os << j.dump(2) << "\n";
  }
  emit(out, os.str());
  return kOk;
}

int cmd_certify(const std::string& file, int level, std::size_t budget,
                const std::string& format, const std::string& out) {
  PastingScheme ps = load(file);
  HomwiseReport r = verify_uniqueness_homwise(ps, level, budget,
                                                threads_from_env());
  std::ostringstream os;
  if (format == "text") {
    os << "subcomputad: " << (r.subcomputad ? "yes" : "no") << "\n";
    for (const PairReport& pr : r.pairs) {
      os << ps.object_name(pr.a) << " -> " << ps.object_name(pr.z) << ": ";
      if (pr.certified && pr.verified)
        os << "certified, " << pr.certificate_length << " steps\n";
      else
        os << "unknown\n";
    }
    os << (r.all_certified ? "all certified\n" : "incomplete\n");
  } else {
    json j;
    j["scheme"] = file;
    j["level"] = level;
    j["budget"] = budget;
    j["subcomputad"] = r.subcomputad;
    j["all_certified"] = r.all_certified;
    json pairs = json::array();
    for (const PairReport& pr : r.pairs) {
      json p;
      p["pair"] = {ps.object_name(pr.a), ps.object_name(pr.z)};
      p["g_chain_count"] = pr.g_chains;
      p["nf_chain_count"] = pr.nf_chains;
      if (pr.certified)
        p["certificate_length"] = pr.certificate_length;
      else
        p["certificate_length"] = "unknown";
      p["verified"] = pr.verified;
      pairs.push_back(p);
    }
    j["pairs"] = pairs;
    os << j.dump(2) << "\n";
  }
  emit(out, os.str());
  return r.all_certified ? kOk : kUnknown;
}

int cmd_corpus(std::uint64_t seed, int count, int max_faces,
               const std::string& out) {
  for (const std::string& f : write_corpus(out, seed, count, max_faces))
    std::cout << f << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pasting scheme toolkit"};
  app.require_subcommand(1);

  std::string file, xname, yname, format = "json", out;
  int level = 4, count = 1, max_faces = 7;
  std::size_t budget = 1000000;
  std::uint64_t seed = 0;

  auto* validate = app.add_subcommand("validate", "check a scheme file");
  validate->add_option("file", file)->required();
  validate->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  validate->add_option("--out", out);

  auto* hom = app.add_subcommand("hom", "hom-poset and cube coordinates");
  hom->add_option("file", file)->required();
  hom->add_option("x", xname)->required();
  hom->add_option("y", yname)->required();
  hom->add_option("--format", format)
      ->check(CLI::IsMember({"json", "dot", "text"}));
  hom->add_option("--out", out);

  auto* certify = app.add_subcommand("certify", "homwise pasting certificates");
  certify->add_option("file", file)->required();
  certify->add_option("--level", level)->check(CLI::NonNegativeNumber);
  certify->add_option("--budget", budget)->check(CLI::PositiveNumber);
  certify->add_option("--format", format)
      ->check(CLI::IsMember({"json", "text"}));
  certify->add_option("--out", out);

  auto* corpus = app.add_subcommand("corpus", "generate random schemes");
  corpus->add_option("--seed", seed);
  corpus->add_option("--count", count)->check(CLI::PositiveNumber);
  corpus->add_option("--max-faces", max_faces)->check(CLI::NonNegativeNumber);
  corpus->add_option("--out", out)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(file, format, out);
    if (hom->parsed()) return cmd_hom(file, xname, yname, format, out);
    if (certify->parsed()) return cmd_certify(file, level, budget, format, out);
    if (corpus->parsed()) return cmd_corpus(seed, count, max_faces, out);
  } catch (const ValidationError& e) {
    for (const Violation& v : e.violations)
      std::cerr << v.code << ": " << v.message << "\n";
    return kInvalid;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code == "ParseError" || e.code == "UnknownVertex" ? kParse
                                                               : kInvalid;
  }
  return kOk;
}
