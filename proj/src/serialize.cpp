#include "torsionlab/serialize.hpp"

#include <fstream>
#include <sstream>

namespace torsionlab {

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing key \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad value for \"") + key + "\": " + e.what());
  }
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

json poset_to_json(const Poset& p) {
  json leq = json::array();
  for (auto [a, b] : p.relation()) {
    if (a != b) leq.push_back({a, b});
  }
  return {{"elements", p.labels()}, {"leq", leq}};
}

Poset poset_from_json(const json& j) {
  auto labels = field<std::vector<std::string>>(j, "elements");
  auto leq = field<std::vector<std::pair<std::size_t, std::size_t>>>(j, "leq");
  for (auto [a, b] : leq) {
    if (a >= labels.size() || b >= labels.size()) {
      throw ParseError("leq index out of range: [" + std::to_string(a) + "," + std::to_string(b) +
                       "]");
    }
  }
  try {
    return Poset::from_relation(std::move(labels), leq);
  } catch (const NotAPartialOrder& e) {
    throw ParseError(std::string("not a partial order: ") + e.what());
  }
}

json lattice_to_json(const FinLattice& l) {
  json out = poset_to_json(l.order());
  json j = {{"size", l.size()}, {"leq", out["leq"]}, {"labels", out["elements"]}};
  return j;
}

FinLattice lattice_from_json(const json& j) {
  const auto size = field<std::size_t>(j, "size");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    labels = field<std::vector<std::string>>(j, "labels");
  } else {
    for (std::size_t i = 0; i < size; ++i) labels.push_back(std::to_string(i));
  }
  if (labels.size() != size) throw ParseError("labels length differs from size");
  json pj = {{"elements", labels}, {"leq", j.at("leq")}};
  try {
    return FinLattice::from_order(poset_from_json(pj));
  } catch (const NotALattice& e) {
    throw ParseError(std::string("not a lattice: ") + e.what());
  }
}

json module_to_json(const Algebra& a, const Module& m) {
  json arrows = json::object();
  for (std::size_t i = 0; i < a.arrows().size(); ++i) {
    arrows[a.arrows()[i].name] = m.action(i).to_rows();
  }
  return {{"dims", m.dims()}, {"arrows", arrows}};
}

Module module_from_json(const Algebra& a, const json& j) {
  const auto dims = field<std::vector<std::size_t>>(j, "dims");
  if (dims.size() != a.num_vertices()) throw ParseError("dims length differs from vertex count");
  const json arrows = j.contains("arrows") ? j.at("arrows") : json::object();
  if (!arrows.is_object()) throw ParseError("\"arrows\" must be an object");
  for (const auto& [name, _] : arrows.items()) {
    if (!a.arrow_index(name)) throw ParseError("unknown arrow \"" + name + "\"");
  }
  std::vector<Matrix> acts;
  for (const auto& ar : a.arrows()) {
    const std::size_t r = dims[ar.target], c = dims[ar.source];
    if (!arrows.contains(ar.name)) {
      acts.emplace_back(r, c, a.prime());
      continue;
    }
    const auto rows = field<std::vector<std::vector<std::int64_t>>>(arrows, ar.name.c_str());
    if (rows.size() != r) throw ParseError("arrow \"" + ar.name + "\" has the wrong row count");
    for (const auto& row : rows) {
      if (row.size() != c) throw ParseError("arrow \"" + ar.name + "\" has the wrong column count");
    }
    acts.push_back(r == 0 ? Matrix(0, c, a.prime()) : Matrix::from_rows(rows, c, a.prime()));
  }
  Module m(dims, std::move(acts), a.prime());
  try {
    a.validate(m);
  } catch (const InvalidModule& e) {
    throw ParseError(e.what());
  }
  return m;
}

json algebra_to_json(const Algebra& a) {
  json arrows = json::array();
  for (const auto& ar : a.arrows()) {
    arrows.push_back({{"name", ar.name}, {"source", ar.source}, {"target", ar.target}});
  }
  json rels = json::array();
  for (const auto& r : a.relations()) {
    json terms = json::array();
    for (const auto& t : r) {
      json path = json::array();
      for (auto i : t.path) path.push_back(a.arrows()[i].name);
      terms.push_back({t.coeff, path});
    }
    rels.push_back(terms);
  }
  return {{"vertices", a.vertex_labels()}, {"arrows", arrows}, {"relations", rels},
          {"field", a.prime()}};
}

Algebra algebra_from_json(const json& j) {
  const auto vertices = field<std::vector<std::string>>(j, "vertices");
  std::vector<Arrow> arrows;
  for (const auto& a : field<json>(j, "arrows")) {
    Arrow ar{field<std::string>(a, "name"), field<std::size_t>(a, "source"),
             field<std::size_t>(a, "target")};
    if (ar.source >= vertices.size() || ar.target >= vertices.size()) {
      throw ParseError("arrow \"" + ar.name + "\" has an endpoint out of range");
    }
    arrows.push_back(std::move(ar));
  }
  auto arrow_of = [&](const std::string& name) {
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      if (arrows[i].name == name) return i;
    }
    throw ParseError("relation mentions unknown arrow \"" + name + "\"");
  };
  std::vector<Relation> rels;
  if (j.contains("relations")) {
    for (const auto& r : j.at("relations")) {
      Relation rel;
      for (const auto& t : r) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_array()) {
          throw ParseError("relation term must be [coeff, [arrow, ...]]");
        }
        Path p;
        for (const auto& name : t[1]) p.push_back(arrow_of(name.get<std::string>()));
        rel.push_back({t[0].get<std::int64_t>(), std::move(p)});
      }
      rels.push_back(std::move(rel));
    }
  }
  const auto p = j.contains("field") ? field<Scalar>(j, "field") : Scalar{2};
  try {
    return Algebra(vertices, std::move(arrows), std::move(rels), p);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

ClassAnnotations annotate(const Catalog& c, const TorsionLattice& t) {
  ClassAnnotations notes;
  notes.names = {"omega1", "omega2", "hereditary", "cohereditary", "split"};
  for (const auto& pr : t.pairs) {
    notes.flags.push_back({is_omega_n(c, pr, 1, OmegaRoute::ext),
                           is_omega_n(c, pr, 2, OmegaRoute::ext), is_hereditary(c, pr),
                           is_cohereditary(c, pr), is_split(c, pr)});
  }
  return notes;
}

json torsion_lattice_to_json(const Catalog& c, const TorsionLattice& t,
                             const ClassAnnotations& notes) {
  auto fingerprint = [&](std::size_t i) {
    std::string s = std::to_string(i) + ":(";
    const auto& d = c.module(i).dims();
    for (std::size_t v = 0; v < d.size(); ++v) s += (v ? "," : "") + std::to_string(d[v]);
    return s + ")";
  };
  json modules = json::array();
  for (std::size_t i = 0; i < c.size(); ++i) {
    modules.push_back({{"index", i}, {"name", c.name(i)}, {"dims", c.module(i).dims()}});
  }
  json classes = json::array();
  for (std::size_t k = 0; k < t.pairs.size(); ++k) {
    json tors = json::array(), free = json::array();
    for (auto i : members(t.pairs[k].tors)) tors.push_back(fingerprint(i));
    for (auto i : members(t.pairs[k].free)) free.push_back(fingerprint(i));
    json entry = {{"tors", tors}, {"free", free}};
    for (std::size_t q = 0; q < notes.names.size() && k < notes.flags.size(); ++q) {
      entry[notes.names[q]] = static_cast<bool>(notes.flags[k][q]);
    }
    classes.push_back(entry);
  }
  json hasse = json::array();
  for (auto [a, b] : t.lattice.covers()) hasse.push_back({a, b});
  return {{"indecomposables", modules}, {"classes", classes}, {"hasse", hasse},
          {"count", t.pairs.size()}};
}

std::string poset_to_dot(const Poset& p, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << quote(name) << " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    os << "  n" << i << " [label=" << quote(p.label(i)) << "];\n";
  }
  for (auto [a, b] : p.covers()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string lattice_to_dot(const FinLattice& l, const std::string& name,
                           const std::vector<std::string>& notes) {
  std::ostringstream os;
  os << "digraph " << quote(name) << " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < l.size(); ++i) {
    std::string label = l.label(i);
    if (i < notes.size() && !notes[i].empty()) label += "\\n" + notes[i];
    os << "  n" << i << " [label=" << quote(label) << "];\n";
  }
  for (auto [a, b] : l.covers()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

}  // namespace torsionlab
