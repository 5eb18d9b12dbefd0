#pragma once

// JSON and DOT formats.
//   poset:   {"elements": [...], "leq": [[i, j], ...]}
//   lattice: {"size": k, "leq": [[i, j], ...], "labels": [...]}
//   module:  {"dims": [...], "arrows": {"a": [[...], ...], ...}}
//   algebra: {"vertices": [...], "arrows": [{"name", "source", "target"}],
//             "relations": [[[coeff, ["a", "b"]], ...], ...], "field": p}

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "torsionlab/algebra.hpp"
#include "torsionlab/lattice.hpp"
#include "torsionlab/poset.hpp"
#include "torsionlab/torsion.hpp"

namespace torsionlab {

using nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json poset_to_json(const Poset& p);
Poset poset_from_json(const json& j);

json lattice_to_json(const FinLattice& l);
FinLattice lattice_from_json(const json& j);

json module_to_json(const Algebra& a, const Module& m);
Module module_from_json(const Algebra& a, const json& j);

json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const json& j);

/// Per-class annotations printed next to the torsion class in DOT output and
/// stored as booleans in JSON.
struct ClassAnnotations {
  std::vector<std::string> names;  // e.g. "omega1", "hereditary"
  std::vector<std::vector<bool>> flags;  // flags[class][name]
};

ClassAnnotations annotate(const Catalog& c, const TorsionLattice& t);

json torsion_lattice_to_json(const Catalog& c, const TorsionLattice& t,
                             const ClassAnnotations& notes);

/// Hasse diagram with edges drawn from lower to upper cover.
std::string poset_to_dot(const Poset& p, const std::string& name = "poset");
std::string lattice_to_dot(const FinLattice& l, const std::string& name = "lattice",
                           const std::vector<std::string>& notes = {});

/// Reads a JSON document, reporting parse errors with the byte offset.
json read_json_file(const std::string& path);

}  // namespace torsionlab
