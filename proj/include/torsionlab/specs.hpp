#pragma once

// Builtin object names accepted by the command-line tool.
//   posets:   int:n (interval poset of [n]) or a JSON file
//   algebras: example, int:n (incidence algebra of interval_poset(n)),
//             An:n (linear quiver), or a JSON file

#include <string>

#include "torsionlab/algebra.hpp"
#include "torsionlab/poset.hpp"

namespace torsionlab {

/// `opposite` reverses the parsed order.
Poset parse_poset_spec(const std::string& spec, bool opposite = false);
/// For int:n, `opposite` uses the opposite interval poset.
Algebra parse_algebra_spec(const std::string& spec, Scalar p = 2, bool opposite = false);

}  // namespace torsionlab
