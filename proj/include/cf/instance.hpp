#pragma once

#include <map>

#include "cf/serialize.hpp"

namespace cf {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Everything named in an instance file. Spans and correspondences refer to
// spaces by name; a wannabe is the Fock wannabe of a chain of correspondences.
//
// {"spaces": {"H": {"field": "Qi", "dim": 2, "inv": [...]}},
//  "lagrangians": {"L": {"space": "H", "basis": [...]}},
//  "correspondences": {"C": {"source": "H", "target": "H", "basis": [...]}},
//  "spans": {"S": {"source": "H", "target": "H", "w_dim": 2, "eta": [...]}},
//  "categories": {"K": {...}},
//  "wannabes": {"W": {"chain": ["C", "C"]}},
//  "fixtures": {"FIX-P": ["P1", "P2"]}}
struct Instance {
  std::map<std::string, SpacePtr> spaces;
  std::map<std::string, Lagrangian> lagrangians;
  std::map<std::string, Correspondence> correspondences;
  std::map<std::string, Span> spans;
  std::map<std::string, FiniteCategory> categories;
  std::map<std::string, std::unique_ptr<FockWannabe>> wannabes;
  std::map<std::string, std::vector<std::string>> fixtures;

  const SpacePtr& space(const std::string& name) const;
  const Lagrangian& lagrangian(const std::string& name) const;
  const Correspondence& correspondence(const std::string& name) const;
  const Span& span(const std::string& name) const;
  bool has(const std::string& name) const;
};

// IoError when unreadable, InvalidInput (naming the object) for schema or
// validator failures.
Instance parse_instance(const Json& j);
Instance load_instance(const std::string& path);

Json correspondence_to_json(const Correspondence& c, const std::string& source, const std::string& target);

}  // namespace cf
