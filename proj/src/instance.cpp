#include "cf/instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cf/errors.hpp"

namespace cf {

namespace {

template <class M>
const typename M::mapped_type& lookup(const M& m, const std::string& name, const char* what) {
  auto it = m.find(name);
  if (it == m.end()) throw InvalidInput(std::string("unknown ") + what + " \"" + name + "\"");
  return it->second;
}

Subspace rows_subspace(const Json& j, int n, const std::string& who) {
  Matrix b = matrix_from_json(j, n);
  Subspace s = canonicalize_subspace(b, n);
  if (s.dim() != b.rows()) throw InvalidInput(who + ": basis is not linearly independent");
  return s;
}

std::string lagrangian_failure(const LagrangianReport& r) {
  if (!r.isotropic) return "not isotropic";
  if (!r.splits) return "L and α(L) do not split the space";
  return r.reason;
}

}  // namespace

const SpacePtr& Instance::space(const std::string& n) const { return lookup(spaces, n, "space"); }
const Lagrangian& Instance::lagrangian(const std::string& n) const { return lookup(lagrangians, n, "lagrangian"); }
const Correspondence& Instance::correspondence(const std::string& n) const {
  return lookup(correspondences, n, "correspondence");
}
const Span& Instance::span(const std::string& n) const { return lookup(spans, n, "span"); }

bool Instance::has(const std::string& n) const {
  return spaces.count(n) || lagrangians.count(n) || correspondences.count(n) || spans.count(n) ||
         categories.count(n) || wannabes.count(n);
}

Instance parse_instance(const Json& j) {
  if (!j.is_object()) throw InvalidInput("instance must be a JSON object");
  Instance in;
  auto section = [&](const char* key) -> const Json& {
    static const Json empty = Json::object();
    if (!j.contains(key)) return empty;
    if (!j.at(key).is_object()) throw InvalidInput(std::string("\"") + key + "\" must be an object of named entries");
    return j.at(key);
  };
  // wrap schema errors with the object's name
  auto named = [](const std::string& what, const std::string& name, auto&& body) {
    std::string who = what + " \"" + name + "\"";
    try {
      body(who);
    } catch (const InvalidInput& e) {
      std::string m = e.what();
      throw InvalidInput(m.rfind(who, 0) == 0 ? m : who + ": " + m);
    } catch (const Json::exception& e) {
      throw InvalidInput(who + ": " + e.what());
    }
  };

  for (const auto& [name, v] : section("spaces").items())
    named("space", name, [&](const std::string&) { in.spaces[name] = space_from_json(v, name); });

  for (const auto& [name, v] : section("lagrangians").items())
    named("lagrangian", name, [&](const std::string& who) {
      auto h = in.space(v.at("space").get<std::string>());
      Subspace s = rows_subspace(v.at("basis"), h->dim, who);
      auto rep = validate_lagrangian(*h, s);
      if (!rep.ok) throw InvalidInput(who + ": " + lagrangian_failure(rep));
      in.lagrangians[name] = Lagrangian{h, s};
    });

  for (const auto& [name, v] : section("correspondences").items())
    named("correspondence", name, [&](const std::string& who) {
      auto hi = in.space(v.at("source").get<std::string>());
      auto hj = in.space(v.at("target").get<std::string>());
      if (hi->field != hj->field) throw InvalidInput(who + ": source and target fields differ");
      auto amb = corr_space(*hi, *hj);
      Subspace s = rows_subspace(v.at("basis"), amb->dim, who);
      auto rep = validate_lagrangian(*amb, s);
      if (!rep.ok) throw InvalidInput(who + ": " + lagrangian_failure(rep));
      in.correspondences[name] = make_correspondence(hi, hj, s);
    });

  for (const auto& [name, v] : section("spans").items())
    named("span", name, [&](const std::string& who) {
      auto hi = in.space(v.at("source").get<std::string>());
      auto hj = in.space(v.at("target").get<std::string>());
      if (hi->field != hj->field) throw InvalidInput(who + ": source and target fields differ");
      int w = v.at("w_dim").get<int>();
      Span s{hi, hj, corr_space(*hi, *hj), w, Matrix()};
      s.eta = matrix_from_json(v.at("eta"), w);
      if (s.eta.rows() != s.ambient->dim) throw InvalidInput(who + ": eta must have one row per ambient coordinate");
      auto rep = validate_span(s);
      if (!rep.ok) throw InvalidInput(who + ": " + rep.reason);
      in.spans[name] = s;
    });

  for (const auto& [name, v] : section("categories").items())
    named("category", name, [&](const std::string& who) {
      auto c = category_from_json(v);
      auto rep = validate_category(c);
      if (!rep.ok) throw InvalidInput(who + ": " + rep.reason);
      in.categories[name] = std::move(c);
    });

  for (const auto& [name, v] : section("wannabes").items())
    named("wannabe", name, [&](const std::string& who) {
      std::vector<Correspondence> chain;
      for (const auto& c : v.at("chain")) chain.push_back(in.correspondence(c.get<std::string>()));
      if (chain.empty()) throw InvalidInput(who + ": empty chain");
      auto w = fock_wannabe(chain);
      auto rep = validate_wannabe(w->w);
      if (!rep.ok) throw InvalidInput(who + ": " + rep.reason);
      in.wannabes[name] = std::move(w);
    });

  for (const auto& [name, v] : section("fixtures").items())
    named("fixture", name, [&](const std::string& who) {
      auto members = v.get<std::vector<std::string>>();
      for (const auto& m : members)
        if (!in.has(m)) throw InvalidInput(who + ": unknown object \"" + m + "\"");
      in.fixtures[name] = members;
    });

  for (const auto& [key, v] : j.items()) {
    static const std::vector<std::string> known = {"spaces",  "lagrangians", "correspondences", "spans",
                                                   "categories", "wannabes",   "fixtures"};
    if (std::find(known.begin(), known.end(), key) == known.end()) throw InvalidInput("unknown section \"" + key + "\"");
  }
  return in;
}

Instance load_instance(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  Json j;
  try {
    j = Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw InvalidInput(path + " is not valid JSON: " + e.what());
  }
  return parse_instance(j);
}

Json correspondence_to_json(const Correspondence& c, const std::string& source, const std::string& target) {
  return Json{{"source", source}, {"target", target}, {"basis", matrix_to_json(c.lag.basis())}};
}

}  // namespace cf
