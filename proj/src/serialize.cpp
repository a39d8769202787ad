#include "cf/serialize.hpp"

#include "cf/errors.hpp"

namespace cf {

namespace {

mpq_class rational_from(const Json& j) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput("expected a rational as a string or integer, got " + j.dump());
}

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int index_in(const std::vector<std::string>& names, const Json& j, const char* what) {
  if (j.is_number_integer()) {
    int k = j.get<int>();
    if (k < 0 || k >= static_cast<int>(names.size())) throw InvalidInput(std::string("bad ") + what + " index");
    return k;
  }
  auto s = j.get<std::string>();
  for (size_t k = 0; k < names.size(); ++k)
    if (names[k] == s) return static_cast<int>(k);
  throw InvalidInput(std::string("unknown ") + what + " \"" + s + "\"");
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  if (s.is_real()) return rational_str(s.re());
  return Json{{"re", rational_str(s.re())}, {"im", rational_str(s.im())}};
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_object()) {
    mpq_class re = rational_from(field_of(j, "re"));
    mpq_class im = j.contains("im") ? rational_from(j.at("im")) : mpq_class(0);
    return Scalar(re, im);
  }
  return Scalar(rational_from(j));
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (int k = 0; k < m.cols(); ++k) r.push_back(scalar_to_json(m(i, k)));
    rows.push_back(std::move(r));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, int cols) {
  if (!j.is_array()) throw InvalidInput("matrix must be an array of rows");
  if (j.empty()) {
    if (cols < 0) throw InvalidInput("empty matrix without a known width");
    return Matrix(0, cols);
  }
  int c = static_cast<int>(j.at(0).size());
  if (cols >= 0 && c != cols) throw InvalidInput("matrix rows have " + std::to_string(c) + " entries, expected " + std::to_string(cols));
  Matrix m(static_cast<int>(j.size()), c);
  for (int i = 0; i < m.rows(); ++i) {
    const auto& r = j.at(i);
    if (!r.is_array() || static_cast<int>(r.size()) != c) throw InvalidInput("ragged matrix");
    for (int k = 0; k < c; ++k) m(i, k) = scalar_from_json(r.at(k));
  }
  return m;
}

Json space_to_json(const AntiinvolutiveSpace& h) {
  return Json{{"field", field_name(h.field)}, {"dim", h.dim}, {"inv", matrix_to_json(h.inv)}};
}

SpacePtr space_from_json(const Json& j, const std::string& name) {
  Field f = parse_field(field_of(j, "field").get<std::string>());
  int dim = field_of(j, "dim").get<int>();
  Matrix inv = matrix_from_json(field_of(j, "inv"), dim);
  if (inv.rows() != dim) throw InvalidInput("inv must be " + std::to_string(dim) + " x " + std::to_string(dim));
  if (f == Field::Q)
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c)
        if (!inv(r, c).is_real()) throw InvalidInput("non-real entry over Q");
  return make_space(f, inv, name);
}

Json element_to_json(const Vec& v) {
  Json out = Json::object();
  for (size_t mask = 0; mask < v.size(); ++mask) {
    if (v[mask].is_zero()) continue;
    Json s = Json::array();
    for (int k = 0; (size_t{1} << k) <= mask; ++k)
      if (mask >> k & 1) s.push_back(k);
    out[s.dump()] = scalar_to_json(v[mask]);
  }
  return out;
}

Vec element_from_json(const Json& j, int n_gens) {
  Vec v(size_t{1} << n_gens);
  for (const auto& [key, val] : j.items()) {
    Json s = Json::parse(key);
    size_t mask = 0;
    int last = -1;
    for (const auto& k : s) {
      int b = k.get<int>();
      if (b <= last || b >= n_gens) throw InvalidInput("subset " + key + " is not a sorted index array");
      mask |= size_t{1} << b;
      last = b;
    }
    v[mask] = scalar_from_json(val);
  }
  return v;
}

Json algebra_to_json(const SuperAlgebra& a) {
  Json mul = Json::array();
  for (int i = 0; i < a.dim; ++i) {
    Json row = Json::array();
    for (int k = 0; k < a.dim; ++k) {
      Json e = Json::array();
      for (const auto& x : a.multiply(a.basis_vec(i), a.basis_vec(k))) e.push_back(scalar_to_json(x));
      row.push_back(std::move(e));
    }
    mul.push_back(std::move(row));
  }
  return Json{{"dim", a.dim}, {"parity", a.parity}, {"mul", std::move(mul)}};
}

Json bimodule_to_json(const SuperBimodule& m) {
  Json l = Json::array(), r = Json::array();
  for (const auto& g : m.lgen) l.push_back(matrix_to_json(g));
  for (const auto& g : m.rgen) r.push_back(matrix_to_json(g));
  return Json{{"dim", m.dim}, {"parity", m.parity}, {"left_generators", l}, {"right_generators", r}};
}

Json hom_space_to_json(const HomSpace& h) {
  Json e = Json::array(), o = Json::array();
  for (const auto& m : h.even_basis) e.push_back(matrix_to_json(m));
  for (const auto& m : h.odd_basis) o.push_back(matrix_to_json(m));
  return Json{{"source_dim", h.source_dim}, {"target_dim", h.target_dim}, {"even", e}, {"odd", o}};
}

Json category_to_json(const FiniteCategory& c) {
  Json ms = Json::array();
  for (const auto& m : c.morphisms)
    ms.push_back(Json{{"id", m.id}, {"src", c.objects[m.src]}, {"dst", c.objects[m.dst]}});
  Json comp = Json::object();
  for (const auto& [fg, h] : c.compose)
    comp[c.morphisms[fg.first].id + "," + c.morphisms[fg.second].id] = c.morphisms[h].id;
  Json ids = Json::array();
  for (int e : c.identities) ids.push_back(c.morphisms[e].id);
  return Json{{"objects", c.objects}, {"morphisms", ms}, {"compose", comp}, {"identities", ids}};
}

FiniteCategory category_from_json(const Json& j) {
  FiniteCategory c;
  c.objects = field_of(j, "objects").get<std::vector<std::string>>();
  std::vector<std::string> ids;
  for (const auto& m : field_of(j, "morphisms")) {
    Morphism x{field_of(m, "id").get<std::string>(), index_in(c.objects, field_of(m, "src"), "object"),
               index_in(c.objects, field_of(m, "dst"), "object")};
    ids.push_back(x.id);
    c.morphisms.push_back(std::move(x));
  }
  for (const auto& [key, val] : field_of(j, "compose").items()) {
    auto comma = key.find(',');
    if (comma == std::string::npos) throw InvalidInput("compose key \"" + key + "\" is not \"f,g\"");
    int f = index_in(ids, key.substr(0, comma), "morphism");
    int g = index_in(ids, key.substr(comma + 1), "morphism");
    c.compose[{f, g}] = index_in(ids, val, "morphism");
  }
  for (const auto& e : field_of(j, "identities")) c.identities.push_back(index_in(ids, e, "morphism"));
  return c;
}

Json report_to_json(const CoherenceReport& r) {
  Json j{{"diagram_id", r.diagram_id}, {"verdict", r.commutes ? "pass" : "fail"}};
  if (r.failing_pair >= 0) {
    j["failing_pair"] = r.failing_pair;
    const auto& p = r.pairs.at(r.failing_pair);
    if (p.witness)
      j["witness_entry"] = Json{{"lhs_path", p.lhs},
                                {"rhs_path", p.rhs},
                                {"row", p.witness->row},
                                {"col", p.witness->col},
                                {"lhs", scalar_to_json(p.witness->lhs)},
                                {"rhs", scalar_to_json(p.witness->rhs)}};
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

CoherenceReport report_from_json(const Json& j) {
  CoherenceReport r;
  r.diagram_id = field_of(j, "diagram_id").get<std::string>();
  auto v = field_of(j, "verdict").get<std::string>();
  if (v != "pass" && v != "fail") throw InvalidInput("verdict must be pass or fail");
  r.commutes = v == "pass";
  if (j.contains("note")) r.note = j.at("note").get<std::string>();
  if (j.contains("failing_pair")) {
    r.failing_pair = j.at("failing_pair").get<int>();
    if (r.failing_pair < 0) throw InvalidInput("bad failing_pair");
    r.pairs.resize(r.failing_pair + 1);
    auto& p = r.pairs.back();
    p.commutes = false;
    if (j.contains("witness_entry")) {
      const auto& w = j.at("witness_entry");
      p.lhs = field_of(w, "lhs_path").get<std::string>();
      p.rhs = field_of(w, "rhs_path").get<std::string>();
      p.witness = EntryWitness{field_of(w, "row").get<int>(), field_of(w, "col").get<int>(),
                               scalar_from_json(field_of(w, "lhs")), scalar_from_json(field_of(w, "rhs"))};
    }
  }
  return r;
}

}  // namespace cf
