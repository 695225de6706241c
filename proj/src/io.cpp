#include "wmha/io.hpp"

#include <fstream>
#include <sstream>

namespace wmha {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw SchemaError(msg);
}

const Json& field(const Json& j, const char* key) {
  require(j.is_object(), std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  require(it != j.end(), std::string("missing field '") + key + "'");
  return *it;
}

std::size_t index_from_json(const Json& j, const char* what) {
  require(j.is_number_integer() && j.get<long long>() >= 0, std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

Vector vector_from_json(const Json& j, std::size_t expected, const std::string& what) {
  require(j.is_array(), what + " must be an array");
  require(j.size() == expected, what + " has length " + std::to_string(j.size()) + ", expected " +
                                    std::to_string(expected));
  Vector v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& what) {
  require(j.is_array(), what + " must be an array of rows");
  require(j.size() == rows, what + " has " + std::to_string(j.size()) + " rows, expected " +
                                std::to_string(rows));
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    Vector r = vector_from_json(j[i], cols, what + " row " + std::to_string(i));
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = r[k];
  }
  return m;
}

FiniteAlgebra algebra_from_json(const Json& j) {
  const Json& labels = field(j, "labels");
  require(labels.is_array(), "labels must be an array");
  std::vector<std::string> names;
  for (const auto& l : labels) {
    require(l.is_string(), "labels must be strings");
    names.push_back(l.get<std::string>());
  }
  std::size_t n = names.size();
  require(n > 0, "an algebra needs at least one basis element");
  const Json& s = field(j, "structure");
  require(s.is_array() && s.size() == n, "structure must be an n x n array of vectors");
  StructureConstants c(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i) {
    require(s[i].is_array() && s[i].size() == n, "structure must be an n x n array of vectors");
    for (std::size_t k = 0; k < n; ++k)
      c[i][k] = vector_from_json(s[i][k], n, "structure[" + std::to_string(i) + "][" + std::to_string(k) + "]");
  }
  try {
    return make_algebra(std::move(names), c);
  } catch (const AlgebraError& e) {
    throw SchemaError(std::string("invalid algebra: ") + e.what());
  }
}

Groupoid groupoid_from_json(const Json& j) {
  Groupoid g;
  const Json& labels = field(j, "labels");
  require(labels.is_array(), "labels must be an array");
  for (const auto& l : labels) {
    require(l.is_string(), "labels must be strings");
    g.labels.push_back(l.get<std::string>());
  }
  std::size_t n = g.labels.size();
  auto indices = [&](const char* key) {
    const Json& a = field(j, key);
    require(a.is_array() && a.size() == n, std::string(key) + " must list one arrow per arrow");
    std::vector<std::size_t> out;
    for (const auto& x : a) {
      std::size_t i = index_from_json(x, key);
      require(i < n, std::string(key) + " entry out of range");
      out.push_back(i);
    }
    return out;
  };
  g.source = indices("source");
  g.target = indices("target");
  g.inverse = indices("inverse");
  const Json& comp = field(j, "compose");
  require(comp.is_array() && comp.size() == n, "compose must be an n x n table");
  for (const auto& row : comp) {
    require(row.is_array() && row.size() == n, "compose must be an n x n table");
    for (const auto& x : row) {
      require(x.is_number_integer(), "compose entries must be integers");
      long v = x.get<long>();
      require(v >= -1 && v < static_cast<long>(n), "compose entry out of range");
      g.compose.push_back(v);
    }
  }
  try {
    validate_groupoid(g);
  } catch (const InvalidGroupoid& e) {
    throw SchemaError(std::string("invalid groupoid: ") + e.what());
  }
  return g;
}

Wmha wmha_from_json(const Json& j) {
  Wmha w;
  w.algebra = algebra_from_json(field(j, "algebra"));
  std::size_t n = w.algebra.dim();
  w.delta = matrix_from_json(field(j, "coproduct"), n * n, n, "coproduct");
  w.counit = vector_from_json(field(j, "counit"), n, "counit");
  w.antipode = matrix_from_json(field(j, "antipode"), n, n, "antipode");
  if (j.contains("idempotent")) w.idempotent = vector_from_json(j["idempotent"], n * n, "idempotent");
  return w;
}

Algebroid algebroid_from_json(const Json& j) {
  Algebroid a;
  QuantumGraphPair& g = a.graphs;
  g.A = algebra_from_json(field(j, "A"));
  g.B = algebra_from_json(field(j, "B"));
  g.C = algebra_from_json(field(j, "C"));
  std::size_t n = g.A.dim(), db = g.B.dim(), dc = g.C.dim();
  g.B_emb = matrix_from_json(field(j, "B_embedding"), n, db, "B_embedding");
  g.C_emb = matrix_from_json(field(j, "C_embedding"), n, dc, "C_embedding");
  g.S_B = matrix_from_json(field(j, "S_B"), dc, db, "S_B");
  g.S_C = matrix_from_json(field(j, "S_C"), db, dc, "S_C");
  a.delta_B = matrix_from_json(field(j, "delta_B"), n * n, n, "delta_B");
  a.delta_C = matrix_from_json(field(j, "delta_C"), n * n, n, "delta_C");
  a.eps_B = matrix_from_json(field(j, "eps_B"), db, n, "eps_B");
  a.eps_C = matrix_from_json(field(j, "eps_C"), dc, n, "eps_C");
  a.antipode = matrix_from_json(field(j, "antipode"), n, n, "antipode");
  return a;
}

Json groupoid_to_json(const Groupoid& g) {
  Json j;
  j["labels"] = g.labels;
  j["source"] = g.source;
  j["target"] = g.target;
  j["inverse"] = g.inverse;
  Json comp = Json::array();
  std::size_t n = g.size();
  for (std::size_t p = 0; p < n; ++p) {
    Json row = Json::array();
    for (std::size_t q = 0; q < n; ++q) row.push_back(g.compose[p * n + q]);
    comp.push_back(row);
  }
  j["compose"] = comp;
  return j;
}

}  // namespace

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  require(j.is_string(), "rationals must be strings \"p/q\" or integers");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError("bad rational '" + j.get<std::string>() + "'");
  }
}

Json vector_to_json(const Vector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(rational_to_json(x));
  return j;
}

Json matrix_to_json(const Matrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(vector_to_json(m.row(i)));
  return j;
}

Json algebra_to_json(const FiniteAlgebra& a) {
  Json j;
  j["labels"] = a.labels();
  Json s = Json::array();
  std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < n; ++k) row.push_back(vector_to_json(to_dense(a.product(i, k), n)));
    s.push_back(row);
  }
  j["structure"] = s;
  return j;
}

Json wmha_to_json(const Wmha& w) {
  Json j;
  j["algebra"] = algebra_to_json(w.algebra);
  j["coproduct"] = matrix_to_json(w.delta);
  j["counit"] = vector_to_json(w.counit);
  j["antipode"] = matrix_to_json(w.antipode);
  if (w.idempotent) j["idempotent"] = vector_to_json(*w.idempotent);
  return j;
}

Json algebroid_to_json(const Algebroid& a) {
  const QuantumGraphPair& g = a.graphs;
  Json j;
  j["A"] = algebra_to_json(g.A);
  j["B"] = algebra_to_json(g.B);
  j["C"] = algebra_to_json(g.C);
  j["B_embedding"] = matrix_to_json(g.B_emb);
  j["C_embedding"] = matrix_to_json(g.C_emb);
  j["S_B"] = matrix_to_json(g.S_B);
  j["S_C"] = matrix_to_json(g.S_C);
  j["delta_B"] = matrix_to_json(a.delta_B);
  j["delta_C"] = matrix_to_json(a.delta_C);
  j["eps_B"] = matrix_to_json(a.eps_B);
  j["eps_C"] = matrix_to_json(a.eps_C);
  j["antipode"] = matrix_to_json(a.antipode);
  return j;
}

Definition parse_definition(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
  require(j.is_object(), "a definition file is a JSON object");
  const Json& schema = field(j, "schema");
  require(schema.is_number_integer() && schema.get<int>() == kSchemaVersion,
          "unsupported schema version");
  const Json& kind = field(j, "kind");
  require(kind.is_string(), "kind must be a string");
  Definition d{kind.get<std::string>(), j.value("name", ""), j.value("description", ""), std::nullopt,
               FiniteAlgebra{}};
  if (j.contains("expected")) d.expected = field(j["expected"], "verdict").get<std::string>();
  const Json& data = field(j, "data");
  try {
    if (d.kind == "algebra") {
      d.value = algebra_from_json(data);
    } else if (d.kind == "groupoid") {
      GroupoidDefinition g;
      std::string model = data.value("model", "function");
      require(model == "function" || model == "convolution", "model must be function or convolution");
      g.model = model == "function" ? GroupoidModel::Function : GroupoidModel::Convolution;
      if (data.value("presentation", "table") == "lazy-pair") g.lazy_pair = true;
      else g.table = groupoid_from_json(data);
      d.value = g;
    } else if (d.kind == "wmha") {
      d.value = wmha_from_json(data);
    } else if (d.kind == "algebroid") {
      d.value = algebroid_from_json(data);
    } else if (d.kind == "separability") {
      SeparabilityDefinition s;
      s.B = algebra_from_json(field(data, "B"));
      s.C = algebra_from_json(field(data, "C"));
      s.S_B = matrix_from_json(field(data, "S_B"), s.C.dim(), s.B.dim(), "S_B");
      s.phi_B = vector_from_json(field(data, "phi_B"), s.B.dim(), "phi_B");
      d.value = s;
    } else if (d.kind == "twist") {
      TwistDefinition t;
      t.wmha = wmha_from_json(field(data, "wmha"));
      const Json& emb = field(data, "B_embedding");
      require(emb.is_array() && !emb.empty() && emb[0].is_array(), "B_embedding must be a matrix");
      std::size_t db = emb[0].size();
      t.B_emb = matrix_from_json(emb, t.wmha.dim(), db, "B_embedding");
      t.twist.u = vector_from_json(field(data, "u"), db, "u");
      t.twist.v = vector_from_json(field(data, "v"), db, "v");
      d.value = t;
    } else {
      throw SchemaError("unknown kind '" + d.kind + "'");
    }
  } catch (const Json::exception& e) {
    throw SchemaError(e.what());
  }
  return d;
}

Definition load_definition(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_definition(os.str());
}

std::string dump_definition(const Definition& d) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = d.kind;
  if (!d.name.empty()) j["name"] = d.name;
  if (!d.description.empty()) j["description"] = d.description;
  if (d.expected) j["expected"] = Json{{"verdict", *d.expected}};
  Json data;
  if (auto* a = std::get_if<FiniteAlgebra>(&d.value)) {
    data = algebra_to_json(*a);
  } else if (auto* g = std::get_if<GroupoidDefinition>(&d.value)) {
    if (g->lazy_pair) data["presentation"] = "lazy-pair";
    else data = groupoid_to_json(*g->table);
    data["model"] = g->model == GroupoidModel::Function ? "function" : "convolution";
  } else if (auto* w = std::get_if<Wmha>(&d.value)) {
    data = wmha_to_json(*w);
  } else if (auto* al = std::get_if<Algebroid>(&d.value)) {
    data = algebroid_to_json(*al);
  } else if (auto* s = std::get_if<SeparabilityDefinition>(&d.value)) {
    data["B"] = algebra_to_json(s->B);
    data["C"] = algebra_to_json(s->C);
    data["S_B"] = matrix_to_json(s->S_B);
    data["phi_B"] = vector_to_json(s->phi_B);
  } else if (auto* t = std::get_if<TwistDefinition>(&d.value)) {
    data["wmha"] = wmha_to_json(t->wmha);
    data["B_embedding"] = matrix_to_json(t->B_emb);
    data["u"] = vector_to_json(t->twist.u);
    data["v"] = vector_to_json(t->twist.v);
  }
  j["data"] = data;
  return j.dump(1) + "\n";
}

Json report_to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks()) {
    Json e;
    e["check"] = c.name;
    e["anchor"] = c.anchor;
    e["status"] = status_name(c.status);
    if (!c.witness.empty()) e["witness"] = c.witness;
    checks.push_back(e);
  }
  Json j;
  j["checks"] = checks;
  j["verdict"] = r.ok() ? "pass" : "fail";
  return j;
}

Json obstruction_to_json(const ObstructionReport& o, const FiniteAlgebra& a) {
  Json w;
  w["label"] = o.witness.label;
  w["text"] = o.witness.text;
  if (o.witness.index) {
    w["index"] = *o.witness.index;
    w["basis_element"] = a.labels()[*o.witness.index];
  }
  Json elems = Json::array();
  for (const auto& v : o.witness.elements) elems.push_back(vector_to_json(v));
  w["elements"] = elems;
  Json mats = Json::array();
  for (const auto& m : o.witness.matrices) mats.push_back(matrix_to_json(m));
  w["matrices"] = mats;
  Json j;
  j["stage"] = stage_name(o.stage);
  j["narrative"] = o.narrative;
  j["witness"] = w;
  if (o.counit) j["counit"] = vector_to_json(*o.counit);
  if (o.counit_prime) j["counit_prime"] = vector_to_json(*o.counit_prime);
  return j;
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  for (const auto& c : r.checks()) {
    os << status_name(c.status) << "  " << c.name << "  [" << c.anchor << "]";
    if (!c.witness.empty()) os << "  witness: " << c.witness;
    os << "\n";
  }
  os << "verdict: " << (r.ok() ? "pass" : "fail") << "\n";
  return os.str();
}

}  // namespace wmha
