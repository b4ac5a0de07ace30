#include "serreq/session.hpp"

#include <map>
#include <memory>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "serreq/generalized.hpp"
#include "serreq/grmod.hpp"
#include "serreq/serre.hpp"
#include "serreq/zmod.hpp"

namespace serreq {
namespace {

using nlohmann::json;

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw UsageError(std::string("session: missing field \"") + key + "\"");
  return *it;
}

std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string())
    throw UsageError(std::string("session: field \"") + key +
                     "\" must be a string");
  return v.get<std::string>();
}

Integer parse_integer(const json& v) {
  try {
    if (v.is_string()) return Integer(v.get<std::string>());
    if (v.is_number_integer()) return Integer(v.get<long long>());
  } catch (const std::exception&) {
  }
  throw UsageError("session: matrix entries must be decimal integer strings");
}

IntMatrix parse_int_matrix(const json& v, std::size_t expect_cols) {
  if (!v.is_array()) throw UsageError("session: matrix must be an array");
  std::size_t rows = v.size();
  IntMatrix m(rows, expect_cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = v[i];
    if (!row.is_array() || row.size() != expect_cols)
      throw UsageError("session: matrix row has wrong length");
    for (std::size_t j = 0; j < expect_cols; ++j)
      m.at(i, j) = parse_integer(row[j]);
  }
  return m;
}

json int_matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Backend adapter: object/morphism (de)serialization against one base
/// category, with the quotient sitting on top.
class Backend {
 public:
  virtual ~Backend() = default;

  virtual ObjectRef parse_object(const json& spec) = 0;
  virtual MorphismRef parse_honest(const ObjectRef& source,
                                   const ObjectRef& target,
                                   const json& spec) = 0;
  virtual json object_json(const ObjectRef& m) = 0;
  virtual json arrow_json(const MorphismRef& phi) = 0;
  /// Equivalent triple prepared for printing; backends may re-coordinate
  /// the hidden domain/codomain objects into canonical presentations.
  virtual GeneralizedMorphism display_form(const GeneralizedMorphism& g) {
    return g;
  }

  virtual json hilbert_json(const ObjectRef& m, const json& cmd) {
    (void)m;
    (void)cmd;
    throw UsageError("session: hilbert is only available for graded modules");
  }

  const std::shared_ptr<SerreQuotientCategory>& quotient() const {
    return quotient_;
  }

 protected:
  std::shared_ptr<SerreQuotientCategory> quotient_;
};

class ZmodBackend : public Backend {
 public:
  ZmodBackend() : cat_(ZModCategory::create()) {
    quotient_ = SerreQuotientCategory::create(torsion_subcategory(cat_));
  }

  ObjectRef parse_object(const json& spec) override {
    const json& g = field(spec, "generators");
    if (!g.is_number_unsigned())
      throw UsageError("session: \"generators\" must be a non-negative count");
    std::size_t gens = g.get<std::size_t>();
    IntMatrix rel(0, gens);
    if (spec.contains("relations"))
      rel = parse_int_matrix(spec["relations"], gens);
    return cat_->object(gens, rel);
  }

  MorphismRef parse_honest(const ObjectRef& source, const ObjectRef& target,
                           const json& spec) override {
    const auto& src = cat_->group_of(source);
    IntMatrix m = parse_int_matrix(field(spec, "matrix"),
                                   cat_->group_of(target).generators);
    if (m.rows() != src.generators)
      throw UsageError("session: matrix row count must match the source");
    return cat_->morphism(source, target, m);
  }

  json object_json(const ObjectRef& m) override {
    const auto& g = cat_->group_of(m);
    json out;
    out["generators"] = g.generators;
    out["relations"] = int_matrix_json(g.relations);
    return out;
  }

  json arrow_json(const MorphismRef& phi) override {
    return int_matrix_json(cat_->matrix_of(phi));
  }

  GeneralizedMorphism display_form(const GeneralizedMorphism& g) override {
    MinimalPresentation dom = minimal_presentation(cat_, g.iota.source());
    MinimalPresentation cod = minimal_presentation(cat_, g.jay.target());
    IntMatrix iota = cat_->matrix_of(cat_->compose(dom.from_min, g.iota));
    IntMatrix arrow = cat_->matrix_of(cat_->compose(
        dom.from_min, cat_->compose(g.arrow, cod.to_min)));
    IntMatrix jay = cat_->matrix_of(cat_->compose(g.jay, cod.to_min));
    // Generator signs of the hidden objects are a free choice; pin them by
    // the first nonzero entry of the corresponding leg.
    for (std::size_t i = 0; i < iota.rows(); ++i) {
      for (std::size_t j = 0; j < iota.cols(); ++j) {
        if (iota.at(i, j) == 0) continue;
        if (iota.at(i, j) < 0) {
          for (std::size_t k = 0; k < iota.cols(); ++k)
            iota.at(i, k) = -iota.at(i, k);
          for (std::size_t k = 0; k < arrow.cols(); ++k)
            arrow.at(i, k) = -arrow.at(i, k);
        }
        break;
      }
    }
    for (std::size_t j = 0; j < jay.cols(); ++j) {
      for (std::size_t i = 0; i < jay.rows(); ++i) {
        if (jay.at(i, j) == 0) continue;
        if (jay.at(i, j) < 0) {
          for (std::size_t k = 0; k < jay.rows(); ++k)
            jay.at(k, j) = -jay.at(k, j);
          for (std::size_t k = 0; k < arrow.rows(); ++k)
            arrow.at(k, j) = -arrow.at(k, j);
        }
        break;
      }
    }
    return make_generalized(
        cat_->morphism(dom.object, g.source, iota),
        cat_->morphism(dom.object, cod.object, arrow),
        cat_->morphism(g.target, cod.object, jay));
  }

 private:
  std::shared_ptr<ZModCategory> cat_;
};

class GrmodBackend : public Backend {
 public:
  GrmodBackend(std::shared_ptr<GrmodCategory> cat, ThickSubcategory thick)
      : cat_(std::move(cat)) {
    quotient_ = SerreQuotientCategory::create(std::move(thick));
  }

  ObjectRef parse_object(const json& spec) override {
    GradedModule m;
    m.ring = cat_->ring();
    const json& gens = field(spec, "generators");
    if (!gens.is_array())
      throw UsageError("session: \"generators\" must be an array of degrees");
    for (const json& d : gens) m.gen_degrees.push_back(parse_degree(d));
    if (spec.contains("relations")) {
      for (const json& r : spec["relations"]) {
        if (!r.is_string())
          throw UsageError("session: relations must be polynomial strings");
        m.relations.push_back(parse_poly(cat_->ring(), m.gen_degrees.size(),
                                         r.get<std::string>()));
      }
    }
    return cat_->object(std::move(m));
  }

  MorphismRef parse_honest(const ObjectRef& source, const ObjectRef& target,
                           const json& spec) override {
    const json& rows = field(spec, "rows");
    if (!rows.is_array())
      throw UsageError("session: \"rows\" must be an array of polynomials");
    std::size_t rank = cat_->module_of(target).gen_degrees.size();
    std::vector<PolyVector> parsed;
    for (const json& r : rows) {
      if (!r.is_string())
        throw UsageError("session: rows must be polynomial strings");
      parsed.push_back(parse_poly(cat_->ring(), rank, r.get<std::string>()));
    }
    return cat_->morphism(source, target, std::move(parsed));
  }

  json object_json(const ObjectRef& m) override {
    const auto& mod = cat_->module_of(m);
    json out;
    out["generators"] = json::array();
    for (const auto& d : mod.gen_degrees) out["generators"].push_back(d);
    out["relations"] = json::array();
    for (const auto& r : mod.relations)
      out["relations"].push_back(print_poly(r));
    return out;
  }

  json arrow_json(const MorphismRef& phi) override {
    json rows = json::array();
    for (const auto& r : cat_->rows_of(phi)) rows.push_back(print_poly(r));
    return rows;
  }

  json hilbert_json(const ObjectRef& m, const json& cmd) override {
    const auto& mod = cat_->module_of(m);
    json out;
    out["kind"] = "hilbert";
    json numerator = json::array();
    for (const auto& [e, c] : hilbert_series(mod)) {
      json pair = json::array();
      pair.push_back(e);
      pair.push_back(c.str());
      numerator.push_back(std::move(pair));
    }
    out["numerator"] = std::move(numerator);
    if (cmd.contains("degrees")) {
      json values;
      for (const json& d : cmd["degrees"]) {
        long long deg = d.get<long long>();
        values[std::to_string(deg)] = hilbert_function(mod, deg).str();
      }
      out["values"] = std::move(values);
    }
    return out;
  }

 private:
  DegreeVector parse_degree(const json& d) {
    DegreeVector out;
    if (d.is_number_integer()) {
      out.push_back(d.get<long long>());
    } else if (d.is_array()) {
      for (const json& x : d) out.push_back(x.get<long long>());
    } else {
      throw UsageError("session: degrees must be integers or integer arrays");
    }
    if (out.size() != cat_->ring()->grading_rank())
      throw UsageError("session: degree vector length mismatch");
    return out;
  }

  std::shared_ptr<GrmodCategory> cat_;
};

RingPtr ring_from_json(const json& doc, std::size_t default_proj_n) {
  if (doc.contains("ring")) {
    const json& r = doc["ring"];
    std::vector<std::string> vars;
    for (const json& v : field(r, "vars")) vars.push_back(v.get<std::string>());
    if (!r.contains("degrees")) return standard_ring(std::move(vars));
    std::vector<DegreeVector> degs;
    for (const json& d : r["degrees"]) {
      DegreeVector dv;
      if (d.is_number_integer())
        dv.push_back(d.get<long long>());
      else
        for (const json& x : d) dv.push_back(x.get<long long>());
      degs.push_back(std::move(dv));
    }
    return make_ring(std::move(vars), std::move(degs));
  }
  std::vector<std::string> vars;
  for (std::size_t i = 0; i <= default_proj_n; ++i)
    vars.push_back("x" + std::to_string(i));
  return standard_ring(std::move(vars));
}

std::unique_ptr<Backend> make_backend(const json& doc,
                                      const std::string& selector) {
  if (selector == "zmod") return std::make_unique<ZmodBackend>();
  if (selector.rfind("proj:", 0) == 0) {
    std::size_t n = 0;
    try {
      n = std::stoul(selector.substr(5));
    } catch (const std::exception&) {
      throw UsageError("session: bad category selector \"" + selector + "\"");
    }
    auto cat = GrmodCategory::create(ring_from_json(doc, n));
    return std::make_unique<GrmodBackend>(cat,
                                          quasi_zero_proj_subcategory(cat));
  }
  if (selector == "toric") {
    if (!doc.contains("ring") || !doc.contains("charts"))
      throw UsageError("session: toric category needs \"ring\" and \"charts\"");
    auto cat = GrmodCategory::create(ring_from_json(doc, 0));
    ToricChartData charts;
    for (const json& c : doc["charts"]) {
      std::vector<std::size_t> chart;
      for (const json& v : c) chart.push_back(v.get<std::size_t>());
      charts.charts.push_back(std::move(chart));
    }
    return std::make_unique<GrmodBackend>(
        cat, quasi_zero_chart_subcategory(cat, std::move(charts)));
  }
  throw UsageError("session: unknown category \"" + selector +
                   "\" (expected zmod, proj:n or toric)");
}

class Runner {
 public:
  Runner(const json& doc, const std::string& category_override) : doc_(doc) {
    std::string selector = category_override;
    if (selector.empty()) {
      if (!doc.contains("category"))
        throw UsageError("session: missing \"category\"");
      selector = string_field(doc, "category");
    }
    backend_ = make_backend(doc, selector);
  }

  json run() {
    if (doc_.contains("objects")) declare_objects(doc_["objects"]);
    if (doc_.contains("morphisms")) declare_morphisms(doc_["morphisms"]);
    json results = json::array();
    if (doc_.contains("commands"))
      for (const json& cmd : doc_["commands"]) results.push_back(execute(cmd));
    return results;
  }

 private:
  const ObjectRef& object(const std::string& name) const {
    auto it = objects_.find(name);
    if (it == objects_.end())
      throw UsageError("session: unknown object \"" + name + "\"");
    return it->second;
  }

  const MorphismRef& base_morphism(const std::string& name) const {
    auto it = base_morphisms_.find(name);
    if (it == base_morphisms_.end())
      throw UsageError("session: unknown honest morphism \"" + name + "\"");
    return it->second;
  }

  const MorphismRef& morphism(const std::string& name) const {
    auto it = morphisms_.find(name);
    if (it == morphisms_.end())
      throw UsageError("session: unknown morphism \"" + name + "\"");
    return it->second;
  }

  void declare_objects(const json& list) {
    for (const json& spec : list) {
      std::string name = string_field(spec, "name");
      if (!objects_.emplace(name, backend_->parse_object(spec)).second)
        throw UsageError("session: duplicate object name \"" + name + "\"");
    }
  }

  void declare_morphisms(const json& list) {
    auto& q = *backend_->quotient();
    for (const json& spec : list) {
      std::string name = string_field(spec, "name");
      MorphismRef phi = [&] {
        if (spec.contains("arrow")) {  // generalized triple of honest names
          GeneralizedMorphism g = make_generalized(
              base_morphism(string_field(spec, "domain")),
              base_morphism(string_field(spec, "arrow")),
              base_morphism(string_field(spec, "codomain")));
          return q.from_gen(g);
        }
        MorphismRef base = backend_->parse_honest(
            object(string_field(spec, "source")),
            object(string_field(spec, "target")), spec);
        base_morphisms_.emplace(name, base);
        return q.from_base_morphism(base);
      }();
      if (!morphisms_.emplace(name, phi).second)
        throw UsageError("session: duplicate morphism name \"" + name + "\"");
    }
  }

  json morphism_json(const char* op, const std::string& name,
                     const MorphismRef& phi) {
    auto& q = *backend_->quotient();
    GeneralizedMorphism g = backend_->display_form(q.gen_of(phi));
    json out;
    out["kind"] = "morphism";
    out["op"] = op;
    if (!name.empty()) out["name"] = name;
    out["source"] = backend_->object_json(g.source);
    out["target"] = backend_->object_json(g.target);
    out["domain_object"] = backend_->object_json(g.iota.source());
    out["codomain_object"] = backend_->object_json(g.jay.target());
    out["domain"] = backend_->arrow_json(g.iota);
    out["arrow"] = backend_->arrow_json(g.arrow);
    out["codomain"] = backend_->arrow_json(g.jay);
    out["is_zero"] = q.is_zero_morphism(phi);
    return out;
  }

  json execute(const json& cmd) {
    std::string op = string_field(cmd, "op");
    auto& q = *backend_->quotient();
    auto named = [&](const MorphismRef& phi) {
      std::string name;
      if (cmd.contains("name")) {
        name = string_field(cmd, "name");
        if (!morphisms_.emplace(name, phi).second)
          throw UsageError("session: duplicate morphism name \"" + name +
                           "\"");
      }
      return morphism_json(op.c_str(), name, phi);
    };
    if (op == "lift")
      return named(q.mono_lift(morphism(string_field(cmd, "beta")),
                               morphism(string_field(cmd, "gamma"))));
    if (op == "colift")
      return named(q.epi_colift(morphism(string_field(cmd, "beta")),
                                morphism(string_field(cmd, "gamma"))));
    if (op == "compose")
      return named(q.compose(morphism(string_field(cmd, "first")),
                             morphism(string_field(cmd, "second"))));
    if (op == "kernel")
      return named(q.kernel(morphism(string_field(cmd, "of"))).embedding);
    if (op == "cokernel")
      return named(q.cokernel(morphism(string_field(cmd, "of"))).projection);
    if (op == "print" || op == "is-zero")
      return named(morphism(string_field(cmd, "of")));
    if (op == "equal") {
      const MorphismRef& l = morphism(string_field(cmd, "left"));
      const MorphismRef& r = morphism(string_field(cmd, "right"));
      const GeneralizedMorphism& gl = q.gen_of(l);
      const GeneralizedMorphism& gr = q.gen_of(r);
      json out;
      out["kind"] = "equality";
      out["op"] = op;
      if (equal_gen(gl, gr)) {
        out["equal"] = true;
        out["witness"] = "gen-iso";
      } else {
        out["equal"] = serre_equal(gl, gr, q.thick());
        out["witness"] = "zeroid";
      }
      return out;
    }
    if (op == "is-zero-sheaf") {
      std::string name = string_field(cmd, "object");
      json out;
      out["kind"] = "object";
      out["op"] = op;
      out["name"] = name;
      out["is_zero"] = q.is_zero_object(q.from_base(object(name)));
      return out;
    }
    if (op == "hilbert") {
      std::string name = string_field(cmd, "object");
      json out = backend_->hilbert_json(object(name), cmd);
      out["op"] = op;
      out["name"] = name;
      return out;
    }
    throw UsageError("session: unknown command \"" + op + "\"");
  }

  const json& doc_;
  std::unique_ptr<Backend> backend_;
  std::map<std::string, ObjectRef> objects_;
  std::map<std::string, MorphismRef> base_morphisms_;
  std::map<std::string, MorphismRef> morphisms_;
};

void render_text(const json& value, const std::string& indent,
                 std::ostream& os) {
  if (value.is_object()) {
    os << "\n";
    for (auto it = value.begin(); it != value.end(); ++it) {
      os << indent << it.key() << ":";
      render_text(it.value(), indent + "  ", os);
    }
  } else {
    os << " " << value.dump() << "\n";
  }
}

}  // namespace

OutputFormat parse_output_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "text") return OutputFormat::text;
  throw UsageError("output format must be json or text");
}

std::string run_session(const std::string& json_text,
                        const std::string& category_override,
                        OutputFormat format) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("session: invalid JSON: ") + e.what());
  }
  json results = Runner(doc, category_override).run();
  if (format == OutputFormat::json) return results.dump(2) + "\n";
  std::ostringstream os;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const json& r = results[i];
    os << "[" << (i + 1) << "] " << r.value("op", std::string("result"));
    render_text(r, "  ", os);
  }
  return os.str();
}

std::string demo_session(const std::string& name) {
  if (name == "z-lift") {
    return R"({
  "category": "zmod",
  "objects": [
    {"name": "Z", "generators": 1, "relations": []}
  ],
  "morphisms": [
    {"name": "beta", "source": "Z", "target": "Z", "matrix": [["4"]]},
    {"name": "gamma", "source": "Z", "target": "Z", "matrix": [["6"]]}
  ],
  "commands": [
    {"op": "lift", "gamma": "gamma", "beta": "beta", "name": "ell"},
    {"op": "compose", "first": "ell", "second": "beta", "name": "round"},
    {"op": "equal", "left": "round", "right": "gamma"}
  ]
})";
  }
  if (name == "p1-iso") {
    return R"({
  "category": "proj:1",
  "objects": [
    {"name": "S", "generators": [0], "relations": []},
    {"name": "m", "generators": [1, 1], "relations": ["x1*e_1 - x0*e_2"]}
  ],
  "morphisms": [
    {"name": "emb", "source": "m", "target": "S", "rows": ["x0", "x1"]},
    {"name": "id_S", "source": "S", "target": "S", "rows": ["1"]},
    {"name": "id_m", "source": "m", "target": "m",
     "rows": ["e_1", "e_2"]}
  ],
  "commands": [
    {"op": "lift", "gamma": "id_S", "beta": "emb", "name": "inv"},
    {"op": "compose", "first": "inv", "second": "emb", "name": "left_round"},
    {"op": "compose", "first": "emb", "second": "inv", "name": "right_round"},
    {"op": "equal", "left": "left_round", "right": "id_S"},
    {"op": "equal", "left": "right_round", "right": "id_m"}
  ]
})";
  }
  if (name == "p1xp1-zero") {
    return R"({
  "category": "toric",
  "ring": {"vars": ["x0", "x1", "y0", "y1"],
           "degrees": [[1, 0], [1, 0], [0, 1], [0, 1]]},
  "charts": [[0, 2], [0, 3], [1, 2], [1, 3]],
  "objects": [
    {"name": "M", "generators": [[0, 0]], "relations": ["x0", "x1"]},
    {"name": "N", "generators": [[0, 0]], "relations": ["x0", "y0"]}
  ],
  "commands": [
    {"op": "is-zero-sheaf", "object": "M"},
    {"op": "is-zero-sheaf", "object": "N"}
  ]
})";
  }
  throw UsageError("unknown demo \"" + name +
                   "\" (expected z-lift, p1-iso or p1xp1-zero)");
}

}  // namespace serreq
