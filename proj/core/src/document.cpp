#include "kframe/document.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "kframe/errors.hpp"

namespace kframe {

using json = nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw DocumentError("document error at " + path + ": " + what);
}

complex parse_complex(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(path, "expected a [re, im] pair");
  const double re = j[0].get<double>();
  const double im = j[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) fail(path, "non-finite entry");
  return complex(re, im);
}

json emit_complex(const complex& z) { return json::array({z.real(), z.imag()}); }

Matrix parse_rows(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of rows");
  if (j.empty()) return Matrix();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  Matrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& row = j[i];
    if (!row.is_array() || row.size() != cols) fail(path, "ragged rows");
    for (std::size_t c = 0; c < cols; ++c)
      m(i, c) = parse_complex(row[c], path + "[" + std::to_string(i) + "][" +
                                          std::to_string(c) + "]");
  }
  return m;
}

json emit_rows(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(emit_complex(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<double> parse_reals(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> v;
  v.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) fail(path + "[" + std::to_string(i) + "]", "expected a number");
    v.push_back(j[i].get<double>());
  }
  return v;
}

}  // namespace

VectorFamily Document::family(const std::string& name) const {
  auto it = families.find(name);
  if (it == families.end()) fail("families." + name, "no such family");
  const PontryaginSpace& sp = space(it->second.space);
  if (it->second.synthesis.rows() != sp.dim())
    fail("families." + name, "vector dimension does not match the space");
  return make_family(sp, it->second.synthesis);
}

const PontryaginSpace& Document::space(const std::string& name) const {
  auto it = spaces.find(name);
  if (it == spaces.end()) fail("spaces." + name, "no such space");
  return it->second;
}

const Document::OperatorEntry& Document::op(const std::string& name) const {
  auto it = operators.find(name);
  if (it == operators.end()) fail("operators." + name, "no such operator");
  return it->second;
}

const Document::SpecEntry& Document::spec(const std::string& name) const {
  auto it = specs.find(name);
  if (it == specs.end()) fail("specs." + name, "no such spec");
  return it->second;
}

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("document error: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("$", "top level must be an object");

  Document doc;
  doc.version = j.value("version", "1");
  if (doc.version != "1") fail("version", "unsupported document version");

  if (j.contains("spaces")) {
    if (!j["spaces"].is_object()) fail("spaces", "expected an object");
    for (auto& [name, sj] : j["spaces"].items()) {
      const std::string path = "spaces." + name;
      if (!sj.is_object() || !sj.contains("signature")) fail(path, "missing signature");
      std::vector<int> sig;
      for (std::size_t i = 0; i < sj["signature"].size(); ++i) {
        const auto& e = sj["signature"][i];
        if (!e.is_number_integer() || (e.get<int>() != 1 && e.get<int>() != -1))
          fail(path + ".signature[" + std::to_string(i) + "]", "entries must be +1 or -1");
        sig.push_back(e.get<int>());
      }
      try {
        doc.spaces.emplace(name, PontryaginSpace(std::move(sig)));
      } catch (const Error& e) {
        fail(path, e.what());
      }
    }
  }

  if (j.contains("families")) {
    if (!j["families"].is_object()) fail("families", "expected an object");
    for (auto& [name, fj] : j["families"].items()) {
      const std::string path = "families." + name;
      if (!fj.is_object() || !fj.contains("space") || !fj.contains("vectors"))
        fail(path, "need space and vectors");
      Document::FamilyEntry entry;
      entry.space = fj["space"].get<std::string>();
      // vectors arrive row-per-vector; store as synthesis columns
      const Matrix rows = parse_rows(fj["vectors"], path + ".vectors");
      entry.synthesis = rows.adjoint().conj();  // plain transpose
      doc.families.emplace(name, std::move(entry));
    }
  }

  if (j.contains("operators")) {
    if (!j["operators"].is_object()) fail("operators", "expected an object");
    for (auto& [name, oj] : j["operators"].items()) {
      const std::string path = "operators." + name;
      if (!oj.is_object() || !oj.contains("entries")) fail(path, "missing entries");
      Document::OperatorEntry entry;
      entry.space = oj.value("space", "");
      entry.matrix = parse_rows(oj["entries"], path + ".entries");
      doc.operators.emplace(name, std::move(entry));
    }
  }

  if (j.contains("specs")) {
    if (!j["specs"].is_object()) fail("specs", "expected an object");
    for (auto& [name, sj] : j["specs"].items()) {
      const std::string path = "specs." + name;
      if (!sj.is_object()) fail(path, "expected an object");
      Document::SpecEntry entry;
      if (sj.contains("eigenvalues"))
        entry.eigenvalues = parse_reals(sj["eigenvalues"], path + ".eigenvalues");
      if (sj.contains("norms")) entry.norms = parse_reals(sj["norms"], path + ".norms");
      if (entry.eigenvalues.empty() == entry.norms.empty())
        fail(path, "exactly one of eigenvalues/norms is required");
      doc.specs.emplace(name, std::move(entry));
    }
  }
  return doc;
}

std::string emit_document(const Document& doc) {
  json j;
  j["version"] = doc.version;
  if (!doc.spaces.empty()) {
    json spaces = json::object();
    for (const auto& [name, sp] : doc.spaces) spaces[name] = {{"signature", sp.signature()}};
    j["spaces"] = std::move(spaces);
  }
  if (!doc.families.empty()) {
    json families = json::object();
    for (const auto& [name, fe] : doc.families) {
      json vectors = json::array();
      const Matrix& x = fe.synthesis;
      for (std::size_t n = 0; n < x.cols(); ++n) {
        json vec = json::array();
        for (std::size_t i = 0; i < x.rows(); ++i) vec.push_back(emit_complex(x(i, n)));
        vectors.push_back(std::move(vec));
      }
      families[name] = {{"space", fe.space}, {"vectors", std::move(vectors)}};
    }
    j["families"] = std::move(families);
  }
  if (!doc.operators.empty()) {
    json ops = json::object();
    for (const auto& [name, oe] : doc.operators) {
      json entry = {{"entries", emit_rows(oe.matrix)}};
      if (!oe.space.empty()) entry["space"] = oe.space;
      ops[name] = std::move(entry);
    }
    j["operators"] = std::move(ops);
  }
  if (!doc.specs.empty()) {
    json specs = json::object();
    for (const auto& [name, se] : doc.specs) {
      json entry = json::object();
      if (!se.eigenvalues.empty()) entry["eigenvalues"] = se.eigenvalues;
      if (!se.norms.empty()) entry["norms"] = se.norms;
      specs[name] = std::move(entry);
    }
    j["specs"] = std::move(specs);
  }
  return j.dump(2) + "\n";
}

std::string emit_matrix_json(const Matrix& m) { return emit_rows(m).dump(); }

}  // namespace kframe
