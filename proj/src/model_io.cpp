#include "gwl/model_io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>

namespace gwl {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ModelParseError("key '" + where + "': " + what);
}

const json& require_key(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) fail(key, "missing");
  return *it;
}

const json& require_array(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

json vector_to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(int_to_json(x));
  return out;
}

IntVector vector_from_json(const json& j, std::size_t rank, const std::string& where) {
  require_array(j, where);
  if (j.size() != rank)
    fail(where, "expected " + std::to_string(rank) + " coefficients, got " + std::to_string(j.size()));
  IntVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(int_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

std::size_t index_from_json(const json& j, std::size_t rank, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected a basis index");
  const auto i = j.get<long long>();
  if (i < 0 || static_cast<std::size_t>(i) >= rank) fail(where, "basis index out of range");
  return static_cast<std::size_t>(i);
}

}  // namespace

json int_to_json(const Int& x) {
  if (x.fits_slong_p()) return json(static_cast<std::int64_t>(x.get_si()));
  return json(x.get_str());
}

Int int_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    Int x;
    if (s.empty() || x.set_str(s, 10) != 0) fail(where, "'" + s + "' is not an integer");
    return x;
  }
  fail(where, "expected an integer");
}

json model_to_json(const RingModel& m) {
  json doc;
  doc["name"] = m.name;
  doc["basis"] = m.group.names();
  doc["orders"] = vector_to_json(m.group.orders());
  doc["unit"] = vector_to_json(m.unit.coeffs());
  doc["augmentation"] = vector_to_json(m.augmentation);
  json mul = json::array();
  for (std::size_t i = 0; i < m.rank(); ++i)
    for (std::size_t j = i; j < m.rank(); ++j)
      if (!m.mul_table[i][j].is_zero()) mul.push_back(json::array({i, j, vector_to_json(m.mul_table[i][j].coeffs())}));
  doc["mul"] = std::move(mul);
  json lambda = json::object();
  for (std::size_t i = 0; i < m.rank(); ++i) {
    json series = json::array();
    for (const auto& v : m.lambda_on_basis[i]) series.push_back(vector_to_json(v.coeffs()));
    lambda[m.group.names()[i]] = std::move(series);
  }
  doc["lambda"] = std::move(lambda);
  if (m.hyperbolic_gens) {
    json hyp = json::array();
    for (const auto& h : *m.hyperbolic_gens) hyp.push_back(vector_to_json(h.coeffs()));
    doc["hyperbolic"] = std::move(hyp);
  }
  doc["truncation"] = m.truncation;
  return doc;
}

RingModel model_from_json(const json& doc) {
  if (!doc.is_object()) throw ModelParseError("model document must be a JSON object");
  RingModel m;
  const json& name = require_key(doc, "name");
  if (!name.is_string()) fail("name", "expected a string");
  m.name = name.get<std::string>();

  const json& basis = require_array(require_key(doc, "basis"), "basis");
  std::vector<std::string> names;
  for (const auto& b : basis) {
    if (!b.is_string()) fail("basis", "labels must be strings");
    names.push_back(b.get<std::string>());
  }
  const json& orders_json = require_array(require_key(doc, "orders"), "orders");
  if (orders_json.size() != names.size())
    fail("orders", "has " + std::to_string(orders_json.size()) + " entries but basis has " + std::to_string(names.size()));
  const IntVector orders = vector_from_json(orders_json, names.size(), "orders");
  try {
    m.group = GroupPresentation(orders, names);
  } catch (const std::invalid_argument& e) {
    fail("orders", e.what());
  }
  const std::size_t n = m.rank();
  if (n == 0) fail("basis", "must not be empty");

  m.unit = m.group.element(vector_from_json(require_key(doc, "unit"), n, "unit"));
  m.augmentation = vector_from_json(require_key(doc, "augmentation"), n, "augmentation");

  m.mul_table.assign(n, std::vector<GroupElement>(n, m.group.zero()));
  const json& mul = require_array(require_key(doc, "mul"), "mul");
  for (std::size_t k = 0; k < mul.size(); ++k) {
    const std::string where = "mul[" + std::to_string(k) + "]";
    const json& entry = mul[k];
    if (!entry.is_array() || entry.size() != 3) fail(where, "expected [i, j, coefficients]");
    const std::size_t i = index_from_json(entry[0], n, where);
    const std::size_t j = index_from_json(entry[1], n, where);
    if (i > j) fail(where, "entries must have i <= j");
    const GroupElement v = m.group.element(vector_from_json(entry[2], n, where));
    m.mul_table[i][j] = v;
    m.mul_table[j][i] = v;
  }

  const json& lambda = require_key(doc, "lambda");
  if (!lambda.is_object()) fail("lambda", "expected an object keyed by basis label");
  m.lambda_on_basis.assign(n, {});
  for (const auto& [label, series] : lambda.items()) {
    const std::string where = "lambda." + label;
    auto it = std::find(names.begin(), names.end(), label);
    if (it == names.end()) fail(where, "unknown basis label");
    auto& slot = m.lambda_on_basis[static_cast<std::size_t>(it - names.begin())];
    require_array(series, where);
    for (std::size_t k = 0; k < series.size(); ++k)
      slot.push_back(m.group.element(vector_from_json(series[k], n, where + "[" + std::to_string(k) + "]")));
  }

  if (auto it = doc.find("hyperbolic"); it != doc.end()) {
    require_array(*it, "hyperbolic");
    std::vector<GroupElement> hyp;
    for (std::size_t k = 0; k < it->size(); ++k)
      hyp.push_back(m.group.element(vector_from_json((*it)[k], n, "hyperbolic[" + std::to_string(k) + "]")));
    m.hyperbolic_gens = std::move(hyp);
  }
  if (auto it = doc.find("truncation"); it != doc.end()) {
    if (!it->is_number_unsigned() || it->get<std::uint64_t>() < 1) fail("truncation", "expected a positive integer");
    m.truncation = static_cast<std::size_t>(it->get<std::uint64_t>());
  }
  return m;
}

RingModel read_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelParseError("cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ModelParseError(path + ": " + e.what());
  }
  return model_from_json(doc);
}

void write_model_file(const RingModel& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << model_to_json(m).dump(2) << '\n';
}

std::string format_element(const GroupPresentation& pres, const GroupElement& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    const Int mag = abs(x[i]);
    if (out.empty()) out += x[i] < 0 ? "-" : "";
    else out += x[i] < 0 ? " - " : " + ";
    if (mag != 1) out += mag.get_str() + "*";
    out += pres.names()[i];
  }
  return out.empty() ? "0" : out;
}

std::string format_invariants(const IntVector& inv) {
  if (inv.empty()) return "0";
  std::string out;
  for (const auto& d : inv) {
    if (!out.empty()) out += " + ";
    out += d == 0 ? "Z" : "Z/" + d.get_str();
  }
  return out;
}

json filtration_to_json(const std::string& model_name, const FiltrationResult& f) {
  json doc;
  doc["model"] = model_name;
  doc["quotient"] = f.witt ? "W" : "GW";
  doc["basis"] = f.group.names();
  doc["orders"] = vector_to_json(f.group.orders());
  doc["exact"] = f.exact;
  doc["stabilized"] = f.stabilized;
  doc["levels_computed"] = f.levels_computed;
  json pieces = json::array();
  for (std::size_t k = 0; k < f.pieces.size(); ++k) {
    json gens = json::array();
    for (const auto& g : f.pieces[k].generators()) gens.push_back(vector_to_json(g.coeffs()));
    pieces.push_back({{"degree", k},
                      {"generators", std::move(gens)},
                      {"invariants", vector_to_json(relative_invariants(f.pieces[k], zero_subgroup(f.group)))},
                      {"stabilized_window", f.stabilized_window.at(k)}});
  }
  doc["pieces"] = std::move(pieces);
  json graded = json::array();
  for (std::size_t i = 0; i < f.graded.size(); ++i)
    graded.push_back({{"degree", i}, {"invariants", vector_to_json(f.graded[i])}});
  doc["graded"] = std::move(graded);
  return doc;
}

}  // namespace gwl
