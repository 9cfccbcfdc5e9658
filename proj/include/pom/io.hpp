#ifndef POM_IO_HPP
#define POM_IO_HPP

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pom/endomap.hpp"
#include "pom/monoid.hpp"
#include "pom/rational.hpp"
#include "pom/setfunc.hpp"

namespace pom::io {

using Json = nlohmann::ordered_json;

/// A schema violation at a JSON-pointer location.
class SchemaError : public StructuralError {
 public:
  SchemaError(const std::string& pointer, const std::string& what)
      : StructuralError((pointer.empty() ? std::string("/") : pointer) + ": " + what), pointer_(pointer) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

/// Reads a whole file, or stdin for "-".
inline std::string read_text(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
}

/// Compact form: keys in schema order, no insignificant whitespace.
inline std::string dump(const Json& j) { return j.dump(); }

namespace detail {

inline std::string at(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
inline std::string at(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

inline const Json& field(const Json& j, const std::string& ptr, const std::string& key) {
  if (!j.is_object()) throw SchemaError(ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(ptr, "missing key \"" + key + "\"");
  return *it;
}

inline void expect_keys(const Json& j, const std::string& ptr, std::initializer_list<const char*> keys) {
  if (!j.is_object()) throw SchemaError(ptr, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) throw SchemaError(at(ptr, it.key()), "unexpected key");
  }
}

inline void expect_kind(const Json& j, const std::string& ptr, const std::string& kind) {
  const Json& k = field(j, ptr, "kind");
  if (!k.is_string() || k.get<std::string>() != kind) throw SchemaError(at(ptr, "kind"), "expected \"" + kind + "\"");
}

inline std::size_t index_value(const Json& j, const std::string& ptr) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw SchemaError(ptr, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

inline const Json& array(const Json& j, const std::string& ptr) {
  if (!j.is_array()) throw SchemaError(ptr, "expected an array");
  return j;
}

inline std::vector<Index> index_list(const Json& j, const std::string& ptr) {
  std::vector<Index> out;
  const Json& a = array(j, ptr);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(index_value(a[i], at(ptr, i)));
  return out;
}

}  // namespace detail

// --- monoid ---------------------------------------------------------------

inline Json to_json(const FiniteMonoid& m) {
  const std::size_t n = m.size();
  Json op = Json::array(), leq = Json::array();
  for (Index a = 0; a < n; ++a) {
    Json r1 = Json::array(), r2 = Json::array();
    for (Index b = 0; b < n; ++b) {
      r1.push_back(m.mul(a, b));
      r2.push_back(m.le(a, b));
    }
    op.push_back(std::move(r1));
    leq.push_back(std::move(r2));
  }
  Json j;
  j["kind"] = "monoid";
  j["elements"] = m.elements();
  j["op"] = std::move(op);
  j["leq"] = std::move(leq);
  j["unit"] = m.unit();
  j["zero"] = m.zero();
  return j;
}

inline FiniteMonoid monoid_from_json(const Json& j, const std::string& ptr = "") {
  using namespace detail;
  expect_keys(j, ptr, {"kind", "elements", "op", "leq", "unit", "zero"});
  expect_kind(j, ptr, "monoid");
  const Json& el = array(field(j, ptr, "elements"), at(ptr, "elements"));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < el.size(); ++i) {
    if (!el[i].is_string()) throw SchemaError(at(at(ptr, "elements"), i), "expected a string");
    names.push_back(el[i].get<std::string>());
  }
  const std::size_t n = names.size();
  const Json& op = array(field(j, ptr, "op"), at(ptr, "op"));
  const Json& leq = array(field(j, ptr, "leq"), at(ptr, "leq"));
  if (op.size() != n) throw SchemaError(at(ptr, "op"), "expected " + std::to_string(n) + " rows");
  if (leq.size() != n) throw SchemaError(at(ptr, "leq"), "expected " + std::to_string(n) + " rows");
  std::vector<std::vector<Index>> opt(n);
  std::vector<std::vector<bool>> leqt(n);
  for (std::size_t a = 0; a < n; ++a) {
    const std::string po = at(at(ptr, "op"), a), pl = at(at(ptr, "leq"), a);
    opt[a] = index_list(op[a], po);
    if (opt[a].size() != n) throw SchemaError(po, "expected " + std::to_string(n) + " entries");
    for (std::size_t b = 0; b < n; ++b)
      if (opt[a][b] >= n) throw SchemaError(at(po, b), "element index out of range");
    const Json& row = array(leq[a], pl);
    if (row.size() != n) throw SchemaError(pl, "expected " + std::to_string(n) + " entries");
    for (std::size_t b = 0; b < n; ++b) {
      if (!row[b].is_boolean()) throw SchemaError(at(pl, b), "expected a boolean");
      leqt[a].push_back(row[b].get<bool>());
    }
  }
  const Index unit = index_value(field(j, ptr, "unit"), at(ptr, "unit"));
  const Index zero = index_value(field(j, ptr, "zero"), at(ptr, "zero"));
  if (unit >= n) throw SchemaError(at(ptr, "unit"), "element index out of range");
  if (zero >= n) throw SchemaError(at(ptr, "zero"), "element index out of range");
  try {
    return FiniteMonoid(std::move(names), opt, leqt, unit, zero);
  } catch (const StructuralError& e) {
    throw SchemaError(ptr, e.what());
  }
}

/// A monoid given inline or as a path to a monoid document.
struct MonoidRef {
  FiniteMonoid monoid;
  std::optional<std::string> path;

  Json to_json() const { return path ? Json(*path) : io::to_json(monoid); }
};

inline MonoidRef monoid_ref_from_json(const Json& j, const std::string& ptr) {
  if (j.is_string()) {
    const std::string path = j.get<std::string>();
    std::string text;
    try {
      text = read_text(path);
    } catch (const StructuralError& e) {
      throw SchemaError(ptr, e.what());
    }
    return {monoid_from_json(parse_json(text)), path};
  }
  return {monoid_from_json(j, ptr), std::nullopt};
}

// --- ideal ----------------------------------------------------------------

struct IdealDocument {
  MonoidRef monoid;
  ElementSubset members;
};

inline Json to_json(const IdealDocument& d) {
  Json j;
  j["kind"] = "ideal";
  j["monoid"] = d.monoid.to_json();
  j["members"] = d.members.indices();
  return j;
}

/// Members must be strictly increasing.
inline IdealDocument ideal_from_json(const Json& j, const std::string& ptr = "") {
  using namespace detail;
  expect_keys(j, ptr, {"kind", "monoid", "members"});
  expect_kind(j, ptr, "ideal");
  MonoidRef m = monoid_ref_from_json(field(j, ptr, "monoid"), at(ptr, "monoid"));
  const std::vector<Index> mem = index_list(field(j, ptr, "members"), at(ptr, "members"));
  ElementSubset s(m.monoid.size());
  for (std::size_t i = 0; i < mem.size(); ++i) {
    const std::string p = at(at(ptr, "members"), i);
    if (mem[i] >= m.monoid.size()) throw SchemaError(p, "element index out of range");
    if (i > 0 && mem[i] <= mem[i - 1]) throw SchemaError(p, "members must be strictly increasing");
    s.insert(mem[i]);
  }
  return {std::move(m), std::move(s)};
}

// --- endomap --------------------------------------------------------------

inline Json to_json(const EndoMap& p) {
  Json j;
  j["kind"] = "endomap";
  j["image"] = p.image();
  return j;
}

inline EndoMap endomap_from_json(const Json& j, const std::string& ptr = "") {
  using namespace detail;
  expect_keys(j, ptr, {"kind", "image"});
  expect_kind(j, ptr, "endomap");
  std::vector<Index> img = index_list(field(j, ptr, "image"), at(ptr, "image"));
  for (std::size_t i = 0; i < img.size(); ++i)
    if (img[i] >= img.size()) throw SchemaError(at(at(ptr, "image"), i), "element index out of range");
  return EndoMap(std::move(img));
}

// --- setfunction ----------------------------------------------------------

/// Values of a set function detached from its monoid.
struct ValueTable {
  std::size_t dim = 1;
  std::vector<VectorValue> values;

  friend bool operator==(const ValueTable&, const ValueTable&) = default;
};

inline Json to_json(const ValueTable& t) {
  Json vals = Json::array();
  for (const auto& v : t.values) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(to_canonical(x));
    vals.push_back(std::move(row));
  }
  Json j;
  j["kind"] = "setfunction";
  j["dim"] = t.dim;
  j["values"] = std::move(vals);
  return j;
}

inline Json to_json(const SetFunction& f) { return to_json(ValueTable{f.dim(), f.values()}); }

inline ValueTable value_table_from_json(const Json& j, const std::string& ptr = "") {
  using namespace detail;
  expect_keys(j, ptr, {"kind", "dim", "values"});
  expect_kind(j, ptr, "setfunction");
  ValueTable t;
  t.dim = index_value(field(j, ptr, "dim"), at(ptr, "dim"));
  if (t.dim == 0) throw SchemaError(at(ptr, "dim"), "dimension must be positive");
  const Json& vals = array(field(j, ptr, "values"), at(ptr, "values"));
  for (std::size_t f = 0; f < vals.size(); ++f) {
    const std::string pf = at(at(ptr, "values"), f);
    const Json& row = array(vals[f], pf);
    if (row.size() != t.dim) throw SchemaError(pf, "expected " + std::to_string(t.dim) + " coordinates");
    VectorValue v;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_string()) throw SchemaError(at(pf, c), "expected a rational string");
      try {
        v.push_back(parse_canonical(row[c].get<std::string>()));
      } catch (const DomainError& e) {
        throw SchemaError(at(pf, c), e.what());
      }
    }
    t.values.push_back(std::move(v));
  }
  return t;
}

/// Binds a value table to a monoid; size mismatch is a schema error.
inline SetFunction bind(const ValueTable& t, std::shared_ptr<const FiniteMonoid> m, const std::string& ptr = "") {
  if (t.values.size() != m->size())
    throw SchemaError(ptr + "/values", "expected " + std::to_string(m->size()) + " values");
  return SetFunction(std::move(m), t.dim, t.values);
}

// --- family ---------------------------------------------------------------

inline Json family_to_json(const std::vector<ValueTable>& members) {
  Json j;
  j["kind"] = "family";
  j["members"] = Json::array();
  for (const auto& m : members) j["members"].push_back(to_json(m));
  return j;
}

inline std::vector<ValueTable> family_from_json(const Json& j, const std::string& ptr = "") {
  using namespace detail;
  expect_keys(j, ptr, {"kind", "members"});
  expect_kind(j, ptr, "family");
  const Json& mem = array(field(j, ptr, "members"), at(ptr, "members"));
  std::vector<ValueTable> out;
  for (std::size_t i = 0; i < mem.size(); ++i) out.push_back(value_table_from_json(mem[i], at(at(ptr, "members"), i)));
  return out;
}

// --- report ---------------------------------------------------------------

struct Check {
  std::string name;
  bool pass = true;
  Json witness = nullptr;
};

struct Report {
  std::vector<Check> checks;

  void add(std::string name, bool pass, Json witness = nullptr) {
    checks.push_back({std::move(name), pass, std::move(witness)});
  }
  bool all() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

inline Json to_json(const Report& r) {
  Json j;
  j["kind"] = "report";
  j["checks"] = Json::array();
  for (const auto& c : r.checks) {
    Json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["witness"] = c.witness;
    j["checks"].push_back(std::move(e));
  }
  return j;
}

inline Report report_from_json(const Json& j, const std::string& ptr = "") {
  using namespace detail;
  expect_keys(j, ptr, {"kind", "checks"});
  expect_kind(j, ptr, "report");
  const Json& cs = array(field(j, ptr, "checks"), at(ptr, "checks"));
  Report r;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const std::string p = at(at(ptr, "checks"), i);
    expect_keys(cs[i], p, {"name", "pass", "witness"});
    const Json& name = field(cs[i], p, "name");
    const Json& pass = field(cs[i], p, "pass");
    if (!name.is_string()) throw SchemaError(at(p, "name"), "expected a string");
    if (!pass.is_boolean()) throw SchemaError(at(p, "pass"), "expected a boolean");
    r.add(name.get<std::string>(), pass.get<bool>(), field(cs[i], p, "witness"));
  }
  return r;
}

// --- any document ---------------------------------------------------------

inline std::string document_kind(const Json& j) {
  if (!j.is_object()) throw SchemaError("", "expected an object");
  const Json& k = detail::field(j, "", "kind");
  if (!k.is_string()) throw SchemaError("/kind", "expected a string");
  return k.get<std::string>();
}

/// parse ∘ serialize for any document kind.
inline std::string canonicalize(const std::string& text) {
  const Json j = parse_json(text);
  const std::string kind = document_kind(j);
  if (kind == "monoid") return dump(to_json(monoid_from_json(j)));
  if (kind == "ideal") return dump(to_json(ideal_from_json(j)));
  if (kind == "endomap") return dump(to_json(endomap_from_json(j)));
  if (kind == "setfunction") return dump(to_json(value_table_from_json(j)));
  if (kind == "family") return dump(family_to_json(family_from_json(j)));
  if (kind == "report") return dump(to_json(report_from_json(j)));
  throw SchemaError("/kind", "unknown document kind \"" + kind + "\"");
}

}  // namespace pom::io

#endif  // POM_IO_HPP
