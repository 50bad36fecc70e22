#include "jacobi/io.hpp"

#include <fstream>
#include <sstream>

#include "jacobi/error.hpp"

namespace jacobi {

void RunConfig::validate() const {
  if (verify.exhaustive_max_m > verify.convolution_max_m) {
    throw DomainError("C-mode thresholds must satisfy exhaustive <= convolution");
  }
  if (!(verify.tolerance > 0)) throw DomainError("tolerance must be positive");
  if (max_table_order == 0 || max_enumerate_order == 0) throw DomainError("size caps must be positive");
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw MalformedInput(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

void expect_schema(const Json& j, const char* schema) {
  const auto& s = field(j, "schema");
  if (!s.is_string() || s.get<std::string>() != schema) {
    throw MalformedInput(std::string("expected schema ") + schema);
  }
}

unsigned as_unsigned(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw MalformedInput(std::string(what) + " must be a non-negative integer");
  }
  return j.get<unsigned>();
}

Json witness_to_json(const GroupSpec& g, const Witness& w) {
  Json at = Json::array();
  for (auto idx : w.at) at.push_back(element_to_json(g, idx));
  return Json{{"at", at}, {"lhs", w.lhs}, {"rhs", w.rhs}};
}

Json verdict_to_json(const GroupSpec& g, const Verdict& v) {
  Json j;
  switch (v.status) {
    case Verdict::Status::Pass: j["verdict"] = "pass"; break;
    case Verdict::Status::Fail: j["verdict"] = "fail"; break;
    case Verdict::Status::Skipped: j["verdict"] = "skipped"; break;
  }
  if (v.witness) j["witness"] = witness_to_json(g, *v.witness);
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Json law_to_json(const LawCheck& law) {
  Json j{{"pass", law.pass}};
  if (!law.pass) j["witness"] = law.witness;
  return j;
}

}  // namespace

Json group_to_json(const GroupSpec& g) { return Json(g.factors()); }

GroupSpec group_from_json(const Json& j) {
  if (!j.is_array()) throw MalformedInput("group must be an array of factors");
  std::vector<unsigned> factors;
  for (const auto& f : j) factors.push_back(as_unsigned(f, "group factor"));
  return GroupSpec(std::move(factors));
}

GroupSpec parse_group(const std::string& text) {
  std::vector<unsigned> factors;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 1) throw MalformedInput("");
      factors.push_back(static_cast<unsigned>(v));
    } catch (const std::exception&) {
      throw MalformedInput("malformed group '" + text + "'");
    }
  }
  if (text.empty()) throw MalformedInput("empty group");
  return GroupSpec(std::move(factors));
}

Json element_to_json(const GroupSpec& g, std::size_t index) { return Json(g.element(index).coords); }

Json cyclotomic_to_json(const Cyclotomic& z) { return Json(z.serialize()); }

Cyclotomic cyclotomic_from_json(unsigned m, const Json& j) {
  if (!j.is_array()) throw MalformedInput("cyclotomic value must be an array of strings");
  std::vector<std::string> coeffs;
  for (const auto& c : j) {
    if (!c.is_string()) throw MalformedInput("cyclotomic coefficient must be a string");
    coeffs.push_back(c.get<std::string>());
  }
  return Cyclotomic::parse(m, coeffs);
}

Json field_to_json(const FiniteField& f, bool with_tables) {
  Json j;
  j["schema"] = kFieldSchema;
  j["p"] = f.characteristic();
  j["n"] = f.degree();
  j["q"] = f.order();
  j["modulus"] = f.modulus();
  j["generator"] = f.digits(f.generator());
  if (with_tables && f.order() <= kFieldTablesMaxOrder) {
    Json add = Json::array();
    Json mul = Json::array();
    for (FieldElement a = 0; a < f.order(); ++a) {
      Json add_row = Json::array();
      Json mul_row = Json::array();
      for (FieldElement b = 0; b < f.order(); ++b) {
        add_row.push_back(f.add(a, b));
        mul_row.push_back(f.mul(a, b));
      }
      add.push_back(std::move(add_row));
      mul.push_back(std::move(mul_row));
    }
    j["addition"] = std::move(add);
    j["multiplication"] = std::move(mul);
  }
  return j;
}

FiniteField field_from_json(const Json& j, unsigned max_order) {
  expect_schema(j, kFieldSchema);
  const unsigned p = as_unsigned(field(j, "p"), "p");
  const unsigned n = as_unsigned(field(j, "n"), "n");
  FiniteField f = [&] {
    try {
      return build_field(p, n, max_order);
    } catch (const DomainError& e) {
      throw MalformedInput(std::string("field file: ") + e.what());
    }
  }();
  std::vector<unsigned> modulus;
  for (const auto& c : field(j, "modulus")) modulus.push_back(as_unsigned(c, "modulus coefficient"));
  if (modulus != f.modulus()) throw MalformedInput("field file modulus differs from GF(p^n) construction");
  std::vector<unsigned> gen;
  for (const auto& c : field(j, "generator")) gen.push_back(as_unsigned(c, "generator digit"));
  if (gen != f.digits(f.generator())) {
    throw MalformedInput("field file generator differs from GF(p^n) construction");
  }
  return f;
}

Json table_to_json(const JacobiTable& t) {
  Json j;
  j["schema"] = kTableSchema;
  j["factors"] = group_to_json(t.group());
  j["conductor"] = t.conductor();
  Json rows = Json::array();
  for (std::size_t a = 0; a < t.order(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < t.order(); ++b) row.push_back(cyclotomic_to_json(t(a, b)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

Json table_to_json(const ApproxTable& t) {
  Json j;
  j["schema"] = kApproxTableSchema;
  j["factors"] = group_to_json(t.group);
  j["conductor"] = t.group.conductor();
  Json rows = Json::array();
  for (std::size_t a = 0; a < t.order(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < t.order(); ++b) row.push_back({t(a, b).real(), t(a, b).imag()});
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

AnyTable table_from_json(const Json& j) {
  const auto& schema = field(j, "schema");
  if (!schema.is_string()) throw MalformedInput("schema must be a string");
  const std::string s = schema.get<std::string>();
  const bool exact = s == kTableSchema;
  if (!exact && s != kApproxTableSchema) throw MalformedInput("unknown table schema '" + s + "'");

  GroupSpec g = [&] {
    try {
      return group_from_json(field(j, "factors"));
    } catch (const DomainError& e) {
      throw MalformedInput(e.what());
    }
  }();
  const std::size_t m = g.order();
  if (as_unsigned(field(j, "conductor"), "conductor") != m) {
    throw MalformedInput("conductor must equal the group order");
  }
  const auto& rows = field(j, "entries");
  if (!rows.is_array() || rows.size() != m) throw MalformedInput("entries must have m rows");
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != m) throw MalformedInput("entries must have m columns");
  }

  if (exact) {
    std::vector<Cyclotomic> values;
    values.reserve(m * m);
    for (const auto& row : rows) {
      for (const auto& v : row) values.push_back(cyclotomic_from_json(g.conductor(), v));
    }
    return JacobiTable(std::move(g), std::move(values));
  }
  ApproxTable t{std::move(g), {}};
  t.values.reserve(m * m);
  for (const auto& row : rows) {
    for (const auto& v : row) {
      if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw MalformedInput("approximate entry must be [re, im]");
      }
      t.values.emplace_back(v[0].get<double>(), v[1].get<double>());
    }
  }
  return t;
}

Json verification_to_json(const GroupSpec& g, const VerificationReport& r) {
  Json j;
  j["schema"] = kVerifySchema;
  j["factors"] = group_to_json(g);
  j["approximate"] = r.approximate;
  j["all_pass"] = r.all_pass();
  j["A"] = verdict_to_json(g, r.a);
  j["B_star"] = verdict_to_json(g, r.b_star);
  j["B_reform"] = verdict_to_json(g, r.b_reform);
  j["C"] = verdict_to_json(g, r.c);
  Json mode{{"mode", to_string(r.c_mode.mode)}};
  if (r.c_mode.mode == CMode::Sampled) {
    mode["samples"] = r.c_mode.samples;
    mode["seed"] = r.c_mode.seed;
    mode["full_coverage"] = r.c_mode.full_coverage;
  }
  j["C_mode"] = std::move(mode);
  return j;
}

Json reconstruction_to_json(const ReconstructionReport& r) {
  const auto& g = r.group;
  Json j;
  j["schema"] = kReconstructSchema;
  j["factors"] = group_to_json(g);
  j["approximate"] = r.approximate;
  j["ok"] = r.ok();

  Json outcome;
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, FieldCase>) {
          outcome["case"] = "field";
          outcome["c"] = element_to_json(g, c.c);
        } else if constexpr (std::is_same_v<T, BooleanCase>) {
          outcome["case"] = "boolean";
        } else {
          outcome["case"] = "inconsistent";
          outcome["stage"] = c.stage;
          outcome["reason"] = c.reason;
          Json at = Json::array();
          for (auto idx : c.at) at.push_back(element_to_json(g, idx));
          outcome["at"] = std::move(at);
        }
      },
      r.outcome);
  j["outcome"] = std::move(outcome);

  if (r.verification) j["verification"] = verification_to_json(g, *r.verification);
  j["S"] = r.support;
  Json i = Json::object();
  for (auto x : r.support) {
    if (r.i_map.size() > x && r.i_map[x]) i[std::to_string(x)] = *r.i_map[x];
  }
  j["i"] = std::move(i);
  j["T"] = r.image;
  if (r.kappa) j["kappa"] = cyclotomic_to_json(*r.kappa);
  j["kappa_ok"] = r.kappa_ok;
  if (r.addition) {
    const auto& at = *r.addition;
    Json rows = Json::array();
    for (Symbol x = 0; x < at.carrier_size(); ++x) {
      Json row = Json::array();
      for (Symbol y = 0; y < at.carrier_size(); ++y) row.push_back(at.sum(x, y));
      rows.push_back(std::move(row));
    }
    j["addition"] = std::move(rows);
  }
  if (r.field_checks) {
    const auto& fc = *r.field_checks;
    Json checks;
    checks["commutative"] = law_to_json(fc.commutative);
    checks["associative"] = law_to_json(fc.associative);
    checks["distributive"] = law_to_json(fc.distributive);
    checks["identity"] = law_to_json(fc.identity);
    checks["inverses"] = law_to_json(fc.inverses);
    checks["characteristic"] = fc.characteristic;
    if (fc.degree) checks["degree"] = *fc.degree;
    checks["all_pass"] = fc.all_pass();
    j["field_checks"] = std::move(checks);
  }
  j["roundtrip_ok"] = r.roundtrip_ok;
  return j;
}

Json enumeration_to_json(const EnumerationResult& r, bool list_tables) {
  Json j;
  j["schema"] = kEnumerateSchema;
  j["factors"] = group_to_json(r.group);
  j["count"] = r.count;
  j["oracle_count"] = r.oracle_count;
  j["agreement"] = r.agreement;
  j["candidates"] = r.candidates;
  if (list_tables) {
    Json tables = Json::array();
    for (const auto& t : r.tables) tables.push_back(table_to_json(t));
    j["tables"] = std::move(tables);
  }
  return j;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("error writing " + path.string());
}

}  // namespace jacobi
