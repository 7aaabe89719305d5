#include "orbcoh/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "orbcoh/error.hpp"

namespace orbcoh::io {

using cyclo::CycMatrix;
using cyclo::CycNum;
using cyclo::FieldPtr;

namespace {

Rational parse_scalar(const Json& node, const std::string& where) {
  if (node.is_number_integer()) return Rational(node.get<long>());
  if (node.is_string()) {
    try {
      return parse_rational(node.get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorKind::ParseError, where + ": malformed rational \"" + node.get<std::string>() + "\"");
    }
  }
  throw Error(ErrorKind::ParseError, where + ": expected a rational string or integer");
}

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    throw Error(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

std::size_t require_positive(const Json& doc, const char* key) {
  const Json& v = require(doc, key);
  if (!v.is_number_integer() || v.get<long long>() <= 0)
    throw Error(ErrorKind::ParseError, std::string(key) + ": expected a positive integer");
  return v.get<std::size_t>();
}

std::string item(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

}  // namespace

CycNum parse_cyc(const Json& node, const FieldPtr& field, const std::string& where) {
  if (!node.is_array()) return CycNum(field, parse_scalar(node, where));
  if (node.empty() || node.size() > field->conductor())
    throw Error(ErrorKind::ParseError, where + ": coefficient array must have 1.." +
                                           std::to_string(field->conductor()) + " entries");
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < node.size(); ++i) coeffs.push_back(parse_scalar(node[i], item(where, i)));
  return CycNum(field, std::move(coeffs));
}

Json to_json(const CycNum& value) {
  Json out = Json::array();
  for (const auto& c : value.coeffs()) out.push_back(to_string(c));
  return out;
}

Json to_json(const CycMatrix& value) {
  Json out = Json::array();
  for (std::size_t r = 0; r < value.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < value.cols(); ++c) row.push_back(to_json(value(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path.string() + ": " + e.what());
  }
}

GroupInput parse_group(const Json& doc) {
  GroupInput in;
  const std::size_t conductor = require_positive(doc, "conductor");
  in.field = cyclo::CycField::get(static_cast<unsigned>(conductor));
  in.dimension = require_positive(doc, "dimension");
  const Json& gens = require(doc, "generators");
  if (!gens.is_array()) throw Error(ErrorKind::ParseError, "generators: expected an array of matrices");
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::string gw = item("generators", g);
    const Json& mat = gens[g];
    if (!mat.is_array() || mat.size() != in.dimension)
      throw Error(ErrorKind::ValidationError, gw + ": expected " + std::to_string(in.dimension) + " rows");
    std::vector<CycNum> entries;
    for (std::size_t r = 0; r < in.dimension; ++r) {
      const Json& row = mat[r];
      if (!row.is_array() || row.size() != in.dimension)
        throw Error(ErrorKind::ValidationError, item(gw, r) + ": expected " + std::to_string(in.dimension) + " entries");
      for (std::size_t c = 0; c < in.dimension; ++c) entries.push_back(parse_cyc(row[c], in.field, item(item(gw, r), c)));
    }
    in.generators.emplace_back(in.field, in.dimension, in.dimension, std::move(entries));
  }
  return in;
}

group::FiniteMatrixGroup load_group(const std::filesystem::path& path, std::size_t cap) {
  const auto in = parse_group(read_json_file(path));
  return group::FiniteMatrixGroup::generate(in.field, in.dimension, in.generators, cap);
}

models::TorusModel parse_torus(const Json& doc) {
  models::TorusModel model;
  model.real_dim = require_positive(doc, "dimension");
  const Json& gens = require(doc, "generators");
  if (!gens.is_array()) throw Error(ErrorKind::ParseError, "generators: expected an array of matrices");
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::string gw = item("generators", g);
    const Json& mat = gens[g];
    if (!mat.is_array() || mat.size() != model.real_dim)
      throw Error(ErrorKind::ValidationError, gw + ": expected " + std::to_string(model.real_dim) + " rows");
    intmat::IntMatrix m(model.real_dim, model.real_dim);
    for (std::size_t r = 0; r < model.real_dim; ++r) {
      const Json& row = mat[r];
      if (!row.is_array() || row.size() != model.real_dim)
        throw Error(ErrorKind::ValidationError, item(gw, r) + ": expected " + std::to_string(model.real_dim) + " entries");
      for (std::size_t c = 0; c < model.real_dim; ++c) {
        const Rational v = parse_scalar(row[c], item(item(gw, r), c));
        if (!is_integer(v)) throw Error(ErrorKind::ValidationError, item(item(gw, r), c) + ": torus entries must be integers");
        m(r, c) = v.get_num();
      }
    }
    model.generators.push_back(std::move(m));
  }
  model.validate();
  return model;
}

models::TorusModel load_torus(const std::filesystem::path& path) { return parse_torus(read_json_file(path)); }

// ---------------------------------------------------------------------------
// Sectors

Json sectors_json(const sectors::SectorAnalysis& analysis) {
  const auto& g = analysis.group();
  Json out = Json::array();
  for (const auto& s : analysis.sector_table()) {
    const auto rep = s.tuple_class.representative[0];
    Json row;
    row["label"] = models::sector_label(rep);
    row["representative"] = rep;
    row["class_size"] = s.tuple_class.members.size();
    row["centralizer_order"] = s.centralizer_order;
    row["iota"] = to_string(s.iota);
    row["fixed_dim"] = s.fixed_dim;
    row["untwisted"] = s.is_untwisted;
    row["element_order"] = g.element_order(rep);
    row["inverse"] = models::sector_label(g.conjugacy_classes()[g.inverse_class(s.class_index)].representative);
    row["matrix"] = to_json(g.element(rep));
    out.push_back(std::move(row));
  }
  return out;
}

std::string sectors_text(const sectors::SectorAnalysis& analysis) {
  const auto& g = analysis.group();
  std::ostringstream os;
  os << "group order " << g.order() << ", dimension " << analysis.dimension() << ", "
     << (g.is_sl() ? "SL" : "not SL") << "\n";
  os << "sector      size  |C(g)|  order  iota    dim V^g  inverse\n";
  for (const auto& s : analysis.sector_table()) {
    const auto rep = s.tuple_class.representative[0];
    char line[160];
    std::snprintf(line, sizeof line, "%-10s  %4zu  %6zu  %5u  %-6s  %7zu  %s\n", models::sector_label(rep).c_str(),
                  s.tuple_class.members.size(), s.centralizer_order, g.element_order(rep), to_string(s.iota).c_str(),
                  s.fixed_dim,
                  models::sector_label(g.conjugacy_classes()[g.inverse_class(s.class_index)].representative).c_str());
    os << line;
  }
  return os.str();
}

namespace {

std::string tuple_label(const group::Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

}  // namespace

Json multi_sectors_json(const sectors::SectorAnalysis& analysis, std::size_t k, bool product_one) {
  const auto& g = analysis.group();
  Json out = Json::array();
  for (const auto& ms : analysis.multi_sectors(k, product_one)) {
    Json row;
    row["representative"] = ms.tuple_class.representative;
    row["orbit_size"] = ms.tuple_class.members.size();
    row["centralizer_order"] = ms.tuple_class.centralizer_order;
    Json iotas = Json::array();
    for (const auto& i : ms.iotas) iotas.push_back(to_string(i));
    row["iotas"] = std::move(iotas);
    row["joint_fixed_dim"] = ms.joint_fixed_dim;
    Json evals = Json::array();
    for (auto c : ms.evaluations) evals.push_back(models::sector_label(g.conjugacy_classes()[c].representative));
    row["evaluations"] = std::move(evals);
    row["product"] = models::sector_label(g.conjugacy_classes()[ms.product_class].representative);
    if (product_one && k == 3) row["obstruction_rank"] = analysis.obstruction_rank(ms.tuple_class.representative);
    if (product_one && k == 4) row["excess_rank"] = analysis.excess_rank(ms.tuple_class.representative);
    out.push_back(std::move(row));
  }
  return out;
}

std::string multi_sectors_text(const sectors::SectorAnalysis& analysis, std::size_t k, bool product_one) {
  const auto& g = analysis.group();
  std::ostringstream os;
  const auto list = analysis.multi_sectors(k, product_one);
  os << list.size() << " classes of " << k << "-tuples" << (product_one ? " with product 1" : "") << "\n";
  for (const auto& ms : list) {
    os << tuple_label(ms.tuple_class.representative) << "  orbit " << ms.tuple_class.members.size() << "  |C| "
       << ms.tuple_class.centralizer_order << "  iotas";
    for (const auto& i : ms.iotas) os << " " << to_string(i);
    os << "  dim V " << ms.joint_fixed_dim << "  product "
       << models::sector_label(g.conjugacy_classes()[ms.product_class].representative);
    if (product_one && k == 3) os << "  rank E " << analysis.obstruction_rank(ms.tuple_class.representative);
    if (product_one && k == 4) os << "  rank nu " << analysis.excess_rank(ms.tuple_class.representative);
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Tables

namespace {

Json degree_map(const std::map<models::Degree, long long>& m) {
  Json out = Json::object();
  for (const auto& [d, v] : m) out[to_string(d)] = v;
  return out;
}

}  // namespace

Json to_json(const models::CohomologyTable& table) {
  Json out;
  out["model"] = table.model;
  out["complex_dim"] = table.complex_dim;
  if (!table.parameters.empty()) {
    Json params = Json::object();
    for (const auto& [k, v] : table.parameters) params[k] = v;
    out["parameters"] = std::move(params);
  }
  out["betti"] = degree_map(table.betti);
  if (!table.hodge.empty()) {
    Json hodge = Json::object();
    for (const auto& [pq, v] : table.hodge) hodge[to_string(pq.first) + "," + to_string(pq.second)] = v;
    out["hodge"] = std::move(hodge);
  }
  out["total"] = table.total();
  Json sectors = Json::array();
  for (const auto& s : table.sectors) {
    Json row;
    row["label"] = s.label;
    row["iota"] = to_string(s.iota);
    row["degrees"] = degree_map(s.degrees);
    sectors.push_back(std::move(row));
  }
  out["sectors"] = std::move(sectors);
  return out;
}

std::string to_text(const models::CohomologyTable& table) {
  std::ostringstream os;
  os << "model " << table.model << ", complex dimension " << table.complex_dim << "\n";
  for (const auto& [k, v] : table.parameters) os << "  " << k << " = " << v << "\n";
  os << "degree  dim\n";
  for (const auto& [d, v] : table.betti) {
    char line[64];
    std::snprintf(line, sizeof line, "%-6s  %lld\n", to_string(d).c_str(), v);
    os << line;
  }
  os << "total   " << table.total() << "\n";
  if (!table.hodge.empty()) {
    os << "hodge (p,q)  dim\n";
    for (const auto& [pq, v] : table.hodge) {
      if (v == 0) continue;
      const std::string key = "(" + to_string(pq.first) + "," + to_string(pq.second) + ")";
      char line[96];
      std::snprintf(line, sizeof line, "%-11s  %lld\n", key.c_str(), v);
      os << line;
    }
  }
  os << "sectors\n";
  for (const auto& s : table.sectors) {
    os << "  " << s.label << "  iota " << to_string(s.iota) << " :";
    for (const auto& [d, v] : s.degrees) os << " " << to_string(d) << "->" << v;
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Rings

namespace {

const char* kind_name(ring::RingKind kind) {
  switch (kind) {
    case ring::RingKind::Point: return "point";
    case ring::RingKind::CenterOracle: return "center-oracle";
    case ring::RingKind::Linear: return "linear";
    case ring::RingKind::WeightedProjective: return "wp";
  }
  return "unknown";
}

Json matrix_json(const ring::PairingMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_string(v));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Json to_json(const ring::GradedRing& ring) {
  Json out;
  out["kind"] = kind_name(ring.kind);
  Json basis = Json::array();
  for (std::size_t i = 0; i < ring.size(); ++i) basis.push_back({{"label", ring.labels[i]}, {"degree", to_string(ring.degrees[i])}});
  out["basis"] = std::move(basis);
  out["unit"] = ring.unit_index;
  Json products = Json::array();
  for (const auto& [ij, v] : ring.structure)
    for (const auto& [k, c] : v) products.push_back(Json::array({ij.first, ij.second, k, to_string(c)}));
  out["products"] = std::move(products);
  out["pairing"] = ring.pairing ? matrix_json(*ring.pairing) : Json(nullptr);
  return out;
}

std::string to_text(const ring::GradedRing& ring) {
  std::ostringstream os;
  os << kind_name(ring.kind) << " ring, " << ring.size() << " basis elements\n";
  for (std::size_t i = 0; i < ring.size(); ++i) os << "  " << ring.labels[i] << "  degree " << to_string(ring.degrees[i]) << "\n";
  os << "products\n";
  for (std::size_t i = 0; i < ring.size(); ++i)
    for (std::size_t j = i; j < ring.size(); ++j) {
      if (i == ring.unit_index || j == ring.unit_index) continue;
      os << "  " << ring.labels[i] << " * " << ring.labels[j] << " = ";
      const auto& v = ring.product(i, j);
      if (v.empty()) os << "0";
      bool first = true;
      for (const auto& [k, c] : v) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << to_string(c) << "*";
        os << ring.labels[k];
      }
      os << "\n";
    }
  return os.str();
}

Json to_json(const ring::VerifyReport& report) {
  Json out;
  out["passed"] = report.passed();
  out["unit"] = report.unit;
  out["associativity"] = report.associativity;
  out["grading"] = report.grading;
  out["commutativity"] = report.commutativity;
  out["pairing"] = report.pairing_checked ? Json(report.pairing) : Json(nullptr);
  out["failures"] = report.failures;
  return out;
}

std::string to_text(const ring::VerifyReport& report) {
  std::ostringstream os;
  auto line = [&](const char* name, bool ok) { os << "  " << name << ": " << (ok ? "pass" : "FAIL") << "\n"; };
  os << "ring axioms\n";
  line("unit", report.unit);
  line("associativity", report.associativity);
  line("grading", report.grading);
  line("commutativity", report.commutativity);
  if (report.pairing_checked) line("pairing", report.pairing);
  for (const auto& f : report.failures) os << "  counterexample: " << f << "\n";
  return os.str();
}

Json pairing_json(const ring::GradedRing& ring) {
  const auto& m = ring::pairing_matrix(ring);
  Json out;
  out["basis"] = ring.labels;
  out["matrix"] = matrix_json(m);
  out["determinant"] = to_string(ring::determinant(m));
  return out;
}

std::string pairing_text(const ring::GradedRing& ring) {
  const auto& m = ring::pairing_matrix(ring);
  std::ostringstream os;
  std::size_t width = 4;
  for (const auto& l : ring.labels) width = std::max(width, l.size());
  for (const auto& row : m)
    for (const auto& v : row) width = std::max(width, to_string(v).size());
  auto pad = [&](const std::string& s) { return s + std::string(width + 2 - s.size(), ' '); };
  os << pad("");
  for (const auto& l : ring.labels) os << pad(l);
  os << "\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << pad(ring.labels[i]);
    for (const auto& v : m[i]) os << pad(to_string(v));
    os << "\n";
  }
  os << "determinant " << to_string(ring::determinant(m)) << "\n";
  return os.str();
}

Json to_json(const orbicurve::GlueReport& r) {
  Json out;
  out["split"] = r.split;
  out["index"] = {{"first", to_string(r.index_first)}, {"second", to_string(r.index_second)},
                  {"glued", to_string(r.index_glued)}, {"dim_fixed_split", r.split_fixed_dim},
                  {"holds", r.index_identity}};
  out["coker"] = {{"first", to_string(r.coker_first)}, {"second", to_string(r.coker_second)},
                  {"excess_rank", r.excess_rank}, {"glued", to_string(r.coker_glued)},
                  {"holds", r.coker_identity}};
  out["passed"] = r.passed();
  return out;
}

std::string to_text(const orbicurve::GlueReport& r) {
  std::ostringstream os;
  os << "split element g" << r.split << "\n";
  os << "index: " << r.index_first << " + " << r.index_second << " = " << r.index_glued << " + " << r.split_fixed_dim
     << "  " << (r.index_identity ? "holds" : "FAILS") << "\n";
  os << "coker: " << r.coker_first << " + " << r.coker_second << " + " << r.excess_rank << " = " << r.coker_glued
     << "  " << (r.coker_identity ? "holds" : "FAILS") << "\n";
  return os.str();
}

}  // namespace orbcoh::io
