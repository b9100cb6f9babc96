#include "helixlab/io.hpp"

#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "helixlab/error.hpp"

namespace helixlab::io {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(Errc::ParseError, msg); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

bool present(const Json& j, const char* key) {
  return j.is_object() && j.contains(key) && !j.at(key).is_null();
}

int small_int(const Json& j, const char* what) {
  Integer z = integer_from_json(j);
  if (!z.fits_sint_p()) fail(std::string(what) + " out of range");
  return static_cast<int>(z.get_si());
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) fail("gram must be an array");
  std::vector<Integer> flat;
  for (const auto& row : j) {
    if (row.is_array()) {
      for (const auto& e : row) flat.push_back(integer_from_json(e));
    } else {
      flat.push_back(integer_from_json(row));
    }
  }
  std::size_t n = 0;
  while (n * n < flat.size()) ++n;
  if (n * n != flat.size()) fail("gram has " + std::to_string(flat.size()) + " entries, not a square");
  return IntMatrix(n, std::move(flat));
}

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (const auto& e : m.entries()) out.push_back(to_json(e));
  return out;
}

}  // namespace

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

Json to_json(const Rational& q) {
  if (is_integer(q)) return to_json(q.get_num());
  return Json(to_string(q));
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()), 10);
    return Integer(std::to_string(j.get<std::int64_t>()), 10);
  }
  if (j.is_string()) return parse_integer(j.get<std::string>());
  fail("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail("expected a rational, got " + j.dump());
}

Json to_json(const KVector& v) {
  Json out = Json::array();
  for (const auto& c : v.coords()) out.push_back(to_json(c));
  return out;
}

KVector kvector_from_json(const Json& j) {
  if (!j.is_array()) fail("class coordinates must be an array");
  std::vector<Integer> coords;
  for (const auto& e : j) coords.push_back(integer_from_json(e));
  return KVector(std::move(coords));
}

Json to_json(const ChernCharacter& x) {
  return Json::array({to_json(x.r), to_json(x.a), to_json(x.b), to_json(x.c)});
}

ChernCharacter chern_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) fail("Chern character must be [r, a, b, c]");
  return {integer_from_json(j[0]), integer_from_json(j[1]), rational_from_json(j[2]),
          rational_from_json(j[3])};
}

Json to_json(const Collection& c) {
  Json out = Json::array();
  for (const auto& e : c.elements) out.push_back(to_json(e));
  return out;
}

Json to_json(const FanoPreset& v) {
  Json out;
  out["name"] = v.name;
  out["d"] = to_json(v.degree);
  out["k"] = to_json(v.index);
  out["b2"] = v.b2;
  out["b3"] = v.b3;
  if (v.gram) out["gram"] = matrix_to_json(*v.gram);
  if (v.basis_ch) {
    Json basis = Json::array();
    for (const auto& x : *v.basis_ch) basis.push_back(to_json(x));
    out["basis_ch"] = std::move(basis);
  }
  return out;
}

FanoPreset preset_from_json(const Json& j) {
  if (!j.is_object()) fail("preset must be an object");
  FanoPreset v;
  const Json& name = field(j, "name");
  if (!name.is_string()) fail("preset name must be a string");
  v.name = name.get<std::string>();
  v.degree = integer_from_json(field(j, "d"));
  v.index = integer_from_json(field(j, "k"));
  v.b2 = small_int(field(j, "b2"), "b2");
  v.b3 = small_int(field(j, "b3"), "b3");
  if (present(j, "gram")) v.gram = matrix_from_json(j.at("gram"));
  if (present(j, "basis_ch")) {
    const Json& basis = j.at("basis_ch");
    if (!basis.is_array()) fail("basis_ch must be an array");
    std::vector<ChernCharacter> chars;
    for (const auto& x : basis) chars.push_back(chern_from_json(x));
    v.basis_ch = std::move(chars);
  }
  return v;
}

Json to_json(const CollectionDocument& doc) {
  Json out;
  if (doc.variety) out["variety"] = *doc.variety;
  if (doc.gram) out["gram"] = matrix_to_json(*doc.gram);
  if (const auto* coords = std::get_if<std::vector<KVector>>(&doc.elements)) {
    Json arr = Json::array();
    for (const auto& v : *coords) arr.push_back(to_json(v));
    out["elements"] = std::move(arr);
  } else {
    Json arr = Json::array();
    for (const auto& x : std::get<std::vector<ChernCharacter>>(doc.elements)) {
      arr.push_back(to_json(x));
    }
    out["chern"] = std::move(arr);
  }
  return out;
}

CollectionDocument collection_document_from_json(const Json& j) {
  if (!j.is_object()) fail("collection document must be an object");
  CollectionDocument doc;
  if (present(j, "variety")) {
    if (!j.at("variety").is_string()) fail("variety must be a string");
    doc.variety = j.at("variety").get<std::string>();
  }
  if (present(j, "gram")) doc.gram = matrix_from_json(j.at("gram"));
  if (doc.variety && doc.gram) fail("give either 'variety' or 'gram', not both");
  if (!doc.variety && !doc.gram) fail("collection needs 'variety' or 'gram'");

  const bool coords = present(j, "elements");
  const bool chern = present(j, "chern");
  if (coords && chern) fail("mixed 'elements' and 'chern' entries are not allowed");
  if (!coords && !chern) fail("collection needs 'elements' or 'chern'");
  if (coords) {
    const Json& arr = j.at("elements");
    if (!arr.is_array()) fail("'elements' must be an array");
    std::vector<KVector> elems;
    for (const auto& e : arr) elems.push_back(kvector_from_json(e));
    doc.elements = std::move(elems);
  } else {
    if (doc.gram) fail("Chern-character elements need a named variety");
    const Json& arr = j.at("chern");
    if (!arr.is_array()) fail("'chern' must be an array");
    std::vector<ChernCharacter> elems;
    for (const auto& e : arr) elems.push_back(chern_from_json(e));
    doc.elements = std::move(elems);
  }
  return doc;
}

Json to_json(const SodVerdict& v) {
  Json out;
  out["ok"] = v.ok();
  Json flags = Json::array();
  for (bool e : v.exceptional) flags.push_back(e);
  out["exceptional"] = std::move(flags);
  Json viol = Json::array();
  for (const auto& p : v.violations) {
    Json item;
    item["pair"] = Json::array({p.later, p.earlier});
    item["chi"] = to_json(p.chi);
    viol.push_back(std::move(item));
  }
  out["violations"] = std::move(viol);
  out["determinant"] = to_json(v.determinant);
  out["unimodular"] = v.unimodular;
  return out;
}

Json to_json(const MukaiVector& m) {
  Json out;
  out["r"] = to_json(m.r);
  out["a"] = to_json(m.a);
  out["s"] = to_json(m.s);
  out["polarization"] = to_json(m.polarization);
  return out;
}

Json to_json(const BogomolovReport& r) {
  Json out;
  out["index"] = to_json(r.index);
  out["rank"] = to_json(r.rank);
  out["spherical"] = r.spherical;
  out["discriminant"] = to_json(r.discriminant);
  out["threshold"] = to_json(r.computed_threshold);
  out["satisfied"] = r.computed_satisfied;
  if (r.quoted_discriminant) {
    Json q;
    q["discriminant"] = to_json(*r.quoted_discriminant);
    q["threshold"] = to_json(*r.quoted_threshold);
    q["satisfied"] = *r.quoted_satisfied;
    q["caveat"] =
        "quoted rank-2 value 4c2 - c1^2 = 2; the Mukai computation above gives 2r^2 - 2 = 6";
    out["quoted"] = std::move(q);
  }
  out["index_hypothesis"] = r.index_hypothesis;
  return out;
}

Json to_json(const PresetVerdict& v) {
  Json out;
  out["ok"] = v.ok();
  out["violations"] = v.violations;
  return out;
}

Json to_json(const SearchCaps& caps) {
  Json out;
  out["max_depth"] = caps.max_depth;
  out["max_nodes"] = caps.max_nodes;
  out["height_cap"] = caps.height_cap ? to_json(*caps.height_cap) : Json(nullptr);
  return out;
}

Json to_json(const OrbitStats& s) {
  Json out;
  out["expanded"] = s.expanded;
  out["boundary"] = s.boundary;
  out["frontier_peak"] = s.frontier_peak;
  out["level_sizes"] = s.level_sizes;
  out["truncated_by_depth"] = s.truncated_by_depth;
  out["truncated_by_nodes"] = s.truncated_by_nodes;
  return out;
}

Json to_json(const OrbitReport& r, bool include_nodes) {
  Json out;
  out["size"] = r.size();
  out["truncated"] = r.truncated();
  out["stats"] = to_json(r.stats());
  if (include_nodes) {
    Json nodes = Json::array();
    for (std::size_t i = 0; i < r.size(); ++i) {
      const auto& node = r.nodes()[i];
      Json item;
      item["collection"] = to_json(node.key);
      item["depth"] = node.depth;
      item["boundary"] = node.boundary;
      item["witness"] = r.witness(i).to_string();
      nodes.push_back(std::move(item));
    }
    out["nodes"] = std::move(nodes);
  }
  return out;
}

namespace {

const char* verdict_name(TransitivityVerdict v) {
  switch (v) {
    case TransitivityVerdict::Transitive: return "transitive";
    case TransitivityVerdict::NotReached: return "not_reached";
    case TransitivityVerdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

}  // namespace

Json to_json(const TransitivityReport& r) {
  Json out;
  out["verdict"] = verdict_name(r.verdict);
  out["height"] = r.bound;
  out["caps"] = to_json(r.caps);
  out["exceptional_count"] = r.exceptional_count;
  out["exceptional_in_bases"] = r.exceptional_in_bases;
  out["bases"] = r.bases.size();
  out["reached_count"] = r.reached.size();
  out["unreached_count"] = r.unreached.size();
  out["orbit_size"] = r.orbit_size;
  out["orbit"] = to_json(r.orbit);
  Json reached = Json::array();
  for (const auto& [c, w] : r.reached) {
    Json item;
    item["collection"] = to_json(c);
    item["witness"] = w.to_string();
    reached.push_back(std::move(item));
  }
  out["reached"] = std::move(reached);
  Json unreached = Json::array();
  for (const auto& c : r.unreached) unreached.push_back(to_json(c));
  out["unreached"] = std::move(unreached);
  return out;
}

Json parse(const std::string& text) {
  try {
    Json j = Json::parse(text);
    return j;
  } catch (const nlohmann::json::parse_error& e) {
    fail(e.what());
  }
}

namespace {

bool is_flat(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

// Like dump(2), but arrays of scalars stay on one line.
void write_pretty(std::string& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Json(it.key()).dump() + ": ";
      write_pretty(out, it.value(), indent + 2);
    }
    out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else if (j.is_array() && !j.empty() && !is_flat(j)) {
    out += "[\n";
    bool first = true;
    for (const auto& x : j) {
      if (!first) out += ",\n";
      first = false;
      out += pad;
      write_pretty(out, x, indent + 2);
    }
    out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "]";
  } else if (j.is_array()) {
    out += "[";
    bool first = true;
    for (const auto& x : j) {
      if (!first) out += ", ";
      first = false;
      out += x.dump();
    }
    out += "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  write_pretty(out, j, 0);
  return out + "\n";
}

std::string read_file(const std::string& path) {
  if (std::filesystem::is_directory(path)) fail("'" + path + "' is a directory");
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace helixlab::io
