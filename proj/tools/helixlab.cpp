// helixlab: command-line front end.
//
// Exit codes: 0 success / verdict true, 1 verdict false or failed
// precondition, 2 input or configuration error, 3 inconclusive (caps hit).

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "helixlab/chern.hpp"
#include "helixlab/error.hpp"
#include "helixlab/io.hpp"
#include "helixlab/k3.hpp"
#include "helixlab/lattice.hpp"
#include "helixlab/mutation.hpp"
#include "helixlab/orbit.hpp"

namespace fs = std::filesystem;
using namespace helixlab;
using io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kInput = 2;
constexpr int kInconclusive = 3;

FanoPreset load_preset(const std::string& name) {
  if (fs::is_regular_file(name)) return io::preset_from_json(io::parse(io::read_file(name)));
  if (const char* dir = std::getenv("HELIXLAB_PRESET_DIR")) {
    const fs::path p = fs::path(dir) / (name + ".json");
    if (fs::is_regular_file(p)) return io::preset_from_json(io::parse(io::read_file(p.string())));
  }
  if (auto v = find_builtin_preset(name)) return *v;
  throw Error(Errc::InvalidPreset, "unknown preset '" + name + "'");
}

// A collection resolved against its ambient lattice.
struct Resolved {
  std::optional<FanoPreset> preset;
  GramForm gram;
  Collection collection;
};

GramForm usable_gram(const FanoPreset& v) {
  const PresetVerdict verdict = validate_preset(v);
  if (!verdict.ok()) {
    throw Error(Errc::InvalidPreset, "preset '" + v.name + "': " + verdict.violations.front());
  }
  return v.gram_form();
}

Resolved resolve_document(const io::CollectionDocument& doc, const std::string& preset_override) {
  std::optional<FanoPreset> preset;
  if (!preset_override.empty()) {
    preset = load_preset(preset_override);
  } else if (doc.variety) {
    preset = load_preset(*doc.variety);
  }
  std::optional<GramForm> gram;
  if (preset) {
    gram = usable_gram(*preset);
  } else {
    gram = GramForm(*doc.gram);
  }
  Collection c;
  if (const auto* coords = std::get_if<std::vector<KVector>>(&doc.elements)) {
    c.elements = *coords;
  } else {
    for (const auto& x : std::get<std::vector<ChernCharacter>>(doc.elements)) {
      c.elements.push_back(to_coordinates(*preset, x));
    }
  }
  if (c.size() != gram->rank()) {
    throw Error(Errc::DimensionMismatch, "collection has " + std::to_string(c.size()) +
                                             " elements, lattice rank is " +
                                             std::to_string(gram->rank()));
  }
  for (const auto& e : c.elements) {
    if (e.size() != gram->rank()) {
      throw Error(Errc::DimensionMismatch, "element of length " + std::to_string(e.size()) +
                                               " in a rank " + std::to_string(gram->rank()) +
                                               " lattice");
    }
  }
  return {preset, *gram, std::move(c)};
}

Resolved load_collection(const std::string& path, const std::string& preset_override) {
  return resolve_document(io::collection_document_from_json(io::parse(io::read_file(path))),
                          preset_override);
}

Resolved reference_of(const std::string& preset_name) {
  FanoPreset v = load_preset(preset_name);
  GramForm g = usable_gram(v);
  Collection c = reference_basis(g.rank());
  return {std::move(v), std::move(g), std::move(c)};
}

std::string format_vector(const KVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}

std::string format_collection(const Collection& c) {
  std::string out;
  for (const auto& e : c.elements) out += (out.empty() ? "" : " ") + format_vector(e);
  return out;
}

io::CollectionDocument document_for(const Resolved& r, const Collection& c) {
  io::CollectionDocument doc;
  if (r.preset) {
    doc.variety = r.preset->name;
  } else {
    doc.gram = r.gram.matrix();
  }
  doc.elements = c.elements;
  return doc;
}

KVector parse_coords(const std::string& text) {
  std::vector<Integer> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) coords.push_back(parse_integer(item));
  return KVector(std::move(coords));
}

ChernCharacter parse_chern(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 4) throw Error(Errc::ParseError, "Chern character needs r,a,b,c");
  return {parse_integer(parts[0]), parse_integer(parts[1]), parse_rational(parts[2]),
          parse_rational(parts[3])};
}

// --- subcommands ----------------------------------------------------------

struct Globals {
  bool json = false;
  int workers = 0;
};

int cmd_preset(const Globals& gl, const std::string& name, bool validate, bool list) {
  if (list) {
    for (const auto& v : builtin_presets()) {
      std::cout << v.name << "  d=" << v.degree << " k=" << v.index
                << (v.has_lattice() ? "" : "  (no reference collection)") << "\n";
    }
    return kOk;
  }
  if (name.empty()) throw Error(Errc::ParseError, "preset name or file required");
  const FanoPreset v = load_preset(name);
  if (!validate) {
    std::cout << io::dump(io::to_json(v));
    return kOk;
  }
  const PresetVerdict verdict = validate_preset(v);
  if (gl.json) {
    std::cout << io::dump(io::to_json(verdict));
  } else {
    std::cout << "preset " << v.name << ": " << (verdict.ok() ? "valid" : "invalid") << "\n";
    for (const auto& msg : verdict.violations) std::cout << "  " << msg << "\n";
  }
  return verdict.ok() ? kOk : kFalse;
}

int cmd_verify(const Globals& gl, const std::string& file, const std::string& preset) {
  const Resolved r = load_collection(file, preset);
  const SodVerdict v = check_sod_basis(r.gram, r.collection);
  if (gl.json) {
    std::cout << io::dump(io::to_json(v));
  } else {
    std::cout << (v.ok() ? "semiorthogonal basis" : "not a semiorthogonal basis") << "\n";
    for (std::size_t i = 0; i < v.exceptional.size(); ++i) {
      if (!v.exceptional[i]) {
        std::cout << "  element " << i + 1 << " not exceptional: chi = "
                  << euler_pair(r.gram, r.collection[i], r.collection[i]) << "\n";
      }
    }
    for (const auto& p : v.violations) {
      std::cout << "  pair (" << p.later << "," << p.earlier << ") not orthogonal: chi = " << p.chi
                << "\n";
    }
    if (!v.unimodular) std::cout << "  not unimodular: det = " << v.determinant << "\n";
  }
  return v.ok() ? kOk : kFalse;
}

// With a file, `preset` is only an override and may be empty.
Resolved resolve_input(const std::string& file, const std::string& preset) {
  if (file.empty()) return reference_of(preset.empty() ? "p3" : preset);
  return load_collection(file, preset);
}

int cmd_gram(const Globals& gl, const std::string& preset, const std::string& file) {
  const Resolved r = resolve_input(file, preset);
  const std::size_t n = r.collection.size();
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = euler_pair(r.gram, r.collection[i], r.collection[j]);
  if (gl.json) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < n; ++j) row.push_back(io::to_json(m(i, j)));
      rows.push_back(std::move(row));
    }
    std::cout << io::dump(rows);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) std::cout << (j ? " " : "") << m(i, j);
      std::cout << "\n";
    }
  }
  return kOk;
}

int cmd_mutate(const std::string& file, const std::string& preset, const std::string& word,
               bool canonical, bool helix, bool backward) {
  const Resolved r = resolve_input(file, preset);
  Collection out;
  if (helix) {
    out = helix_shift(r.gram, r.collection,
                      backward ? HelixDirection::Backward : HelixDirection::Forward);
  } else {
    out = apply_word(r.gram, r.collection, BraidWord::parse(word));
  }
  if (canonical) out = canonicalize(out);
  std::cout << io::dump(io::to_json(document_for(r, out)));
  return kOk;
}

int cmd_enumerate(const Globals& gl, const std::string& preset, long height, bool bases,
                  std::size_t max_candidates) {
  const Resolved r = reference_of(preset);
  EnumOptions opts{gl.workers, max_candidates};
  if (bases) {
    const auto found = enumerate_sod_bases(r.gram, height, opts);
    if (gl.json) {
      Json arr = Json::array();
      for (const auto& c : found) arr.push_back(io::to_json(c));
      Json out;
      out["height"] = height;
      out["count"] = found.size();
      out["bases"] = std::move(arr);
      std::cout << io::dump(out);
    } else {
      std::cout << found.size() << " semiorthogonal bases of height <= " << height << "\n";
      for (const auto& c : found) std::cout << format_collection(c) << "\n";
    }
  } else {
    const auto found = enumerate_exceptional(r.gram, height, opts);
    if (gl.json) {
      Json arr = Json::array();
      for (const auto& v : found) arr.push_back(io::to_json(v));
      Json out;
      out["height"] = height;
      out["count"] = found.size();
      out["classes"] = std::move(arr);
      std::cout << io::dump(out);
    } else {
      std::cout << found.size() << " exceptional classes of height <= " << height << "\n";
      for (const auto& v : found) std::cout << format_vector(v) << "\n";
    }
  }
  return kOk;
}

SearchCaps make_caps(std::size_t depth, std::size_t max_nodes, long height_cap) {
  SearchCaps caps;
  caps.max_depth = depth;
  caps.max_nodes = max_nodes;
  if (height_cap >= 0) caps.height_cap = Integer(height_cap);
  return caps;
}

int cmd_orbit(const Globals& gl, const std::string& preset, const std::string& file,
              const SearchCaps& caps, bool list_nodes) {
  const Resolved r = resolve_input(file, preset);
  const OrbitReport rep = orbit_bfs(r.gram, r.collection, caps, {gl.workers, false});
  if (gl.json) {
    std::cout << io::dump(io::to_json(rep, list_nodes));
  } else {
    const auto& s = rep.stats();
    std::cout << "visited " << rep.size() << " collections (" << s.boundary
              << " boundary), expanded " << s.expanded << ", frontier peak " << s.frontier_peak
              << "\n";
    std::cout << "levels:";
    for (auto l : s.level_sizes) std::cout << " " << l;
    std::cout << "\n";
    if (s.truncated_by_depth) std::cout << "truncated: depth cap reached\n";
    if (s.truncated_by_nodes) std::cout << "truncated: node cap reached\n";
    if (list_nodes) {
      for (std::size_t i = 0; i < rep.size(); ++i) {
        const auto& node = rep.nodes()[i];
        std::cout << format_collection(node.key) << "  [" << rep.witness(i).to_string() << "]"
                  << (node.boundary ? " boundary" : "") << "\n";
      }
    }
  }
  return rep.truncated() ? kInconclusive : kOk;
}

int cmd_transitivity(const Globals& gl, const std::string& preset, long height,
                     const SearchCaps& caps, std::size_t max_candidates) {
  const Resolved r = reference_of(preset);
  const TransitivityReport rep =
      transitivity_report(r.gram, height, caps, {gl.workers, false}, {gl.workers, max_candidates});
  if (gl.json) {
    Json j = io::to_json(rep);
    std::cout << io::dump(j);
  } else {
    std::cout << "preset " << r.preset->name << ", height <= " << height << ", height cap "
              << *rep.caps.height_cap << ", depth <= " << rep.caps.max_depth << "\n";
    std::cout << "exceptional classes: " << rep.exceptional_count << " ("
              << rep.exceptional_in_bases << " occur in some basis)\n";
    std::cout << "semiorthogonal bases: " << rep.bases.size() << ", reached "
              << rep.reached.size() << ", unreached " << rep.unreached.size() << "\n";
    std::cout << "orbit: " << rep.orbit_size << " collections"
              << (rep.orbit.truncated_by_depth ? ", truncated by depth" : "")
              << (rep.orbit.truncated_by_nodes ? ", truncated by node cap" : "") << "\n";
    for (const auto& c : rep.unreached) std::cout << "  unreached " << format_collection(c) << "\n";
    switch (rep.verdict) {
      case TransitivityVerdict::Transitive: std::cout << "verdict: transitive\n"; break;
      case TransitivityVerdict::NotReached: std::cout << "verdict: not reached within caps\n"; break;
      case TransitivityVerdict::Inconclusive: std::cout << "verdict: inconclusive (truncated)\n"; break;
    }
  }
  switch (rep.verdict) {
    case TransitivityVerdict::Transitive: return kOk;
    case TransitivityVerdict::NotReached: return kFalse;
    case TransitivityVerdict::Inconclusive: return kInconclusive;
  }
  return kFalse;
}

int cmd_restrict(const Globals& gl, const std::string& preset, const std::string& coords,
                 const std::string& chern) {
  const FanoPreset v = load_preset(preset);
  if (coords.empty() == chern.empty()) {
    throw Error(Errc::ParseError, "give exactly one of --coords or --chern");
  }
  ChernCharacter x;
  if (!coords.empty()) {
    const KVector xi = parse_coords(coords);
    if (xi.is_zero()) throw Error(Errc::ZeroVector, "zero class");
    usable_gram(v);
    x = from_coordinates(v, xi);
  } else {
    x = parse_chern(chern);
    if (x == ChernCharacter{0, 0, 0, 0}) throw Error(Errc::ZeroVector, "zero class");
  }
  const MukaiVector m = restrict_to_k3(v, x);
  const Rational self = mukai_pair(m, m);
  const bool spherical = is_spherical_class(m);
  std::optional<Rational> mu;
  if (m.r != 0) mu = slope(m);
  std::optional<BogomolovReport> bog;
  if (m.r > 0) bog = bogomolov_restriction_report(v, m);

  if (gl.json) {
    Json out;
    out["preset"] = v.name;
    out["chern"] = io::to_json(x);
    out["chi"] = io::to_json(hrr_euler(v, x, x));
    out["mukai"] = io::to_json(m);
    out["self_pairing"] = io::to_json(self);
    out["spherical"] = spherical;
    out["slope"] = mu ? io::to_json(*mu) : Json(nullptr);
    out["bogomolov"] = bog ? io::to_json(*bog) : Json(nullptr);
    std::cout << io::dump(out);
  } else {
    std::cout << "chern character: (" << x.r << ", " << x.a << ", " << to_string(x.b) << ", "
              << to_string(x.c) << "), chi(x,x) = " << to_string(hrr_euler(v, x, x)) << "\n";
    std::cout << "mukai vector: (" << m.r << ", " << to_string(m.a) << ", " << to_string(m.s)
              << ") with H_S^2 = " << m.polarization << "\n";
    std::cout << "self-pairing: " << to_string(self) << (spherical ? " (spherical)" : "") << "\n";
    if (mu) std::cout << "slope: " << to_string(*mu) << "\n";
    if (bog) {
      std::cout << "discriminant: " << to_string(bog->discriminant) << ", threshold k >= "
                << to_string(bog->computed_threshold) << ": "
                << (bog->computed_satisfied ? "satisfied" : "not satisfied") << "\n";
      if (bog->quoted_discriminant) {
        std::cout << "quoted rank-2 discriminant: " << to_string(*bog->quoted_discriminant)
                  << ", threshold k >= " << to_string(*bog->quoted_threshold) << ": "
                  << (*bog->quoted_satisfied ? "satisfied" : "not satisfied")
                  << " (normalization differs from the value computed above)\n";
      }
      if (!bog->index_hypothesis) std::cout << "index hypothesis k >= 2 fails\n";
    }
  }
  return kOk;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::NotSODBasis: return kFalse;
    default: return kInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"helixlab: exceptional collections, mutations and helices on K0 lattices"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_flag("--json", gl.json, "machine-readable output");
  app.add_option("--workers", gl.workers, "OpenMP workers for search kernels (0 = default)")
      ->check(CLI::NonNegativeNumber);

  std::string preset = "p3";
  std::string file;
  std::string word;
  long height = 1;
  long height_cap = -1;
  std::size_t depth = 24;
  std::size_t max_nodes = 5'000'000;
  std::size_t max_candidates = 50'000'000;
  bool flag_a = false, flag_b = false, flag_c = false;
  std::string coords, chern;

  auto* p = app.add_subcommand("preset", "print or validate a preset");
  p->add_option("name", preset, "preset name or JSON file");
  p->add_flag("--validate", flag_a, "check invariants, exit 1 if invalid");
  p->add_flag("--list", flag_b, "list built-in presets");

  auto* v = app.add_subcommand("verify", "check that a collection is a semiorthogonal basis");
  v->add_option("file", file, "collection document")->required();
  v->add_option("--preset", preset, "override the document's variety");

  auto* g = app.add_subcommand("gram", "Gram matrix of the Euler form on a collection");
  g->add_option("--preset", preset, "preset name or file");
  g->add_option("file", file, "collection document (default: reference basis)");

  auto* m = app.add_subcommand("mutate", "apply a braid word to a collection");
  m->add_option("file", file, "collection document (default: reference basis)");
  m->add_option("--preset", preset, "preset name or file");
  m->add_option("--word,-w", word, "braid word, e.g. \"L1 R2\"");
  m->add_flag("--canonical", flag_a, "canonicalize signs of the result");
  m->add_flag("--helix", flag_b, "apply the helix shift instead of a word");
  m->add_flag("--backward", flag_c, "with --helix, shift backward");

  auto* e = app.add_subcommand("enumerate", "exceptional classes or bases up to a height");
  e->add_option("--preset", preset, "preset name or file");
  e->add_option("--height,-B", height, "coordinate height bound")->check(CLI::NonNegativeNumber);
  e->add_flag("--bases", flag_a, "enumerate semiorthogonal bases");
  e->add_option("--max-candidates", max_candidates, "scan volume limit");

  auto* o = app.add_subcommand("orbit", "breadth-first orbit under mutations and signs");
  o->add_option("file", file, "start collection (default: reference basis)");
  o->add_option("--preset", preset, "preset name or file");
  o->add_option("--depth", depth, "maximum word length");
  o->add_option("--max-nodes", max_nodes, "maximum stored collections")->check(CLI::PositiveNumber);
  o->add_option("--height-cap", height_cap, "do not expand collections above this height");
  o->add_flag("--nodes", flag_a, "list every collection with its witness word");

  auto* t = app.add_subcommand("transitivity", "check that bounded-height bases form one orbit");
  t->add_option("--preset", preset, "preset name or file");
  t->add_option("--height,-B", height, "coordinate height bound")->check(CLI::NonNegativeNumber);
  t->add_option("--depth", depth, "maximum word length");
  t->add_option("--max-nodes", max_nodes, "maximum stored collections")->check(CLI::PositiveNumber);
  t->add_option("--height-cap", height_cap, "orbit height cap (default 4 x height)");
  t->add_option("--max-candidates", max_candidates, "scan volume limit");

  auto* r = app.add_subcommand("restrict", "restrict a class to the anticanonical K3");
  r->add_option("--preset", preset, "preset name or file");
  r->add_option("--coords", coords, "lattice coordinates, comma separated");
  r->add_option("--chern", chern, "Chern character r,a,b,c (b, c may be p/q)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? kOk : kInput;
  }

  auto given = [&](CLI::App* sub) {
    return sub->get_option("--preset")->count() ? preset : std::string();
  };

  try {
    if (p->parsed()) return cmd_preset(gl, p->count("name") ? preset : "", flag_a, flag_b);
    if (v->parsed()) return cmd_verify(gl, file, given(v));
    if (g->parsed()) return cmd_gram(gl, given(g), file);
    if (m->parsed()) {
      if (flag_b && !word.empty()) throw Error(Errc::ParseError, "--helix and --word conflict");
      return cmd_mutate(file, given(m), word, flag_a, flag_b, flag_c);
    }
    if (e->parsed()) return cmd_enumerate(gl, preset, height, flag_a, max_candidates);
    if (o->parsed()) {
      return cmd_orbit(gl, given(o), file, make_caps(depth, max_nodes, height_cap), flag_a);
    }
    if (t->parsed()) {
      return cmd_transitivity(gl, preset, height, make_caps(depth, max_nodes, height_cap),
                              max_candidates);
    }
    if (r->parsed()) return cmd_restrict(gl, preset, coords, chern);
  } catch (const Error& err) {
    std::cerr << "helixlab: " << err.what() << "\n";
    return exit_code_for(err.code());
  } catch (const std::exception& err) {
    std::cerr << "helixlab: " << err.what() << "\n";
    return kInput;
  }
  return kInput;
}
