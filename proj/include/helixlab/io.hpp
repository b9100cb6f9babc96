#pragma once

// JSON documents: presets, collections, and reports. Integers are JSON
// numbers when they fit in 64 bits and decimal strings otherwise; rationals
// are "p/q" strings unless integral. Floats are rejected on input.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "helixlab/chern.hpp"
#include "helixlab/k3.hpp"
#include "helixlab/lattice.hpp"
#include "helixlab/orbit.hpp"

namespace helixlab::io {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& z);
Json to_json(const Rational& q);
Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);

Json to_json(const KVector& v);
KVector kvector_from_json(const Json& j);
Json to_json(const ChernCharacter& x);
ChernCharacter chern_from_json(const Json& j);
Json to_json(const Collection& c);

Json to_json(const FanoPreset& v);
FanoPreset preset_from_json(const Json& j);

/// A collection given either by coordinates or by Chern characters, over a
/// named variety or an inline Gram form.
struct CollectionDocument {
  std::optional<std::string> variety;
  std::optional<IntMatrix> gram;
  std::variant<std::vector<KVector>, std::vector<ChernCharacter>> elements;

  bool has_chern() const { return elements.index() == 1; }
  bool operator==(const CollectionDocument&) const = default;
};

Json to_json(const CollectionDocument& doc);
CollectionDocument collection_document_from_json(const Json& j);

Json to_json(const SodVerdict& v);
Json to_json(const MukaiVector& m);
Json to_json(const BogomolovReport& r);
Json to_json(const PresetVerdict& v);
Json to_json(const SearchCaps& caps);
Json to_json(const OrbitStats& s);
/// With include_nodes, lists every node with its witness word and flags.
Json to_json(const OrbitReport& r, bool include_nodes);
Json to_json(const TransitivityReport& r);

/// Parses text; throws Error(ParseError) with the parser's message.
Json parse(const std::string& text);
std::string dump(const Json& j);

std::string read_file(const std::string& path);

}  // namespace helixlab::io
