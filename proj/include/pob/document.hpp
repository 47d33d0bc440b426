#pragma once

// Versioned JSON documents: {"kind": ..., "version": 1, "payload": ...}.
// Positions are written as "n/d" strings, crossings and glued sides as
// "b1+" / "b1-" (a trailing "~" marks an orientation-preserving side).

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pob/arc.hpp"
#include "pob/constructions.hpp"
#include "pob/open_book.hpp"
#include "pob/surface.hpp"

namespace pob {

using json = nlohmann::json;

inline constexpr int kDocumentVersion = 1;

enum class DocumentKind { Surface, Arc, Pob, Star, Pretzel, Report };

std::string_view to_string(DocumentKind k);
DocumentKind parse_kind(std::string_view s);

struct Document {
  DocumentKind kind = DocumentKind::Report;
  int version = kDocumentVersion;
  json payload;

  bool operator==(const Document&) const = default;
};

// A partial open book with the star it was built from, when known.
struct PobDocument {
  PartialOpenBook pob;
  std::optional<StarPlumbing> origin;

  bool operator==(const PobDocument&) const = default;
};

std::string rational_text(const Rational& r);
Rational parse_rational(std::string_view s);

json to_json(const PolygonPresentation& s);
json to_json(const Arc& a);
json to_json(const PobDocument& p);
json to_json(const StarPlumbing& star);
json to_json(const PretzelSpec& spec, bool mirrored);

// These throw Error(ParseError) on malformed payloads; validation of the
// parsed value (presentation diagnostics, POB checks) is left to the caller.
PolygonPresentation surface_from_json(const json& j);
Arc arc_from_json(const json& j);
PobDocument pob_from_json(const json& j);
StarPlumbing star_from_json(const json& j);
PretzelSpec pretzel_from_json(const json& j, bool* mirrored = nullptr);

Document make_document(DocumentKind kind, json payload);
json to_json(const Document& d);
Document document_from_json(const json& j);

// Two-space indented, keys sorted, trailing newline.
std::string print(const Document& d);
std::string print(const std::vector<Document>& docs);

// A single document or an array of them.
std::vector<Document> parse_documents(std::string_view text);

// Graphviz text. Nodes are polygon corners and marked points; glued pairs
// get a dashed chord between their two sides; each basis arc and its image
// are drawn as overlays labeled a, h(a) (a0, h(a0), ... when there are several).
std::string emit_dot(const PolygonPresentation& s);
std::string emit_dot(const PartialOpenBook& pob);

}  // namespace pob
