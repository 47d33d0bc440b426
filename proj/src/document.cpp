#include "pob/document.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace pob {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) fail(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

std::vector<int> int_list(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) fail(std::string("field \"") + key + "\" must be an array");
  std::vector<int> out;
  for (const json& x : v) {
    if (!x.is_number_integer()) fail(std::string("field \"") + key + "\" must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

// "b1+" -> ("b1", +1); "b1-~" -> ("b1", -1, preserving).
struct SignedToken {
  std::string name;
  int direction = 0;
  bool preserving = false;
};

std::optional<SignedToken> signed_token(std::string t) {
  SignedToken out;
  if (!t.empty() && t.back() == '~') {
    out.preserving = true;
    t.pop_back();
  }
  if (t.size() < 2 || (t.back() != '+' && t.back() != '-')) {
    if (out.preserving) fail("\"~\" only follows a glued side");
    return std::nullopt;
  }
  out.direction = t.back() == '+' ? 1 : -1;
  t.pop_back();
  out.name = std::move(t);
  return out;
}

std::string point_text(const BoundaryPoint& p) { return p.side + "@" + rational_text(p.pos); }

BoundaryPoint point_from_text(const std::string& t) {
  const auto at = t.rfind('@');
  if (at == std::string::npos || at == 0) fail("boundary point \"" + t + "\" is not side@n/d");
  return {t.substr(0, at), parse_rational(std::string_view(t).substr(at + 1))};
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string_view to_string(DocumentKind k) {
  switch (k) {
    case DocumentKind::Surface: return "surface";
    case DocumentKind::Arc: return "arc";
    case DocumentKind::Pob: return "pob";
    case DocumentKind::Star: return "star";
    case DocumentKind::Pretzel: return "pretzel";
    case DocumentKind::Report: return "report";
  }
  return "?";
}

DocumentKind parse_kind(std::string_view s) {
  for (auto k : {DocumentKind::Surface, DocumentKind::Arc, DocumentKind::Pob, DocumentKind::Star,
                 DocumentKind::Pretzel, DocumentKind::Report}) {
    if (to_string(k) == s) return k;
  }
  fail("unknown document kind \"" + std::string(s) + "\"");
}

std::string rational_text(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view s) {
  const auto slash = s.find('/');
  auto number = [&](std::string_view t) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
      fail("bad rational \"" + std::string(s) + "\"");
    }
    return v;
  };
  const std::int64_t num = number(s.substr(0, slash));
  const std::int64_t den = slash == std::string_view::npos ? 1 : number(s.substr(slash + 1));
  if (den == 0) fail("zero denominator in \"" + std::string(s) + "\"");
  return Rational(num, den);
}

json to_json(const PolygonPresentation& s) {
  json sides = json::array();
  for (const Side& side : s.sides()) {
    if (const auto* b = std::get_if<BoundarySide>(&side)) {
      sides.push_back(b->label);
    } else {
      const auto& g = std::get<GluedSide>(side);
      sides.push_back(g.pair + (g.end == End::Head ? "+" : "-") + (g.preserving ? "~" : ""));
    }
  }
  return json{{"sides", sides}};
}

PolygonPresentation surface_from_json(const json& j) {
  const json& sides = field(j, "sides");
  if (!sides.is_array()) fail("\"sides\" must be an array");
  std::vector<Side> out;
  for (const json& t : sides) {
    if (!t.is_string()) fail("sides are strings");
    const auto token = signed_token(t.get<std::string>());
    if (token) {
      out.emplace_back(GluedSide{token->name, token->direction > 0 ? End::Head : End::Tail, token->preserving});
    } else {
      out.emplace_back(BoundarySide{t.get<std::string>()});
    }
  }
  return PolygonPresentation(std::move(out));
}

json to_json(const Arc& a) {
  json word = json::array();
  for (const Crossing& c : a.crossings) word.push_back(c.pair + (c.direction > 0 ? "+" : "-"));
  return json{{"start", point_text(a.start)}, {"end", point_text(a.end)}, {"word", word}};
}

Arc arc_from_json(const json& j) {
  Arc a{point_from_text(string_field(j, "start")), point_from_text(string_field(j, "end")), {}};
  const json& word = field(j, "word");
  if (!word.is_array()) fail("\"word\" must be an array");
  for (const json& t : word) {
    if (!t.is_string()) fail("crossings are strings");
    const auto token = signed_token(t.get<std::string>());
    if (!token || token->preserving) fail("bad crossing \"" + t.get<std::string>() + "\"");
    a.crossings.push_back({token->name, token->direction});
  }
  return a;
}

json to_json(const StarPlumbing& star) { return json{{"halftwists", halftwists(star)}}; }

StarPlumbing star_from_json(const json& j) {
  try {
    return star_plumbing(int_list(j, "halftwists"));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    fail(e.what());
  }
}

json to_json(const PretzelSpec& spec, bool mirrored) {
  return json{{"coefficients", spec.coefficients}, {"mirror", mirrored}};
}

PretzelSpec pretzel_from_json(const json& j, bool* mirrored) {
  PretzelSpec spec{int_list(j, "coefficients")};
  if (mirrored) {
    *mirrored = false;
    if (j.contains("mirror")) {
      if (!j["mirror"].is_boolean()) fail("\"mirror\" must be a boolean");
      *mirrored = j["mirror"].get<bool>();
    }
  }
  return spec;
}

json to_json(const PobDocument& p) {
  json basis = json::array();
  json images = json::array();
  for (const Arc& a : p.pob.basis) basis.push_back(to_json(a));
  for (const Arc& a : p.pob.images) images.push_back(to_json(a));
  json out{{"surface", to_json(p.pob.surface)}, {"basis", basis}, {"images", images}};
  if (p.origin) out["origin"] = to_json(*p.origin);
  return out;
}

PobDocument pob_from_json(const json& j) {
  PobDocument out;
  out.pob.surface = surface_from_json(field(j, "surface"));
  for (const char* key : {"basis", "images"}) {
    const json& arcs = field(j, key);
    if (!arcs.is_array()) fail(std::string("\"") + key + "\" must be an array");
    auto& dst = std::string_view(key) == "basis" ? out.pob.basis : out.pob.images;
    for (const json& a : arcs) dst.push_back(arc_from_json(a));
  }
  if (j.contains("origin")) out.origin = star_from_json(j["origin"]);
  return out;
}

Document make_document(DocumentKind kind, json payload) { return Document{kind, kDocumentVersion, std::move(payload)}; }

json to_json(const Document& d) {
  return json{{"kind", std::string(to_string(d.kind))}, {"version", d.version}, {"payload", d.payload}};
}

Document document_from_json(const json& j) {
  Document d;
  d.kind = parse_kind(string_field(j, "kind"));
  const json& v = field(j, "version");
  if (!v.is_number_integer()) fail("\"version\" must be an integer");
  d.version = v.get<int>();
  if (d.version != kDocumentVersion) {
    fail("unsupported version " + std::to_string(d.version) + " (expected " + std::to_string(kDocumentVersion) + ")");
  }
  d.payload = field(j, "payload");
  return d;
}

std::string print(const Document& d) { return to_json(d).dump(2) + "\n"; }

std::string print(const std::vector<Document>& docs) {
  json arr = json::array();
  for (const auto& d : docs) arr.push_back(to_json(d));
  return arr.dump(2) + "\n";
}

std::vector<Document> parse_documents(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(e.what());
  }
  std::vector<Document> out;
  if (j.is_array()) {
    for (const json& x : j) out.push_back(document_from_json(x));
  } else {
    out.push_back(document_from_json(j));
  }
  return out;
}

std::string emit_dot(const PolygonPresentation& s) { return emit_dot(PartialOpenBook{s, {}, {}}); }

std::string emit_dot(const PartialOpenBook& pob) {
  const auto& s = pob.surface;
  const std::size_t n = s.size();
  std::map<std::string, std::vector<Rational>> marked;
  for (const auto& p : marked_points(pob)) marked[p.side].push_back(p.pos);
  for (auto& [side, v] : marked) std::sort(v.begin(), v.end());

  std::ostringstream out;
  out << "graph pob {\n  node [shape=point];\n";
  for (std::size_t i = 0; i < n; ++i) out << "  c" << i << ";\n";
  for (std::size_t i = 0; i < n; ++i) {
    const std::string to = "c" + std::to_string((i + 1) % n);
    if (s.is_boundary(i)) {
      std::string from = "c" + std::to_string(i);
      bool first = true;
      for (const Rational& r : marked[s.label(i)]) {
        const std::string id = quoted(s.label(i) + "@" + rational_text(r));
        out << "  " << id << " [shape=circle, width=0.05, label=\"\"];\n";
        out << "  " << from << " -- " << id;
        if (first) out << " [label=" << quoted(s.label(i)) << "]";
        out << ";\n";
        from = id;
        first = false;
      }
      out << "  " << from << " -- " << to;
      if (first) out << " [label=" << quoted(s.label(i)) << "]";
      out << ";\n";
    } else {
      const auto& g = std::get<GluedSide>(s.sides()[i]);
      const std::string name = g.pair + (g.end == End::Head ? "+" : "-");
      out << "  g" << i << " [shape=box, label=" << quoted(name) << "];\n";
      out << "  c" << i << " -- g" << i << " [style=bold];\n";
      out << "  g" << i << " -- " << to << " [style=bold];\n";
    }
  }
  for (std::size_t p = 0; p < s.pair_count(); ++p) {
    out << "  g" << s.head_side(p) << " -- g" << s.tail_side(p) << " [style=dashed, label="
        << quoted(s.pair_label(p)) << "];\n";
  }
  const bool single = pob.basis.size() == 1;
  auto overlay = [&](const Arc& a, const std::string& label, const char* color) {
    std::string word;
    for (const auto& c : a.crossings) word += (word.empty() ? "" : " ") + c.pair + (c.direction > 0 ? "+" : "-");
    out << "  " << quoted(point_text(a.start)) << " -- " << quoted(point_text(a.end)) << " [color=" << color
        << ", label=" << quoted(word.empty() ? label : label + ": " + word) << "];\n";
  };
  for (std::size_t i = 0; i < pob.basis.size(); ++i) {
    const std::string a = single ? "a" : "a" + std::to_string(i);
    overlay(pob.basis[i], a, "blue");
    overlay(pob.images[i], "h(" + a + ")", "red");
  }
  out << "}\n";
  return out.str();
}

}  // namespace pob
