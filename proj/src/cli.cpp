#include "pob/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "pob/document.hpp"
#include "pob/pipeline.hpp"

namespace pob {

namespace {

enum class Format { Text, Structured };

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

// Assertion failures inside a command (paper-examples) exit 1.
struct AssertionFailed {
  std::string message;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw Error(ErrorCode::ParseError, "not an integer list: \"" + text + "\"");
    out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty integer list");
  return out;
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw Error(ErrorCode::ParseError, "cannot open " + path);
    buf << f.rdbuf();
  }
  return buf.str();
}

// First document of one of the wanted kinds.
Document pick(const std::vector<Document>& docs, std::initializer_list<DocumentKind> wanted) {
  for (DocumentKind k : wanted) {
    for (const auto& d : docs) {
      if (d.kind == k) return d;
    }
  }
  std::string names;
  for (DocumentKind k : wanted) names += (names.empty() ? "" : " or ") + std::string(to_string(k));
  throw Error(ErrorCode::ParseError, "input holds no " + names + " document");
}

// Throws with every diagnostic listed.
void require(const Diagnostics& d) {
  if (d.empty()) return;
  std::string message = d.front().message;
  for (std::size_t i = 1; i < d.size(); ++i) message += "; " + std::string(to_string(d[i].code)) + ": " + d[i].message;
  throw Error(d.front().code, message);
}

PobDocument load_pob(const std::string& path, std::istream& in) {
  PobDocument p = pob_from_json(pick(parse_documents(read_input(path, in)), {DocumentKind::Pob}).payload);
  require(p.pob.surface.diagnostics());
  require(validate_pob(p.pob));
  return p;
}

std::string arc_text(const Arc& a) {
  std::string out = a.start.side + "@" + rational_text(a.start.pos) + " -> " + a.end.side + "@" +
                    rational_text(a.end.pos) + " [";
  for (std::size_t i = 0; i < a.crossings.size(); ++i) {
    out += (i ? " " : "") + a.crossings[i].pair + (a.crossings[i].direction > 0 ? "+" : "-");
  }
  return out + "]";
}

json veering_json(const VeeringReport& v) {
  json arr = json::array();
  for (auto x : v.verdicts) arr.push_back(std::string(to_string(x)));
  return arr;
}

json verdict_json(const ContactVerdict& c) {
  json out{{"verdict", std::string(to_string(c.verdict))}, {"reason", c.reason}};
  if (c.left_arc) out["left_arc"] = *c.left_arc;
  if (!c.intersections.empty()) out["intersections"] = c.intersections;
  return out;
}

json row_json(const ExampleRow& row) {
  json v = json::array();
  for (auto x : row.veering) v.push_back(std::string(to_string(x)));
  return json{{"example", row.example},
              {"product_disks", row.product_disks},
              {"veering", v},
              {"verdict", std::string(to_string(row.verdict))},
              {"sqp", row.sqp ? json(*row.sqp) : json(nullptr)}};
}

// --- build ------------------------------------------------------------------

void cmd_build(const std::string& what, const std::string& list, bool mirrored, Format format, Streams io) {
  const auto values = parse_int_list(list);
  Pipeline p;
  if (what == "pretzel") {
    p = run_pipeline(PretzelSpec{values}, mirrored);
  } else if (what == "star") {
    const StarPlumbing star = star_plumbing(values);
    p = run_pipeline(mirrored ? mirror(star) : star);
  } else {
    throw Error(ErrorCode::ParseError, "build takes \"pretzel\" or \"star\", not \"" + what + "\"");
  }
  for (const auto& w : p.warnings) io.err << "warning: " << w << "\n";

  if (format == Format::Text) {
    const auto& s = p.pob.surface;
    if (p.spec) io.out << "pretzel: " << pretzel_text(*p.spec) << (mirrored ? " (mirrored)" : "") << "\n";
    io.out << "star: " << star_text(p.star) << "\n";
    io.out << "surface: " << encode(s) << "\n";
    io.out << "chi: " << euler_characteristic(s) << "  genus: " << genus(s)
           << "  boundary components: " << boundary_components(s).count() << "\n";
    io.out << "product disks: " << p.disks.pairs.size() << "\n";
    for (std::size_t i = 0; i < p.pob.basis.size(); ++i) {
      io.out << "  a" << i << ": " << arc_text(p.pob.basis[i]) << "\n";
      io.out << "  h(a" << i << "): " << arc_text(p.pob.images[i]) << "\n";
    }
    return;
  }

  std::vector<Document> docs;
  if (p.spec) docs.push_back(make_document(DocumentKind::Pretzel, to_json(*p.spec, mirrored)));
  docs.push_back(make_document(DocumentKind::Star, to_json(p.star)));
  docs.push_back(make_document(DocumentKind::Surface, to_json(p.pob.surface)));
  json disks = json::array();
  for (const auto& d : p.disks.pairs) {
    disks.push_back(json{{"summand", d.summand}, {"arc", to_json(d.arc)}, {"image", to_json(d.image)}});
  }
  docs.push_back(make_document(DocumentKind::Report, json{{"product_disks", disks}, {"warnings", p.warnings}}));
  docs.push_back(make_document(DocumentKind::Pob, to_json(PobDocument{p.pob, p.star})));
  io.out << print(docs);
}

// --- check ------------------------------------------------------------------

void cmd_check(const std::string& path, const std::vector<std::string>& checks, Format format, Streams io) {
  const PobDocument doc = load_pob(path, io.in);
  const auto& pob = doc.pob;
  json report = json::object();
  std::ostringstream text;
  for (const auto& c : checks) {
    if (c == "rv") {
      const auto v = veering_report(pob);
      report["rv"] = json{{"verdicts", veering_json(v)}, {"right_veering", v.right_veering()}};
      text << "rv:";
      if (v.verdicts.empty()) text << " (empty basis)";
      for (auto x : v.verdicts) text << ' ' << to_string(x);
      text << "\n";
    } else if (c == "contact") {
      const auto verdict = contact_verdict(pob);
      report["contact"] = verdict_json(verdict);
      text << "contact: " << to_string(verdict.verdict) << " (" << verdict.reason << ")\n";
    } else if (c == "sqp") {
      if (doc.origin) {
        const bool sqp = is_strongly_quasipositive(*doc.origin);
        report["sqp"] = json{{"value", sqp}, {"star", halftwists(*doc.origin)}};
        text << "sqp: " << (sqp ? "yes" : "no") << " (" << star_text(*doc.origin) << ")\n";
      } else {
        report["sqp"] = json{{"value", nullptr}, {"reason", "no star origin recorded"}};
        text << "sqp: unknown (no star origin recorded)\n";
      }
    } else if (c == "dividing") {
      const auto d = dividing_set_counts(pob);
      report["dividing"] = json{{"boundary_s", d.boundary_s}, {"boundary_p", d.boundary_p}, {"note", d.note}};
      text << "dividing: |dS| = " << d.boundary_s << ", |dP| = " << d.boundary_p << " (" << d.note << ")\n";
    } else {
      throw Error(ErrorCode::ParseError, "unknown check \"" + c + "\" (rv, contact, sqp, dividing)");
    }
  }
  if (format == Format::Text) {
    io.out << text.str();
  } else {
    io.out << print(make_document(DocumentKind::Report, json{{"checks", report}}));
  }
}

// --- stabilize --------------------------------------------------------------

void cmd_stabilize(const std::string& path, int n, Format format, Streams io) {
  if (n < 0) throw Error(ErrorCode::ParseError, "-n must be nonnegative");
  PartialOpenBook cur = load_pob(path, io.in).pob;
  std::vector<int> chi{euler_characteristic(cur.surface)};
  std::vector<ContactVerdict> verdicts{contact_verdict(cur)};
  const auto first = veering_report(cur).verdicts;
  bool veering_kept = true;
  for (int i = 0; i < n; ++i) {
    const auto site = free_site(cur);
    if (!site) throw Error(ErrorCode::SiteObstructed, "no free boundary site");
    cur = positive_stabilization(cur, *site);
    chi.push_back(euler_characteristic(cur.surface));
    verdicts.push_back(contact_verdict(cur));
    const auto v = veering_report(cur).verdicts;
    veering_kept = veering_kept && std::equal(first.begin(), first.end(), v.begin());
  }
  const bool stable = std::all_of(verdicts.begin(), verdicts.end(),
                                  [&](const ContactVerdict& v) { return v.verdict == verdicts.front().verdict; });
  if (format == Format::Text) {
    io.out << "chi:";
    for (int x : chi) io.out << ' ' << x;
    io.out << "\nverdicts:";
    for (const auto& v : verdicts) io.out << ' ' << to_string(v.verdict);
    io.out << "\nverdict stable: " << (stable ? "yes" : "no") << "\nprior veering preserved: "
           << (veering_kept ? "yes" : "no") << "\n";
    return;
  }
  json vs = json::array();
  for (const auto& v : verdicts) vs.push_back(std::string(to_string(v.verdict)));
  const Document report = make_document(
      DocumentKind::Report,
      json{{"chi", chi}, {"verdicts", vs}, {"verdict_stable", stable}, {"veering_preserved", veering_kept}});
  io.out << print({report, make_document(DocumentKind::Pob, to_json(PobDocument{cur, std::nullopt}))});
}

// --- paper-examples ---------------------------------------------------------

FamilyOptions parse_family(const std::vector<std::string>& items) {
  FamilyOptions f;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    const std::string key = item.substr(0, eq);
    if (eq == std::string::npos || (key != "k" && key != "range")) {
      throw Error(ErrorCode::ParseError, "--family takes k=.. range=.., got \"" + item + "\"");
    }
    const int v = parse_int_list(item.substr(eq + 1)).at(0);
    if (v < 1) throw Error(ErrorCode::ParseError, "--family values must be positive");
    (key == "k" ? f.max_k : f.range) = v;
  }
  return f;
}

void cmd_examples(bool mirrored, const std::vector<std::string>& family, unsigned threads, Format format,
                  Streams io) {
  const FamilyOptions f = parse_family(family);
  if (threads == 0) threads = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
  const SuiteResult r = run_golden_suite(mirrored, f, threads);
  if (format == Format::Text) {
    io.out << "example | #product disks | veering | verdict | SQP\n";
    for (const auto& row : r.rows) io.out << format_row(row) << "\n";
    io.out << "family k<=" << f.max_k << " range=" << f.range << ": " << r.family.size() << " rows\n";
    for (const auto& row : r.family) io.out << format_row(row) << "\n";
    io.out << (r.passed() ? "all golden assertions hold\n"
                          : std::to_string(r.failures.size()) + " golden assertion(s) failed\n");
  } else {
    json rows = json::array();
    json fam = json::array();
    for (const auto& row : r.rows) rows.push_back(row_json(row));
    for (const auto& row : r.family) fam.push_back(row_json(row));
    io.out << print(make_document(DocumentKind::Report,
                                  json{{"rows", rows},
                                       {"family", json{{"k", f.max_k}, {"range", f.range}, {"rows", fam}}},
                                       {"mirror", mirrored},
                                       {"failures", r.failures},
                                       {"passed", r.passed()}}));
  }
  if (!r.passed()) throw AssertionFailed{r.failures.front()};
}

// --- emit-dot ---------------------------------------------------------------

void cmd_dot(const std::string& path, Streams io) {
  const auto docs = parse_documents(read_input(path, io.in));
  const bool supported = std::any_of(docs.begin(), docs.end(), [](const Document& d) {
    return d.kind == DocumentKind::Pob || d.kind == DocumentKind::Surface;
  });
  if (!supported) {
    throw Error(ErrorCode::ParseError, "emit-dot supports surface and pob documents, not " +
                                           std::string(to_string(docs.front().kind)));
  }
  const Document chosen = pick(docs, {DocumentKind::Pob, DocumentKind::Surface});
  const Document* it = &chosen;
  if (it->kind == DocumentKind::Surface) {
    const auto s = surface_from_json(it->payload);
    require(s.diagnostics());
    io.out << emit_dot(s);
  } else {
    const PobDocument p = pob_from_json(it->payload);
    require(p.pob.surface.diagnostics());
    require(validate_pob(p.pob));
    io.out << emit_dot(p.pob);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partial open books of star-plumbed Seifert surfaces"};
  app.name("pob");
  app.require_subcommand(1);

  Format format = Format::Text;
  bool format_given = false;
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"structured", Format::Structured}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text or structured")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->each([&](const std::string&) { format_given = true; });
  };

  std::string what, list, path = "-";
  bool mirrored = false;
  std::vector<std::string> checks{"rv", "contact", "sqp", "dividing"};
  std::vector<std::string> family;
  int count = 1;
  unsigned threads = 0;

  auto* build = app.add_subcommand("build", "build a surface, product disks and partial open book");
  build->add_option("what", what, "pretzel or star")->required();
  build->add_option("values", list, "comma-separated coefficients or half-twists")->required();
  build->add_flag("--mirror", mirrored, "negate every summand");
  add_format(build);

  auto* check = app.add_subcommand("check", "run checks on a pob document");
  check->add_option("input", path, "document file, - for stdin");
  check->add_option("--checks", checks, "subset of rv,contact,sqp,dividing")->delimiter(',');
  add_format(check);

  auto* stabilize = app.add_subcommand("stabilize", "positive stabilizations of a pob document");
  stabilize->add_option("input", path, "document file, - for stdin");
  stabilize->add_option("-n", count, "number of stabilizations");
  add_format(stabilize);

  auto* examples = app.add_subcommand("paper-examples", "golden examples and family sweep");
  examples->add_flag("--mirror", mirrored, "use the mirrored twist convention");
  examples->add_option("--family", family, "k=.. range=..")->expected(0, 2);
  examples->add_option("--threads", threads, "family sweep workers (0: hardware)");
  add_format(examples);

  auto* dot = app.add_subcommand("emit-dot", "graphviz text for a surface or pob document");
  dot->add_option("input", path, "document file, - for stdin");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  const Streams io{in, out, err};
  try {
    if (*build) {
      cmd_build(what, list, mirrored, format_given ? format : Format::Structured, io);
    } else if (*check) {
      cmd_check(path, checks, format_given ? format : Format::Structured, io);
    } else if (*stabilize) {
      cmd_stabilize(path, count, format_given ? format : Format::Structured, io);
    } else if (*examples) {
      cmd_examples(mirrored, family, threads, format, io);
    } else if (*dot) {
      cmd_dot(path, io);
    }
  } catch (const AssertionFailed& e) {
    err << "assertion failed: " << e.message << "\n";
    return kExitAssertion;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const json::exception& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace pob
