#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "labgraph/dot.hpp"
#include "labgraph/error.hpp"
#include "labgraph/gross_tucker.hpp"
#include "labgraph/io.hpp"
#include "labgraph/range_lattice.hpp"
#include "report.hpp"

namespace labgraph::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::string window;
  int max_len = 3;
  std::size_t cap = kDefaultCandidateCap;
  std::optional<Element> span;
  std::string eta0;
  std::string domain;
  std::string morphism;
  std::string from;
  bool complements = false;
  std::vector<std::string> files;
  std::string word;
};

struct Outcome {
  Report report;
  int code = 0;
  std::optional<std::string> raw;  // printed verbatim instead of the report
};

Element ParseInt(const std::string& text, const std::string& what) {
  Element value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) throw UsageError("bad " + what + " '" + text + "'");
  return value;
}

std::optional<Window> ParseWindow(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto colon = text.find(':', 1);
  if (colon == std::string::npos) throw UsageError("--window expects lo:hi, got '" + text + "'");
  const Window w{ParseInt(text.substr(0, colon), "window bound"), ParseInt(text.substr(colon + 1), "window bound")};
  if (w.lo > w.hi) throw UsageError("--window lower bound exceeds upper bound");
  return w;
}

std::string FormatWindow(const Window& w) { return std::to_string(w.lo) + ":" + std::to_string(w.hi); }

std::vector<std::string> SplitIds(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct GraphInput {
  LabeledGraph graph;
  std::optional<SkewLabeledGraph> skew;
};

GraphInput LoadGraph(const Document& doc, const std::optional<Window>& window) {
  switch (doc.kind()) {
    case DocumentKind::kGraph:
      if (window) throw UsageError("--window applies only to skew products");
      return {AsGraph(doc), std::nullopt};
    case DocumentKind::kSkewSpec: {
      SkewLabeledGraph skew = SkewProduct(AsSkewSpec(doc), window);
      LabeledGraph graph = skew.graph;
      return {std::move(graph), std::move(skew)};
    }
    case DocumentKind::kAction: {
      MaterializedAction m = BuildAction(AsAction(doc), window);
      return {m.action.graph(), std::move(m.skew)};
    }
    default:
      throw UsageError("expected a graph, skew-spec or action document, got " +
                       std::string(DocumentKindName(doc.kind())));
  }
}

MaterializedAction LoadAction(const Document& doc, const std::optional<Window>& window,
                              std::optional<Element> span = std::nullopt) {
  switch (doc.kind()) {
    case DocumentKind::kAction:
      return BuildAction(AsAction(doc), window);
    case DocumentKind::kSkewSpec: {
      SkewLabeledGraph skew = SkewProduct(AsSkewSpec(doc), window);
      LabeledGraphAction action = LeftTranslation(skew, span);
      return {std::move(action), std::move(skew)};
    }
    default:
      throw UsageError("expected an action or skew-spec document, got " + std::string(DocumentKindName(doc.kind())));
  }
}

const SkewLabeledGraph& RequireSkew(const GraphInput& in, const std::string& file) {
  if (!in.skew) throw UsageError(file + " is not a skew product");
  return *in.skew;
}

Report ElementValue(const Group& group, Element g) {
  if (group.kind() == GroupKind::kPermutation) return group.format(g);
  return g;
}

Report CocycleReport(const Group& group, const std::map<std::string, Element>& c) {
  Report r = Report::object();
  for (const auto& [k, v] : c) r[k] = ElementValue(group, v);
  return r;
}

Report IdMapReport(const IdMap& m) {
  Report r = Report::object();
  for (const auto& [k, v] : m) r[k] = v;
  return r;
}

Report EdgeTable(const LabeledGraph& lg) {
  Report rows = Report::array();
  const auto& g = lg.graph();
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    rows.push_back({{"id", g.edge_id(e)},
                    {"src", g.vertex_id(g.src(e))},
                    {"dst", g.vertex_id(g.dst(e))},
                    {"label", lg.label_id(e)}});
  }
  return rows;
}

void AddWindow(Report& r, const std::optional<SkewLabeledGraph>& skew) {
  if (skew && skew->window) r["window"] = FormatWindow(*skew->window);
}

// Row-finite and essential, restricted to the interior of a window.
Report ValidityReport(const GraphInput& in, bool& ok) {
  const auto report = Validate(in.graph.graph());
  const bool windowed = in.skew && in.skew->window;
  std::vector<std::string> sinks, sources;
  for (const auto& row : report.vertices) {
    if (windowed && !in.skew->interior.contains(row.vertex)) continue;
    if (!row.emits) sinks.push_back(row.vertex);
    if (!row.receives) sources.push_back(row.vertex);
  }
  ok = sinks.empty() && sources.empty();
  Report r;
  r["row-finite+essential"] = ok;
  if (windowed) r["checked"] = "window interior";
  if (!sinks.empty()) r["sinks"] = sinks;
  if (!sources.empty()) r["sources"] = sources;
  return r;
}

Outcome Validate(const Options& o) {
  const Document doc = ReadDocument(o.files.at(0));
  Outcome out;
  out.report["kind"] = DocumentKindName(doc.kind());
  if (doc.kind() != DocumentKind::kGraph && doc.kind() != DocumentKind::kSkewSpec &&
      doc.kind() != DocumentKind::kAction) {
    out.report["well-formed"] = true;
    return out;
  }
  const GraphInput in = LoadGraph(doc, ParseWindow(o.window));
  AddWindow(out.report, in.skew);
  bool ok = false;
  out.report.update(ValidityReport(in, ok));
  out.code = ok ? 0 : 1;
  return out;
}

Outcome Properties(const Options& o) {
  const GraphInput in = LoadGraph(ReadDocument(o.files.at(0)), ParseWindow(o.window));
  const auto& lg = in.graph;
  Outcome out;
  AddWindow(out.report, in.skew);
  const auto lr = IsLeftResolving(lg);
  out.report["left-resolving"] = lr.holds;
  if (!lr.holds) {
    out.report["left-resolving witness"] =
        lr.vertex + " receives " + lr.edge1 + " and " + lr.edge2 + " with the same label";
  }
  const auto wlr = IsWeaklyLeftResolving(lg);
  out.report["weakly-left-resolving"] = wlr.holds;
  if (!wlr.holds) {
    out.report["weakly-left-resolving witness"] =
        "r({" + wlr.vertex1 + "}," + wlr.letter + ") and r({" + wlr.vertex2 + "}," + wlr.letter + ") share " + wlr.common;
  }
  bool valid = false;
  out.report.update(ValidityReport(in, valid));
  out.code = lr.holds && wlr.holds && valid ? 0 : 1;
  return out;
}

Outcome Paths(const Options& o) {
  if (o.max_len < 1) throw UsageError("--max-len must be at least 1");
  const GraphInput in = LoadGraph(ReadDocument(o.files.at(0)), ParseWindow(o.window));
  Outcome out;
  AddWindow(out.report, in.skew);
  Report rows = Report::array();
  for (int n = 1; n <= o.max_len; ++n) {
    std::vector<std::string> words;
    for (const auto& w : LabeledPaths(in.graph, n)) words.push_back(FormatWord(in.graph, w));
    rows.push_back({{"length", n},
                    {"paths", PathsOfLength(in.graph.graph(), n).size()},
                    {"labeled paths", words.size()},
                    {"words", words}});
  }
  out.report["lengths"] = rows;
  return out;
}

Outcome Range(const Options& o) {
  const GraphInput in = LoadGraph(ReadDocument(o.files.at(0)), ParseWindow(o.window));
  const auto& lg = in.graph;
  const Word word = ParseWord(lg, o.word);
  Outcome out;
  AddWindow(out.report, in.skew);
  out.report["word"] = FormatWord(lg, word);
  if (!o.from.empty()) {
    const VertexSet from = MakeVertexSet(lg.graph(), SplitIds(o.from));
    out.report["from"] = FormatVertexSet(lg.graph(), from);
    const VertexSet r = RelativeRange(lg, from, word);
    out.report["relative range"] = FormatVertexSet(lg.graph(), r);
    out.code = r.none() ? 1 : 0;
    return out;
  }
  try {
    const auto rs = RangeAndSource(lg, word);
    out.report["labeled path"] = true;
    out.report["range"] = FormatVertexSet(lg.graph(), rs.range);
    out.report["source"] = FormatVertexSet(lg.graph(), rs.source);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotALabeledPath) throw;
    out.report["labeled path"] = false;
    out.code = 1;
  }
  return out;
}

Report ClosureReport(const ClosureFlags& f) {
  return {{"relative ranges", f.relative_ranges},
          {"intersections", f.intersections},
          {"unions", f.unions},
          {"complements", f.complements},
          {"contains ranges", f.contains_ranges}};
}

Outcome Lattice(const Options& o) {
  const GraphInput in = LoadGraph(ReadDocument(o.files.at(0)), ParseWindow(o.window));
  const auto& lg = in.graph;
  const auto& g = lg.graph();
  SetCollection col = SmallestAccommodating(lg);
  if (o.complements) col = RelativeComplementClosure(lg, col);
  const auto space = MakeLabeledSpaceReport(lg, col);
  Outcome out;
  AddWindow(out.report, in.skew);
  out.report["closure"] = o.complements ? "relative complements" : "smallest accommodating";
  out.report["members"] = col.size();
  out.report["closed under complements"] = col.closed_under_complements;
  out.report["weakly-left-resolving"] = space.weakly_left_resolving;
  Report rows = Report::array();
  for (const auto& member : col.members) {
    Report row{{"set", FormatVertexSet(g, member)}, {"derivation", FormatExpr(lg, *col.derivations.at(member))}};
    if (space.weakly_left_resolving) row["normal form"] = FormatNormalForm(lg, NormalFormOf(lg, col, member));
    rows.push_back(std::move(row));
  }
  out.report["collection"] = rows;
  out.report["checks"] = ClosureReport(space.closure);
  out.report["distinct ranges"] = space.distinct_ranges;
  out.report["ck1b"] = space.ck1b;
  out.report["ck4"] = space.ck4;
  return out;
}

Outcome Skew(const Options& o) {
  const GraphInput in = LoadGraph(ReadDocument(o.files.at(0)), ParseWindow(o.window));
  const SkewLabeledGraph& skew = RequireSkew(in, o.files.at(0));
  Outcome out;
  out.report["window"] = skew.window ? FormatWindow(*skew.window) : "all of G";
  out.report["vertices"] = skew.graph.graph().num_vertices();
  out.report["edges"] = skew.graph.graph().num_edges();
  out.report["letters"] = skew.graph.num_letters();
  out.report["interior vertices"] = skew.interior.size();
  out.report["escape vertices"] = std::vector<std::string>(skew.escape_vertices.begin(), skew.escape_vertices.end());
  out.report["edge table"] = EdgeTable(skew.graph);
  return out;
}

Outcome ActionCheck(const MaterializedAction& m, bool require_free) {
  const auto report = VerifyAction(m.action);
  const auto free = IsFree(m.action);
  Outcome out;
  AddWindow(out.report, m.skew);
  const auto& scope = m.action.scope();
  out.report["scope"] = m.action.windowed() ? "[" + m.action.group().format(scope.front()) + "," +
                                                  m.action.group().format(scope.back()) + "]"
                                            : "all of G";
  out.report["action"] = report.ok;
  out.report["verified on window"] = report.windowed;
  out.report["elements checked"] = report.elements_checked;
  out.report["products checked"] = report.products_checked;
  if (!report.failures.empty()) out.report["failures"] = report.failures;
  out.report["free"] = free.free;
  if (!free.free) {
    out.report["free witness"] = free.element + " fixes " + (free.fixed_letter ? "letter " : "vertex ") + free.item;
  }
  out.code = report.ok && (free.free || !require_free) ? 0 : 1;
  return out;
}

Outcome Translate(const Options& o) {
  const Document doc = ReadDocument(o.files.at(0));
  if (doc.kind() != DocumentKind::kSkewSpec) throw UsageError("translate expects a skew-spec document");
  return ActionCheck(LoadAction(doc, ParseWindow(o.window), o.span), true);
}

Outcome ActCheck(const Options& o) {
  return ActionCheck(LoadAction(ReadDocument(o.files.at(0)), ParseWindow(o.window)), false);
}

Outcome QuotientCmd(const Options& o) {
  const MaterializedAction m = LoadAction(ReadDocument(o.files.at(0)), ParseWindow(o.window));
  const QuotientLabeledGraph q = Quotient(m.action);
  Outcome out;
  AddWindow(out.report, m.skew);
  out.report["vertices"] = q.graph.graph().vertices();
  out.report["alphabet"] = q.graph.alphabet();
  out.report["edge table"] = EdgeTable(q.graph);
  if (m.skew) {
    const auto canonical = VerifyMorphism(q.graph, m.skew->spec.base(), IdentityMorphism(q.graph));
    out.report["isomorphic to base"] = canonical.is_isomorphism;
    if (canonical.failure) out.report["failure"] = *canonical.failure;
    out.code = canonical.is_isomorphism ? 0 : 1;
  }
  return out;
}

Report ViolationReport(const DomainViolation& v) {
  Report r{{"clause", ClauseName(v.clause)}, {"detail", v.detail}};
  if (!v.edge1.empty()) {
    r["edge1"] = v.edge1;
    r["label1"] = v.label1;
    r["edge2"] = v.edge2;
    r["label2"] = v.label2;
  }
  return r;
}

Outcome FunDomain(const Options& o) {
  const MaterializedAction m = LoadAction(ReadDocument(o.files.at(0)), ParseWindow(o.window));
  Outcome out;
  AddWindow(out.report, m.skew);
  if (!o.domain.empty()) {
    const auto domain = AsDomain(ReadDocument(o.domain)).vertices;
    const auto result = IsFundamentalDomain(m.action, domain);
    out.report["domain"] = domain;
    out.report["fundamental domain"] = result.holds;
    if (!result.holds) {
      Report rows = Report::array();
      for (const auto& v : result.violations) rows.push_back(ViolationReport(v));
      out.report["violations"] = rows;
    }
    out.code = result.holds ? 0 : 1;
    return out;
  }
  const DomainSearch search = FindFundamentalDomain(m.action, o.cap);
  if (search.domain) {
    out.report["domain"] = *search.domain;
  } else {
    out.report["domain"] = "NONE";
  }
  out.report["candidates tried"] = search.candidates_tried;
  out.report["search space"] = search.search_space;
  out.code = search.domain ? 0 : 1;
  return out;
}

Report ConsistencyReport(const Group& group, const LabelConsistency& lc, const char* factor) {
  Report r;
  r["label-consistent"] = lc.consistent;
  if (lc.consistent) {
    r[factor] = CocycleReport(group, lc.factoring);
  } else {
    r["witness"] = lc.edge1 + " and " + lc.edge2 + " share a label";
  }
  return r;
}

Outcome LabelConsistencyCmd(const Options& o) {
  const Document doc = ReadDocument(o.files.at(0));
  std::optional<SkewSpec> skew;
  if (doc.kind() == DocumentKind::kSkewSpec) skew = AsSkewSpec(doc);
  if (doc.kind() == DocumentKind::kAction) skew = AsAction(doc).skew;
  if (!skew) throw UsageError(o.files.at(0) + " is not a skew product");
  const SkewSpec& spec = *skew;
  Outcome out;
  out.report["c"] = ConsistencyReport(spec.group(), spec.c_consistency(), "C");
  out.report["d"] = ConsistencyReport(spec.group(), spec.d_consistency(), "D");
  out.code = spec.c_consistency().consistent && spec.d_consistency().consistent ? 0 : 1;
  return out;
}

Outcome GrossTucker(const Options& o) {
  const MaterializedAction m = LoadAction(ReadDocument(o.files.at(0)), ParseWindow(o.window));
  std::optional<Reconstruction> rec;
  Outcome out;
  AddWindow(out.report, m.skew);
  if (!o.eta0.empty()) {
    if (!o.domain.empty()) throw UsageError("--eta0 and --domain are exclusive");
    out.report["mode"] = "sections";
    rec = Reconstruct(m.action, AsSectionPack(ReadDocument(o.eta0)));
  } else {
    out.report["mode"] = "label-consistent";
    std::optional<std::vector<std::string>> domain;
    if (!o.domain.empty()) domain = AsDomain(ReadDocument(o.domain)).vertices;
    rec = ReconstructLabelConsistent(m.action, domain, {}, o.cap);
    out.report["domain"] = rec->domain;
  }
  const Group& group = rec->spec.group();
  out.report["eta0"] = IdMapReport(rec->sections.eta0);
  out.report["eta1"] = IdMapReport(rec->sections.eta1);
  out.report["etaA"] = IdMapReport(rec->sections.etaA);
  out.report["c"] = CocycleReport(group, rec->spec.c());
  out.report["d"] = CocycleReport(group, rec->spec.d());
  out.report["c label-consistent"] = rec->spec.c_consistency().consistent;
  out.report["d label-consistent"] = rec->spec.d_consistency().consistent;
  out.report["isomorphism"] = rec->morphism.is_isomorphism;
  out.report["verified on window"] = rec->morphism.partial;
  out.report["edges checked"] = rec->morphism.checked_edges;
  out.report["equivariant"] = rec->equivariance.equivariant;
  out.report["equivariance checks"] = rec->equivariance.checked;
  return out;
}

Report MorphismReportOf(const MorphismReport& m) {
  Report r{{"morphism", m.is_morphism},
           {"isomorphism", m.is_isomorphism},
           {"injective", m.injective},
           {"surjective", m.surjective},
           {"partial", m.partial},
           {"edges checked", m.checked_edges}};
  if (m.failure) r["failure"] = *m.failure;
  return r;
}

Outcome IsoCheck(const Options& o) {
  if (o.files.size() != 2) throw UsageError("iso-check expects two input files");
  const auto window = ParseWindow(o.window);
  const GraphInput a = LoadGraph(ReadDocument(o.files[0]), window);
  const GraphInput b = LoadGraph(ReadDocument(o.files[1]), window);
  Outcome out;
  AddWindow(out.report, a.skew);
  if (!o.morphism.empty()) {
    const auto domain = (a.skew && a.skew->window) || (b.skew && b.skew->window) ? MapDomain::kPartial : MapDomain::kTotal;
    const auto report = VerifyMorphism(a.graph, b.graph, AsMorphism(ReadDocument(o.morphism)), domain);
    out.report.update(MorphismReportOf(report));
    out.code = report.is_isomorphism ? 0 : 1;
    return out;
  }
  const RelabelResult r = RelabelIso(RequireSkew(a, o.files[0]), RequireSkew(b, o.files[1]));
  out.report["verified"] = r.verified;
  out.report.update(MorphismReportOf(r.morphism));
  out.report["equivariant"] = r.equivariance.equivariant;
  out.report["equivariance checks"] = r.equivariance.checked;
  if (r.equivariance.failure) out.report["equivariance failure"] = *r.equivariance.failure;
  out.code = r.verified ? 0 : 1;
  return out;
}

Outcome ExportDotCmd(const Options& o) {
  const GraphInput in = LoadGraph(ReadDocument(o.files.at(0)), ParseWindow(o.window));
  Outcome out;
  out.raw = in.skew ? ExportDot(*in.skew) : ExportDot(in.graph);
  out.report["dot"] = *out.raw;
  return out;
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kSchemaError:
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kPrecondition:
    case ErrorCode::kOutOfWindow:
    case ErrorCode::kSearchSpaceExceeded:
      return 2;
    default:
      return 1;
  }
}

struct Command {
  const char* name;
  const char* description;
  std::function<Outcome(const Options&)> run;
  bool window = true;
  bool two_files = false;
};

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Labeled graphs, skew products and group actions", "labgraph"};
  app.require_subcommand(1);
  Options o;
  const std::vector<Command> commands = {
      {"validate", "Parse a document and check row-finite+essential", Validate},
      {"properties", "Left-resolving, weakly left-resolving, row-finite+essential", Properties},
      {"paths", "Paths and labeled paths up to --max-len", Paths},
      {"range", "Range and source of a labeled path", Range},
      {"lattice", "Smallest accommodating collection with derivations", Lattice},
      {"skew", "Materialize a skew product", Skew},
      {"translate", "Verify the left translation action of a skew product", Translate},
      {"quotient", "Quotient of an action", QuotientCmd},
      {"act-check", "Verify a group action and its freeness", ActCheck},
      {"fundomain", "Check or search a fundamental domain", FunDomain},
      {"label-consistency", "Label consistency of skew-product cocycles", LabelConsistencyCmd},
      {"gross-tucker", "Reconstruct a free action as a skew product", GrossTucker},
      {"iso-check", "Verify a morphism or the relabeling isomorphism", IsoCheck, true, true},
      {"export-dot", "Export a graph or skew materialization as DOT", ExportDotCmd},
  };
  std::map<CLI::App*, const Command*> by_app;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.description);
    auto* files = sub->add_option("files", o.files, "Input document(s)")->required();
    if (c.two_files) {
      files->expected(2);
    } else {
      files->expected(1);
    }
    sub->add_flag("--json", o.json, "Machine-readable report");
    sub->add_option("--window", o.window, "Window lo:hi for integer skew products")->allow_extra_args(false);
    const std::string name = c.name;
    if (name == "paths") sub->add_option("--max-len", o.max_len, "Longest path length")->capture_default_str();
    if (name == "range") {
      sub->add_option("--word", o.word, "Labeled path, e.g. 10 or a,b")->required();
      sub->add_option("--from", o.from, "Comma-separated vertex set for the relative range");
    }
    if (name == "lattice") sub->add_flag("--complements", o.complements, "Close under relative complements");
    if (name == "translate") sub->add_option("--span", o.span, "Translation scope [-span, span]");
    if (name == "fundomain" || name == "gross-tucker") {
      sub->add_option("--domain", o.domain, "Domain document");
      sub->add_option("--cap", o.cap, "Candidate cap for the transversal search")->capture_default_str();
    }
    if (name == "gross-tucker") sub->add_option("--eta0", o.eta0, "Section-pack document");
    if (name == "iso-check") sub->add_option("--morphism", o.morphism, "Morphism document");
    by_app.emplace(sub, &c);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  // A window such as -4:6 would otherwise be read as a flag.
  for (std::size_t i = reversed.size(); i-- > 1;) {
    if (reversed[i] == "--window") {
      reversed[i - 1] = "--window=" + reversed[i - 1];
      reversed.erase(reversed.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Command* command = nullptr;
  for (CLI::App* sub : app.get_subcommands()) command = by_app.at(sub);
  try {
    Outcome result = command->run(o);
    if (result.raw && !o.json) {
      out << *result.raw;
    } else if (o.json) {
      out << result.report.dump(2) << "\n";
    } else {
      RenderText(result.report, out);
    }
    return result.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (o.json) out << Report{{"error", ErrorCodeName(e.code())}, {"message", e.what()}}.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  }
}

}  // namespace labgraph::cli
