#include "graphmon/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "graphmon/config.hpp"
#include "graphmon/error.hpp"
#include "graphmon/graph_io.hpp"
#include "graphmon/k_theory.hpp"
#include "graphmon/lattice.hpp"
#include "graphmon/properties.hpp"
#include "graphmon/word_problem.hpp"

namespace graphmon {

namespace {

using Json = nlohmann::ordered_json;

Json integer_json(const Integer& k) {
  if (k.fits_slong_p()) return Json(k.get_si());
  return Json(k.get_str());
}

Json set_json(const Graph& g, const VertexSet& s) {
  Json out = Json::array();
  for (Vertex v : s.members()) out.push_back(g.name(v));
  return out;
}

Json group_json(const GroupElement& x) {
  Json out = Json::array();
  for (const Integer& k : x.free) out.push_back(integer_json(k));
  for (const Integer& k : x.torsion) out.push_back(integer_json(k));
  return out;
}

Json trace_json(const Graph& g, const RewriteTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"vertex", g.name(s.vertex)}, {"after", format_element(g, s.after)}});
  return {{"start", format_element(g, t.start)}, {"steps", steps}};
}

std::string trace_text(const Graph& g, const RewriteTrace& t) {
  std::string out = format_element(g, t.start);
  for (const auto& s : t.steps)
    out += "\n    -> " + format_element(g, s.after) + "  (rewrite " + g.name(s.vertex) + ")";
  return out;
}

Json certificate_json(const Graph& g, const Certificate& c) {
  Json out{{"kind", to_string(c.kind)}, {"description", describe(g, c)}};
  if (!c.base.empty()) out["modulo"] = set_json(g, c.base);
  switch (c.kind) {
    case Certificate::Kind::support_closure:
      out["lhs_closure"] = set_json(g, c.lhs_closure);
      out["rhs_closure"] = set_json(g, c.rhs_closure);
      break;
    case Certificate::Kind::group_image:
      out["within"] = set_json(g, c.within);
      out["killed"] = set_json(g, c.killed);
      out["lhs_image"] = group_json(c.lhs_image);
      out["rhs_image"] = group_json(c.rhs_image);
      break;
    case Certificate::Kind::exhausted:
      out["lhs_reducts"] = c.lhs_reducts;
      out["rhs_reducts"] = c.rhs_reducts;
      break;
    case Certificate::Kind::zero:
      break;
  }
  return out;
}

std::string torsion_text(const GroupPresentation& p) {
  if (p.torsion().empty()) return "none";
  std::string out;
  for (const Integer& d : p.torsion()) {
    if (!out.empty()) out += ", ";
    out += "Z/" + d.get_str();
  }
  return out;
}

Json class_json(const Graph& g, const SimpleClass& c) {
  Json out{{"class", to_string(c.kind)}};
  if (c.sink) out["witness"] = g.name(*c.sink);
  if (c.loop) out["witness"] = format_path(g, *c.loop);
  return out;
}

std::string class_text(const Graph& g, const SimpleClass& c) {
  std::string out = to_string(c.kind);
  if (c.sink) out += " (sink " + g.name(*c.sink) + ")";
  if (c.loop) out += " (loop " + format_path(g, *c.loop) + ")";
  return out;
}

std::vector<VertexSet> parse_chain(const Graph& g, const std::string& text) {
  std::vector<VertexSet> chain;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ';');)
    chain.push_back(parse_vertex_list(g, part));
  return chain;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct Session {
  Config cfg;
  std::string format = "text";
  std::istream& in;
  std::ostream& out;

  bool json() const { return cfg.format == OutputFormat::json; }
  Graph load(const std::string& path) const {
    return path == "-" ? read_graph(in) : load_graph(path);
  }
  void emit(const Json& j) const { out << j.dump(2) << "\n"; }
};

// --------------------------------------------------------------- commands

int cmd_eq(Session& s, const std::string& file, const std::string& xs,
           const std::string& ys) {
  const Graph g = s.load(file);
  const Element x = parse_element(g, xs);
  const Element y = parse_element(g, ys);
  const WordProblem wp(g, s.cfg);
  const EqVerdict v = wp.decide(x, y);
  if (s.json()) {
    Json j{{"verdict", to_string(v.verdict)}};
    if (v.verdict == Verdict::equal) {
      j["common"] = format_element(g, v.common);
      j["lhs_trace"] = trace_json(g, v.lhs_trace);
      j["rhs_trace"] = trace_json(g, v.rhs_trace);
    } else if (v.verdict == Verdict::distinct) {
      j["certificate"] = certificate_json(g, *v.certificate);
    } else {
      j["reason"] = v.reason;
    }
    s.emit(j);
  } else {
    s.out << to_string(v.verdict) << "\n";
    if (v.verdict == Verdict::equal) {
      s.out << "common reduct: " << format_element(g, v.common) << "\n"
            << "lhs: " << trace_text(g, v.lhs_trace) << "\n"
            << "rhs: " << trace_text(g, v.rhs_trace) << "\n";
    } else if (v.verdict == Verdict::distinct) {
      s.out << "certificate: " << describe(g, *v.certificate) << "\n";
    } else {
      s.out << "reason: " << v.reason << "\n";
    }
  }
  switch (v.verdict) {
    case Verdict::equal: return kExitOk;
    case Verdict::distinct: return kExitNegative;
    case Verdict::unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

int cmd_nf(Session& s, const std::string& file, const std::string& xs) {
  const Graph g = s.load(file);
  const Element x = parse_element(g, xs);
  const Element nf = normal_form(g, x);
  if (s.json())
    s.emit({{"element", format_element(g, x)}, {"normal_form", format_element(g, nf)}});
  else
    s.out << format_element(g, nf) << "\n";
  return kExitOk;
}

int cmd_saturate(Session& s, const std::string& file, const std::string& list) {
  const Graph g = s.load(file);
  const VertexSet in = parse_vertex_list(g, list);
  const VertexSet sat = saturate(g, in);
  if (s.json())
    s.emit({{"input", set_json(g, in)}, {"saturated", set_json(g, sat)}});
  else
    s.out << g.format_set(sat) << "\n";
  return kExitOk;
}

int cmd_lattice(Session& s, const std::string& file) {
  const Graph g = s.load(file);
  const LatticeReport r = enumerate_hsat(g, s.cfg.lattice_cap);
  if (s.json()) {
    Json sets = Json::array();
    for (const auto& h : r.sets) sets.push_back(set_json(g, h));
    Json hasse = Json::array();
    for (auto [i, j] : r.hasse) hasse.push_back({i, j});
    s.emit({{"sets", sets}, {"hasse", hasse}, {"join", r.join}, {"meet", r.meet}});
  } else {
    s.out << r.sets.size() << " saturated hereditary sets\n";
    for (std::size_t i = 0; i < r.sets.size(); ++i)
      s.out << "  [" << i << "] " << g.format_set(r.sets[i]) << "\n";
    s.out << "covering pairs:";
    for (auto [i, j] : r.hasse) s.out << " " << i << "<" << j;
    s.out << "\n";
  }
  return kExitOk;
}

int cmd_series(Session& s, const std::string& file, const std::string& validate,
               bool has_validate) {
  const Graph g = s.load(file);
  if (has_validate) {
    std::string why;
    const bool ok = validate_series(g, parse_chain(g, validate), &why);
    if (s.json()) {
      Json j{{"valid", ok}};
      if (!ok) j["reason"] = why;
      s.emit(j);
    } else {
      s.out << (ok ? "valid" : "invalid: " + why) << "\n";
    }
    return ok ? kExitOk : kExitNegative;
  }
  const CompositionSeries cs = composition_series(g, s.cfg.lattice_cap);
  if (s.json()) {
    Json chain = Json::array();
    for (const auto& h : cs.chain) chain.push_back(set_json(g, h));
    Json steps = Json::array();
    for (const auto& st : cs.steps) {
      Json step{{"set", set_json(g, st.set)}, {"quotient", graph_to_json(st.quotient)}};
      step.update(class_json(st.quotient, st.kind));
      steps.push_back(step);
    }
    s.emit({{"chain", chain}, {"steps", steps}});
  } else {
    for (std::size_t i = 0; i < cs.steps.size(); ++i) {
      const auto& st = cs.steps[i];
      s.out << g.format_set(cs.chain[i]) << " < " << g.format_set(st.set) << ": "
            << class_text(st.quotient, st.kind) << "\n";
    }
  }
  return kExitOk;
}

int cmd_graph_op(Session& s, const std::string& file, const std::string& ideal,
                 bool quotient) {
  const Graph g = s.load(file);
  const VertexSet h = parse_vertex_list(g, ideal);
  const Graph r = quotient ? quotient_graph(g, h) : restriction_graph(g, h);
  if (s.json())
    s.emit(graph_to_json(r));
  else
    s.out << format_graph(r);
  return kExitOk;
}

int cmd_classify(Session& s, const std::string& file) {
  const Graph g = s.load(file);
  const SimpleClass c = classify_simple(g);
  if (s.json())
    s.emit(class_json(g, c));
  else
    s.out << class_text(g, c) << "\n";
  return kExitOk;
}

int cmd_k0(Session& s, const std::string& file) {
  const Graph g = s.load(file);
  const GroupPresentation p = grothendieck_group(g);
  if (s.json()) {
    Json torsion = Json::array();
    for (const Integer& d : p.torsion()) torsion.push_back(integer_json(d));
    Json images = Json::object();
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      images[g.name(v)] = group_json(p.image(Element::unit(g.vertex_count(), v)));
    s.emit({{"free_rank", p.free_rank()}, {"torsion", torsion}, {"images", images}});
  } else {
    s.out << "free rank: " << p.free_rank() << "\n"
          << "torsion: " << torsion_text(p) << "\n"
          << "images:\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      s.out << "  " << g.name(v) << " -> "
            << p.format(p.image(Element::unit(g.vertex_count(), v))) << "\n";
  }
  return kExitOk;
}

int cmd_image(Session& s, const std::string& file, const std::string& xs) {
  const Graph g = s.load(file);
  const Element x = parse_element(g, xs);
  const GroupPresentation p = grothendieck_group(g);
  const GroupElement img = p.image(x);
  if (s.json())
    s.emit({{"element", format_element(g, x)}, {"image", group_json(img)}});
  else
    s.out << p.format(img) << "\n";
  return kExitOk;
}

int cmd_filtration(Session& s, const std::string& file, std::size_t level) {
  const Graph g = s.load(file);
  const FiltrationShape f = matricial_filtration(g, level);
  if (s.json()) {
    Json blocks = Json::array();
    for (const auto& b : f.blocks) {
      Json j{{"vertex", g.name(b.vertex)}, {"size", integer_json(b.size)}, {"stage", b.stage}};
      if (b.degenerate()) j["degenerate"] = true;
      blocks.push_back(j);
    }
    Json transitions = Json::array();
    for (const auto& t : f.transitions)
      transitions.push_back({{"from", g.name(t.from)}, {"to", g.name(t.to)},
                             {"multiplicity", t.multiplicity}});
    s.emit({{"level", f.level}, {"blocks", blocks}, {"transitions", transitions}});
  } else {
    s.out << "level " << f.level << "\n";
    for (const auto& b : f.blocks)
      s.out << "  stage " << b.stage << " " << g.name(b.vertex) << ": " << b.size
            << (b.degenerate() ? " (degenerate)" : "") << "\n";
    for (const auto& t : f.transitions)
      s.out << "  " << g.name(t.from) << " -> " << g.name(t.to) << " x"
            << t.multiplicity << "\n";
  }
  return kExitOk;
}

Json report_json(const Graph& g, const PropertyReport& r) {
  Json j{{"property", r.name},
         {"verdict", to_string(r.verdict)},
         {"size_bound", r.size_bound},
         {"depth", r.depth},
         {"checked", r.checked},
         {"undecided", r.undecided}};
  if (r.n_bound) j["n_bound"] = r.n_bound;
  if (!r.payload.empty()) {
    Json payload = Json::object();
    for (const auto& [name, e] : r.payload) payload[name] = format_element(g, e);
    if (r.multiplier) payload["n"] = r.multiplier;
    j["counterexample"] = payload;
    j["detail"] = r.detail;
  }
  return j;
}

int cmd_check(Session& s, const std::string& file, const std::string& props) {
  const Graph g = s.load(file);
  const WordProblem wp(g, s.cfg);
  std::vector<PropertyReport> reports;
  std::vector<Element> primes;
  bool want_primes = false;
  for (const std::string& p : split_list(props)) {
    if (p == "separativity")
      reports.push_back(check_separativity(wp, s.cfg.size_bound, s.cfg.n_bound));
    else if (p == "unperforation")
      reports.push_back(check_unperforation(wp, s.cfg.size_bound, s.cfg.n_bound));
    else if (p == "refinement")
      reports.push_back(check_refinement(wp, s.cfg.size_bound));
    else if (p == "primes") {
      want_primes = true;
      primes = primes_up_to(wp, s.cfg.size_bound);
    } else
      throw ParseError("unknown property '" + p + "'");
  }
  int code = kExitOk;
  for (const auto& r : reports) {
    if (r.verdict == PropertyVerdict::counterexample) code = kExitNegative;
    if (r.verdict == PropertyVerdict::unknown && code == kExitOk) code = kExitUnknown;
  }
  if (s.json()) {
    Json j = Json::object();
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(report_json(g, r));
    j["reports"] = arr;
    if (want_primes) {
      Json p = Json::array();
      for (const Element& e : primes) p.push_back(format_element(g, e));
      j["primes"] = p;
    }
    s.emit(j);
  } else {
    for (const auto& r : reports) {
      s.out << r.name << ": " << to_string(r.verdict) << " (size <= " << r.size_bound;
      if (r.n_bound) s.out << ", n <= " << r.n_bound;
      s.out << ", depth " << r.depth << ", " << r.checked << " checked, "
            << r.undecided << " undecided)\n";
      if (!r.payload.empty()) {
        s.out << "  " << r.detail << ":";
        for (const auto& [name, e] : r.payload)
          s.out << " " << name << " = " << format_element(g, e) << ";";
        if (r.multiplier) s.out << " n = " << r.multiplier;
        s.out << "\n";
      }
    }
    if (want_primes) {
      s.out << "primes (size <= " << s.cfg.size_bound << "):";
      for (const Element& e : primes) s.out << " " << format_element(g, e) << ";";
      s.out << "\n";
    }
  }
  return code;
}

int cmd_refine(Session& s, const std::string& file,
               const std::vector<std::string>& literals) {
  const Graph g = s.load(file);
  std::vector<Element> e;
  for (const auto& lit : literals) e.push_back(parse_element(g, lit));
  const WordProblem wp(g, s.cfg);
  if (wp.compare(e[0] + e[1], e[2] + e[3]) == Verdict::distinct) {
    if (s.json())
      s.emit({{"verdict", "Distinct"}});
    else
      s.out << "Distinct: a1 + a2 and b1 + b2 are not equivalent\n";
    return kExitNegative;
  }
  const Refinement r = refine(wp, e[0], e[1], e[2], e[3]);
  if (r.verdict != Verdict::equal) {
    if (s.json())
      s.emit({{"verdict", "Unknown"}, {"reason", r.reason}});
    else
      s.out << "Unknown: " << r.reason << "\n";
    return kExitUnknown;
  }
  const bool verified = verify_refinement(wp, e[0], e[1], e[2], e[3], r);
  auto f = [&](int i, int j) { return format_element(g, r.gamma[i][j]); };
  if (s.json()) {
    s.emit({{"verdict", "Equal"},
            {"gamma", {{f(0, 0), f(0, 1)}, {f(1, 0), f(1, 1)}}},
            {"verified", verified}});
  } else {
    s.out << "[[" << f(0, 0) << ", " << f(0, 1) << "],\n [" << f(1, 0) << ", "
          << f(1, 1) << "]]\n"
          << (verified ? "row and column sums verified" : "verification undecided")
          << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Session s{Config{}, "text", in, out};
  CLI::App app{"Graph monoid toolkit: word problem, ideal lattice, K0.", "graphmon"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--depth", s.cfg.depth, "rewrite steps explored per side");
  app.add_option("--size-bound", s.cfg.size_bound, "largest element size in sweeps");
  app.add_option("--n-bound", s.cfg.n_bound, "largest multiplier in order checks");
  app.add_option("--lattice-cap", s.cfg.lattice_cap, "max vertices for subset enumeration");
  app.add_option("--reduct-cap", s.cfg.reduct_cap, "max elements held by one search");
  app.add_option("--format", s.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string file, x, y, list, ideal, validate, props = "separativity,unperforation";
  std::size_t level = 0;
  std::vector<std::string> literals;
  std::function<int()> action;

  auto* eq = app.add_subcommand("eq", "decide x ~ y");
  eq->add_option("FILE", file)->required();
  eq->add_option("X", x)->required();
  eq->add_option("Y", y)->required();
  eq->callback([&] { action = [&] { return cmd_eq(s, file, x, y); }; });

  auto* nf = app.add_subcommand("nf", "normal form on an acyclic graph");
  nf->add_option("FILE", file)->required();
  nf->add_option("X", x)->required();
  nf->callback([&] { action = [&] { return cmd_nf(s, file, x); }; });

  auto* sat = app.add_subcommand("saturate", "saturation of a hereditary set");
  sat->add_option("FILE", file)->required();
  sat->add_option("VERTICES", list)->required();
  sat->callback([&] { action = [&] { return cmd_saturate(s, file, list); }; });

  auto* lat = app.add_subcommand("lattice", "saturated hereditary subsets");
  lat->add_option("FILE", file)->required();
  lat->callback([&] { action = [&] { return cmd_lattice(s, file); }; });

  auto* ser = app.add_subcommand("series", "composition series");
  ser->add_option("FILE", file)->required();
  auto* val = ser->add_option("--validate", validate, "chain H1;H2;... to check");
  ser->callback([&] {
    action = [&, val] { return cmd_series(s, file, validate, val->count() > 0); };
  });

  auto* quo = app.add_subcommand("quotient", "quotient graph by a saturated hereditary set");
  quo->add_option("FILE", file)->required();
  quo->add_option("--ideal", ideal)->required();
  quo->callback([&] { action = [&] { return cmd_graph_op(s, file, ideal, true); }; });

  auto* res = app.add_subcommand("restrict", "restriction to a saturated hereditary set");
  res->add_option("FILE", file)->required();
  res->add_option("--ideal", ideal)->required();
  res->callback([&] { action = [&] { return cmd_graph_op(s, file, ideal, false); }; });

  auto* cls = app.add_subcommand("classify", "class of a cofinal graph");
  cls->add_option("FILE", file)->required();
  cls->callback([&] { action = [&] { return cmd_classify(s, file); }; });

  auto* k0 = app.add_subcommand("k0", "Grothendieck group");
  k0->add_option("FILE", file)->required();
  k0->callback([&] { action = [&] { return cmd_k0(s, file); }; });

  auto* img = app.add_subcommand("image", "image of an element in K0");
  img->add_option("FILE", file)->required();
  img->add_option("X", x)->required();
  img->callback([&] { action = [&] { return cmd_image(s, file, x); }; });

  auto* fil = app.add_subcommand("filtration", "path-count block sizes");
  fil->add_option("FILE", file)->required();
  fil->add_option("--level", level)->required();
  fil->callback([&] { action = [&] { return cmd_filtration(s, file, level); }; });

  auto* chk = app.add_subcommand("check", "bounded property sweeps");
  chk->add_option("FILE", file)->required();
  chk->add_option("--props", props,
                  "comma list of separativity, unperforation, refinement, primes");
  chk->callback([&] { action = [&] { return cmd_check(s, file, props); }; });

  auto* ref = app.add_subcommand("refine", "refinement matrix for a1 + a2 ~ b1 + b2");
  ref->add_option("FILE", file)->required();
  ref->add_option("ELEMENTS", literals, "A1 A2 B1 B2")->required()->expected(4);
  ref->callback([&] { action = [&] { return cmd_refine(s, file, literals); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    s.cfg.format = s.format == "json" ? OutputFormat::json : OutputFormat::text;
    s.cfg.validate();
    return action();
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace graphmon
