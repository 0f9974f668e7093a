#include "hamsym/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hamsym/autgroup.hpp"
#include "hamsym/census.hpp"
#include "hamsym/constructors.hpp"
#include "hamsym/error.hpp"
#include "hamsym/graph_io.hpp"
#include "hamsym/hamilton.hpp"

namespace hamsym {

namespace {

using nlohmann::json;

class FamilyParser {
 public:
  explicit FamilyParser(std::string_view s) : s_(s) {}

  ParsedFamily parse() {
    auto f = family();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, "column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string word() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-')) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  int integer() {
    skip_space();
    std::size_t start = pos_;
    bool neg = pos_ < s_.size() && s_[pos_] == '-';
    if (neg) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    if (pos_ - digits > 6) {
      pos_ = start;
      fail("integer too large");
    }
    int v = std::stoi(std::string(s_.substr(digits, pos_ - digits)));
    return neg ? -v : v;
  }

  // Runs a constructor, reporting its errors at the start of the expression.
  template <class F>
  auto build(std::size_t at, F f) {
    try {
      return f();
    } catch (const Error& e) {
      pos_ = at;
      fail(e.what());
    }
  }

  ParsedFamily family() {
    skip_space();
    std::size_t at = pos_;
    if (accept('(')) {
      auto f = family();
      expect(')');
      return f;
    }
    std::string w = word();
    if (w.empty()) fail("expected a family name");
    ParsedFamily out;
    if (w == "cycle") {
      int n = integer();
      out.graph = build(at, [&] { return cycle_graph(n); });
    } else if (w == "complete") {
      int n = integer();
      out.graph = build(at, [&] { return complete_graph(n); });
    } else if (w == "bipartite") {
      int m = integer();
      int mp = integer();
      out.graph = build(at, [&] { return complete_bipartite(m, mp); });
    } else if (w == "prism") {
      int k = integer();
      out.graph = build(at, [&] { return prism(k).graph; });
    } else if (w == "product") {
      auto a = family();
      auto b = family();
      out.graph = build(at, [&] { return cartesian_product(a.graph, b.graph).graph; });
    } else if (w == "trunc") {
      auto a = family();
      out.graph = build(at, [&] { return truncation(a.graph); });
    } else if (w == "gadget") {
      int d = integer();
      int n = integer();
      out.graph = build(at, [&] { return regular_gadget(d, n); });
    } else if (w == "comp-cycle") {
      int n = integer();
      out.graph = build(at, [&] { return complement_of_cycle(n); });
    } else if (w == "cayley") {
      out = cayley(at);
    } else {
      pos_ = at;
      fail("unknown family '" + w + "'");
    }
    return out;
  }

  ParsedFamily cayley(std::size_t at) {
    std::vector<int> moduli;
    do {
      skip_space();
      if (!accept('Z')) fail("expected 'Z<modulus>'");
      moduli.push_back(integer());
      skip_space();
    } while (accept('x'));
    skip_space();
    if (s_.substr(pos_, 5) != "gens=") fail("expected 'gens='");
    pos_ += 5;
    AbelianGroup gamma = build(at, [&] { return AbelianGroup::from_moduli(moduli); });
    std::vector<GroupElem> gens;
    do {
      std::size_t el_at = pos_;
      GroupElem x;
      if (accept('(')) {
        do x.residues.push_back(integer());
        while (accept(','));
        expect(')');
      } else {
        x.residues.push_back(integer());
      }
      if (static_cast<int>(x.residues.size()) != gamma.rank()) {
        pos_ = el_at;
        fail("element has " + std::to_string(x.residues.size()) + " coordinates, group has rank " +
             std::to_string(gamma.rank()));
      }
      for (std::size_t i = 0; i < x.residues.size(); ++i) {
        int m = gamma.factors()[i];
        x.residues[i] = ((x.residues[i] % m) + m) % m;
      }
      gens.push_back(std::move(x));
    } while (accept(','));
    ParsedFamily out;
    auto s = build(at, [&] { return GeneratingSet::closed_under_inverses(gamma, gens); });
    out.graph = build(at, [&] { return cayley_graph(gamma, s); });
    out.cayley = CayleyHint{gamma, s};
    return out;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string big(const BigInt& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string hex(const std::string& bytes) {
  static const char* d = "0123456789abcdef";
  std::string s;
  for (unsigned char c : bytes) {
    s += d[c >> 4];
    s += d[c & 15];
  }
  return s;
}

std::size_t default_cap() {
  if (const char* env = std::getenv("HAMSYM_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultCycleCap;
}

struct InputOpts {
  std::string family;
  std::string graph6;
  std::string json_file;
};

struct Common {
  bool json = false;
  std::size_t cap = 0;
  double budget = 0;
  std::uint64_t seed = 0x5eed;
};

struct Loaded {
  Graph graph;
  std::optional<CayleyHint> cayley;
  std::string source;
};

Loaded load(const InputOpts& in_opts, std::istream& in) {
  int given = !in_opts.family.empty() + !in_opts.graph6.empty() + !in_opts.json_file.empty();
  if (given != 1) throw CLI::ValidationError("input", "give exactly one of --family, --graph6, --json-file");
  Loaded l;
  if (!in_opts.family.empty()) {
    auto f = parse_family(in_opts.family);
    l.graph = f.graph;
    l.cayley = f.cayley;
    l.source = in_opts.family;
  } else if (!in_opts.graph6.empty()) {
    std::string text = in_opts.graph6;
    if (text == "-") {
      std::getline(in, text);
    }
    l.graph = graph6_decode(text);
    l.source = "graph6";
  } else {
    std::ifstream f(in_opts.json_file);
    if (!f) throw Error(ErrorCode::ParseError, "cannot open " + in_opts.json_file);
    json j;
    try {
      j = json::parse(f);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    l.graph = graph_from_json(j);
    l.source = in_opts.json_file;
  }
  return l;
}

json header(const Common& c, const Loaded* l) {
  json j;
  j["tool"] = "hamsym";
  j["version"] = kToolVersion;
  j["caps"] = {{"cycle_cap", c.cap}, {"max_vertices", kMaxVertices}, {"budget_seconds", c.budget},
               {"count_dp_max_order", kCountDpMaxOrder}};
  if (l) {
    j["graph"] = {{"source", l->source}, {"n", l->graph.order()}, {"m", l->graph.size()},
                  {"graph6", graph6_encode(l->graph)}};
  }
  return j;
}

void text_header(std::ostream& out, const Common& c, const Loaded* l) {
  out << "hamsym " << kToolVersion << " (cap " << c.cap << ", max vertices " << kMaxVertices;
  if (c.budget > 0) out << ", budget " << c.budget << "s";
  out << ")\n";
  if (l) out << "graph: " << l->source << ", n=" << l->graph.order() << ", m=" << l->graph.size() << "\n";
}

json cycle_json(const HamCycle& c) { return c.seq; }

std::string cycle_text(const HamCycle& c) {
  std::string s;
  for (int v : c.seq) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

HamOptions ham_options(const Common& c) {
  HamOptions o;
  o.cap = c.cap;
  o.budget_seconds = c.budget;
  o.seed = c.seed;
  return o;
}

json transitivity_json(const ClassReport& r) {
  json j;
  j["transitive"] = r.transitive();
  j["class_count"] = r.class_count;
  j["class_count_lower_bound"] = r.lower_bound;
  j["method"] = class_method_name(r.method);
  j["total_cycles"] = big(r.total_cycles);
  j["total_exact"] = r.total_exact;
  j["aut_order"] = big(r.aut_order);
  return j;
}

json factor_json(const Factorization& f) {
  json j;
  j["prime"] = f.is_prime();
  j["factor_count"] = f.factor_count();
  json fs = json::array();
  for (const auto& pf : f.prime_factors) {
    auto tag = catalogue_name(pf.graph);
    if (tag.empty() && pf.graph.order() == 2) tag = "K2";
    fs.push_back({{"cert", hex(pf.cert)},
                  {"tag", tag},
                  {"order", pf.graph.order()},
                  {"size", pf.graph.size()},
                  {"multiplicity", pf.multiplicity},
                  {"graph6", graph6_encode(pf.graph)}});
  }
  j["factors"] = fs;
  j["certificate"] = f.certificate.images();
  return j;
}

std::string factor_text(const Factorization& f) {
  std::string s;
  for (const auto& pf : f.prime_factors) {
    auto tag = catalogue_name(pf.graph);
    if (tag.empty()) tag = pf.graph.order() == 2 ? "K2" : graph6_encode(pf.graph);
    if (!s.empty()) s += " x ";
    s += tag;
    if (pf.multiplicity > 1) s += "^" + std::to_string(pf.multiplicity);
  }
  return s.empty() ? "K1" : s;
}

json prediction_json(const Prediction& p) {
  return {{"verdict", verdict_name(p.verdict)}, {"theorem", p.theorem}, {"detail", p.detail}};
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

void add_input(CLI::App* sub, InputOpts& in) {
  sub->add_option("--family", in.family, "family expression");
  sub->add_option("--graph6", in.graph6, "graph6 string, or - for stdin");
  sub->add_option("--json-file", in.json_file, "graph JSON file");
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_flag("--json", c.json, "machine-readable output");
  sub->add_option("--cap", c.cap, "cycle enumeration cap (default HAMSYM_CAP or 1000000)")->check(CLI::PositiveNumber);
  sub->add_option("--budget", c.budget, "time budget in seconds for the transitivity check")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--seed", c.seed, "seed for randomized witness search");
}

const std::vector<std::string> kTasks = {"transitivity", "classes", "kappa", "factorize",
                                         "predict", "autgroup", "edge-orbits"};

}  // namespace

ParsedFamily parse_family(std::string_view text) { return FamilyParser(text).parse(); }

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hamiltonian cycles up to symmetry", "hamsym"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  Common common;
  common.cap = default_cap();
  InputOpts input;

  auto* construct = app.add_subcommand("construct", "build a family graph");
  std::string format = "graph6";
  construct->add_option("--family", input.family, "family expression")->required();
  construct->add_option("--format", format, "graph6 | json | edges")
      ->check(CLI::IsMember({"graph6", "json", "edges"}));

  auto* analyze = app.add_subcommand("analyze", "run several analyses on one graph");
  std::string tasks_text = "transitivity";
  add_input(analyze, input);
  add_common(analyze, common);
  analyze->add_option("--tasks", tasks_text, "comma-separated subset of " + [] {
    std::string s;
    for (const auto& t : kTasks) s += (s.empty() ? "" : ",") + t;
    return s;
  }());

  auto* classes = app.add_subcommand("classes", "Hamiltonian cycles up to automorphism");
  add_input(classes, input);
  add_common(classes, common);

  auto* kappa = app.add_subcommand("kappa", "Hamilton compression of the graph");
  add_input(kappa, input);
  add_common(kappa, common);

  auto* witness = app.add_subcommand("witness", "transitivity check with witness cycles");
  add_input(witness, input);
  add_common(witness, common);

  auto* factorize = app.add_subcommand("factorize", "Cartesian prime factorization");
  add_input(factorize, input);
  add_common(factorize, common);

  auto* predict = app.add_subcommand("predict", "theorem-based membership prediction");
  add_input(predict, input);
  add_common(predict, common);

  auto* census = app.add_subcommand("census", "abelian Cayley graph census");
  CensusOptions copts;
  census->add_option("--max-order", copts.max_order, "largest group order")->required()->check(CLI::Range(3, 64));
  census->add_flag("--order-27", copts.order_27, "also run the groups of order 27");
  census->add_option("--jobs", copts.jobs, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  census->add_option("--out", copts.out_dir, "directory for per-order JSON-lines files");
  census->add_option("--graph-budget", copts.graph_budget_seconds, "seconds per graph (order 27 defaults to 60)")
      ->check(CLI::NonNegativeNumber);
  census->add_option("--total-budget", copts.total_budget_seconds, "seconds for the whole run")
      ->check(CLI::NonNegativeNumber);
  census->add_flag("--json", common.json, "machine-readable output");
  census->add_option("--cap", common.cap, "cycle enumeration cap")->check(CLI::PositiveNumber);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct) {
      auto g = parse_family(input.family).graph;
      if (format == "graph6") {
        out << graph6_encode(g) << '\n';
      } else if (format == "json") {
        emit(out, graph_to_json(g));
      } else {
        out << g.order() << ' ' << g.size() << '\n';
        for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
      }
      return kExitOk;
    }

    if (*census) {
      copts.cap = common.cap;
      auto report = run_census(copts);
      if (common.json) {
        json j = header(common, nullptr);
        j["census"] = report_to_json(report);
        emit(out, j);
      } else {
        text_header(out, common, nullptr);
        out << summary_table(report);
        for (const auto* r : report.inconclusive())
          out << "inconclusive: order " << r->order << " " << r->graph6 << " (" << r->note << ")\n";
      }
      if (report.partial) return kExitInconclusive;
      return report.inconclusive().empty() ? kExitOk : kExitInconclusive;
    }

    Loaded l = load(input, in);
    const Graph& g = l.graph;
    json j = header(common, &l);
    std::ostringstream text;
    int code = kExitOk;

    std::vector<std::string> tasks;
    if (*analyze) {
      std::stringstream ss(tasks_text);
      std::string t;
      while (std::getline(ss, t, ',')) {
        if (std::find(kTasks.begin(), kTasks.end(), t) == kTasks.end())
          throw CLI::ValidationError("--tasks", "unknown task '" + t + "'");
        tasks.push_back(t);
      }
      if (tasks.empty()) throw CLI::ValidationError("--tasks", "at least one task");
    } else if (*classes) {
      tasks = {"classes"};
    } else if (*kappa) {
      tasks = {"kappa"};
    } else if (*witness) {
      tasks = {"witness"};
    } else if (*factorize) {
      tasks = {"factorize"};
    } else if (*predict) {
      tasks = {"predict"};
    }

    for (const auto& t : tasks) {
      if (t == "transitivity" || t == "witness") {
        auto r = is_ham_transitive(g, ham_options(common));
        auto tj = transitivity_json(r);
        json reps = json::array();
        for (const auto& c : r.representatives) reps.push_back(cycle_json(c));
        tj["representatives"] = reps;
        j[t] = tj;
        text << "transitive: " << (r.transitive() ? "yes" : "no") << " (" << class_method_name(r.method) << ")\n"
             << "classes: " << r.class_count << (r.lower_bound ? "+" : "") << "\n"
             << "cycles: " << big(r.total_cycles) << (r.total_exact ? "" : "+") << ", |Aut| = " << big(r.aut_order)
             << "\n";
        if (t == "witness") {
          for (std::size_t i = 0; i < r.representatives.size(); ++i)
            text << "cycle " << i << ": " << cycle_text(r.representatives[i]) << "\n";
        }
      } else if (t == "classes") {
        auto r = orbit_classes(g, common.cap);
        auto cj = transitivity_json(r);
        json reps = json::array();
        for (const auto& c : r.representatives) reps.push_back(cycle_json(c));
        cj["representatives"] = reps;
        j["classes"] = cj;
        text << "classes: " << r.class_count << (r.lower_bound ? " (lower bound, cap hit)" : "") << "\n"
             << "cycles: " << big(r.total_cycles) << (r.total_exact ? "" : "+") << "\n";
        for (const auto& c : r.representatives) text << "  " << cycle_text(c) << "\n";
        if (r.lower_bound) code = kExitInconclusive;
      } else if (t == "kappa") {
        auto k = kappa_of_graph(g, common.cap);
        j["kappa"] = {{"value", k.value}, {"lower_bound", k.lower_bound}};
        text << "kappa: " << k.value << (k.lower_bound ? " (lower bound, cap hit)" : "") << "\n";
        if (k.lower_bound) code = kExitInconclusive;
      } else if (t == "factorize") {
        auto f = prime_factorization(g);
        j["factorize"] = factor_json(f);
        text << "factors: " << factor_text(f) << (f.is_prime() ? " (prime)" : "") << "\n";
      } else if (t == "predict") {
        auto p = classify_by_theorems(g, l.cayley);
        j["predict"] = prediction_json(p);
        text << "prediction: " << verdict_name(p.verdict);
        if (!p.theorem.empty()) text << " [" << p.theorem << "]";
        if (!p.detail.empty()) text << " " << p.detail;
        text << "\n";
      } else if (t == "autgroup") {
        auto aut = automorphisms(g);
        json gens = json::array();
        for (const auto& p : aut.generators()) gens.push_back(p.images());
        j["autgroup"] = {{"order", big(aut.order())}, {"generators", gens}};
        text << "|Aut| = " << big(aut.order()) << " (" << aut.generators().size() << " generators)\n";
      } else if (t == "edge-orbits") {
        auto orbits = edge_orbits(g);
        json oj = json::array();
        text << "edge orbits: " << orbits.size() << "\n";
        for (const auto& orb : orbits) {
          auto ell = shortest_cycle_through_edge(g, orb[0]);
          json es = json::array();
          for (const auto& e : orb) es.push_back({e.u, e.v});
          oj.push_back({{"size", orb.size()}, {"ell", ell ? json(*ell) : json(nullptr)}, {"edges", es}});
          text << "  size " << orb.size() << ", l = " << (ell ? std::to_string(*ell) : "inf") << ", first {"
               << orb[0].u << "," << orb[0].v << "}\n";
        }
        j["edge_orbits"] = oj;
      }
    }

    if (common.json) {
      emit(out, j);
    } else {
      text_header(out, common, &l);
      out << text.str();
    }
    return code;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::Inconclusive || e.code() == ErrorCode::BudgetExceeded) return kExitInconclusive;
    if (e.code() == ErrorCode::ParseError) return kExitUsage;
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace hamsym
