#include "hamsym/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "hamsym/autgroup.hpp"
#include "hamsym/constructors.hpp"
#include "hamsym/error.hpp"
#include "hamsym/graph_io.hpp"
#include "hamsym/hamilton.hpp"

namespace hamsym {

namespace {

void chains(int rem, int prev, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (rem == 1) {
    out.push_back(cur);
    return;
  }
  for (int d = prev == 1 ? 2 : prev; d <= rem; d += prev) {
    if (rem % d) continue;
    int rest = rem / d;
    if (rest != 1 && rest % d) continue;
    cur.push_back(d);
    chains(rest, d, cur, out);
    cur.pop_back();
  }
}

std::string to_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    s += digits[c >> 4];
    s += digits[c & 15];
  }
  return s;
}

std::string to_string(const BigInt& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

struct Task {
  std::vector<int> group;
  std::vector<int> gens;    // element indices
  std::string cert;
};

// Runs fn(i) for i in [0, count) on `jobs` threads. Stops handing out work
// once stop() is true.
template <class Fn, class Stop>
void parallel_for(std::size_t count, int jobs, Fn fn, Stop stop) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      if (stop()) return;
      std::size_t i = next++;
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  int t = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  std::vector<std::thread> threads;
  for (int i = 1; i < t; ++i) threads.emplace_back(worker);
  worker();
  for (auto& th : threads) th.join();
  if (failure) std::rethrow_exception(failure);
}

std::string order_file(const std::string& dir, int n) {
  std::ostringstream os;
  os << dir << "/order-" << (n < 10 ? "0" : "") << n << ".jsonl";
  return os.str();
}

std::map<std::string, CensusRecord> load_order(const std::string& dir, int n) {
  std::map<std::string, CensusRecord> out;
  if (dir.empty()) return out;
  std::ifstream in(order_file(dir, n));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      auto r = record_from_json(nlohmann::json::parse(line));
      if (r.verdict != "Inconclusive") out[r.cert] = r;
    } catch (const std::exception&) {
      // A torn last line from an interrupted run; reclassify that graph.
    }
  }
  return out;
}

CensusRecord classify(const Graph& g, const AbelianGroup& gamma, const GeneratingSet& s,
                      const CensusOptions& opts, double budget) {
  CensusRecord r;
  r.order = g.order();
  r.graph6 = graph6_encode(g);
  r.family = family_tag(g);
  r.prediction = classify_by_theorems(g, CayleyHint{gamma, s});
  HamOptions ho;
  ho.cap = opts.cap;
  ho.budget_seconds = budget;
  try {
    auto rep = is_ham_transitive(g, ho);
    r.verdict = rep.transitive() ? "InH" : "NotInH";
    r.class_count = rep.class_count;
    r.class_count_lower_bound = rep.lower_bound;
    r.method = class_method_name(rep.method);
    r.total_cycles = to_string(rep.total_cycles);
    r.total_exact = rep.total_exact;
    r.aut_order = to_string(rep.aut_order);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Inconclusive && e.code() != ErrorCode::BudgetExceeded) throw;
    r.verdict = "Inconclusive";
    r.note = e.what();
    return r;
  }
  try {
    auto k = kappa_of_graph(g, r.verdict == "InH" ? opts.cap : opts.kappa_cap);
    r.kappa = k.value;
    r.kappa_lower_bound = k.lower_bound;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Inconclusive) throw;
    r.kappa_lower_bound = true;
  }
  return r;
}

}  // namespace

std::vector<std::vector<int>> enumerate_abelian_groups(int n) {
  if (n < 1) throw Error(ErrorCode::TooSmall, "group order must be positive");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (n == 1) return {{}};
  chains(n, 1, cur, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

void for_each_generating_set(const AbelianGroup& gamma, const std::function<bool(const GeneratingSet&)>& fn) {
  int n = gamma.order();
  std::vector<std::vector<int>> classes;
  for (int x = 1; x < n; ++x) {
    int y = gamma.neg_index(x);
    if (y < x) continue;
    classes.push_back(y == x ? std::vector<int>{x} : std::vector<int>{x, y});
  }
  if (classes.size() >= 31) throw Error(ErrorCode::TooLarge, "too many generator classes to enumerate");
  for (std::uint32_t m = 1; m < (1u << classes.size()); ++m) {
    std::vector<int> idx;
    for (std::size_t i = 0; i < classes.size(); ++i)
      if ((m >> i) & 1u) idx.insert(idx.end(), classes[i].begin(), classes[i].end());
    if (static_cast<int>(gamma.subgroup(idx).size()) != n) continue;
    std::sort(idx.begin(), idx.end());
    std::vector<GroupElem> elems;
    for (int i : idx) elems.push_back(gamma.element(i));
    if (!fn(GeneratingSet(gamma, std::move(elems)))) return;
  }
}

std::vector<GeneratingSet> enumerate_generating_sets(const AbelianGroup& gamma) {
  std::vector<GeneratingSet> out;
  for_each_generating_set(gamma, [&](const GeneratingSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::string family_tag(const Graph& g) {
  auto name = catalogue_name(g);
  if (!name.empty()) return name;
  int n = g.order();
  if (n >= 6 && n % 2 == 0 && is_regular(g, 3) && is_connected(g) && is_isomorphic(g, prism(n / 2).graph))
    return "C" + std::to_string(n / 2) + "xK2";
  return "other";
}

nlohmann::json record_to_json(const CensusRecord& r) {
  nlohmann::json j;
  j["order"] = r.order;
  j["group"] = r.group;
  j["gens"] = r.gens;
  j["cert"] = r.cert;
  j["graph6"] = r.graph6;
  j["verdict"] = r.verdict;
  j["class_count"] = r.class_count;
  j["class_count_lower_bound"] = r.class_count_lower_bound;
  j["method"] = r.method;
  j["total_cycles"] = r.total_cycles;
  j["total_exact"] = r.total_exact;
  j["aut_order"] = r.aut_order;
  j["kappa"] = r.kappa;
  j["kappa_lower_bound"] = r.kappa_lower_bound;
  j["family"] = r.family;
  j["presentations"] = r.presentations;
  j["prediction"] = {{"verdict", verdict_name(r.prediction.verdict)},
                     {"theorem", r.prediction.theorem},
                     {"detail", r.prediction.detail}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

CensusRecord record_from_json(const nlohmann::json& j) {
  CensusRecord r;
  r.order = j.at("order");
  r.group = j.at("group").get<std::vector<int>>();
  r.gens = j.at("gens").get<std::vector<std::vector<int>>>();
  r.cert = j.at("cert");
  r.graph6 = j.at("graph6");
  r.verdict = j.at("verdict");
  r.class_count = j.at("class_count");
  r.class_count_lower_bound = j.at("class_count_lower_bound");
  r.method = j.at("method");
  r.total_cycles = j.at("total_cycles");
  r.total_exact = j.at("total_exact");
  r.aut_order = j.at("aut_order");
  r.kappa = j.at("kappa");
  r.kappa_lower_bound = j.at("kappa_lower_bound");
  r.family = j.at("family");
  r.presentations = j.at("presentations");
  const auto& p = j.at("prediction");
  std::string v = p.at("verdict");
  r.prediction.verdict = v == "InH" ? Verdict::InH : v == "NotInH" ? Verdict::NotInH : Verdict::Unknown;
  r.prediction.theorem = p.at("theorem");
  r.prediction.detail = p.at("detail");
  r.note = j.value("note", "");
  return r;
}

std::vector<const CensusRecord*> CensusReport::members() const {
  std::vector<const CensusRecord*> out;
  for (const auto& r : records)
    if (r.verdict == "InH") out.push_back(&r);
  return out;
}

std::vector<const CensusRecord*> CensusReport::inconclusive() const {
  std::vector<const CensusRecord*> out;
  for (const auto& r : records)
    if (r.verdict == "Inconclusive") out.push_back(&r);
  return out;
}

CensusReport run_census(const CensusOptions& opts) {
  if (opts.max_order < 3) throw Error(ErrorCode::TooSmall, "census needs max_order >= 3");
  int top = opts.order_27 ? std::max(opts.max_order, 27) : opts.max_order;
  if (top > kMaxVertices) throw Error(ErrorCode::TooLarge, "order exceeds the vertex cap");
  int jobs = opts.jobs > 0 ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
  auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  CensusReport report;
  report.max_order = opts.max_order;
  report.order_27 = opts.order_27;
  std::atomic<bool> out_of_time{false};
  auto stop = [&] {
    if (opts.total_budget_seconds > 0 && elapsed() > opts.total_budget_seconds) out_of_time = true;
    return out_of_time.load();
  };
  if (!opts.out_dir.empty()) std::filesystem::create_directories(opts.out_dir);

  std::vector<int> orders;
  for (int n = 3; n <= opts.max_order; ++n) orders.push_back(n);
  if (opts.order_27 && opts.max_order < 27) orders.push_back(27);

  for (int n : orders) {
    if (stop()) break;
    OrderStats& stats = report.per_order[n];
    std::vector<Task> tasks;
    for (const auto& factors : enumerate_abelian_groups(n)) {
      // The opt-in order-27 run covers the non-cyclic groups only.
      if (n == 27 && opts.max_order < 27 && factors.size() == 1) continue;
      ++stats.groups;
      AbelianGroup gamma(factors);
      for_each_generating_set(gamma, [&](const GeneratingSet& s) {
        tasks.push_back({factors, s.indices(), {}});
        return true;
      });
    }
    stats.generating_sets = static_cast<long>(tasks.size());

    parallel_for(
        tasks.size(), jobs,
        [&](std::size_t i) {
          AbelianGroup gamma(tasks[i].group);
          std::vector<GroupElem> elems;
          for (int x : tasks[i].gens) elems.push_back(gamma.element(x));
          tasks[i].cert = to_hex(canonical_form(cayley_graph(gamma, GeneratingSet(gamma, elems))).cert);
        },
        [] { return false; });

    // First presentation (in enumeration order) represents each cert.
    std::map<std::string, std::size_t> first;
    std::map<std::string, int> copies;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      first.try_emplace(tasks[i].cert, i);
      ++copies[tasks[i].cert];
    }
    std::vector<std::size_t> reps;
    for (const auto& [cert, i] : first) reps.push_back(i);
    stats.graphs = static_cast<int>(reps.size());

    auto cached = load_order(opts.out_dir, n);
    std::vector<std::optional<CensusRecord>> results(reps.size());
    std::mutex file_mutex;
    std::ofstream append;
    if (!opts.out_dir.empty()) append.open(order_file(opts.out_dir, n), std::ios::app);
    double budget = opts.graph_budget_seconds > 0 ? opts.graph_budget_seconds : (n == 27 ? 60.0 : 0.0);

    parallel_for(
        reps.size(), jobs,
        [&](std::size_t k) {
          const Task& t = tasks[reps[k]];
          AbelianGroup gamma(t.group);
          std::vector<GroupElem> elems;
          for (int x : t.gens) elems.push_back(gamma.element(x));
          GeneratingSet s(gamma, elems);
          CensusRecord r;
          if (auto it = cached.find(t.cert); it != cached.end()) {
            r = it->second;
          } else {
            r = classify(cayley_graph(gamma, s), gamma, s, opts, budget);
            r.cert = t.cert;
            r.group = t.group;
            for (const auto& e : elems) r.gens.push_back(e.residues);
            r.presentations = copies[t.cert];
            if (append.is_open()) {
              std::lock_guard<std::mutex> lock(file_mutex);
              append << record_to_json(r).dump() << '\n' << std::flush;
            }
          }
          r.presentations = copies[t.cert];
          results[k] = std::move(r);
        },
        stop);
    append.close();

    std::vector<CensusRecord> done;
    for (auto& r : results)
      if (r) done.push_back(std::move(*r));
    if (done.size() != reps.size()) report.partial = true;
    std::sort(done.begin(), done.end(), [](const auto& a, const auto& b) { return a.cert < b.cert; });
    for (const auto& r : done) {
      if (r.verdict == "InH") ++stats.members;
      if (r.verdict == "Inconclusive") ++stats.inconclusive;
    }
    if (!opts.out_dir.empty() && done.size() == reps.size()) {
      std::ofstream out(order_file(opts.out_dir, n), std::ios::trunc);
      for (const auto& r : done) out << record_to_json(r).dump() << '\n';
    }
    for (auto& r : done) report.records.push_back(std::move(r));
  }
  report.partial = report.partial || out_of_time;
  report.seconds = elapsed();
  return report;
}

nlohmann::json report_to_json(const CensusReport& r) {
  nlohmann::json j;
  j["max_order"] = r.max_order;
  j["order_27"] = r.order_27;
  j["partial"] = r.partial;
  nlohmann::json orders = nlohmann::json::array();
  for (const auto& [n, s] : r.per_order)
    orders.push_back({{"order", n},
                      {"groups", s.groups},
                      {"generating_sets", s.generating_sets},
                      {"graphs", s.graphs},
                      {"members", s.members},
                      {"inconclusive", s.inconclusive}});
  j["per_order"] = orders;
  nlohmann::json members = nlohmann::json::array();
  for (const auto* m : r.members())
    members.push_back({{"order", m->order}, {"family", m->family}, {"graph6", m->graph6}, {"kappa", m->kappa}});
  j["members"] = members;
  nlohmann::json inc = nlohmann::json::array();
  for (const auto* m : r.inconclusive()) inc.push_back({{"order", m->order}, {"graph6", m->graph6}, {"note", m->note}});
  j["inconclusive"] = inc;
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& rec : r.records) recs.push_back(record_to_json(rec));
  j["records"] = recs;
  return j;
}

std::string summary_table(const CensusReport& r) {
  std::ostringstream os;
  os << "order  groups  gensets  graphs  members  inconclusive  H-members\n";
  for (const auto& [n, s] : r.per_order) {
    std::vector<std::string> tags;
    for (const auto* m : r.members())
      if (m->order == n) tags.push_back(m->family);
    std::sort(tags.begin(), tags.end());
    std::string list;
    for (const auto& t : tags) list += (list.empty() ? "" : ", ") + t;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%5d  %6d  %7ld  %6d  %7d  %12d  ", n, s.groups, s.generating_sets, s.graphs,
                  s.members, s.inconclusive);
    os << buf << list << '\n';
  }
  if (r.partial) os << "partial: total budget exhausted\n";
  return os.str();
}

}  // namespace hamsym
