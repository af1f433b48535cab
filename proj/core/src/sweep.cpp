#include "h1forge/sweep.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "h1forge/catalog.hpp"

namespace h1f {

namespace {

using ordered_json = nlohmann::ordered_json;
namespace fs = std::filesystem;

// bump when row semantics change; part of every cache key
constexpr const char* kRowSchema = "h1forge-row-1";

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(uint64_t v) {
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", (unsigned long long)v);
  return buf;
}

const std::set<std::string>& class_tags() {
  static const std::set<std::string> tags = {"C1", "C2", "C3", "C4", "C5",
                                             "C6", "C7", "C8", "C9"};
  return tags;
}

}  // namespace

const char* solver_choice_name(SolverChoice s) {
  switch (s) {
    case SolverChoice::Auto:
      return "auto";
    case SolverChoice::Presentation:
      return "presentation";
    case SolverChoice::Table:
      return "table";
  }
  return "?";
}

SolverChoice solver_choice_from_name(const std::string& s) {
  if (s == "auto") return SolverChoice::Auto;
  if (s == "presentation") return SolverChoice::Presentation;
  if (s == "table") return SolverChoice::Table;
  throw BadInput("unknown solver choice: " + s);
}

SweepConfig parse_sweep_config(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("sweep config: ") + e.what());
  }
  SweepConfig c;
  try {
    if (!j.contains("n")) throw BadInput("sweep config: missing \"n\"");
    if (j["n"].is_number_unsigned()) {
      c.n_min = c.n_max = j["n"].get<uint32_t>();
    } else {
      c.n_min = j["n"].at("min").get<uint32_t>();
      c.n_max = j["n"].at("max").get<uint32_t>();
    }
    if (!j.contains("fields") || !j["fields"].is_array() ||
        j["fields"].empty()) {
      throw BadInput("sweep config: \"fields\" must be a nonempty array");
    }
    for (const auto& f : j["fields"]) {
      const uint64_t p = f.at("p").get<uint64_t>();
      const uint32_t m = f.value("m", uint32_t(1));
      if (!is_prime_u64(p)) {
        throw BadInput("sweep config: field characteristic " +
                       std::to_string(p) + " is not prime");
      }
      if (m == 0) throw BadInput("sweep config: field degree must be positive");
      c.fields.emplace_back(p, m);
    }
    if (!j.contains("classes") || !j["classes"].is_array() ||
        j["classes"].empty()) {
      throw BadInput("sweep config: \"classes\" must be a nonempty array");
    }
    for (const auto& t : j["classes"]) {
      std::string tag = t.get<std::string>();
      if (tag != "*" && !class_tags().count(tag)) {
        throw BadInput("sweep config: unknown class tag " + tag);
      }
      c.classes.push_back(std::move(tag));
    }
    c.solver = solver_choice_from_name(j.value("solver", std::string("auto")));
    c.enum_cap = j.value("enum_cap", kEnumCap);
    c.oracle_cap = j.value("oracle_cap", kOracleCap);
    c.output = j.value("output", std::string());
    c.parallelism = j.value("parallelism", uint32_t(0));
    c.spot_check = j.value("spot_check", true);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("sweep config: ") + e.what());
  }
  if (c.n_min == 0 || c.n_max < c.n_min) {
    throw BadInput("sweep config: empty dimension range");
  }
  if (c.enum_cap == 0 || c.enum_cap > kEnumCap) {
    throw BadInput("sweep config: enum_cap must be in [1, " +
                   std::to_string(kEnumCap) + "]");
  }
  if (c.oracle_cap == 0 || c.oracle_cap > kOracleCap) {
    throw BadInput("sweep config: oracle_cap must be in [1, " +
                   std::to_string(kOracleCap) + "]");
  }
  return c;
}

std::string show_sweep_config(const SweepConfig& c) {
  ordered_json j;
  j["n"] = ordered_json{{"min", c.n_min}, {"max", c.n_max}};
  j["fields"] = ordered_json::array();
  for (auto [p, m] : c.fields) {
    j["fields"].push_back(ordered_json{{"p", p}, {"m", m}});
  }
  j["classes"] = c.classes;
  j["solver"] = solver_choice_name(c.solver);
  j["enum_cap"] = c.enum_cap;
  j["oracle_cap"] = c.oracle_cap;
  j["output"] = c.output;
  j["parallelism"] = c.parallelism;
  j["spot_check"] = c.spot_check;
  return j.dump(2);
}

std::string cache_dir() {
  if (const char* env = std::getenv("H1FORGE_CACHE"); env && *env) return env;
  return ".h1forge-cache";
}

namespace {

ordered_json row_to_json(const ResultRow& r, bool include_timing) {
  ordered_json j;
  j["id"] = r.id;
  j["list"] = r.list;
  j["item"] = r.item;
  j["class"] = r.aclass;
  j["tag"] = r.tag;
  j["fingerprint"] = hex64(r.fingerprint);
  j["n"] = r.n;
  j["p"] = r.p;
  j["m"] = r.m;
  j["order"] = r.order;
  j["faithful"] = r.faithful;
  j["irreducible"] = r.irreducible;
  j["semisimple"] = r.semisimple;
  j["z1"] = r.z1;
  j["b1"] = r.b1;
  j["h1"] = r.h1;
  j["solver"] = r.solver;
  j["reductions"] = r.reductions;
  j["bound"] = r.bound_status;
  j["predicted"] = r.predicted;
  j["violation"] = r.violation;
  j["error"] = r.error;
  if (include_timing) {
    j["millis"] = r.millis;
    j["from_cache"] = r.from_cache;
  }
  return j;
}

void row_from_json(const ordered_json& j, ResultRow& r) {
  r.order = j.at("order").get<uint64_t>();
  r.faithful = j.at("faithful").get<bool>();
  r.irreducible = j.at("irreducible").get<bool>();
  r.semisimple = j.at("semisimple").get<bool>();
  r.z1 = j.at("z1").get<int64_t>();
  r.b1 = j.at("b1").get<int64_t>();
  r.h1 = j.at("h1").get<int64_t>();
  r.solver = j.at("solver").get<std::string>();
  r.reductions = j.at("reductions").get<std::vector<std::string>>();
  r.bound_status = j.at("bound").get<std::string>();
  r.predicted = j.at("predicted").get<std::string>();
  r.violation = j.at("violation").get<bool>();
  r.error = j.at("error").get<std::string>();
  r.millis = j.value("millis", uint64_t(0));
}

// factor w = def_p^alpha for the small w values FamilyRef carries
LieFamily family_of(const FamilyRef& ref) {
  uint64_t w = ref.w;
  uint64_t def_p = 0;
  for (uint64_t d = 2; d * d <= w; ++d) {
    if (w % d == 0) {
      def_p = d;
      break;
    }
  }
  if (def_p == 0) def_p = w;
  uint32_t alpha = 0;
  uint64_t acc = 1;
  while (acc < w) {
    acc *= def_p;
    ++alpha;
  }
  if (acc != w) throw InvariantError("family field size is not a prime power");
  return LieFamily::make(ref.tag, ref.t, def_p, alpha);
}

std::string row_key(const CorpusItem& it, const SweepConfig& cfg) {
  std::ostringstream os;
  os << kRowSchema << '|' << item_tag(it) << '|' << it.p << '|' << it.m << '|'
     << it.dim << '|' << solver_choice_name(cfg.solver) << '|' << cfg.enum_cap
     << '|' << cfg.oracle_cap << '|' << cfg.spot_check;
  return os.str();
}

void write_atomic(const fs::path& path, const std::string& body) {
  static std::atomic<uint64_t> ctr{0};
  fs::path tmp = path;
  tmp += ".tmp" + std::to_string(ctr.fetch_add(1)) + "-" +
         std::to_string(uint64_t(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << body;
    if (!out) throw BadInput("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

void solve_row(const CorpusItem& it, const SweepConfig& cfg, ResultRow& row) {
  GModule M = elaborate_item_module(it);
  const MatrixGroup& G = M.group();
  row.fingerprint = G.fingerprint();
  row.order = G.order();
  if (row.order > cfg.enum_cap) {
    throw CapExceeded("row order " + std::to_string(row.order) +
                      " exceeds the configured enumeration cap");
  }
  row.faithful = is_faithful(M);
  row.irreducible = is_irreducible(M).status == IrredStatus::Irreducible;
  try {
    row.semisimple = is_semisimple(M);
  } catch (const CapError&) {
    row.semisimple = false;  // inconclusive counts as unverified
  }
  H1Report rep;
  switch (cfg.solver) {
    case SolverChoice::Auto:
      rep = h1_with_reductions(M);
      break;
    case SolverChoice::Presentation:
      rep = h1_presentation(M);
      break;
    case SolverChoice::Table:
      if ((row.order - 1) * M.dim() > cfg.oracle_cap) {
        throw CapExceeded("full-table system exceeds the configured oracle cap");
      }
      rep = h1_full_table(M);
      break;
  }
  row.z1 = int64_t(rep.z1);
  row.b1 = int64_t(rep.b1);
  row.h1 = int64_t(rep.h1);
  row.solver = solver_name(rep.solver);
  for (Reduction r : rep.reductions) {
    row.reductions.push_back(reduction_name(r));
  }
  if (cfg.spot_check && !rep.reductions.empty() && row.order <= 2000 &&
      (row.order - 1) * M.dim() <= cfg.oracle_cap) {
    H1Report direct = h1_full_table(M);
    if (direct.h1 != rep.h1 || direct.z1 != rep.z1 || direct.b1 != rep.b1) {
      throw InvariantError(
          "spot check: reduction pipeline disagrees with the full-table "
          "solver on " + row.id + " (h1 " + std::to_string(rep.h1) + " vs " +
          std::to_string(direct.h1) + ")");
    }
  }
  if (it.family) {
    LieFamily fam = family_of(*it.family);
    if (it.p != fam.def_p) {
      Prediction pr = predict_h1_zero(fam, it.p, it.dim);
      row.predicted = pr.verdict == Verdict::Guaranteed ? "Guaranteed"
                                                        : "Unknown";
      if (pr.verdict == Verdict::Guaranteed && row.h1 > 0) {
        row.violation = true;
      }
    }
  }
  const uint64_t c = bound(it.dim).c;
  row.bound_status = it.p > c ? "AboveBound" : "BelowBound";
  if (it.p > c && row.faithful && row.semisimple && row.h1 > 0) {
    row.violation = true;
  }
}

ResultRow compute_row(const CorpusItem& it, const SweepConfig& cfg,
                      const fs::path& cache) {
  ResultRow row;
  row.id = it.id;
  row.list = it.list;
  row.item = it.item;
  row.aclass = it.aclass;
  row.tag = item_tag(it);
  row.n = it.dim;
  row.p = it.p;
  row.m = it.m;
  row.bound_status = it.p > bound(it.dim).c ? "AboveBound" : "BelowBound";
  auto t0 = std::chrono::steady_clock::now();
  try {
    // fingerprint needs the enumerated group, so elaboration always runs;
    // the cache saves the solver and meataxe passes
    GroupRef G = elaborate_item(it);
    row.fingerprint = G->fingerprint();
    fs::path entry =
        cache / (hex64(row.fingerprint) + "-" +
                 hex64(fnv1a64(row_key(it, cfg))) + ".json");
    if (fs::exists(entry)) {
      std::ifstream in(entry, std::ios::binary);
      std::ostringstream body;
      body << in.rdbuf();
      try {
        row_from_json(ordered_json::parse(body.str()), row);
        row.from_cache = true;
        return row;
      } catch (const nlohmann::json::exception&) {
        // stale or foreign entry: fall through and recompute
      }
    }
    solve_row(it, cfg, row);
    row.millis = uint64_t(std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - t0)
                              .count());
    write_atomic(entry, row_to_json(row, true).dump(2));
  } catch (const BadInput& e) {
    row.error = e.what();
  } catch (const CapError& e) {
    row.error = e.what();
  }
  row.millis = uint64_t(std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count());
  return row;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& cfg) {
  if (cfg.classes.empty()) throw BadInput("sweep: empty class filter");
  bool all = false;
  std::set<std::string> want;
  for (const auto& t : cfg.classes) {
    if (t == "*") {
      all = true;
    } else {
      want.insert(t);
    }
  }
  std::vector<CorpusItem> jobs;
  for (uint32_t n = cfg.n_min; n <= cfg.n_max; ++n) {
    for (auto [p, m] : cfg.fields) {
      for (auto& it : corpus_items("", n, p, m)) {
        if (all || want.count(it.aclass)) jobs.push_back(std::move(it));
      }
    }
  }
  if (jobs.empty()) throw BadInput("sweep: config selects no instances");

  fs::path cache = cache_dir();
  fs::create_directories(cache);

  SweepResult out;
  out.rows.resize(jobs.size());
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  uint32_t workers = cfg.parallelism ? cfg.parallelism
                                     : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<uint32_t>(workers, uint32_t(jobs.size()));
  auto body = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        out.rows[i] = compute_row(jobs[i], cfg, cache);
      } catch (...) {
        std::lock_guard<std::mutex> lk(failure_mu);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  if (workers <= 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    for (uint32_t w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::sort(out.rows.begin(), out.rows.end(),
            [](const ResultRow& a, const ResultRow& b) {
              return std::tie(a.n, a.p, a.m, a.list, a.item, a.tag, a.id) <
                     std::tie(b.n, b.p, b.m, b.list, b.item, b.tag, b.id);
            });
  out.summary.rows = out.rows.size();
  for (const ResultRow& r : out.rows) {
    if (!r.error.empty()) ++out.summary.errors;
    if (r.violation) ++out.summary.violations;
    if (r.from_cache) ++out.summary.cache_hits;
  }
  return out;
}

namespace {

// commas, quotes and newlines are squashed so no CSV quoting is ever needed
std::string csv_safe(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '"' || c == '\n' || c == '\r') c = ';';
  }
  return s;
}

std::string join_plus(const std::vector<std::string>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += '+';
    s += v[i];
  }
  return s;
}

}  // namespace

std::string rows_to_csv(const std::vector<ResultRow>& rows,
                        bool include_timing) {
  std::ostringstream os;
  os << "id,list,item,class,tag,fingerprint,n,p,m,order,faithful,irreducible,"
        "semisimple,z1,b1,h1,solver,reductions,bound,predicted,violation,"
        "error";
  if (include_timing) os << ",millis";
  os << '\n';
  for (const ResultRow& r : rows) {
    os << csv_safe(r.id) << ',' << csv_safe(r.list) << ',' << csv_safe(r.item)
       << ',' << csv_safe(r.aclass) << ',' << csv_safe(r.tag) << ','
       << hex64(r.fingerprint) << ',' << r.n << ',' << r.p << ',' << r.m << ','
       << r.order << ',' << int(r.faithful) << ',' << int(r.irreducible) << ','
       << int(r.semisimple) << ',' << r.z1 << ',' << r.b1 << ',' << r.h1 << ','
       << csv_safe(r.solver) << ',' << csv_safe(join_plus(r.reductions)) << ','
       << r.bound_status << ',' << r.predicted << ',' << int(r.violation)
       << ',' << csv_safe(r.error);
    if (include_timing) os << ',' << r.millis;
    os << '\n';
  }
  return os.str();
}

std::string sweep_to_json(const SweepResult& r, bool include_timing) {
  ordered_json j;
  j["rows"] = ordered_json::array();
  for (const ResultRow& row : r.rows) {
    j["rows"].push_back(row_to_json(row, include_timing));
  }
  j["summary"] = ordered_json{{"rows", r.summary.rows},
                              {"errors", r.summary.errors},
                              {"violations", r.summary.violations}};
  if (include_timing) j["summary"]["cache_hits"] = r.summary.cache_hits;
  return j.dump(2);
}

}  // namespace h1f
