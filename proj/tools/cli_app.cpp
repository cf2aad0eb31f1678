#include "cli_app.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include "cyclicity/arithmetic.hpp"
#include "cyclicity/checker.hpp"
#include "cyclicity/constructions.hpp"
#include "cyclicity/enumeration.hpp"
#include "cyclicity/group_ops.hpp"
#include "cyclicity/serialize.hpp"

namespace cyclicity::cli {
namespace {

struct Options {
  std::optional<std::size_t> cap;
  std::string format = "text";
  bool serial = false;

  bool structured() const { return format == "structured"; }
  Execution exec() const { return serial ? Execution::Serial : Execution::Parallel; }
  std::size_t table_cap() const { return cap.value_or(kDefaultTableCap); }
  std::size_t enum_cap() const { return cap.value_or(kDefaultEnumerationCap); }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A command writes its payload here; run() wraps it in the output document.
struct Outcome {
  int code = kOk;
  Json result;
  std::string text;
};

std::string join(const std::vector<std::uint64_t>& v, const char* sep = ", ") {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? sep : "") << v[i];
  return s.str();
}

Json census_json(const OrderCensus& c) {
  Json j = Json::object();
  for (const auto& [k, v] : c) j[std::to_string(k)] = v;
  return j;
}

std::string census_text(const OrderCensus& c) {
  std::ostringstream s;
  bool first = true;
  for (const auto& [k, v] : c) {
    s << (first ? "" : ", ") << k << ":" << v;
    first = false;
  }
  return "{" + s.str() + "}";
}

std::string table_text(const FiniteGroup& g) {
  std::ostringstream s;
  for (Element a = 0; a < g.order(); ++a) {
    s << " ";
    for (Element x : g.row(a)) s << " " << x;
    s << "\n";
  }
  return s.str();
}

Json obstruction_json(const Obstruction& o) {
  Json j;
  if (std::holds_alternative<NoObstruction>(o)) {
    j["kind"] = "none";
  } else if (const auto* sq = std::get_if<SquareFactor>(&o)) {
    j["kind"] = "square_factor";
    j["p"] = sq->p;
  } else {
    const auto& dp = std::get<DividingPair>(o);
    j["kind"] = "dividing_pair";
    j["p"] = dp.p;
    j["q"] = dp.q;
  }
  return j;
}

std::string obstruction_text(const Obstruction& o) {
  if (std::holds_alternative<NoObstruction>(o)) return "none";
  if (const auto* sq = std::get_if<SquareFactor>(&o))
    return "square factor " + std::to_string(sq->p) + "^2";
  const auto& dp = std::get<DividingPair>(o);
  return "dividing pair (" + std::to_string(dp.p) + ", " + std::to_string(dp.q) + "): " +
         std::to_string(dp.p) + " | " + std::to_string(dp.q) + " - 1";
}

void require_positive(std::uint64_t n, const char* name) {
  if (n == 0) throw UsageError(std::string(name) + " must be a positive integer");
}

Outcome cmd_check(std::uint64_t n) {
  require_positive(n, "n");
  const std::uint64_t phi = euler_phi(n);
  const std::uint64_t g = std::gcd(n, phi);
  const bool cyclic = g == 1;
  const Obstruction why = obstruction(n);

  Outcome o;
  o.code = cyclic ? kOk : kNegative;
  o.result["n"] = n;
  o.result["phi"] = phi;
  o.result["gcd"] = g;
  o.result["cyclic_number"] = cyclic;
  o.result["obstruction"] = obstruction_json(why);
  std::ostringstream s;
  s << "n: " << n << "\nphi: " << phi << "\ngcd: " << g
    << "\ncyclic_number: " << (cyclic ? "true" : "false")
    << "\nobstruction: " << obstruction_text(why) << "\n";
  o.text = s.str();
  return o;
}

Outcome cmd_witness(std::uint64_t n, const Options& opt) {
  require_positive(n, "n");
  if (is_cyclic_number(n))
    throw std::domain_error("no witness exists by Theorem: gcd(" + std::to_string(n) +
                            ", phi(n)) = 1, so every group of order " + std::to_string(n) +
                            " is cyclic");
  const FiniteGroup w = build_witness(n, opt.table_cap());
  const auto census = order_census(w);
  std::vector<std::uint64_t> sizes;
  for (const auto& s : derived_series(w)) sizes.push_back(s.size());
  const bool solvable = sizes.back() == 1;

  Outcome o;
  o.result["group"] = to_json(w);
  o.result["abelian"] = is_abelian(w);
  o.result["cyclic"] = is_cyclic(w);
  o.result["census"] = census_json(census);
  o.result["derived_series"] = sizes;
  o.result["solvable"] = solvable;
  std::ostringstream s;
  s << "label: " << w.label() << "\norder: " << w.order() << "\nidentity: " << w.identity()
    << "\ntable:\n"
    << table_text(w) << "abelian: " << (is_abelian(w) ? "true" : "false")
    << "\ncyclic: " << (is_cyclic(w) ? "true" : "false") << "\ncensus: " << census_text(census)
    << "\nderived_series: " << join(sizes, " -> ")
    << "\nsolvable: " << (solvable ? "true" : "false") << "\n";
  o.text = s.str();
  return o;
}

Outcome cmd_enumerate(std::uint64_t n, const Options& opt, const std::string& dump_path) {
  require_positive(n, "n");
  const auto classes = enumerate_groups(n, opt.enum_cap(), opt.exec());

  if (!dump_path.empty()) {
    std::ofstream f(dump_path);
    if (!f) throw std::runtime_error("cannot open dump file '" + dump_path + "'");
    for (const auto& g : classes) f << serialize(g) << "\n";
  }

  Outcome o;
  o.result["n"] = n;
  o.result["count"] = classes.size();
  o.result["classes"] = Json::array();
  std::ostringstream s;
  s << "n: " << n << "\ncount: " << classes.size() << "\n";
  for (const auto& g : classes) {
    const auto census = order_census(g);
    Json c = to_json(g);
    c["abelian"] = is_abelian(g);
    c["cyclic"] = is_cyclic(g);
    c["census"] = census_json(census);
    o.result["classes"].push_back(std::move(c));
    s << "- " << g.label() << ": abelian=" << (is_abelian(g) ? "true" : "false")
      << " cyclic=" << (is_cyclic(g) ? "true" : "false") << " census=" << census_text(census)
      << "\n"
      << table_text(g);
  }
  o.text = s.str();
  return o;
}

Outcome cmd_sieve(std::uint64_t limit) {
  require_positive(limit, "limit");
  const auto list = cyclic_number_sieve(limit);
  Outcome o;
  o.result["limit"] = limit;
  o.result["count"] = list.size();
  o.result["cyclic_numbers"] = list;
  o.text = "limit: " + std::to_string(limit) + "\ncount: " + std::to_string(list.size()) +
           "\ncyclic_numbers: " + join(list) + "\n";
  return o;
}

const char* outcome_name(CensusOutcome c) {
  switch (c) {
    case CensusOutcome::CountExceedsOrder: return "count_exceeds_order";
    case CensusOutcome::NoNontrivialCandidate: return "no_nontrivial_candidate";
    case CensusOutcome::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Outcome cmd_census(std::uint64_t n) {
  require_positive(n, "n");
  if (n < 2 || !is_squarefree(n)) throw UsageError("census requires a squarefree n >= 2");
  const CensusReport r = sylow_census_bound(n);

  Outcome o;
  Json entries = Json::array();
  std::ostringstream s;
  s << "n: " << n << "\n";
  for (const auto& e : r.entries) {
    Json j;
    j["p"] = e.p;
    j["candidates"] = e.candidates;
    j["n_p"] = e.chosen ? Json(*e.chosen) : Json(nullptr);
    j["contribution"] = e.contribution;
    entries.push_back(std::move(j));
    s << "p=" << e.p << " candidates=[" << join(e.candidates) << "] n_p="
      << (e.chosen ? std::to_string(*e.chosen) : std::string("none"))
      << " contribution=" << e.contribution << "\n";
  }
  o.result["n"] = n;
  o.result["entries"] = std::move(entries);
  o.result["non_identity_total"] = r.non_identity_total;
  o.result["total"] = r.total;
  o.result["exceeds_order"] = r.exceeds_order;
  o.result["forced_primes"] = r.forced_primes;
  o.result["outcome"] = outcome_name(r.outcome);
  o.result["verdict"] = r.verdict;
  s << "non_identity_total: " << r.non_identity_total << "\ntotal_with_identity: " << r.total
    << "\nexceeds_order: " << (r.exceeds_order ? "true" : "false")
    << "\nforced_primes: [" << join(r.forced_primes) << "]\noutcome: " << outcome_name(r.outcome)
    << "\nverdict: " << (r.verdict ? "true" : "false") << "\n";
  o.text = s.str();
  return o;
}

Outcome cmd_verify(std::size_t max_enum, std::size_t max_witness, const Options& opt) {
  const auto records = verify_equivalence(max_enum, max_witness, opt.enum_cap(), opt.table_cap(),
                                          opt.exec());
  Outcome o;
  bool all = true;
  Json list = Json::array();
  std::ostringstream s;
  s << "max_enum: " << max_enum << "\nmax_witness: " << max_witness << "\n";
  for (const auto& r : records) {
    all = all && r.consistent;
    Json j;
    j["n"] = r.n;
    j["cyclic_number"] = r.cyclic_number;
    j["witness"] = r.witness_label ? Json(*r.witness_label) : Json(nullptr);
    j["group_count"] = r.group_count ? Json(*r.group_count) : Json(nullptr);
    j["consistent"] = r.consistent;
    list.push_back(std::move(j));
    s << "n=" << r.n << " cyclic_number=" << (r.cyclic_number ? "true" : "false")
      << " count=" << (r.group_count ? std::to_string(*r.group_count) : std::string("-"))
      << " witness=" << r.witness_label.value_or("-")
      << " consistent=" << (r.consistent ? "true" : "false") << "\n";
  }
  o.result["records"] = std::move(list);
  o.result["all_consistent"] = all;
  s << "all_consistent: " << (all ? "true" : "false") << "\n";
  o.text = s.str();
  o.code = all ? kOk : kNegative;
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic numbers and explicit finite groups", "cyclicity"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--cap", opt.cap, "Override the table / enumeration size cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--serial", opt.serial, "Use the serial reference kernels");

  std::uint64_t n = 0, limit = 0;
  std::size_t max_enum = 0, max_witness = 0;
  std::string dump_path;

  auto* check = app.add_subcommand("check", "Test gcd(n, phi(n)) = 1 and report the obstruction");
  check->add_option("n", n)->required();
  auto* witness = app.add_subcommand("witness", "Build a non-cyclic group of order n");
  witness->add_option("n", n)->required();
  auto* enumerate = app.add_subcommand("enumerate", "All groups of order n up to isomorphism");
  enumerate->add_option("n", n)->required();
  enumerate->add_option("--dump", dump_path, "Write one serialized group per line");
  auto* sieve = app.add_subcommand("sieve", "Cyclic numbers up to limit");
  sieve->add_option("limit", limit)->required();
  auto* census = app.add_subcommand("census", "Sylow element-count bound for squarefree n");
  census->add_option("n", n)->required();
  auto* verify = app.add_subcommand("verify", "Cross-check predicate, witnesses and enumeration");
  verify->add_option("max_enum", max_enum)->required();
  verify->add_option("max_witness", max_witness)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  std::string command;
  Json params = Json::object();
  Outcome outcome;
  try {
    if (*check) {
      command = "check";
      params["n"] = n;
      outcome = cmd_check(n);
    } else if (*witness) {
      command = "witness";
      params["n"] = n;
      outcome = cmd_witness(n, opt);
    } else if (*enumerate) {
      command = "enumerate";
      params["n"] = n;
      outcome = cmd_enumerate(n, opt, dump_path);
    } else if (*sieve) {
      command = "sieve";
      params["limit"] = limit;
      outcome = cmd_sieve(limit);
    } else if (*census) {
      command = "census";
      params["n"] = n;
      outcome = cmd_census(n);
    } else {
      command = "verify";
      params["max_enum"] = max_enum;
      params["max_witness"] = max_witness;
      outcome = cmd_verify(max_enum, max_witness, opt);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (raise with --cap)\n";
    return kCap;
  } catch (const std::domain_error& e) {
    err << e.what() << "\n";
    return kNegative;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (opt.cap) params["cap"] = *opt.cap;
  if (opt.structured()) {
    Json doc;
    doc["command"] = command;
    doc["parameters"] = std::move(params);
    doc["result"] = std::move(outcome.result);
    doc["version"] = kVersion;
    out << doc.dump(2) << "\n";
  } else {
    out << outcome.text;
  }
  return outcome.code;
}

}  // namespace cyclicity::cli
