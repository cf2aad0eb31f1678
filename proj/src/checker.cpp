#include "cyclicity/checker.hpp"

#include <algorithm>
#include <exception>
#include <string>

#include "cyclicity/arithmetic.hpp"
#include "cyclicity/constructions.hpp"
#include "cyclicity/group_ops.hpp"
#include "cyclicity/serialize.hpp"

namespace cyclicity {
namespace {

std::vector<std::size_t> series_sizes(const FiniteGroup& g) {
  std::vector<std::size_t> sizes;
  for (const auto& s : derived_series(g)) sizes.push_back(s.size());
  return sizes;
}

// Witness check shared by the serial and parallel sweeps.
void fill_witness(VerdictRecord& rec, std::size_t table_cap) {
  FiniteGroup w = build_witness(rec.n, table_cap);
  rec.witness_label = w.label();
  rec.witness = serialize(w);
}

}  // namespace

CensusReport sylow_census_bound(std::uint64_t n) {
  if (n < 2 || !is_squarefree(n))
    throw InvalidGroup("sylow_census_bound: " + std::to_string(n) +
                       " is not a squarefree integer >= 2");
  CensusReport report;
  report.n = n;
  for (std::uint64_t p : factorize(n).primes()) {
    SylowEntry e;
    e.p = p;
    for (std::uint64_t d : divisors(n / p))
      if (d % p == 1) e.candidates.push_back(d);
    for (std::uint64_t d : e.candidates)
      if (d > 1) {
        e.chosen = d;
        break;
      }
    if (e.chosen) {
      e.contribution = *e.chosen * (p - 1);
    } else {
      report.forced_primes.push_back(p);
    }
    report.non_identity_total += e.contribution;
    report.entries.push_back(std::move(e));
  }
  report.total = 1 + report.non_identity_total;
  report.exceeds_order = report.total > n;
  if (report.exceeds_order)
    report.outcome = CensusOutcome::CountExceedsOrder;
  else if (!report.forced_primes.empty())
    report.outcome = CensusOutcome::NoNontrivialCandidate;
  report.verdict = report.outcome != CensusOutcome::Inconclusive;
  return report;
}

std::vector<VerdictRecord> verify_equivalence(std::size_t max_enum, std::size_t max_witness,
                                              std::size_t enum_cap, std::size_t table_cap,
                                              Execution exec) {
  if (max_enum > enum_cap)
    throw CapExceeded("verify_equivalence: max_enum " + std::to_string(max_enum) +
                      " exceeds enumeration cap " + std::to_string(enum_cap));
  if (max_witness > table_cap)
    throw CapExceeded("verify_equivalence: max_witness " + std::to_string(max_witness) +
                      " exceeds table cap " + std::to_string(table_cap));

  const std::size_t top = std::max(max_enum, max_witness);
  std::vector<VerdictRecord> records(top);
  for (std::size_t i = 0; i < top; ++i) {
    records[i].n = i + 1;
    records[i].cyclic_number = is_cyclic_number(i + 1);
  }

  for (std::size_t n = 1; n <= max_enum; ++n)
    records[n - 1].group_count = count_groups(n, enum_cap, exec);

  const auto witness_top = static_cast<std::int64_t>(max_witness);
  if (exec == Execution::Serial) {
    for (std::int64_t n = 1; n <= witness_top; ++n)
      if (!records[n - 1].cyclic_number) fill_witness(records[n - 1], table_cap);
  } else {
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t n = 1; n <= witness_top; ++n) {
      try {
        if (!records[n - 1].cyclic_number) fill_witness(records[n - 1], table_cap);
      } catch (...) {
#pragma omp critical(cyclicity_checker_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  }

  for (auto& rec : records) {
    bool ok = true;
    if (rec.group_count) ok = ok && ((*rec.group_count == 1) == rec.cyclic_number);
    if (rec.n <= max_witness) {
      ok = ok && (rec.witness.has_value() != rec.cyclic_number);
      if (rec.witness) {
        const FiniteGroup w = deserialize(*rec.witness, table_cap);
        ok = ok && w.order() == rec.n && !is_cyclic(w);
      }
    }
    rec.consistent = ok;
  }
  return records;
}

SolvabilitySummary verify_solvability(std::size_t max_n, std::size_t max_enum,
                                      std::size_t table_cap, Execution exec) {
  if (max_n > table_cap)
    throw CapExceeded("verify_solvability: max_n " + std::to_string(max_n) +
                      " exceeds table cap " + std::to_string(table_cap));
  SolvabilitySummary summary;
  auto add = [&](std::uint64_t n, const char* source, const FiniteGroup& g) {
    SolvabilityEntry e{n, source, g.label(), series_sizes(g), false};
    e.solvable = e.series_sizes.back() == 1;
    summary.all_solvable = summary.all_solvable && e.solvable;
    summary.entries.push_back(std::move(e));
  };

  std::vector<std::uint64_t> orders;
  for (std::uint64_t n = 1; n <= max_n; ++n)
    if (is_squarefree(n) && !is_cyclic_number(n)) orders.push_back(n);

  std::vector<std::optional<FiniteGroup>> witnesses(orders.size());
  const auto count = static_cast<std::int64_t>(orders.size());
  if (exec == Execution::Serial) {
    for (std::int64_t i = 0; i < count; ++i) witnesses[i] = build_witness(orders[i], table_cap);
  } else {
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        witnesses[i] = build_witness(orders[i], table_cap);
      } catch (...) {
#pragma omp critical(cyclicity_checker_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  }
  for (std::size_t i = 0; i < orders.size(); ++i) add(orders[i], "witness", *witnesses[i]);

  for (std::uint64_t n = 1; n <= max_enum; ++n) {
    if (!is_squarefree(n)) continue;
    for (const auto& g : enumerate_groups(n, max_enum, exec)) add(n, "enumerated", g);
  }
  return summary;
}

}  // namespace cyclicity
