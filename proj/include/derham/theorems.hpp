#pragma once

// Machine checks of the structural statements about Ω_n: each verify_*
// function runs one statement at one parameter point and returns a report.
// Failures are data: exceptions raised by the underlying computations are
// caught and recorded as failed checks.

#include "derham/integer.hpp"
#include "derham/modp.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace derham {

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

/// Enough to replay a failure: the report parameters plus the offending
/// degree and vector (decimal entries).
struct Witness {
  std::string check;
  int degree = -1;
  std::string description;
  std::vector<std::string> vector;

  bool operator==(const Witness&) const = default;
};

struct VerificationReport {
  std::string statement;
  std::vector<std::pair<std::string, long long>> parameters;
  bool passed = true;
  std::vector<Check> checks;
  std::optional<Witness> witness;
  std::vector<std::string> notes;

  long long parameter(const std::string& key, long long fallback = -1) const;
};

bool operator==(const Check& a, const Check& b);
bool operator==(const VerificationReport& a, const VerificationReport& b);

/// Statement ids in sweep order.
const std::vector<std::string>& statement_ids();
/// Canonical id for a user-supplied name ("euler" names annihilation).
std::optional<std::string> canonical_statement(const std::string& name);

VerificationReport verify_annihilation(int r, int n);
VerificationReport verify_cartier(int r, int n, Prime p);
VerificationReport verify_couple_morphism(int r, int n, Prime p);
VerificationReport verify_frobenius_iso(int r, int n, Prime p);
/// All pages k = 1..ν_p(n)+1: explicit Cartier identification for k ≤ ν_p(n),
/// vanishing beyond, and agreement with the closed-form pages.
VerificationReport verify_page_identification(int r, int n, Prime p);
VerificationReport verify_filtration(int r, int n);
VerificationReport verify_example_deg4(int r);

struct SweepOptions {
  int rmax = 2;
  int nmax = 8;
  /// Empty means every statement.
  std::vector<std::string> statements;
  /// Restrict to one prime; 0 means every prime in range.
  Prime prime = 0;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Parameter points per statement:
///   annihilation, filtration: 1 ≤ r ≤ rmax, 1 ≤ n ≤ nmax;
///   cartier, couple_morphism, frobenius_iso: primes p with p·n ≤ nmax;
///   page_identification: primes p ≤ nmax dividing n;
///   example_deg4: r ≤ min(rmax, 3) when nmax ≥ 4.
/// Reports come back in statement order, then by (r, n, p).
std::vector<VerificationReport> sweep(const SweepOptions& options);
std::vector<VerificationReport> sweep(int rmax, int nmax);

/// Runs one statement at one point; p is ignored by statements without one.
VerificationReport verify_single(const std::string& statement, int r, int n, Prime p);

std::vector<Prime> primes_up_to(long long bound);

}  // namespace derham
