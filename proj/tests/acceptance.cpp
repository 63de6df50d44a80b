// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance               every criterion
//   acceptance --criterion N only criterion N
//
// Exit status is 0 when every selected criterion passed.

#include "derham/bockstein.hpp"
#include "derham/cohomology.hpp"
#include "derham/normal_form.hpp"
#include "derham/report.hpp"
#include "derham/theorems.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace derham;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string summary;
  std::vector<std::string> failures;

  void fail(const std::string& what) {
    passed = false;
    if (failures.size() < 12) failures.push_back(what);
  }
};

std::string point(const VerificationReport& r) {
  std::ostringstream s;
  s << r.statement;
  for (const auto& [k, v] : r.parameters) s << ' ' << k << '=' << v;
  for (const Check& c : r.checks)
    if (!c.passed) {
      s << ": " << c.name;
      break;
    }
  if (r.witness) s << "; degree " << r.witness->degree << ", " << r.witness->description;
  return s.str();
}

void absorb(Outcome& o, const VerificationReport& r, int& count) {
  ++count;
  if (!r.passed) o.fail(point(r));
}

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fixed(double x) {
  std::ostringstream s;
  s.precision(2);
  s << std::fixed << x;
  return s.str();
}

bool invertible(const ModMatrix& m, Prime p) { return m.rows() == m.cols() && rank_mod_p(m, p) == m.rows(); }

bool same_mod_p(const ModMatrix& a, const ModMatrix& b, Prime p) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (mod_floor<std::int64_t>(a(i, j) - b(i, j), p) != 0) return false;
  return true;
}

Outcome criterion_annihilation() {
  Outcome o;
  const auto start = Clock::now();
  int count = 0;
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 12; ++n) absorb(o, verify_annihilation(r, n), count);
  const double t = seconds_since(start);
  if (t >= 60) o.fail("runtime " + fixed(t) + " s exceeds 60 s");
  o.summary = std::to_string(count) + " points, r <= 3, n <= 12, " + fixed(t) + " s";
  return o;
}

Outcome criterion_one_variable() {
  Outcome o;
  for (int n = 1; n <= 50; ++n) {
    const CohomologyResult h = integral_cohomology(1, n);
    // 1×1 oracle: d^0 = (n).
    IntMatrix d(1, 1);
    d(0, 0) = n;
    const auto diag = snf(d).diagonal();
    std::vector<Integer> expect;
    if (diag[0] != 1) expect.push_back(diag[0]);
    if (h.group(1).invariant_factors() != expect || h.group(1).free_rank() != 0 || !h.group(0).is_trivial())
      o.fail("n = " + std::to_string(n) + ": H^1 = " + h.group(1).to_string());
  }
  o.summary = "H^1 = Z/n for r = 1, 1 <= n <= 50";
  return o;
}

Outcome criterion_cartier() {
  Outcome o;
  int count = 0;
  for (Prime p : {2, 3})
    for (int r = 1; r <= 3; ++r)
      for (int n = 0; p * n <= 12; ++n) absorb(o, verify_cartier(r, n, p), count);
  int vanishing = 0;
  for (Prime p : {2, 3})
    for (int r = 1; r <= 3; ++r)
      for (int m = 1; m <= 12; ++m) {
        if (m % p == 0) continue;
        ++vanishing;
        const ModpCohomologyResult h = modp_cohomology(r, m, p);
        for (int i = 0; i <= r; ++i)
          if (h.dim(i) != 0)
            o.fail("H^" + std::to_string(i) + "(Omega_" + std::to_string(m) + " (x) F_" + std::to_string(p) +
                   ") != 0 at r = " + std::to_string(r));
      }
  o.summary = std::to_string(count) + " Cartier points, " + std::to_string(vanishing) + " vanishing points";
  return o;
}

Outcome criterion_pages() {
  Outcome o;
  int count = 0;
  for (Prime p : {2, 3})
    for (int r = 1; r <= 3; ++r)
      for (int n = static_cast<int>(p); n <= 12; n += static_cast<int>(p))
        absorb(o, verify_page_identification(r, n, p), count);
  const std::vector<std::vector<Index>> golden{{3, 4, 1}, {2, 2, 0}, {0, 0, 0}};
  std::vector<std::vector<Index>> got;
  for (const SpectralPage& pg : pages(2, 4, 2)) got.push_back(pg.dims);
  if (got != golden) o.fail("(2,4,2) page dims differ from (3,4,1), (2,2,0), 0");
  o.summary = std::to_string(count) + " points, golden (2,4,2) " + (got == golden ? "ok" : "mismatch");
  return o;
}

Outcome criterion_oracle() {
  Outcome o;
  int count = 0;
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 12; ++n)
      for (Prime p : primes_up_to(13)) {
        if (n > 0 && n % p != 0 && p > 3) continue;
        const std::string at = "(" + std::to_string(r) + "," + std::to_string(n) + "," + std::to_string(p) + ")";
        try {
          for (const ExactCouple& c : couples(r, n, p)) {
            ++count;
            const ClosedFormPage cf(r, n, p, c.stage);
            const SpectralPage a = page_of(c);
            const SpectralPage& b = cf.page();
            const std::string where = at + " E_" + std::to_string(c.stage);
            if (a.dims != b.dims) {
              o.fail(where + ": dims differ");
              continue;
            }
            const auto phi = derived_to_closed_form(c, cf);
            for (int i = 0; i <= r; ++i) {
              const auto u = static_cast<std::size_t>(i);
              if (!invertible(phi[u], p)) o.fail(where + ": comparison map not invertible in degree " + std::to_string(i));
              if (i < r && !same_mod_p(multiply_mod_p(phi[u + 1], a.d[u], p), multiply_mod_p(b.d[u], phi[u], p), p))
                o.fail(where + ": differentials not conjugate in degree " + std::to_string(i));
            }
          }
        } catch (const std::exception& e) {
          o.fail(at + ": " + e.what());
        }
      }
  o.summary = std::to_string(count) + " pages compared, r <= 3, n <= 12, p <= 13";
  return o;
}

Outcome criterion_couple_morphism() {
  Outcome o;
  int count = 0;
  for (Prime p : {2, 3})
    for (int r = 1; r <= 2; ++r)
      for (int n = 1; p * n <= 12; ++n) absorb(o, verify_couple_morphism(r, n, p), count);
  o.summary = std::to_string(count) + " points, r <= 2, pn <= 12";
  return o;
}

Outcome criterion_frobenius() {
  Outcome o;
  int count = 0;
  for (Prime p : {2, 3})
    for (int r = 1; r <= 2; ++r)
      for (int n = 1; p * n <= 12; ++n) absorb(o, verify_frobenius_iso(r, n, p), count);
  // Z/2 = H^1(Omega_2) onto 2 (Z/4) in H^1(Omega_4).
  const auto f = frobenius_induced(*couple_base(1, 2, 2), *couple_base(1, 4, 2));
  const Homomorphism& f1 = f[1];
  const bool golden = f1.source().invariant_factors() == std::vector<Integer>{2} &&
                      f1.target().invariant_factors() == std::vector<Integer>{4} && f1.is_injective() &&
                      f1.target().is_zero_element(f1.matrix().col(0) * Integer(2)) &&
                      !f1.target().is_zero_element(f1.matrix().col(0));
  if (!golden) o.fail("(1,2,2): F_* is not Z/2 onto 2 (Z/4)");
  o.summary = std::to_string(count) + " points, golden (1,2,2) " + (golden ? "ok" : "mismatch");
  return o;
}

Outcome criterion_filtration() {
  Outcome o;
  int count = 0;
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 12; ++n) absorb(o, verify_filtration(r, n), count);
  for (int r = 1; r <= 3; ++r) absorb(o, verify_example_deg4(r), count);
  o.summary = std::to_string(count) + " points, r <= 3, n <= 12, plus degree 4 examples";
  return o;
}

Outcome criterion_determinism() {
  Outcome o;
  const auto start = Clock::now();
  auto serialized = [](unsigned threads) {
    SweepOptions opts;
    opts.rmax = 3;
    opts.nmax = 12;
    opts.threads = threads;
    ReportDocument doc;
    doc.command = "verify --all -r 3 -n 12";
    doc.kind = "verify";
    doc.parameters = Json{{"r", 3}, {"n", 12}, {"statement", "all"}, {"mode", "sweep"}};
    doc.results = verify_results(sweep(opts));
    return render(doc, Format::json);
  };
  const std::string a = serialized(0);
  const std::string b = serialized(0);
  const std::string c = serialized(1);
  if (a != b) o.fail("two default sweeps differ");
  if (a != c) o.fail("single-threaded sweep differs");
  const double t = seconds_since(start);
  if (t >= 600) o.fail("runtime " + fixed(t) + " s exceeds 600 s");
  o.summary = "3 full sweeps (r <= 3, n <= 12), " + std::to_string(a.size()) + " bytes each, " + fixed(t) + " s";
  return o;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "Euler identity and annihilation", criterion_annihilation},
      {2, "one-variable law", criterion_one_variable},
      {3, "Cartier isomorphism and vanishing", criterion_cartier},
      {4, "page identification", criterion_pages},
      {5, "oracle agreement", criterion_oracle},
      {6, "couple morphism and divisibility", criterion_couple_morphism},
      {7, "Frobenius p-primary isomorphism", criterion_frobenius},
      {8, "filtration graded dimensions", criterion_filtration},
      {9, "determinism and runtime", criterion_determinism},
  };
  int only = 0;
  for (int a = 1; a < argc; ++a) {
    const std::string arg = argv[a];
    if (arg == "--criterion" && a + 1 < argc) {
      only = std::atoi(argv[++a]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  if (only < 0 || only > static_cast<int>(all.size())) {
    std::cerr << "no criterion " << only << '\n';
    return 2;
  }

  bool ok = true;
  for (const Criterion& c : all) {
    if (only && c.id != only) continue;
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    ok = ok && out.passed;
    std::cout << "criterion " << c.id << ": " << (out.passed ? "PASS" : "FAIL") << " - " << c.title;
    if (!out.summary.empty()) std::cout << " (" << out.summary << ")";
    std::cout << '\n';
    for (const std::string& f : out.failures) std::cout << "    " << f << '\n';
    std::cout.flush();
  }
  return ok ? 0 : 1;
}
