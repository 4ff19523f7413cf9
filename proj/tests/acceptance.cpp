// One PASS/FAIL line per acceptance criterion. Indented lines carry
// literal-statement outcomes and failure details.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <mtt/mtt.hpp>

using namespace mtt;

namespace {

const ExecPolicy kPolicy{4, kDefaultCap};

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(const VerificationReport& r) {
    if (meets_expectation(r) && r.status != Status::Skipped) return;
    ok = false;
    std::string line = r.check + ' ' + r.params.dump() + ' ' + to_string(r.status);
    if (!r.failures.empty()) {
      const Failure& f = r.failures.front();
      line += " first failure " + edges_to_string(f.graph) + (f.term.empty() ? "" : " [" + f.term + "]") + " expected " + f.expected +
              " actual " + f.actual + " (" + std::to_string(r.failures.size()) + " listed)";
    }
    if (!r.note.empty()) line += " : " + r.note;
    notes.push_back(line);
  }

  void note(std::string s) { notes.push_back(std::move(s)); }
};

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

std::vector<VertexSet> subsets(int n) { return detail::all_subsets(n); }

std::string literal_tally(int holds, int total) { return std::to_string(holds) + "/" + std::to_string(total); }

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({"determinant recovery, n = 1..4", 10, [](Outcome& o) {
                        for (int n = 1; n <= 4; ++n) o.require(verify_det_recovery(n, kPolicy));
                      }});

  criteria.push_back({"subgraph-sum identities (direct, direct-prime), n <= 3, k <= 4, and n = 4, k = 4", 60, [](Outcome& o) {
                        for (int n = 1; n <= 3; ++n)
                          for (int k = 0; k <= 4; ++k) {
                            o.require(verify_direct(n, k, kPolicy));
                            o.require(verify_direct_prime(n, k, kPolicy));
                          }
                        o.require(verify_direct(4, 4, kPolicy));
                        o.require(verify_direct_prime(4, 4, kPolicy));
                      }});

  criteria.push_back({"diagonal matrix-tree theorem, all I, n <= 3, k <= 4, and n = 4, k <= 4", 180, [](Outcome& o) {
                        for (int n = 1; n <= 4; ++n)
                          for (int k = 0; k <= 4; ++k)
                            for (const VertexSet& I : subsets(n)) o.require(verify_diag(n, k, I, kPolicy));
                      }});

  criteria.push_back({"codimension-one matrix-tree theorem, all i, j, n <= 3, k <= 4", 120, [](Outcome& o) {
                        for (int n = 1; n <= 3; ++n)
                          for (int k = 0; k <= 4; ++k)
                            for (Vertex i = 1; i <= n; ++i)
                              for (Vertex j = 1; j <= n; ++j) o.require(verify_codim1(n, k, i, j, kPolicy));
                      }});

  criteria.push_back({"sign-probed expansion (s = -1, n <= 3, 2 <= k <= 4) and derivative (s = -1, n <= 3, k <= 4, m <= k)", 120,
                      [](Outcome& o) {
                        int holds = 0, total = 0, signed_cells = 0;
                        for (int n = 1; n <= 3; ++n)
                          for (int k = 2; k <= 4; ++k) {
                            const auto r = verify_expansion(n, k, kPolicy);
                            o.require(r);
                            ++total;
                            holds += r.literal_holds.value_or(false);
                            signed_cells += r.sign.has_value();
                          }
                        o.note("expansion: sign -1 found in " + std::to_string(signed_cells) + " cells (rest vanish identically); literal s = +1 holds in " +
                               literal_tally(holds, total));
                        int d_holds = 0, d_total = 0, odd_signed = 0, even_cells = 0;
                        for (int n = 1; n <= 3; ++n)
                          for (int k = 1; k <= 4; ++k)
                            for (Vertex i = 1; i <= n; ++i)
                              for (int m = 1; m <= k; ++m) {
                                const auto r = verify_derivative(n, k, i, m, kPolicy);
                                o.require(r);
                                ++d_total;
                                d_holds += r.literal_holds.value_or(false);
                                if (m % 2) odd_signed += r.sign == -1;
                                else ++even_cells;
                              }
                        o.note("derivative: sign -1 found in " + std::to_string(odd_signed) + " odd-m cells, " + std::to_string(even_cells) +
                               " even-m cells sign-neutral; literal form without (-1)^m holds in " + literal_tally(d_holds, d_total));
                      }});

  criteria.push_back({"signed minor-pairing laws, n <= 4", 30, [](Outcome& o) {
                        int holds = 0;
                        for (int n = 1; n <= 4; ++n) {
                          const auto r = verify_minor_pairing(n, kPolicy);
                          o.require(r);
                          holds += r.literal_holds.value_or(false);
                        }
                        o.note("unsigned reading holds for " + literal_tally(holds, 4) + " sizes");
                      }});

  criteria.push_back({"Kirchhoff corollaries: diagonal n <= 5, codim-1 (exponent i+j+n-1) n <= 4, Cayley n <= 5", 300, [](Outcome& o) {
                        for (int n = 1; n <= 5; ++n)
                          for (const VertexSet& I : subsets(n))
                            if (!I.empty()) o.require(verify_kirchhoff_diag(n, I, kPolicy));
                        int holds = 0, total = 0, parity_agrees = 0;
                        for (int n = 2; n <= 4; ++n)
                          for (Vertex i = 1; i <= n; ++i)
                            for (Vertex j = 1; j <= n; ++j) {
                              if (i == j) continue;
                              const auto r = verify_kirchhoff_codim1(n, i, j, kPolicy);
                              o.require(r);
                              ++total;
                              holds += r.literal_holds.value_or(false);
                              parity_agrees += r.literal_holds.value_or(false) == ((i + j) % 2 == 0);
                            }
                        o.note("codim-1 literal (-1)^(n-1) law holds in " + literal_tally(holds, total) + " cells; holds exactly when i+j is even in " +
                               literal_tally(parity_agrees, total));
                        if (parity_agrees != total) o.ok = false;
                        for (int n = 1; n <= 5; ++n) o.require(verify_cayley(n, kPolicy));
                      }});

  criteria.push_back({"Potts special values and orientation counts, n <= 3, k <= 4", 60, [](Outcome& o) {
                        for (int n = 1; n <= 3; ++n)
                          for (int k = 0; k <= 4; ++k) o.require(verify_specval(n, k, kPolicy));
                      }});

  criteria.push_back({"Tutte relation, every graph in Upsilon_{3,k}, k <= 3", 60, [](Outcome& o) {
                        for (int k = 0; k <= 3; ++k) o.require(verify_tutte(3, k, kPolicy));
                      }});

  criteria.push_back({"Laplace image of the universal Potts element, n <= 3, k <= 4", 120, [](Outcome& o) {
                        for (int n = 1; n <= 3; ++n)
                          for (int k = 0; k <= 4; ++k) o.require(verify_lapl_tutte(n, k, kPolicy));
                      }});

  criteria.push_back({"Delta Theta_n = -2 U(AC_{n,n-1}), n = 2, 3, 4", 600, [](Outcome& o) {
                        for (int n = 2; n <= 4; ++n) {
                          const auto r = verify_theta(n, kPolicy);
                          o.require(r);
                          if (r.literal_holds) o.note("n=" + std::to_string(n) + ": <L|Theta_n> = -2 minor(L,{1},{1}) for symmetric L " +
                                                      (*r.literal_holds ? "holds" : "fails"));
                        }
                        for (int n = 2; n <= 4; ++n) {
                          const auto d = verify_theta_derived(n, kPolicy);
                          o.note("n=" + std::to_string(n) + ": law derived from the diagonal theorem " + to_string(d.status) + " (" +
                                 std::to_string(d.total_cases) + " cases)");
                        }
                      }});

  criteria.push_back({"operator laws, n <= 3, k <= 3", 60, [](Outcome& o) {
                        for (int n = 1; n <= 3; ++n)
                          for (int k = 0; k <= 3; ++k) o.require(verify_operator_laws(n, k, kPolicy));
                      }});

  criteria.push_back({"determinism: suite with 1 and 8 workers gives identical payloads", 120, [](Outcome& o) {
                        SuiteConfig one;
                        SuiteConfig eight;
                        eight.jobs = 8;
                        const auto a = run_suite(one);
                        const auto b = run_suite(eight);
                        if (a.size() != b.size()) {
                          o.ok = false;
                          o.note("report counts differ");
                          return;
                        }
                        std::size_t differing = 0;
                        for (std::size_t i = 0; i < a.size(); ++i) differing += a[i].to_json(false) != b[i].to_json(false);
                        o.note(std::to_string(a.size()) + " reports compared, " + std::to_string(differing) + " differ");
                        if (differing) o.ok = false;
                      }});

  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.note(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) {
      o.ok = false;
      o.note("time limit " + std::to_string(static_cast<int>(c.limit_seconds)) + " s exceeded");
    }
    std::ostringstream t;
    t << std::fixed << std::setprecision(2) << seconds;
    std::cout << (o.ok ? "PASS " : "FAIL ") << c.name << " (" << t.str() << " s)\n";
    for (const auto& n : o.notes) std::cout << "    " << n << '\n';
    std::cout.flush();
    failed += !o.ok;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
  return failed ? 1 : 0;
}
