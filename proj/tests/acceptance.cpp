// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Randomized parts use fixed seeds.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "posdiag/cli.hpp"
#include "posdiag/covers.hpp"
#include "posdiag/diagram.hpp"
#include "posdiag/error.hpp"
#include "posdiag/json_io.hpp"
#include "posdiag/presentation.hpp"
#include "posdiag/seifert.hpp"
#include "posdiag/vertical.hpp"

using namespace posdiag;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string read_golden(const std::string& name) {
  std::ifstream f(std::string(POSDIAG_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

// On mismatch the actual text is left next to the build for inspection.
bool matches_golden(const std::string& name, const std::string& actual) {
  if (actual == read_golden(name)) return true;
  std::ofstream(name + ".actual", std::ios::binary) << actual;
  return false;
}

std::string run_cli(const std::vector<std::string>& args, const std::string& input, int& status) {
  std::istringstream in(input);
  std::ostringstream out, err;
  status = cli::run(args, in, out, err);
  return out.str();
}

std::string str(const Integer& v) { return v.get_str(); }

// The slopes 0 < beta < alpha <= 5 in lowest terms.
std::vector<FiberInvariant> small_slopes() {
  std::vector<FiberInvariant> out;
  for (long a = 2; a <= 5; ++a)
    for (long b = 1; b < a; ++b)
      if (std::gcd(a, b) == 1) out.push_back({a, b});
  return out;
}

Outcome criterion1() {
  Outcome o;
  const std::string input =
      R"({"base_genus":0,"mode":"non_normalized","fibers":[{"alpha":4,"beta":1},)"
      R"({"alpha":3,"beta":-4},{"alpha":5,"beta":3},{"alpha":2,"beta":-5}]})";
  int status = 0;
  const std::string got = run_cli({"normalize"}, input, status);
  if (status != 0) o.fail("normalize exited with " + std::to_string(status));
  if (!matches_golden("z358_normalized.json", got)) o.fail("output differs from golden file");
  const SeifertData s = normalize(
      make_non_normalized(0, {{4, 1}, {3, -4}, {5, 3}, {2, -5}}));
  if (s != make_normalized(0, {{4, 1}, {3, 2}, {5, 3}, {2, 1}}, 5)) o.fail("library result differs");
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::mt19937_64 rng(20240611);
  const auto slopes = small_slopes();
  std::uniform_int_distribution<std::size_t> pick_m(3, 6), pick_slope(0, slopes.size() - 1);
  std::uniform_int_distribution<long> pick_e(-5, 5);
  int cases = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<FiberInvariant> fibers;
    const std::size_t m = pick_m(rng);
    for (std::size_t i = 0; i < m; ++i) fibers.push_back(slopes[pick_slope(rng)]);
    const SeifertData s = make_normalized(0, fibers, pick_e(rng));
    const auto tag = [&] {
      std::ostringstream os;
      os << "m=" << m << " e=" << str(*s.euler) << " fibers";
      for (const auto& f : fibers) os << " " << str(f.beta) << "/" << str(f.alpha);
      return os.str();
    };
    try {
      const Diagram dg = build_positive_vertical(s);
      const auto want = static_cast<std::int64_t>(m - 1);
      if (!is_positive_diagram(dg)) o.fail("(a) negative crossing: " + tag());
      if (dg.declared_genus != want || static_cast<std::int64_t>(dg.x_curves.size()) != want ||
          static_cast<std::int64_t>(dg.y_curves.size()) != want)
        o.fail("(b) curve count: " + tag());
      if (rotation_genus(dg) > want) o.fail("(c) rotation genus: " + tag());
      if (diagram_homology(dg).group() != homology(s).group()) o.fail("(d) H_1: " + tag());
    } catch (const Error& e) {
      o.fail(std::string(e.code()) + " " + e.what() + ": " + tag());
    }
    ++cases;
  }
  o.detail = o.ok ? std::to_string(cases) + " cases" : o.detail;
  return o;
}

std::vector<long> odd_primes_upto(long n) {
  std::vector<long> out;
  for (long p = 3; p <= n; p += 2) {
    bool prime = true;
    for (long q = 3; q * q <= p; q += 2)
      if (p % q == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(p);
  }
  return out;
}

Outcome criterion3() {
  Outcome o;
  std::mt19937_64 rng(77);
  const auto primes = odd_primes_upto(200);
  std::uniform_int_distribution<int> pick_n(1, 6);
  std::uniform_int_distribution<long> pick_alpha(1, 50), pick_beta(-50, 50);
  std::uniform_int_distribution<std::size_t> pick_prime(0, primes.size() - 1);
  std::uniform_int_distribution<long> pick_lambda(0, 4999);
  int composite = 0, done = 0, resampled = 0;
  while (done < 1000) {
    long lambda;
    const bool force_composite = done % 2 == 0;
    if (force_composite) {
      long p, q;
      do {
        p = primes[pick_prime(rng)];
        q = primes[pick_prime(rng)];
      } while (p == q || p * q > 10000);
      lambda = p * q;
      if (pick_n(rng) <= 2 && lambda * 3 <= 10000) lambda *= 3;
    } else {
      lambda = 2 * pick_lambda(rng) + 1;
    }
    const int n = pick_n(rng);
    std::vector<BetaPair> pairs;
    for (int i = 0; i < n; ++i) {
      long a, b;
      do {
        a = pick_alpha(rng);
        b = pick_beta(rng);
        // Bias towards betas sharing a factor with lambda so the
        // adjustment cases are exercised.
        if (i % 2 == 0) {
          long f = 1;
          for (long p : primes)
            if (lambda % p == 0) {
              f = p;
              break;
            }
          b = (b / f) * f;
        }
      } while (std::gcd(a, b) != 1);
      pairs.push_back({a, b});
    }
    // A single slope whose beta shares a factor with lambda admits no
    // solution at all; such draws are not instances.
    if (n == 1 && std::gcd(pairs[0].beta.get_si(), lambda) != 1) {
      ++resampled;
      continue;
    }
    try {
      const auto star = beta_star(pairs, lambda);
      Integer lhs = 0, rhs = 0;
      for (int i = 0; i < n; ++i) {
        if (mod_floor(star[i] - pairs[i].beta, pairs[i].alpha) != 0) o.fail("condition (1)");
        if (gcd(star[i], Integer(lambda)) != 1) o.fail("condition (2)");
        lhs += floor_div(star[i], pairs[i].alpha);
        rhs += floor_div(pairs[i].beta, pairs[i].alpha);
      }
      if (lhs != rhs) o.fail("condition (3)");
    } catch (const Error& e) {
      o.fail(std::string("threw ") + e.code());
    }
    int distinct = 0;
    for (long p : primes)
      if (lambda % p == 0) ++distinct;
    if (distinct >= 2) ++composite;
    ++done;
  }
  if (composite < 300) o.fail("too few composite lambdas");
  if (o.ok)
    o.detail = "1000 instances, " + std::to_string(composite) + " with composite lambda, " +
               std::to_string(resampled) + " unsolvable single-slope draws skipped";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::mt19937_64 rng(4);
  const auto slopes = small_slopes();
  std::uniform_int_distribution<std::size_t> pick_m(0, 3), pick_slope(0, slopes.size() - 1);
  std::uniform_int_distribution<long> pick_e(-5, 5);
  int cases = 0;
  for (long g = 1; g <= 3; ++g) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<FiberInvariant> fibers;
      const std::size_t m = trial < 4 ? static_cast<std::size_t>(trial) : pick_m(rng);
      for (std::size_t i = 0; i < m; ++i) fibers.push_back(slopes[pick_slope(rng)]);
      const SeifertData s = make_normalized(g, fibers, pick_e(rng));
      try {
        const BaseCover bc = base_orbifold_cover(s);
        if (bc.lambda != 2 * g + 1 || bc.base.base_genus != 0 || bc.base.fibers.size() != 3)
          o.fail("base shape");
        if (normalize(lift_seifert(bc.base, bc.spec)) != normalize(s)) o.fail("round trip");
      } catch (const Error& e) {
        o.fail(std::string("threw ") + e.code());
      }
      ++cases;
    }
  }
  if (o.ok) o.detail = std::to_string(cases) + " cases";
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (long g = 0; g <= 20; ++g) {
    const SeifertData s = make_normalized(g, {{2, 1}, {3, 1}}, 1);
    const Integer bound = positive_genus_bound(s);
    if (bound != 2 * g + 2 || lifted_diagram_genus(2, 2 * g + 1) != 2 * g + 2)
      o.fail("g=" + std::to_string(g));
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  struct Row {
    const char* name;
    SeifertData s;
    long hg, lo, hi;
    bool exact;
  };
  const std::vector<Row> rows = {
      {"halves-and-third-m4", make_normalized(0, {{2, 1}, {2, 1}, {2, 1}, {3, 1}}, 2), 2, 3, 3,
       true},
      {"halves-and-third-m6",
       make_normalized(0, {{2, 1}, {2, 1}, {2, 1}, {2, 1}, {2, 1}, {3, 1}}, 3), 4, 4, 5, false},
      {"torus-base-no-fibers", make_normalized(1, {}, 1), 2, 3, 4, false},
      {"genus2-four-fibers", make_normalized(2, {{2, 1}, {3, 1}, {5, 2}, {7, 3}}, 0), 7, 7, 7,
       true},
      {"half-third-seventh", make_normalized(0, {{2, 1}, {3, 1}, {7, 1}}, 1), 2, 2, 2, true},
  };
  json::Json table = json::Json::array();
  for (const auto& row : rows) {
    const GenusReport r = genus_report(row.s);
    if (r.hg != row.hg || r.phg_lo != row.lo || r.phg_hi != row.hi || r.exact != row.exact)
      o.fail(std::string("values for ") + row.name);
    table.push_back(json::Json{{"name", row.name}, {"report", json::to_json(r)}});
  }
  const GenusReport last = genus_report(rows.back().s);
  if (last.horizontal_positive != HorizontalPositivity::Open) o.fail("positivity note not open");
  if (!matches_golden("genus_table.json", table.dump(2) + "\n")) o.fail("golden file differs");
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick_n(1, 5), pick_m(0, 6), pick_len(0, 12), coin(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    Presentation p;
    p.n_generators = pick_n(rng);
    const int m = pick_m(rng);
    std::uniform_int_distribution<int> pick_gen(1, p.n_generators);
    for (int r = 0; r < m; ++r) {
      Word w;
      const int len = pick_len(rng);
      for (int k = 0; k < len; ++k) w.push_back(coin(rng) ? pick_gen(rng) : -pick_gen(rng));
      p.relators.push_back(w);
    }
    const Presentation q = positivize(p);
    if (!is_positive(q)) o.fail("not positive");
    if (q.n_generators != p.n_generators + 1) o.fail("generator count");
    if (q.relators.size() != p.relators.size() + 1) o.fail("relator count");
    if (abelianization(q).group() != abelianization(p).group()) o.fail("abelianization");
  }
  return o;
}

PermutationPair random_pair(std::mt19937_64& rng, int d) {
  PermutationPair p;
  p.sigma_x.resize(static_cast<std::size_t>(d));
  p.sigma_y.resize(static_cast<std::size_t>(d));
  std::iota(p.sigma_x.begin(), p.sigma_x.end(), 1);
  std::iota(p.sigma_y.begin(), p.sigma_y.end(), 1);
  std::shuffle(p.sigma_x.begin(), p.sigma_x.end(), rng);
  std::shuffle(p.sigma_y.begin(), p.sigma_y.end(), rng);
  return p;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> pick_d(1, 50);
  for (int trial = 0; trial < 500; ++trial) {
    const PermutationPair p = random_pair(rng, pick_d(rng));
    const Diagram dg = montesinos_decode(p);
    if (montesinos_encode(dg) != p) o.fail("encode(decode(p)) != p");

    // Scramble the ids and the curve starting points, then go round again.
    std::vector<CrossingId> fresh(dg.crossing_count());
    std::uniform_int_distribution<CrossingId> pick_id(1, 1'000'000);
    std::vector<CrossingId> pool;
    while (pool.size() < fresh.size()) {
      const CrossingId c = pick_id(rng);
      if (std::find(pool.begin(), pool.end(), c) == pool.end()) pool.push_back(c);
    }
    std::map<CrossingId, CrossingId> relabel;
    std::size_t k = 0;
    for (const auto& [id, s] : dg.crossing_signs) relabel[id] = pool[k++];
    Diagram scrambled = relabel_crossings(dg, relabel);
    for (auto& c : scrambled.x_curves)
      std::rotate(c.begin(), c.begin() + static_cast<long>(rng() % c.size()), c.end());
    std::shuffle(scrambled.y_curves.begin(), scrambled.y_curves.end(), rng);

    std::map<CrossingId, CrossingId> rank;
    for (const auto& [id, s] : scrambled.crossing_signs)
      rank[id] = static_cast<CrossingId>(rank.size() + 1);
    const Diagram expected = canonical_form(relabel_crossings(scrambled, rank));
    if (montesinos_decode(montesinos_encode(scrambled)) != expected)
      o.fail("decode(encode(D)) differs from D up to relabeling");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* what;
    std::function<Outcome()> run;
    double limit_s;
  };
  const std::vector<Criterion> all = {
      {1, "normalization of the worked example (golden JSON)", criterion1, 0},
      {2, "positive vertical diagrams over S^2, 3 <= m <= 6", criterion2, 60},
      {3, "beta* conditions on 1000 random instances", criterion3, 5},
      {4, "cyclic base cover round trip, g = 1..3, m <= 3", criterion4, 10},
      {5, "positive genus bound 2g+2 equals lifted genus, g <= 20", criterion5, 0},
      {6, "genus classifier table (golden JSON)", criterion6, 0},
      {7, "positivize on 200 random presentations", criterion7, 5},
      {8, "Montesinos codec round trips", criterion8, 0},
  };
  int failures = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("uncaught: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs > c.limit_s)
      o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s");
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.what;
    std::cout << " [" << static_cast<long>(secs * 1000) << " ms]";
    if (!o.detail.empty()) std::cout << " -- " << o.detail;
    std::cout << "\n";
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
