#include "nlg/verify.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include "nlg/bounds.hpp"
#include "nlg/classical.hpp"
#include "nlg/generators.hpp"
#include "nlg/quantum.hpp"
#include "nlg/rng.hpp"
#include "nlg/tsirelson.hpp"
#include "nlg/xor_solver.hpp"

namespace nlg {

namespace {

using std::numbers::pi;

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

struct Suite {
  std::vector<CheckResult> results;
  void add(int criterion, const std::string& name, bool pass, const std::string& detail) {
    results.push_back({criterion, name, pass, detail});
  }
  void runtime(int criterion, const Timer& timer, double limit) {
    const double s = timer.seconds();
    add(criterion, "criterion " + std::to_string(criterion) + " runtime < " + fmt(limit) + " s",
        s < limit, fmt(s) + " s");
  }
};

bool exact_equals(const ClassicalResult& r, const Rational& want) {
  return r.value_exact && *r.value_exact == want;
}

}  // namespace

Rational naive_classical_value(const ValidatedGame& game) {
  if (!game.all_exact)
    fail(ErrorCode::InvalidArgument, "naive oracle needs exact-rational probabilities");
  // Integer weights over a common denominator keep the exhaustive loop cheap.
  std::int64_t denom = 1;
  for (const SupportEntry& e : game.support)
    denom = std::lcm(denom, e.p.r.den());
  std::vector<std::int64_t> weight(game.support.size());
  for (std::size_t i = 0; i < game.support.size(); ++i)
    weight[i] = game.support[i].p.r.num() * (denom / game.support[i].p.r.den());

  std::vector<int> a(game.n_s(), 0), b(game.n_t(), 0);
  std::int64_t best = -1;
  auto advance = [](std::vector<int>& digits, int radix) {
    for (auto& d : digits) {
      if (++d < radix) return true;
      d = 0;
    }
    return false;
  };
  do {
    std::fill(b.begin(), b.end(), 0);
    do {
      std::int64_t acc = 0;
      for (std::size_t i = 0; i < game.support.size(); ++i) {
        const SupportEntry& e = game.support[i];
        if (game.win(e.s, e.t, a[e.s], b[e.t])) acc += weight[i];
      }
      if (acc > best) best = acc;
    } while (advance(b, game.n_b()));
  } while (advance(a, game.n_a()));
  return Rational(best, denom);
}

ValidatedGame planted_perfect_game(std::uint64_t seed, std::vector<int>* alice_bits,
                                   std::vector<int>* bob_bits) {
  auto rng = rng_stream(seed, "planted-perfect");
  const int n_s = 1 + static_cast<int>(rng() % 4);
  const int n_t = 1 + static_cast<int>(rng() % 4);
  std::vector<int> a_star(n_s), b_star(n_t);
  for (int& v : a_star) v = static_cast<int>(rng() % 2);
  for (int& v : b_star) v = static_cast<int>(rng() % 2);

  GameSpec g = GameSpec::blank(n_s, n_t, 2, 2);
  std::vector<std::pair<int, int>> support;
  for (int s = 0; s < n_s; ++s)
    for (int t = 0; t < n_t; ++t) {
      const bool in_support = support.empty() || rng() % 3 != 0;
      const int parity = a_star[s] ^ b_star[t];
      if (in_support) {
        support.push_back({s, t});
        // Winning set contains every answer pair of the planted parity,
        // sometimes everything (V0 = V1 = 1).
        const bool both = rng() % 4 == 0;
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            g.set_win(s, t, a, b, both || (a ^ b) == parity);
      } else {
        // Off-support predicate values are free; keep them arbitrary.
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) g.set_win(s, t, a, b, rng() % 2 == 0);
      }
    }
  const Rational w(1, static_cast<std::int64_t>(support.size()));
  for (auto [s, t] : support) g.pi.push_back({s, t, ProbValue(w)});
  if (alice_bits) *alice_bits = a_star;
  if (bob_bits) *bob_bits = b_star;
  return validate(g);
}

ValidatedGame random_xor_game(std::uint64_t seed, int n_s, int n_t) {
  auto rng = rng_stream(seed, "random-xor");
  GameSpec g = GameSpec::blank(n_s, n_t, 2, 2);
  while (true) {
    std::vector<std::int64_t> weights(static_cast<std::size_t>(n_s) * n_t);
    std::int64_t total = 0;
    for (auto& w : weights) {
      w = static_cast<std::int64_t>(rng() % 5);
      total += w;
    }
    if (total == 0) continue;
    g.pi.clear();
    for (int s = 0; s < n_s; ++s)
      for (int t = 0; t < n_t; ++t) {
        const std::int64_t w = weights[static_cast<std::size_t>(s) * n_t + t];
        if (w > 0) g.pi.push_back({s, t, ProbValue(Rational(w, total))});
        const int v0 = static_cast<int>(rng() % 2);
        const int v1 = static_cast<int>(rng() % 2);
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) g.set_win(s, t, a, b, (a ^ b) ? v1 : v0);
      }
    return validate(g);
  }
}

namespace {

void criterion_chsh(Suite& suite, std::uint64_t seed) {
  Timer timer;
  const ValidatedGame game = chsh();
  const ClassicalResult classical = classical_value(game);
  suite.add(1, "CHSH omega_c = 3/4 exactly", exact_equals(classical, Rational(3, 4)),
            "value " + (classical.value_exact ? classical.value_exact->str() : fmt(classical.value)));
  XorSolveOptions opts;
  opts.seed = seed;
  const XorSolveResult solved = quantum_value_xor(*game.xor_form, opts);
  const double target = std::cos(pi / 8.0) * std::cos(pi / 8.0);
  // The dual certificate is sound up to its 1e-10 eigenvalue tolerance.
  const bool in_range = solved.value >= target - 1e-7 && solved.value <= solved.dual_bound + 1e-10;
  suite.add(1, "CHSH omega_q = cos^2(pi/8) within solver bracket", in_range,
            "value " + fmt(solved.value) + ", target " + fmt(target) + ", dual " +
                fmt(solved.dual_bound));
  suite.add(1, "CHSH dual gap < 1e-7", solved.gap < 1e-7, "gap " + fmt(solved.gap));
  suite.runtime(1, timer, 1.0);
}

void criterion_odd_cycle(Suite& suite, std::uint64_t seed) {
  Timer timer;
  bool classical_ok = true, quantum_ok = true, gap_ok = true;
  std::string detail_c, detail_q;
  for (int n : {3, 5, 7, 9}) {
    const ValidatedGame game = odd_cycle(n);
    const ClassicalResult classical = classical_value(game);
    classical_ok = classical_ok && exact_equals(classical, Rational(2 * n - 1, 2 * n));
    detail_c += "n=" + std::to_string(n) + ": " +
                (classical.value_exact ? classical.value_exact->str() : "inexact") + "  ";
    XorSolveOptions opts;
    opts.seed = seed + n;
    const XorSolveResult solved = quantum_value_xor(*game.xor_form, opts);
    const double target = std::cos(pi / (4.0 * n)) * std::cos(pi / (4.0 * n));
    quantum_ok = quantum_ok && std::abs(solved.value - target) < 1e-6;
    gap_ok = gap_ok && solved.gap < 1e-6;
    detail_q += "n=" + std::to_string(n) + ": " + fmt(solved.value) + " (target " + fmt(target) +
                ", gap " + fmt(solved.gap) + ")  ";
  }
  suite.add(2, "odd cycle omega_c = 1 - 1/2n exactly for n in {3,5,7,9}", classical_ok, detail_c);
  suite.add(2, "odd cycle omega_q = cos^2(pi/4n) within 1e-6, certified gap < 1e-6", quantum_ok && gap_ok,
            detail_q);
  suite.runtime(2, timer, 10.0);
}

void criterion_magic_square(Suite& suite) {
  Timer timer;
  const ValidatedGame game = magic_square();
  const ClassicalResult classical = classical_value(game);
  suite.add(3, "magic square omega_c = 17/18 exactly", exact_equals(classical, Rational(17, 18)),
            "value " + (classical.value_exact ? classical.value_exact->str() : fmt(classical.value)));
  const double win = win_probability(game, builtin_magic_square());
  suite.add(3, "magic square built-in strategy is perfect", std::abs(win - 1.0) <= 1e-10,
            "win probability " + fmt(win));
  suite.runtime(3, timer, 5.0);
}

void criterion_kochen_specker(Suite& suite) {
  Timer timer;
  bool valid = true;
  std::string detail;
  try {
    ks_asset().check();
    detail = std::to_string(ks_asset().vectors.size()) + " vectors, " +
             std::to_string(ks_asset().triples.size()) + " triples";
  } catch (const Error& e) {
    valid = false;
    detail = e.what();
  }
  suite.add(4, "KS vector set passes orthogonality validation", valid, detail);
  if (!valid) {
    suite.runtime(4, timer, 60.0);
    return;
  }
  const KsSearchResult search = ks_color_search(ks_asset());
  suite.add(4, "KS backtracking search returns UNCOLORABLE", !search.colorable,
            std::to_string(search.nodes) + " nodes");
  const ValidatedGame game = kochen_specker(ks_asset());
  const double win = win_probability(game, builtin_ks(ks_asset()));
  suite.add(4, "KS built-in strategy is perfect", std::abs(win - 1.0) <= 1e-10,
            "win probability " + fmt(win));
  suite.runtime(4, timer, 60.0);
}

void criterion_three_sat(Suite& suite) {
  Timer timer;
  const CnfFormula f = magic_square_formula();
  suite.add(5, "magic-square formula has 24 clauses over 9 variables",
            f.clauses.size() == 24 && f.n_vars == 9,
            std::to_string(f.clauses.size()) + " clauses, " + std::to_string(f.n_vars) + " vars");

  // Exhaustive 2^9 scan, independent of any solver.
  bool satisfiable = false;
  for (int mask = 0; mask < (1 << 9) && !satisfiable; ++mask) {
    bool all = true;
    for (const auto& clause : f.clauses) {
      bool sat = false;
      for (const Literal& l : clause)
        if ((((mask >> l.var) & 1) != 0) != l.negated) sat = true;
      if (!sat) {
        all = false;
        break;
      }
    }
    satisfiable = all;
  }
  suite.add(5, "formula unsatisfiable by exhaustive scan", !satisfiable, "512 assignments");

  const ValidatedGame game = three_sat(f);
  const ClassicalResult classical = classical_value(game);
  const bool bounded = classical.value_exact && *classical.value_exact <= Rational(71, 72);
  suite.add(5, "3-SAT game omega_c <= 1 - 1/72",
            bounded, "value " + (classical.value_exact ? classical.value_exact->str() : "inexact"));
  const double win = win_probability(game, builtin_threesat_magic());
  suite.add(5, "lifted magic-square strategy defeats the 3-SAT game", std::abs(win - 1.0) <= 1e-10,
            "win probability " + fmt(win));
  suite.runtime(5, timer, 30.0);
}

void criterion_extraction(Suite& suite, std::uint64_t seed) {
  Timer timer;
  int failures = 0;
  std::string first_failure;
  for (int i = 0; i < 50; ++i) {
    std::vector<int> a_star, b_star;
    const ValidatedGame game = planted_perfect_game(splitmix64(seed) + i, &a_star, &b_star);
    ObservableStrategy o;
    if (i % 2 == 0) {
      // Scalar lift: one-dimensional +-1 observables reproduce the planted
      // answers outright.
      o.dim_a = o.dim_b = 1;
      o.psi = Vec::Ones(1);
      for (int s = 0; s < game.n_s(); ++s)
        o.alice.push_back(Mat::Constant(1, 1, a_star[s] ? -1.0 : 1.0));
      for (int t = 0; t < game.n_t(); ++t)
        o.bob.push_back(Mat::Constant(1, 1, b_star[t] ? -1.0 : 1.0));
    } else {
      // sigma_z lift on the maximally entangled pair: answers are uniformly
      // random bits with the planted parity.
      o.dim_a = o.dim_b = 2;
      o.psi = maximally_entangled(2);
      for (int s = 0; s < game.n_s(); ++s)
        o.alice.push_back((a_star[s] ? -1.0 : 1.0) * pauli_z());
      for (int t = 0; t < game.n_t(); ++t)
        o.bob.push_back((b_star[t] ? -1.0 : 1.0) * pauli_z());
    }
    try {
      const DeterministicStrategy d = extract_classical_from_perfect(game, o);
      const auto value = evaluate_deterministic_exact(game, d);
      if (!value || *value != Rational(1)) {
        ++failures;
        if (first_failure.empty())
          first_failure = "instance " + std::to_string(i) + " extracted value " +
                          (value ? value->str() : std::string("inexact"));
      }
    } catch (const Error& e) {
      ++failures;
      if (first_failure.empty())
        first_failure = "instance " + std::to_string(i) + ": " + e.what();
    }
  }
  suite.add(6, "extraction perfect on 50 planted perfect binary games", failures == 0,
            failures == 0 ? "all extracted strategies win exactly" : first_failure);

  // The sigma_z agreement example.
  GameSpec g = GameSpec::blank(2, 2, 2, 2);
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t) {
      g.pi.push_back({s, t, ProbValue(Rational(1, 4))});
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) g.set_win(s, t, a, b, a == b);
    }
  const ValidatedGame agreement = validate(g);
  ObservableStrategy o;
  o.dim_a = o.dim_b = 2;
  o.psi = maximally_entangled(2);
  o.alice = {pauli_z(), pauli_z()};
  o.bob = {pauli_z(), pauli_z()};
  bool ok = false;
  std::string detail;
  try {
    const DeterministicStrategy d = extract_classical_from_perfect(agreement, o);
    const auto value = evaluate_deterministic_exact(agreement, d);
    ok = value && *value == Rational(1) && d.a[0] == d.a[1] && d.a[0] == d.b[0];
    detail = "a = (" + std::to_string(d.a[0]) + ", " + std::to_string(d.a[1]) + "), b = (" +
             std::to_string(d.b[0]) + ", " + std::to_string(d.b[1]) + ")";
  } catch (const Error& e) {
    detail = e.what();
  }
  suite.add(6, "extraction on the sigma_z agreement game yields constant answers", ok, detail);
}

void criterion_tsirelson(Suite& suite, std::uint64_t seed) {
  int failures = 0;
  double worst = 0.0;
  std::string first_failure;
  for (int i = 0; i < 100; ++i) {
    auto rng = rng_stream(seed, "tsirelson-roundtrip", static_cast<std::uint64_t>(i));
    VectorStrategy vs;
    vs.m = 1 + static_cast<int>(rng() % 8);
    const int n_s = 1 + static_cast<int>(rng() % 3);
    const int n_t = 1 + static_cast<int>(rng() % 3);
    for (int s = 0; s < n_s; ++s) vs.u.push_back(random_unit_vector(rng, vs.m));
    for (int t = 0; t < n_t; ++t) vs.v.push_back(random_unit_vector(rng, vs.m));
    try {
      const ObservableStrategy o = vectors_to_strategy(vs);
      const VectorStrategy back = strategy_to_vectors(o);
      for (int s = 0; s < n_s; ++s)
        for (int t = 0; t < n_t; ++t) {
          const double want = vs.u[s].dot(vs.v[t]);
          const double corr = correlation(o.psi, o.alice[s], o.bob[t]);
          const double got = back.u[s].dot(back.v[t]);
          worst = std::max({worst, std::abs(corr - want), std::abs(got - want)});
        }
    } catch (const Error& e) {
      ++failures;
      if (first_failure.empty()) first_failure = e.what();
    }
  }
  suite.add(7, "Tsirelson correspondence on 100 random families (m <= 8)",
            failures == 0 && worst < 1e-9,
            failures ? first_failure : "worst correlation error " + fmt(worst));
}

void criterion_gamma(Suite& suite) {
  const GammaConstants& c = gamma_constants();
  suite.add(8, "gamma_2 = 0.74202 +- 5e-6", std::abs(c.gamma2 - 0.74202) <= 5e-6,
            "gamma_2 " + fmt(c.gamma2));
  suite.add(8, "gamma_1 = 1.1382 +- 5e-5", std::abs(c.gamma1 - 1.1382) <= 5e-5,
            "gamma_1 " + fmt(c.gamma1));
  suite.add(8, "tangency residual < 1e-12", c.residual < 1e-12, "residual " + fmt(c.residual));
}

void criterion_bound_suite(Suite& suite, std::uint64_t seed) {
  XorSolveOptions opts;
  opts.seed = seed;

  const BoundsReport chsh_report = check_bounds(chsh(), opts);
  const double ratio = (chsh_report.omega_q_value - chsh_report.tau) /
                       (chsh_report.omega_c - chsh_report.tau);
  suite.add(9, "CHSH (omega_q - tau) / (omega_c - tau) = sqrt(2) +- 1e-6",
            std::abs(ratio - std::sqrt(2.0)) <= 1e-6, "ratio " + fmt(ratio));

  bool all_pass = chsh_report.pass();
  std::string detail = "chsh ok; ";
  for (int n : {3, 5, 7}) {
    const BoundsReport r = check_bounds(odd_cycle(n), opts);
    all_pass = all_pass && r.pass();
    // Corollary: the g bound is tight on odd cycles.
    all_pass = all_pass && std::abs(r.g_bound - r.omega_q_dual) < 1e-7;
    detail += "n=" + std::to_string(n) + " slack " + fmt(r.g_bound - r.omega_q_dual) + "; ";
  }
  suite.add(9, "g bound tight on odd cycles n in {3,5,7}", all_pass, detail);

  int failures = 0;
  std::string first_failure;
  for (int i = 0; i < 100; ++i) {
    const ValidatedGame game = random_xor_game(splitmix64(seed ^ 0x9e21) + i, 3, 3);
    XorSolveOptions o2;
    o2.seed = splitmix64(seed) + i;
    const BoundsReport r = check_bounds(game, o2);
    if (!r.pass()) {
      ++failures;
      if (first_failure.empty())
        first_failure = "game " + std::to_string(i) + ": dual " + fmt(r.omega_q_dual) +
                        ", g bound " + fmt(r.g_bound) + ", kg rhs " + fmt(r.kg_upper_rhs);
    }
  }
  suite.add(9, "both bounds hold on 100 random 3x3 XOR games", failures == 0,
            failures == 0 ? "all passed" : first_failure);
}

void criterion_jl(Suite& suite, std::uint64_t seed) {
  Timer timer;
  bool ok = true;
  std::string detail;
  for (const char* which : {"chsh", "odd5"}) {
    const ValidatedGame game = std::string(which) == "chsh" ? chsh() : odd_cycle(5);
    XorSolveOptions opts;
    opts.seed = seed;
    const XorSolveResult solved = quantum_value_xor(*game.xor_form, opts);
    const JlReduction red = jl_reduce(solved.vectors, 0.05, seed);
    double excess = 0.0;
    const XorGame& x = *game.xor_form;
    for (int s = 0; s < x.n_s; ++s)
      for (int t = 0; t < x.n_t; ++t) excess += x.d(s, t) * red.vectors.u[s].dot(red.vectors.v[t]);
    const double reduced_value = x.tau() + excess / 2.0;
    const bool good = reduced_value > solved.value - 0.05 && red.worst_pair_distortion <= 0.05;
    ok = ok && good;
    detail += std::string(which) + ": K " + std::to_string(red.k) +
              (red.identity ? " (identity map)" : "") + ", reduced value " + fmt(reduced_value) +
              ", distortion " + fmt(red.worst_pair_distortion) + "; ";
  }
  suite.add(10, "JL reduction at eps = 0.05 keeps value within eps", ok, detail);
  suite.runtime(10, timer, 30.0);
}

void criterion_oracles(Suite& suite, std::uint64_t seed) {
  struct Candidate {
    std::string name;
    ValidatedGame game;
  };
  std::vector<Candidate> games;
  games.push_back({"chsh", chsh()});
  for (int n : {3, 5, 7, 9}) games.push_back({"odd_cycle(" + std::to_string(n) + ")", odd_cycle(n)});
  Graph triangle{3, {{0, 1}, {1, 2}, {0, 2}}};
  games.push_back({"coloring(C3, 3)", graph_coloring(triangle, 3)});
  Graph c5{5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}};
  games.push_back({"coloring(C5, 2)", graph_coloring(c5, 2)});
  games.push_back({"coloring(H2, 2)", graph_coloring(hamming_graph(2), 2)});
  CnfFormula simple;
  simple.n_vars = 3;
  simple.clauses.push_back({Literal{0, false}, Literal{1, false}, Literal{2, false}});
  games.push_back({"three_sat(x|y|z)", three_sat(simple)});
  KsVectorSet basis;
  basis.vectors = {Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(0, 1, 0), Eigen::Vector3d(0, 0, 1)};
  basis.triples = {{0, 1, 2}};
  games.push_back({"kochen_specker(basis)", kochen_specker(basis)});

  bool all_match = true;
  std::string detail;
  for (const auto& candidate : games) {
    const double alice = std::pow(candidate.game.n_a(), candidate.game.n_s());
    const double bob = std::pow(candidate.game.n_b(), candidate.game.n_t());
    if (alice * bob > 1e6) {
      all_match = false;
      detail += candidate.name + " exceeds the oracle size bound; ";
      continue;
    }
    const Rational oracle = naive_classical_value(candidate.game);
    const ClassicalResult solver = classical_value(candidate.game);
    if (!solver.value_exact || *solver.value_exact != oracle) {
      all_match = false;
      detail += candidate.name + ": solver " +
                (solver.value_exact ? solver.value_exact->str() : "inexact") + " vs oracle " +
                oracle.str() + "; ";
    }
  }
  suite.add(11, "classical solver matches naive double enumeration", all_match,
            all_match ? std::to_string(games.size()) + " games compared exactly" : detail);

  bool grid_ok = true;
  double worst = 0.0;
  XorSolveOptions opts;
  opts.seed = seed;
  const XorSolveResult chsh_solved = quantum_value_xor(*chsh().xor_form, opts);
  const double chsh_oracle = quantum_value_bruteforce(*chsh().xor_form, 2, 1e-3);
  worst = std::abs(chsh_solved.value - chsh_oracle);
  for (int i = 0; i < 20; ++i) {
    const ValidatedGame game = random_xor_game(splitmix64(seed ^ 0x51) + i, 2, 2);
    XorSolveOptions o2;
    o2.seed = splitmix64(seed) + i;
    const XorSolveResult solved = quantum_value_xor(*game.xor_form, o2);
    const double oracle = quantum_value_bruteforce(*game.xor_form, 2, 1e-3);
    worst = std::max(worst, std::abs(solved.value - oracle));
    grid_ok = grid_ok && std::abs(solved.value - oracle) <= 1e-4;
  }
  suite.add(11, "XOR solver matches the grid oracle within 1e-4 on 2x2 games",
            grid_ok && worst <= 1e-4, "worst deviation " + fmt(worst));
}

}  // namespace

std::vector<CheckResult> run_paper_checks(std::uint64_t seed) {
  Suite suite;
  criterion_chsh(suite, seed);
  criterion_odd_cycle(suite, seed);
  criterion_magic_square(suite);
  criterion_kochen_specker(suite);
  criterion_three_sat(suite);
  criterion_extraction(suite, seed);
  criterion_tsirelson(suite, seed);
  criterion_gamma(suite);
  criterion_bound_suite(suite, seed);
  criterion_jl(suite, seed);
  criterion_oracles(suite, seed);
  return suite.results;
}

bool print_paper_checks(const std::vector<CheckResult>& results, std::ostream& out) {
  bool all = true;
  int criterion = 0;
  for (const CheckResult& r : results) {
    if (r.criterion != criterion) {
      criterion = r.criterion;
      out << "criterion " << criterion << "\n";
    }
    out << "  [" << (r.pass ? "PASS" : "FAIL") << "] " << r.name;
    if (!r.detail.empty()) out << "  -- " << r.detail;
    out << "\n";
    all = all && r.pass;
  }
  out << (all ? "all criteria PASS" : "verification FAILED") << "\n";
  return all;
}

}  // namespace nlg
