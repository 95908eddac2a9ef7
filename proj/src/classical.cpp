#include "nlg/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nlg {

namespace {

// nA^nS with saturation so the cap comparison cannot overflow.
std::uint64_t saturating_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

// Mirror of the game with Alice and Bob swapped, so the enumeration core can
// always enumerate Bob's side.
ValidatedGame transpose_game(const ValidatedGame& g) {
  GameSpec spec = GameSpec::blank(g.n_t(), g.n_s(), g.n_b(), g.n_a());
  for (const PiEntry& e : g.spec.pi) spec.pi.push_back({e.t, e.s, e.p});
  for (int s = 0; s < g.n_s(); ++s)
    for (int t = 0; t < g.n_t(); ++t)
      for (int a = 0; a < g.n_a(); ++a)
        for (int b = 0; b < g.n_b(); ++b) spec.set_win(t, s, b, a, g.win(s, t, a, b));
  return validate(spec);
}

// Mixed-radix reflected Gray iteration: exactly one digit changes per step.
struct GrayCounter {
  std::vector<int> digits;
  std::vector<int> dir;
  int radix;

  GrayCounter(int length, int radix) : digits(length, 0), dir(length, 1), radix(radix) {}

  // Advances to the next code; returns the changed position or -1 when done.
  int step() {
    for (std::size_t i = 0; i < digits.size(); ++i) {
      const int nd = digits[i] + dir[i];
      if (nd < 0 || nd >= radix) {
        dir[i] = -dir[i];
      } else {
        digits[i] = nd;
        return static_cast<int>(i);
      }
    }
    return -1;
  }
};

template <typename Scalar>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational weight(const ProbValue& p) { return p.r; }
  static double to_double(const Rational& v) { return v.to_double(); }
  static std::optional<Rational> exact(const Rational& v) { return v; }
};

template <>
struct ScalarOps<double> {
  static double zero() { return 0.0; }
  static double weight(const ProbValue& p) { return p.value(); }
  static double to_double(double v) { return v; }
  static std::optional<Rational> exact(double) { return std::nullopt; }
};

// Core: enumerate Bob's answer functions; Alice best-responds per question.
// M[s][a] = sum_t pi(s,t) V(a, b(t) | s, t) is maintained incrementally as
// single Gray digits change.
template <typename Scalar>
ClassicalResult enumerate_bob(const ValidatedGame& g) {
  using Ops = ScalarOps<Scalar>;
  const int n_s = g.n_s(), n_t = g.n_t(), n_a = g.n_a(), n_b = g.n_b();

  // Support grouped by Bob question for incremental updates.
  std::vector<std::vector<std::pair<int, Scalar>>> column(n_t);  // t -> (s, pi)
  for (const SupportEntry& e : g.support) column[e.t].push_back({e.s, Ops::weight(e.p)});

  std::vector<std::vector<Scalar>> m(n_s, std::vector<Scalar>(n_a, Ops::zero()));
  GrayCounter gray(n_t, n_b);
  // Initialize with b = all zeros.
  for (int t = 0; t < n_t; ++t)
    for (const auto& [s, w] : column[t])
      for (int a = 0; a < n_a; ++a)
        if (g.win(s, t, a, 0)) m[s][a] += w;

  std::vector<Scalar> row_best(n_s, Ops::zero());
  auto best_of_row = [&](int s) {
    Scalar best = m[s][0];
    for (int a = 1; a < n_a; ++a)
      if (best < m[s][a]) best = m[s][a];
    return best;
  };
  Scalar total = Ops::zero();
  for (int s = 0; s < n_s; ++s) {
    row_best[s] = best_of_row(s);
    total += row_best[s];
  }

  Scalar best_total = total;
  std::vector<int> best_b = gray.digits;
  std::uint64_t work = 1;

  while (true) {
    const int t = gray.step();
    if (t < 0) break;
    ++work;
    const int b_new = gray.digits[t];
    // The step changed exactly one digit; reconstruct its previous value from
    // the direction bookkeeping: previous = current - dir after update? The
    // counter flips direction only on reflection, so previous = b_new - dir.
    const int b_old = b_new - gray.dir[t];
    for (const auto& [s, w] : column[t]) {
      for (int a = 0; a < n_a; ++a) {
        const bool won_old = g.win(s, t, a, b_old);
        const bool won_new = g.win(s, t, a, b_new);
        if (won_old == won_new) continue;
        if (won_new)
          m[s][a] += w;
        else
          m[s][a] -= w;
      }
      total -= row_best[s];
      row_best[s] = best_of_row(s);
      total += row_best[s];
    }
    if (best_total < total || (total == best_total && gray.digits < best_b)) {
      best_total = total;
      best_b = gray.digits;
    }
  }

  // Rebuild Alice's best response for the winning b (lowest answer index on
  // ties) and recompute the value from scratch to shed accumulated updates.
  ClassicalResult out;
  out.strategy.b = best_b;
  out.strategy.a.assign(n_s, 0);
  for (int s = 0; s < n_s; ++s)
    for (int a = 0; a < n_a; ++a) m[s][a] = Ops::zero();
  for (int t = 0; t < n_t; ++t)
    for (const auto& [s, w] : column[t])
      for (int a = 0; a < n_a; ++a)
        if (g.win(s, t, a, best_b[t])) m[s][a] += w;
  Scalar value = Ops::zero();
  for (int s = 0; s < n_s; ++s) {
    int arg = 0;
    for (int a = 1; a < n_a; ++a)
      if (m[s][arg] < m[s][a]) arg = a;
    out.strategy.a[s] = arg;
    value += m[s][arg];
  }
  out.value = Ops::to_double(value);
  out.value_exact = Ops::exact(value);
  out.work_factor = work;
  out.enumerated_side = Side::Bob;
  return out;
}

}  // namespace

ClassicalResult classical_value(const ValidatedGame& game, std::uint64_t cap) {
  const std::uint64_t alice_size = saturating_pow(game.n_a(), game.n_s());
  const std::uint64_t bob_size = saturating_pow(game.n_b(), game.n_t());
  if (std::min(alice_size, bob_size) > cap)
    fail(ErrorCode::SearchSpaceTooLarge,
         "smaller side has " + std::to_string(std::min(alice_size, bob_size)) +
             " functions (alice " + std::to_string(alice_size) + ", bob " +
             std::to_string(bob_size) + "), cap " + std::to_string(cap));

  const bool swap = alice_size < bob_size;
  const ValidatedGame* target = &game;
  ValidatedGame transposed;
  if (swap) {
    transposed = transpose_game(game);
    target = &transposed;
  }
  ClassicalResult r = game.all_exact ? enumerate_bob<Rational>(*target) : enumerate_bob<double>(*target);
  if (swap) {
    std::swap(r.strategy.a, r.strategy.b);
    r.enumerated_side = Side::Alice;
  }
  return r;
}

ClassicalResult classical_value_xor(const XorGame& x, std::uint64_t cap) {
  const std::uint64_t smaller = saturating_pow(2, std::min(x.n_s, x.n_t));
  if (smaller > cap)
    fail(ErrorCode::SearchSpaceTooLarge,
         "2^" + std::to_string(std::min(x.n_s, x.n_t)) + " sign vectors exceed cap " +
             std::to_string(cap));

  // Work on the orientation that enumerates the smaller side as "bob".
  const bool swap = x.n_s < x.n_t;
  const int n_e = swap ? x.n_s : x.n_t;  // enumerated count
  const int n_r = swap ? x.n_t : x.n_s;  // responding count
  auto d_of = [&](int r, int e) { return swap ? x.d(e, r) : x.d(r, e); };

  std::vector<int> sign(n_e, +1);
  std::vector<double> row(n_r, 0.0);  // row[r] = sum_e D(r,e) * sign_e
  for (int r = 0; r < n_r; ++r)
    for (int e = 0; e < n_e; ++e) row[r] += d_of(r, e);
  double total = 0.0;
  for (double v : row) total += std::abs(v);

  double best_total = total;
  std::vector<int> best_sign = sign;
  auto lex_less = [](const std::vector<int>& a, const std::vector<int>& b) {
    // +1 encodes answer bit 0, so +1 sorts before -1.
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  };
  GrayCounter gray(n_e, 2);
  std::uint64_t work = 1;
  while (true) {
    const int e = gray.step();
    if (e < 0) break;
    ++work;
    sign[e] = -sign[e];
    for (int r = 0; r < n_r; ++r) {
      total -= std::abs(row[r]);
      row[r] += 2.0 * sign[e] * d_of(r, e);
      total += std::abs(row[r]);
    }
    if (total > best_total || (total == best_total && lex_less(sign, best_sign))) {
      best_total = total;
      best_sign = sign;
    }
  }

  // Recompute exactly for the winning sign vector.
  std::vector<int> resp(n_r, +1);
  const bool exact = x.all_exact();
  Rational excess_exact;
  double excess = 0.0;
  {
    for (int r = 0; r < n_r; ++r) {
      double acc = 0.0;
      for (int e = 0; e < n_e; ++e) acc += d_of(r, e) * best_sign[e];
      resp[r] = acc >= 0.0 ? +1 : -1;  // sign(0) = +1
    }
    if (exact) {
      for (int r = 0; r < n_r; ++r) {
        Rational acc;
        for (int e = 0; e < n_e; ++e) {
          Rational d = swap ? x.d_exact(e, r) : x.d_exact(r, e);
          acc += d * Rational(best_sign[e]);
        }
        // Re-derive the response from the exact row sum; double roundoff must
        // not pick the wrong side of a tie.
        resp[r] = acc >= Rational(0) ? +1 : -1;
        excess_exact += acc.abs();
      }
    }
    for (int r = 0; r < n_r; ++r) {
      double acc = 0.0;
      for (int e = 0; e < n_e; ++e) acc += d_of(r, e) * best_sign[e];
      excess += std::abs(acc);
    }
  }

  ClassicalResult out;
  auto to_bit = [](int s) { return s > 0 ? 0 : 1; };  // +1 <-> 0, -1 <-> 1
  std::vector<int> bits_e(n_e), bits_r(n_r);
  for (int e = 0; e < n_e; ++e) bits_e[e] = to_bit(best_sign[e]);
  for (int r = 0; r < n_r; ++r) bits_r[r] = to_bit(resp[r]);
  if (swap) {
    out.strategy.a = bits_e;
    out.strategy.b = bits_r;
    out.enumerated_side = Side::Alice;
  } else {
    out.strategy.a = bits_r;
    out.strategy.b = bits_e;
    out.enumerated_side = Side::Bob;
  }
  out.work_factor = work;
  if (exact) {
    Rational v = x.tau_exact() + excess_exact / Rational(2);
    out.value_exact = v;
    out.value = v.to_double();
  } else {
    out.value = x.tau() + excess / 2.0;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Kochen-Specker coloring search
// ---------------------------------------------------------------------------

namespace {

struct KsProblem {
  int n = 0;
  std::vector<std::vector<int>> neighbors;          // orthogonal partners
  std::vector<std::array<int, 3>> triples;
  std::vector<std::vector<int>> triples_of_vector;
};

constexpr std::int8_t kUnset = -1;

// Assign color and propagate: a 1 zeroes all orthogonal partners; a triple
// with two 0s forces its last member to 1. Returns false on contradiction.
bool assign(const KsProblem& p, std::vector<std::int8_t>& color, int v, int value) {
  std::vector<std::pair<int, int>> queue{{v, value}};
  while (!queue.empty()) {
    auto [u, val] = queue.back();
    queue.pop_back();
    if (color[u] != kUnset) {
      if (color[u] != val) return false;
      continue;
    }
    color[u] = static_cast<std::int8_t>(val);
    if (val == 1) {
      for (int w : p.neighbors[u]) {
        if (color[w] == 1) return false;
        if (color[w] == kUnset) queue.push_back({w, 0});
      }
    }
    for (int ti : p.triples_of_vector[u]) {
      const auto& tr = p.triples[ti];
      int zeros = 0, unset = -1;
      bool has_one = false;
      for (int w : tr) {
        if (color[w] == 0) ++zeros;
        else if (color[w] == 1) has_one = true;
        else unset = w;
      }
      if (has_one) continue;
      if (zeros == 3) return false;
      if (zeros == 2 && unset >= 0) queue.push_back({unset, 1});
    }
  }
  return true;
}

bool search(const KsProblem& p, std::vector<std::int8_t>& color, std::uint64_t& nodes) {
  ++nodes;
  // Branch on the first unset vector inside a triple that has no 1 yet.
  int branch = -1;
  for (std::size_t ti = 0; ti < p.triples.size() && branch < 0; ++ti) {
    const auto& tr = p.triples[ti];
    bool has_one = false;
    int unset = -1;
    for (int w : tr) {
      if (color[w] == 1) has_one = true;
      else if (color[w] == kUnset && unset < 0) unset = w;
    }
    if (!has_one && unset >= 0) branch = unset;
  }
  if (branch < 0) {
    // Every triple owns a 1; any remaining unset vector can safely be 0.
    return true;
  }
  for (int value : {1, 0}) {
    std::vector<std::int8_t> trial = color;
    if (assign(p, trial, branch, value) && search(p, trial, nodes)) {
      color = trial;
      return true;
    }
  }
  return false;
}

}  // namespace

KsSearchResult ks_color_search(const KsVectorSet& ks) {
  const int n = static_cast<int>(ks.vectors.size());
  if (n > 64) fail(ErrorCode::TooManyVectors, "search capped at 64 vectors, got " + std::to_string(n));

  KsProblem p;
  p.n = n;
  p.neighbors.resize(n);
  p.triples = ks.triples;
  p.triples_of_vector.resize(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && std::abs(ks.vectors[i].dot(ks.vectors[j])) <= 1e-12)
        p.neighbors[i].push_back(j);
  for (std::size_t ti = 0; ti < p.triples.size(); ++ti)
    for (int w : p.triples[ti]) p.triples_of_vector[w].push_back(static_cast<int>(ti));

  KsSearchResult out;
  std::vector<std::int8_t> color(n, kUnset);
  out.colorable = search(p, color, out.nodes);
  if (out.colorable) {
    out.coloring.resize(n);
    for (int i = 0; i < n; ++i) out.coloring[i] = color[i] == 1 ? 1 : 0;
    // Direct check of both conditions on the returned coloring.
    for (int i = 0; i < n; ++i)
      for (int j : p.neighbors[i])
        if (out.coloring[i] == 1 && out.coloring[j] == 1)
          fail(ErrorCode::InvalidTriples, "search returned a coloring violating the pair condition");
    for (const auto& tr : p.triples)
      if (!out.coloring[tr[0]] && !out.coloring[tr[1]] && !out.coloring[tr[2]])
        fail(ErrorCode::InvalidTriples, "search returned a coloring violating the triple condition");
  }
  return out;
}

}  // namespace nlg
