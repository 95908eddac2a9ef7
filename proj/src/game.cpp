#include "nlg/game.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace nlg {

namespace {

constexpr double kNormalizationTol = 1e-12;

void check_counts(int n_s, int n_t, int n_a, int n_b) {
  if (n_s < 1 || n_t < 1 || n_a < 1 || n_b < 1)
    fail(ErrorCode::SchemaViolation, "question/answer counts must be positive");
}

}  // namespace

GameSpec GameSpec::blank(int n_s, int n_t, int n_a, int n_b) {
  check_counts(n_s, n_t, n_a, n_b);
  const std::uint64_t table = std::uint64_t(n_s) * n_t * n_a * n_b;
  if (table > (std::uint64_t(1) << 28))
    fail(ErrorCode::TooLarge, "predicate table would need " + std::to_string(table) + " entries");
  GameSpec g;
  g.n_s = n_s;
  g.n_t = n_t;
  g.n_a = n_a;
  g.n_b = n_b;
  g.wins.assign(table, 0);
  return g;
}

bool operator==(const GameSpec& a, const GameSpec& b) {
  auto key = [](const GameSpec& g) {
    std::vector<PiEntry> pi = g.pi;
    std::sort(pi.begin(), pi.end(),
              [](const PiEntry& x, const PiEntry& y) { return std::tie(x.s, x.t) < std::tie(y.s, y.t); });
    return pi;
  };
  if (a.n_s != b.n_s || a.n_t != b.n_t || a.n_a != b.n_a || a.n_b != b.n_b) return false;
  if (a.wins != b.wins) return false;
  std::vector<PiEntry> pa = key(a), pb = key(b);
  if (pa.size() != pb.size()) return false;
  for (std::size_t i = 0; i < pa.size(); ++i)
    if (pa[i].s != pb[i].s || pa[i].t != pb[i].t || !(pa[i].p == pb[i].p)) return false;
  return true;
}

bool XorGame::all_exact() const {
  for (const auto& p : pi)
    if (!p.exact) return false;
  return true;
}

double XorGame::tau() const {
  double acc = 0.0;
  for (int s = 0; s < n_s; ++s)
    for (int t = 0; t < n_t; ++t)
      acc += pi[idx(s, t)].value() * (v0[idx(s, t)] + v1[idx(s, t)]);
  return acc / 2.0;
}

Rational XorGame::tau_exact() const {
  Rational acc;
  for (int s = 0; s < n_s; ++s)
    for (int t = 0; t < n_t; ++t)
      acc += pi[idx(s, t)].r * Rational(v0[idx(s, t)] + v1[idx(s, t)]);
  return acc / Rational(2);
}

ValidatedGame validate(const GameSpec& spec) {
  check_counts(spec.n_s, spec.n_t, spec.n_a, spec.n_b);
  const std::size_t table = static_cast<std::size_t>(spec.n_s) * spec.n_t * spec.n_a * spec.n_b;
  if (spec.wins.size() != table)
    fail(ErrorCode::SchemaViolation, "predicate table has wrong size");

  ValidatedGame out;
  out.spec = spec;
  out.spec.pi.clear();

  // Merge duplicate (s, t) entries, range- and sign-checking as we go.
  std::map<std::pair<int, int>, ProbValue> merged;
  bool all_exact = true;
  for (const PiEntry& e : spec.pi) {
    if (e.s < 0 || e.s >= spec.n_s || e.t < 0 || e.t >= spec.n_t)
      fail(ErrorCode::IndexOutOfRange,
           "pi entry (" + std::to_string(e.s) + ", " + std::to_string(e.t) + ") out of range");
    if (e.p.exact ? e.p.r < Rational(0) : e.p.f < 0.0)
      fail(ErrorCode::NegativeProbability,
           "pi entry (" + std::to_string(e.s) + ", " + std::to_string(e.t) + ") is negative");
    all_exact = all_exact && e.p.exact;
    auto it = merged.find({e.s, e.t});
    if (it == merged.end())
      merged.emplace(std::make_pair(e.s, e.t), e.p);
    else
      it->second = it->second + e.p;
  }

  double total = 0.0;
  for (const auto& [st, p] : merged) {
    out.spec.pi.push_back({st.first, st.second, p});
    total += p.value();
    bool positive = p.exact ? Rational(0) < p.r : p.f > 0.0;
    if (positive) out.support.push_back({st.first, st.second, p});
  }
  if (std::abs(total - 1.0) > kNormalizationTol)
    fail(ErrorCode::NonNormalizedDistribution,
         "pi sums to " + std::to_string(total) + ", expected 1");

  out.all_exact = all_exact;
  out.is_binary = (spec.n_a == 2 && spec.n_b == 2);

  if (out.is_binary) {
    bool symmetric = true;
    for (int s = 0; s < spec.n_s && symmetric; ++s)
      for (int t = 0; t < spec.n_t && symmetric; ++t)
        for (int a = 0; a < 2 && symmetric; ++a)
          for (int b = 0; b < 2; ++b)
            if (spec.win(s, t, a, b) != spec.win(s, t, 1 - a, 1 - b)) {
              symmetric = false;
              break;
            }
    if (symmetric) {
      XorGame x;
      x.n_s = spec.n_s;
      x.n_t = spec.n_t;
      x.pi.assign(static_cast<std::size_t>(spec.n_s) * spec.n_t,
                  all_exact ? ProbValue(Rational(0)) : ProbValue(0.0));
      x.v0.resize(x.pi.size());
      x.v1.resize(x.pi.size());
      for (const auto& [st, p] : merged) x.pi[x.idx(st.first, st.second)] = p;
      for (int s = 0; s < spec.n_s; ++s)
        for (int t = 0; t < spec.n_t; ++t) {
          x.v0[x.idx(s, t)] = static_cast<std::uint8_t>(spec.win(s, t, 0, 0));
          x.v1[x.idx(s, t)] = static_cast<std::uint8_t>(spec.win(s, t, 0, 1));
        }
      out.xor_form = std::move(x);
    }
  }
  return out;
}

double trivial_value(const ValidatedGame& game) {
  if (!game.xor_form) fail(ErrorCode::NotXorGame, "trivial value defined for XOR games only");
  return game.xor_form->tau();
}

namespace {

void check_strategy_range(const ValidatedGame& g, const DeterministicStrategy& d) {
  if (static_cast<int>(d.a.size()) != g.n_s() || static_cast<int>(d.b.size()) != g.n_t())
    fail(ErrorCode::IndexOutOfRange, "strategy length does not match question counts");
  for (int v : d.a)
    if (v < 0 || v >= g.n_a()) fail(ErrorCode::IndexOutOfRange, "alice answer out of range");
  for (int v : d.b)
    if (v < 0 || v >= g.n_b()) fail(ErrorCode::IndexOutOfRange, "bob answer out of range");
}

}  // namespace

double evaluate_deterministic(const ValidatedGame& game, const DeterministicStrategy& d) {
  check_strategy_range(game, d);
  double acc = 0.0;
  for (const SupportEntry& e : game.support)
    if (game.win(e.s, e.t, d.a[e.s], d.b[e.t])) acc += e.p.value();
  return acc;
}

std::optional<Rational> evaluate_deterministic_exact(const ValidatedGame& game,
                                                     const DeterministicStrategy& d) {
  check_strategy_range(game, d);
  if (!game.all_exact) return std::nullopt;
  Rational acc;
  for (const SupportEntry& e : game.support)
    if (game.win(e.s, e.t, d.a[e.s], d.b[e.t])) acc += e.p.r;
  return acc;
}

double evaluate_xor(const XorGame& x, const std::vector<int>& a, const std::vector<int>& b) {
  double acc = 0.0;
  for (int s = 0; s < x.n_s; ++s)
    for (int t = 0; t < x.n_t; ++t) {
      const auto i = x.idx(s, t);
      acc += x.pi[i].value() * ((a[s] ^ b[t]) ? x.v1[i] : x.v0[i]);
    }
  return acc;
}

std::optional<Rational> evaluate_xor_exact(const XorGame& x, const std::vector<int>& a,
                                           const std::vector<int>& b) {
  if (!x.all_exact()) return std::nullopt;
  Rational acc;
  for (int s = 0; s < x.n_s; ++s)
    for (int t = 0; t < x.n_t; ++t) {
      const auto i = x.idx(s, t);
      if ((a[s] ^ b[t]) ? x.v1[i] : x.v0[i]) acc += x.pi[i].r;
    }
  return acc;
}

// ---------------------------------------------------------------------------
// JSON game files
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

int require_count(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    fail(ErrorCode::SchemaViolation, std::string("missing or non-integer field '") + field + "'");
  int v = j[field].get<int>();
  if (v < 1) fail(ErrorCode::SchemaViolation, std::string("field '") + field + "' must be >= 1");
  return v;
}

int tuple_index(const json& arr, std::size_t k, int bound, const char* what) {
  if (!arr[k].is_number_integer())
    fail(ErrorCode::SchemaViolation, std::string(what) + " entries must be integers");
  int v = arr[k].get<int>();
  if (v < 0 || v >= bound)
    fail(ErrorCode::IndexOutOfRange, std::string(what) + " index " + std::to_string(v) + " out of range");
  return v;
}

}  // namespace

GameSpec parse_game(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  if (!j.is_object()) fail(ErrorCode::SchemaViolation, "game file must be a JSON object");

  const int n_s = require_count(j, "nS");
  const int n_t = require_count(j, "nT");
  const int n_a = require_count(j, "nA");
  const int n_b = require_count(j, "nB");
  GameSpec g = GameSpec::blank(n_s, n_t, n_a, n_b);

  if (!j.contains("pi") || !j["pi"].is_array())
    fail(ErrorCode::SchemaViolation, "missing 'pi' array");
  for (const json& e : j["pi"]) {
    if (!e.is_array() || e.size() != 3)
      fail(ErrorCode::SchemaViolation, "pi entries must be [s, t, p] triples");
    PiEntry entry;
    entry.s = tuple_index(e, 0, n_s, "pi s");
    entry.t = tuple_index(e, 1, n_t, "pi t");
    if (e[2].is_string()) {
      entry.p = ProbValue(Rational::parse(e[2].get<std::string>()));
    } else if (e[2].is_number_integer()) {
      entry.p = ProbValue(Rational(e[2].get<std::int64_t>()));
    } else if (e[2].is_number()) {
      entry.p = ProbValue(e[2].get<double>());
    } else {
      fail(ErrorCode::SchemaViolation, "pi probability must be a number or 'p/q' string");
    }
    if (entry.p.exact ? entry.p.r < Rational(0) : entry.p.f < 0.0)
      fail(ErrorCode::NegativeProbability, "pi entry (" + std::to_string(entry.s) + ", " +
                                               std::to_string(entry.t) + ") is negative");
    g.pi.push_back(entry);
  }

  if (!j.contains("predicate") || !j["predicate"].is_object())
    fail(ErrorCode::SchemaViolation, "missing 'predicate' object");
  const json& pred = j["predicate"];
  const std::string type = pred.value("type", "");
  if (type == "table") {
    if (!pred.contains("wins") || !pred["wins"].is_array())
      fail(ErrorCode::SchemaViolation, "table predicate requires a 'wins' array");
    for (const json& w : pred["wins"]) {
      if (!w.is_array() || w.size() != 4)
        fail(ErrorCode::SchemaViolation, "wins entries must be [s, t, a, b] tuples");
      g.set_win(tuple_index(w, 0, n_s, "wins s"), tuple_index(w, 1, n_t, "wins t"),
                tuple_index(w, 2, n_a, "wins a"), tuple_index(w, 3, n_b, "wins b"), true);
    }
  } else if (type == "xor") {
    if (n_a != 2 || n_b != 2)
      fail(ErrorCode::SchemaViolation, "xor predicate requires nA = nB = 2");
    for (const char* field : {"V0", "V1"}) {
      if (!pred.contains(field) || !pred[field].is_array())
        fail(ErrorCode::SchemaViolation, std::string("xor predicate requires a '") + field + "' array");
      const int parity = field[1] - '0';
      for (const json& w : pred[field]) {
        if (!w.is_array() || w.size() != 2)
          fail(ErrorCode::SchemaViolation, std::string(field) + " entries must be [s, t] pairs");
        int s = tuple_index(w, 0, n_s, field);
        int t = tuple_index(w, 1, n_t, field);
        for (int a = 0; a < 2; ++a) g.set_win(s, t, a, a ^ parity, true);
      }
    }
  } else {
    fail(ErrorCode::SchemaViolation, "predicate type must be 'table' or 'xor'");
  }
  return g;
}

GameSpec load_game(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_game(buf.str());
}

std::string game_to_json(const GameSpec& spec) {
  json j;
  j["nS"] = spec.n_s;
  j["nT"] = spec.n_t;
  j["nA"] = spec.n_a;
  j["nB"] = spec.n_b;

  std::vector<PiEntry> pi = spec.pi;
  std::sort(pi.begin(), pi.end(),
            [](const PiEntry& x, const PiEntry& y) { return std::tie(x.s, x.t) < std::tie(y.s, y.t); });
  json jpi = json::array();
  for (const PiEntry& e : pi) {
    json row = json::array({e.s, e.t});
    if (e.p.exact)
      row.push_back(e.p.r.str());
    else
      row.push_back(e.p.f);
    jpi.push_back(row);
  }
  j["pi"] = jpi;

  json wins = json::array();
  for (int s = 0; s < spec.n_s; ++s)
    for (int t = 0; t < spec.n_t; ++t)
      for (int a = 0; a < spec.n_a; ++a)
        for (int b = 0; b < spec.n_b; ++b)
          if (spec.win(s, t, a, b)) wins.push_back(json::array({s, t, a, b}));
  j["predicate"] = {{"type", "table"}, {"wins", wins}};
  return j.dump(2);
}

void save_game(const GameSpec& spec, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::ParseError, "cannot open '" + path + "' for writing");
  out << game_to_json(spec) << "\n";
}

}  // namespace nlg
