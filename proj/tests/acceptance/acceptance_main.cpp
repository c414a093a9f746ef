// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
#include <atomic>
#include <bit>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "cli.hpp"
#include "roxlab/errors.hpp"
#include "roxlab/games.hpp"
#include "roxlab/reductions.hpp"
#include "roxlab/rox.hpp"
#include "roxlab/separations.hpp"
#include "roxlab/toolkit.hpp"

namespace roxlab {
namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;  // 0: no bound
  std::function<Verdict()> body;
};

constexpr FamilyParams kToy{4, 12, 8};  // n=4, b=4, d=8
constexpr std::size_t kToyL = 16;

FunctionFamily toy_tab(const Seed& s) { return tabulated_family(s, kToy); }

// ----------------------------------------------------------------------------

Verdict bookkeeping() {
  Verdict v;
  int nu_bad = 0;
  for (std::uint64_t i = 1; i <= 64; ++i) {
    nu_bad += nu(i) != static_cast<std::size_t>(std::countr_zero(i)) ? 1 : 0;
  }
  v.require(nu_bad == 0, fmt::format("{} nu mismatches", nu_bad));

  const std::size_t n = 4, b = 4;
  const std::size_t hi = 4 * b * kToyL / 5;
  RoxInstance base(toy_tab(Seed::from_u64(1)), kToyL, Seed::from_u64(2));
  Rng rng(Seed::from_u64(3));
  int ell_bad = 0, q2_bad = 0, query_bad = 0;
  for (std::size_t len = n; len <= hi; ++len) {
    const std::size_t ell = (len + 2 * n + b - 1) / b;
    const std::size_t q2 = (ell * b - len + 2 * n - 1) / (2 * n);
    const BitString x = rng.bits(len);
    RoxInstance cold = base.fresh(Seed::from_u64(100 + len));
    const PaddedMessage p = pad_rox(cold, x);
    ell_bad += p.block_count != ell || block_count(cold, len) != ell ? 1 : 0;
    q2_bad += p.pad_queries != q2 ? 1 : 0;
    RoxInstance cold2 = base.fresh(Seed::from_u64(100 + len));
    rox_eval(cold2, rng.bits(n), x);
    query_bad += cold2.oracle_queries() != ell + q2 ? 1 : 0;
  }
  v.require(ell_bad == 0, fmt::format("{} ell mismatches", ell_bad));
  v.require(q2_bad == 0, fmt::format("{} q2 mismatches", q2_bad));
  v.require(query_bad == 0, fmt::format("{} query-count mismatches", query_bad));
  v.detail = v.pass ? fmt::format("nu 1..64, |x| in [{}, {}] exact", n, hi)
                    : v.detail;
  return v;
}

Verdict extract_preimage_exact() {
  Verdict v;
  int ok = 0, calls_ok = 0;
  const int trials = 500;
  Rng rng(Seed::from_u64(20));
  for (int t = 0; t < trials; ++t) {
    auto counter = std::make_shared<std::atomic<std::uint64_t>>(0);
    const FunctionFamily h =
        counting_family(toy_tab(Seed::from_u64(t).derive("family")), counter);
    RoxInstance inst(h, kToyL, Seed::from_u64(t).derive("oracles"));
    const BitString k = rng.bits(4);
    const std::size_t len =
        4 + rng.uniform(inst.max_message_bits() - inst.min_message_bits() + 1);
    const BitString x = rng.bits(len);
    const BitString pre = extract_preimage(inst, k, x);
    calls_ok += counter->load() == block_count(inst, len) - 1 ? 1 : 0;
    ok += h.eval(k, pre) == rox_eval(inst, k, x) ? 1 : 0;
  }
  v.require(ok == trials, fmt::format("H_k(x) = digest {}/{}", ok, trials));
  v.require(calls_ok == trials,
            fmt::format("call count ell-1 {}/{}", calls_ok, trials));
  if (v.pass) {
    v.detail = fmt::format("{0}/{0} preimages, {0}/{0} exact call counts", trials);
  }
  return v;
}

Verdict embed_message_exact() {
  Verdict v;
  const int trials = 1000;
  int ok = 0, single = 0, failures = 0;
  std::size_t attempts = 0;
  Rng rng(Seed::from_u64(30));
  for (int t = 0; t < trials; ++t) {
    RoxInstance inst(toy_tab(Seed::from_u64(t).derive("family")), kToyL,
                     Seed::from_u64(t).derive("oracles"));
    const BitString k = rng.bits(4);
    const BitString x = rng.bits(12);
    const std::size_t i = 1 + rng.uniform(8);
    try {
      const EmbedResult r = embed_message(inst, k, x, i, rng.fork());
      attempts += r.attempts;
      ok += rox_trace(inst, k, r.message).at(i - 1).compression_input == x;
      single += r.programmed.size() == 1 &&
                r.programmed[0].oracle == OracleId::kMask &&
                inst.mask_oracle().stats().programmed_points == 1 &&
                inst.pad_oracle().stats().programmed_points == 0;
    } catch (const Error& e) {
      ++failures;
    }
  }
  v.require(ok == trials, fmt::format("round-i input = x {}/{}", ok, trials));
  v.require(single == trials,
            fmt::format("single RO1 point {}/{}", single, trials));
  v.require(failures == 0, fmt::format("{} embedding errors", failures));
  if (v.pass) {
    v.detail = fmt::format("{0}/{0} exact, {0}/{0} single RO1 point, "
                           "mean attempts {1:.2f}",
                           trials, static_cast<double>(attempts) / trials);
  }
  return v;
}

Verdict extract_collision_rate() {
  Verdict v;
  const FamilyParams p{8, 12, 8};  // n=8, b=4, d=8
  const std::size_t slice = 16;
  const std::uint64_t budget = 128;  // 2^(d/2 + 3)
  const int wanted = 300;
  int planted = 0, valid = 0, no_round = 0, invalid = 0, draws = 0;
  for (std::uint64_t t = 0; planted < wanted && t < 2 * wanted; ++t, ++draws) {
    const Seed s = Seed::from_u64(40).derive("trial", t);
    const FunctionFamily h = tabulated_family(s.derive("family"), p);
    auto inst = std::make_shared<RoxInstance>(h, kToyL, s.derive("oracles"));
    Rng coins(s.derive("challenger"));
    const BitString k = coins.bits(8);
    const auto pair = birthday_collision(rox_family(inst, slice), k, budget,
                                         s.derive("birthday"));
    if (!pair) continue;
    ++planted;
    try {
      const CollisionWitness w =
          extract_collision(*inst, k, pair->first, pair->second);
      // Re-evaluate directly; the witness is never trusted.
      if (w.first != w.second && h.eval(k, w.first) == h.eval(k, w.second)) {
        ++valid;
      } else {
        ++invalid;
      }
    } catch (const NoCollidingRound&) {
      ++no_round;
    }
  }
  const double failure = planted == 0 ? 1.0 : 1.0 - double(valid) / planted;
  const std::string counts =
      fmt::format("{}/{} verified, NoCollidingRound {}, failure {:.4f}", valid,
                  planted, no_round, failure);
  v.require(planted == wanted,
            fmt::format("only {} collisions planted in {} draws", planted, draws));
  v.require(invalid == 0, fmt::format("{} invalid witnesses", invalid));
  v.require(failure <= 0.02, fmt::format("failure rate {:.4f} > 0.02", failure));
  // With b = 4 the final block carries only b bits of RO2 output, so about
  // 2^-b of planted collisions come from equal final inputs and hold no H
  // collision at all.
  v.detail = v.pass ? counts : counts + "; " + v.detail;
  return v;
}

Verdict separations() {
  Verdict v;
  const FunctionFamily f = tabulated_family(Seed::from_u64(50), {4, 6, 4});
  const auto apre = estimate_advantage(Property::kAPre, zero_key_family(f),
                                       attack_apre_zero_key(), 500,
                                       Seed::from_u64(51));
  const auto asec = estimate_advantage(Property::kASec, zero_key_family(f),
                                       attack_asec_zero_key(), 500,
                                       Seed::from_u64(52));
  const auto epre = estimate_advantage(Property::kEPre, pinned_zero_family(f),
                                       attack_epre_pinned(), 500,
                                       Seed::from_u64(53));
  v.require(apre.p_hat == 1.0, fmt::format("aPre p_hat {}", apre.p_hat));
  v.require(asec.p_hat == 1.0, fmt::format("aSec p_hat {}", asec.p_hat));
  v.require(epre.p_hat == 1.0, fmt::format("ePre p_hat {}", epre.p_hat));

  const FunctionFamily zk = zero_key_family(f);
  const FunctionFamily pin = pinned_zero_family(f);
  int constant_keys = 0;
  bool unique_pin = true;
  for (std::uint64_t kv = 0; kv < 16; ++kv) {
    const BitString k = BitString::from_uint(kv, 4);
    std::map<BitString, int> image;
    int zero_preimages = 0;
    for (std::uint64_t xv = 0; xv < 64; ++xv) {
      const BitString x = BitString::from_uint(xv, 6);
      ++image[zk.eval(k, x)];
      if (pin.eval(k, x).is_zero()) {
        ++zero_preimages;
        unique_pin = unique_pin && x.is_zero();
      }
    }
    constant_keys += image.size() == 1 ? 1 : 0;
    unique_pin = unique_pin && zero_preimages == 1;
  }
  v.require(constant_keys == 1,
            fmt::format("{} constant keys, expected 1", constant_keys));
  v.require(unique_pin, "0^m is not the unique preimage of 0^d");
  if (v.pass) {
    v.detail = "aPre/aSec/ePre 500/500; 1 of 16 keys constant; pin unique";
  }
  return v;
}

Verdict coll_from_esec_paired() {
  Verdict v;
  struct Setup {
    std::string name;
    FunctionFamily family;
    Adversary esec;
  };
  const std::vector<Setup> setups = {
      {"const0", constant_family(kToy, BitString(8)), esec_flip_adversary()},
      {"tab4/bf", tabulated_family(Seed::from_u64(60), {4, 6, 4}),
       brute_force_adversary()},
  };
  std::string summary;
  for (const Setup& s : setups) {
    const Adversary coll = coll_from_esec(s.esec);
    int equal = 0, wins = 0;
    for (int t = 0; t < 500; ++t) {
      const Seed trial = Seed::from_u64(61).derive("trial", t);
      const bool a = run_game(Property::kESec, s.family, s.esec, trial).win;
      const bool b = run_game(Property::kColl, s.family, coll, trial).win;
      equal += a == b ? 1 : 0;
      wins += a ? 1 : 0;
    }
    v.require(equal == 500, fmt::format("{}: paired-equal {}/500", s.name, equal));
    if (!summary.empty()) summary += ", ";
    summary += fmt::format("{} paired-equal {}/500 (wins {})", s.name, equal, wins);
  }
  if (v.pass) v.detail = summary;
  return v;
}

Verdict asec_reduction_rate() {
  Verdict v;
  const int trials = 2000;
  const FunctionFamily h = constant_family(kToy, BitString(8));
  auto log = std::make_shared<ReductionLog>();
  const Adversary red = rox_asec_reduction(rox_block_flip_adversary(3),
                                           {.max_blocks = kToyL, .i_max = 8}, log);
  // Record the key, challenge and answer of every trial for re-validation.
  BitString key, challenge, answer;
  Adversary probe = red;
  probe.choose = [&](AdversaryEnv& env) {
    FirstStageOutput out = red.choose(env);
    key = out.choice;
    return out;
  };
  probe.respond = [&](const Challenge& ch, std::any& st, AdversaryEnv& env) {
    challenge = *ch.message;
    Answer a = red.respond(ch, st, env);
    answer = a.message;
    return a;
  };
  int wins = 0, revalidated = 0;
  for (int t = 0; t < trials; ++t) {
    answer = BitString();
    const Seed trial = Seed::from_u64(70).derive("trial", t);
    if (!run_game(Property::kASec, h, probe, trial).win) continue;
    ++wins;
    revalidated += answer != challenge && h.eval(key, answer) == h.eval(key, challenge);
  }
  int inner = 0, fails = 0;
  for (const auto& r : log->records()) {
    inner += r.inner_won ? 1 : 0;
    fails += r.failed ? 1 : 0;
  }
  const double adv_rate = double(inner) / trials;
  const double red_rate = double(wins) / trials;
  const double gap = std::abs(red_rate - adv_rate / 8);
  v.require(gap <= 0.05, fmt::format("|{:.4f} - {:.4f}/8| = {:.4f} > 0.05",
                                     red_rate, adv_rate, gap));
  v.require(revalidated == wins,
            fmt::format("{} of {} wins re-validated", revalidated, wins));
  if (v.pass) {
    v.detail = fmt::format(
        "adversary {:.4f}, reduction {:.4f}, adversary/8 {:.4f}, FAIL {}, "
        "{}/{} wins re-validated",
        adv_rate, red_rate, adv_rate / 8, fails, revalidated, wins);
  }
  return v;
}

Verdict estimator_calibration() {
  Verdict v;
  const FunctionFamily f = tabulated_family(Seed::from_u64(80), {4, 6, 4});
  // Exhaustive: Pr[H_k(g) = H_k(x')] for uniform k, x', g.
  double truth = 0;
  for (std::uint64_t k = 0; k < 16; ++k) {
    std::map<BitString, int> count;
    for (std::uint64_t x = 0; x < 64; ++x) {
      ++count[f.eval(BitString::from_uint(k, 4), BitString::from_uint(x, 6))];
    }
    for (const auto& [y, c] : count) truth += (c / 64.0) * (c / 64.0) / 16;
  }
  int covered = 0;
  for (int e = 0; e < 100; ++e) {
    const auto est = estimate_advantage(Property::kPre, f, random_guess_adversary(),
                                        1000, Seed::from_u64(81).derive("exp", e));
    covered += est.ci_low <= truth && truth <= est.ci_high ? 1 : 0;
  }
  v.require(covered >= 93, fmt::format("coverage {}/100 < 93", covered));
  if (v.pass) {
    v.detail = fmt::format("true p = {:.6f}, coverage {}/100", truth, covered);
  }
  return v;
}

Verdict cli_determinism() {
  Verdict v;
  const std::vector<std::vector<std::string>> commands = {
      {"hash", "--key", "4:a", "--input", "13:caf0"},
      {"--json", "hash", "--key", "4:a", "--input", "13:caf0"},
      {"pad", "--input", "21:abcde8"},
      {"game", "--prop", "pre", "--family", "const0", "--adv", "any"},
      {"game", "--prop", "coll", "--family", "tab", "--adv", "guess", "--trials", "300"},
      {"game", "--prop", "asec", "--family", "zerokey:tab4", "--adv", "zero-key-attack"},
      {"game", "--prop", "epre", "--family", "pinned:tab4", "--adv", "pin-attack"},
      {"game", "--prop", "esec", "--family", "rox:tab4", "--adv", "bf", "--trials", "50"},
      {"--threads", "4", "game", "--prop", "sec", "--family", "tab4", "--adv", "bf"},
      {"reduce", "--lemma", "extract-preimage", "--trials", "100"},
      {"reduce", "--lemma", "embed-message", "--trials", "100"},
      {"reduce", "--lemma", "extract-collision", "--trials", "100"},
      {"reduce", "--lemma", "coll-from-esec", "--trials", "100"},
      {"reduce", "--lemma", "apre", "--trials", "100"},
      {"--threads", "4", "reduce", "--lemma", "asec", "--trials", "200"},
      {"separation", "--which", "aPre", "--trials", "200"},
      {"separation", "--which", "aSec", "--trials", "200"},
      {"--json", "separation", "--which", "ePre", "--trials", "200"},
  };
  int identical = 0;
  for (auto cmd : commands) {
    cmd.insert(cmd.begin(), {"--seed", "12345"});
    std::ostringstream a, b, ea, eb;
    const int ca = cli::run(cmd, a, ea);
    const int cb = cli::run(cmd, b, eb);
    const bool same = ca == 0 && cb == 0 && a.str() == b.str() && !a.str().empty();
    identical += same ? 1 : 0;
    if (!same) v.require(false, fmt::format("differs: {}", fmt::join(cmd, " ")));
  }
  // Thread count must not leak into the report.
  std::ostringstream one, four, err;
  cli::run({"--seed", "5", "game", "--prop", "pre", "--family", "tab", "--adv",
            "guess", "--trials", "500"},
           one, err);
  cli::run({"--seed", "5", "--threads", "4", "game", "--prop", "pre", "--family",
            "tab", "--adv", "guess", "--trials", "500"},
           four, err);
  v.require(one.str() == four.str(), "thread count changes the report");
  if (v.pass) {
    v.detail = fmt::format("{}/{} commands byte-identical; threads 1 == 4",
                           identical, commands.size());
  }
  return v;
}

}  // namespace
}  // namespace roxlab

// Usage: roxlab_acceptance [--expect-fail ID]...
// Exit status is 0 only when the failing criteria are exactly the listed ones,
// so a known-unattainable criterion still prints FAIL without hiding regressions.
int main(int argc, char** argv) {
  using namespace roxlab;
  std::set<int> expected;
  for (int a = 1; a < argc; ++a) {
    if (std::string(argv[a]) == "--expect-fail" && a + 1 < argc) {
      expected.insert(std::stoi(argv[++a]));
    } else {
      std::cerr << "usage: roxlab_acceptance [--expect-fail ID]...\n";
      return 2;
    }
  }
  const std::vector<Criterion> criteria = {
      {1, "bookkeeping: nu, ell, q2 tables and cold query count", 1.0, bookkeeping},
      {2, "extract-preimage over 500 messages", 5.0, extract_preimage_exact},
      {3, "embed-message over 1000 (x, i<=8)", 10.0, embed_message_exact},
      {4, "extract-collision on 300 planted collisions (n=8, d=8)", 60.0,
       extract_collision_rate},
      {5, "separation attacks and exhaustive combinator checks", 0.0, separations},
      {6, "coll-from-esec paired outcomes over 500 trials", 0.0,
       coll_from_esec_paired},
      {7, "aSec reduction rate vs adversary/8 over 2000 trials", 0.0,
       asec_reduction_rate},
      {8, "Wilson coverage for random-guess Pre (100 x 1000)", 0.0,
       estimator_calibration},
      {9, "CLI replays are byte-identical", 0.0, cli_determinism},
  };
  int failed = 0;
  std::set<int> failing;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(Clock::now() - start).count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      v.pass = false;
      v.detail += fmt::format("; runtime {:.2f}s over {:.0f}s", secs, c.time_limit_s);
    }
    failed += v.pass ? 0 : 1;
    if (!v.pass) failing.insert(c.id);
    std::cout << fmt::format("AC{} {} {} [{:.2f}s] {}\n", c.id,
                             v.pass ? "PASS" : "FAIL", c.name, secs, v.detail);
  }
  std::cout << fmt::format("{}/{} criteria passed\n", criteria.size() - failed,
                           criteria.size());
  if (!expected.empty()) {
    std::cout << fmt::format("expected failures: {}; observed: {}\n",
                             fmt::join(expected, ","), fmt::join(failing, ","));
  }
  return failing == expected ? 0 : 1;
}
