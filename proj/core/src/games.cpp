#include "roxlab/games.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "roxlab/errors.hpp"

namespace roxlab {
namespace {

constexpr std::size_t kMaxBruteForceBits = 16;

template <typename F>
auto guarded(F&& f, std::string& note) -> std::optional<decltype(f())> {
  try {
    return f();
  } catch (const std::exception& e) {
    note = e.what();
    return std::nullopt;
  }
}

GameOutcome loss(std::string note) { return {false, std::move(note)}; }

bool is_preimage_game(Property p) {
  return p == Property::kPre || p == Property::kAPre || p == Property::kEPre;
}

void check_brute_force_width(const FunctionFamily& family) {
  if (family.params().message_bits > kMaxBruteForceBits) {
    throw InvalidArgument(fmt::format(
        "exhaustive search over {}-bit messages refused (limit {})",
        family.params().message_bits, kMaxBruteForceBits));
  }
}

BitString last_bit_flipped(const BitString& x) {
  return x.empty() ? x : x.flipped(x.size() - 1);
}

}  // namespace

std::string_view to_string(Property p) {
  switch (p) {
    case Property::kColl: return "Coll";
    case Property::kPre: return "Pre";
    case Property::kSec: return "Sec";
    case Property::kAPre: return "aPre";
    case Property::kASec: return "aSec";
    case Property::kEPre: return "ePre";
    case Property::kESec: return "eSec";
  }
  return "?";
}

std::optional<Property> parse_property(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (Property p : kAllProperties) {
    std::string name(to_string(p));
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (name == lower) return p;
  }
  return std::nullopt;
}

bool has_first_stage(Property p) {
  return p == Property::kAPre || p == Property::kASec ||
         p == Property::kEPre || p == Property::kESec;
}

GameOutcome run_game(Property prop, const FunctionFamily& family,
                     const Adversary& adv, const Seed& seed) {
  const FamilyParams& p = family.params();
  Rng coins(seed.derive("challenger"));
  Rng adv_coins(seed.derive("adversary"));
  AdversaryEnv env{prop, family, adv_coins};
  std::any state;
  std::string note;

  std::optional<BitString> chosen;
  if (has_first_stage(prop)) {
    if (!adv.choose) return loss("adversary has no first stage");
    auto out = guarded([&] { return adv.choose(env); }, note);
    if (!out) return loss("first stage failed: " + note);
    chosen = std::move(out->choice);
    state = std::move(out->state);
  }
  if (!adv.respond) return loss("adversary has no second stage");

  auto expect_width = [&](const BitString& v, std::size_t w,
                          const char* what) -> std::optional<GameOutcome> {
    if (v.size() == w) return std::nullopt;
    return loss(fmt::format("{} has {} bits, expected {}", what, v.size(), w));
  };

  BitString key;
  BitString target;  // message for Sec variants, digest for Pre variants
  Challenge challenge;
  switch (prop) {
    case Property::kColl:
      key = coins.bits(p.key_bits);
      challenge.key = key;
      break;
    case Property::kPre:
      key = coins.bits(p.key_bits);
      target = family.eval(key, coins.bits(p.message_bits));
      challenge.key = key;
      challenge.digest = target;
      break;
    case Property::kSec:
      key = coins.bits(p.key_bits);
      target = coins.bits(p.message_bits);
      challenge.key = key;
      challenge.message = target;
      break;
    case Property::kAPre:
      if (auto bad = expect_width(*chosen, p.key_bits, "chosen key")) return *bad;
      key = *chosen;
      target = family.eval(key, coins.bits(p.message_bits));
      challenge.digest = target;
      break;
    case Property::kASec:
      if (auto bad = expect_width(*chosen, p.key_bits, "chosen key")) return *bad;
      key = *chosen;
      target = coins.bits(p.message_bits);
      challenge.message = target;
      break;
    case Property::kEPre:
      if (auto bad = expect_width(*chosen, p.digest_bits, "chosen digest")) {
        return *bad;
      }
      target = *chosen;
      key = coins.bits(p.key_bits);
      challenge.key = key;
      break;
    case Property::kESec:
      if (auto bad = expect_width(*chosen, p.message_bits, "chosen message")) {
        return *bad;
      }
      target = *chosen;
      key = coins.bits(p.key_bits);
      challenge.key = key;
      break;
  }

  auto answer = guarded([&] { return adv.respond(challenge, state, env); }, note);
  if (!answer) return loss("second stage failed: " + note);
  if (auto bad = expect_width(answer->message, p.message_bits, "answer")) {
    return *bad;
  }
  const BitString& x = answer->message;

  if (prop == Property::kColl) {
    if (!answer->second) return loss("collision answer lacks a second message");
    if (auto bad = expect_width(*answer->second, p.message_bits,
                                "second answer")) {
      return *bad;
    }
    const BitString& x2 = *answer->second;
    return {x != x2 && family.eval(key, x) == family.eval(key, x2), {}};
  }
  if (is_preimage_game(prop)) {
    return {family.eval(key, x) == target, {}};
  }
  return {x != target && family.eval(key, x) == family.eval(key, target), {}};
}

WilsonInterval wilson_interval(std::uint64_t wins, std::uint64_t trials,
                               double z) {
  if (trials == 0) throw InvalidArgument("Wilson interval needs trials >= 1");
  if (wins > trials) throw InvalidArgument("wins exceed trials");
  const double t = static_cast<double>(trials);
  const double p = static_cast<double>(wins) / t;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / t;
  const double center = (p + z2 / (2.0 * t)) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / t + z2 / (4.0 * t * t)) / denom;
  WilsonInterval ci{std::clamp(center - half, 0.0, p),
                    std::clamp(center + half, p, 1.0)};
  if (wins == 0) ci.low = 0.0;
  if (wins == trials) ci.high = 1.0;
  return ci;
}

AdvantageEstimate estimate_advantage(Property prop,
                                     const FamilyFactory& family,
                                     const Adversary& adv,
                                     std::uint64_t trials, const Seed& seed,
                                     const EstimateOptions& options) {
  if (trials == 0) throw InvalidArgument("trials must be >= 1");
  struct Tally {
    std::uint64_t wins = 0;
    std::uint64_t malformed = 0;
  };
  auto run_range = [&](std::uint64_t begin, std::uint64_t end, Tally& tally) {
    for (std::uint64_t t = begin; t < end; ++t) {
      const Seed trial = seed.derive("trial", t);
      const FunctionFamily fam = family(trial.derive("family"));
      const GameOutcome out = run_game(prop, fam, adv, trial);
      tally.wins += out.win ? 1 : 0;
      tally.malformed += out.note.empty() ? 0 : 1;
    }
  };

  const unsigned threads = static_cast<unsigned>(
      std::clamp<std::uint64_t>(options.threads, 1, trials));
  std::vector<Tally> tallies(threads);
  if (threads == 1) {
    run_range(0, trials, tallies[0]);
  } else {
    std::vector<std::jthread> workers;
    const std::uint64_t chunk = (trials + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t begin = std::min(trials, w * chunk);
      const std::uint64_t end = std::min(trials, begin + chunk);
      workers.emplace_back(
          [&, begin, end, w] { run_range(begin, end, tallies[w]); });
    }
  }

  AdvantageEstimate est;
  est.trials = trials;
  for (const Tally& t : tallies) {
    est.wins += t.wins;
    est.malformed += t.malformed;
  }
  est.p_hat = static_cast<double>(est.wins) / static_cast<double>(trials);
  const WilsonInterval ci = wilson_interval(est.wins, trials);
  est.ci_low = ci.low;
  est.ci_high = ci.high;
  return est;
}

AdvantageEstimate estimate_advantage(Property prop,
                                     const FunctionFamily& family,
                                     const Adversary& adv,
                                     std::uint64_t trials, const Seed& seed,
                                     const EstimateOptions& options) {
  return estimate_advantage(
      prop, [&family](const Seed&) { return family; }, adv, trials, seed,
      options);
}

std::optional<BitString> bf_preimage(const FunctionFamily& family,
                                     const BitString& key,
                                     const BitString& digest) {
  check_brute_force_width(family);
  const std::size_t m = family.params().message_bits;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << m); ++v) {
    BitString x = BitString::from_uint(v, m);
    if (family.eval(key, x) == digest) return x;
  }
  return std::nullopt;
}

std::optional<BitString> bf_second_preimage(const FunctionFamily& family,
                                            const BitString& key,
                                            const BitString& message) {
  check_brute_force_width(family);
  const std::size_t m = family.params().message_bits;
  const BitString digest = family.eval(key, message);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << m); ++v) {
    BitString x = BitString::from_uint(v, m);
    if (x != message && family.eval(key, x) == digest) return x;
  }
  return std::nullopt;
}

std::optional<std::pair<BitString, BitString>> birthday_collision(
    const FunctionFamily& family, const BitString& key, std::uint64_t budget,
    const Seed& seed) {
  if (budget < 2) throw InvalidArgument("birthday budget must be >= 2");
  const std::size_t m = family.params().message_bits;
  if (m < 64) budget = std::min<std::uint64_t>(budget, std::uint64_t{1} << m);
  Rng rng(seed);
  std::unordered_set<BitString, BitStringHash> seen;
  std::unordered_map<BitString, BitString, BitStringHash> by_digest;
  while (seen.size() < budget) {
    BitString x = rng.bits(m);
    if (!seen.insert(x).second) continue;
    BitString y = family.eval(key, x);
    auto [it, inserted] = by_digest.try_emplace(std::move(y), x);
    if (!inserted) return std::make_pair(it->second, std::move(x));
  }
  return std::nullopt;
}

Adversary trivial_adversary() {
  Adversary adv;
  adv.label = "any";
  adv.choose = [](AdversaryEnv& env) {
    const FamilyParams& p = env.family.params();
    switch (env.game) {
      case Property::kEPre: return FirstStageOutput{BitString::zeros(p.digest_bits), {}};
      case Property::kESec: return FirstStageOutput{BitString::zeros(p.message_bits), {}};
      default: return FirstStageOutput{BitString::zeros(p.key_bits), {}};
    }
  };
  adv.respond = [](const Challenge& ch, std::any&, AdversaryEnv& env) {
    const std::size_t m = env.family.params().message_bits;
    const BitString zero = BitString::zeros(m);
    switch (env.game) {
      case Property::kColl: return Answer{zero, last_bit_flipped(zero)};
      case Property::kSec:
      case Property::kASec: return Answer{last_bit_flipped(*ch.message), {}};
      case Property::kESec: return Answer{last_bit_flipped(zero), {}};
      default: return Answer{zero, {}};
    }
  };
  return adv;
}

Adversary random_guess_adversary() {
  Adversary adv;
  adv.label = "guess";
  adv.choose = [](AdversaryEnv& env) {
    const FamilyParams& p = env.family.params();
    switch (env.game) {
      case Property::kEPre: return FirstStageOutput{env.rng.bits(p.digest_bits), {}};
      case Property::kESec: return FirstStageOutput{env.rng.bits(p.message_bits), {}};
      default: return FirstStageOutput{env.rng.bits(p.key_bits), {}};
    }
  };
  adv.respond = [](const Challenge&, std::any&, AdversaryEnv& env) {
    const std::size_t m = env.family.params().message_bits;
    Answer a{env.rng.bits(m), {}};
    if (env.game == Property::kColl) a.second = env.rng.bits(m);
    return a;
  };
  return adv;
}

Adversary fixed_guess_adversary(BitString guess) {
  Adversary adv = trivial_adversary();
  adv.label = "fixed:" + guess.to_string();
  adv.respond = [guess](const Challenge&, std::any&, AdversaryEnv& env) {
    Answer a{guess, {}};
    if (env.game == Property::kColl) a.second = last_bit_flipped(guess);
    return a;
  };
  return adv;
}

Adversary brute_force_adversary() {
  Adversary adv;
  adv.label = "bf";
  adv.choose = [](AdversaryEnv& env) {
    const FamilyParams& p = env.family.params();
    switch (env.game) {
      case Property::kEPre: {
        const BitString k = env.rng.bits(p.key_bits);
        BitString y = env.family.eval(k, env.rng.bits(p.message_bits));
        return FirstStageOutput{y, y};
      }
      case Property::kESec: {
        BitString x = env.rng.bits(p.message_bits);
        return FirstStageOutput{x, x};
      }
      default: {
        BitString k = env.rng.bits(p.key_bits);
        return FirstStageOutput{k, k};
      }
    }
  };
  adv.respond = [](const Challenge& ch, std::any& state, AdversaryEnv& env) {
    const FunctionFamily& f = env.family;
    const std::size_t m = f.params().message_bits;
    // aPre/aSec keep the chosen key in state; the others receive it.
    const BitString key = ch.key ? *ch.key : std::any_cast<BitString>(state);
    switch (env.game) {
      case Property::kColl: {
        check_brute_force_width(f);
        std::unordered_map<BitString, BitString, BitStringHash> seen;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << m); ++v) {
          BitString x = BitString::from_uint(v, m);
          auto [it, inserted] = seen.try_emplace(f.eval(key, x), x);
          if (!inserted) return Answer{it->second, x};
        }
        return Answer{BitString::zeros(m), last_bit_flipped(BitString::zeros(m))};
      }
      case Property::kPre:
      case Property::kAPre:
        return Answer{bf_preimage(f, key, *ch.digest).value_or(BitString::zeros(m)), {}};
      case Property::kEPre: {
        const BitString y = std::any_cast<BitString>(state);
        return Answer{bf_preimage(f, key, y).value_or(BitString::zeros(m)), {}};
      }
      case Property::kSec:
      case Property::kASec:
        return Answer{bf_second_preimage(f, key, *ch.message)
                          .value_or(last_bit_flipped(*ch.message)),
                      {}};
      case Property::kESec: {
        const BitString target = std::any_cast<BitString>(state);
        return Answer{bf_second_preimage(f, key, target)
                          .value_or(last_bit_flipped(target)),
                      {}};
      }
    }
    return Answer{BitString::zeros(m), {}};
  };
  return adv;
}

std::string format_report(const ExperimentReport& r) {
  return fmt::format(
      "prop={} family={} trials={} wins={} p_hat={:.4f} ci=[{:.4f},{:.4f}] "
      "seed={}",
      to_string(r.prop), r.family, r.estimate.trials, r.estimate.wins,
      r.estimate.p_hat, r.estimate.ci_low, r.estimate.ci_high, r.seed);
}

nlohmann::json report_json(const ExperimentReport& r) {
  return nlohmann::json{
      {"prop", std::string(to_string(r.prop))},
      {"family", r.family},
      {"trials", r.estimate.trials},
      {"wins", r.estimate.wins},
      {"p_hat", r.estimate.p_hat},
      {"ci", {r.estimate.ci_low, r.estimate.ci_high}},
      {"seed", r.seed},
  };
}

}  // namespace roxlab
