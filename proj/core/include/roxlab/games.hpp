#pragma once

#include <any>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <nlohmann/json_fwd.hpp>

#include "roxlab/bitstring.hpp"
#include "roxlab/family.hpp"
#include "roxlab/seed.hpp"

namespace roxlab {

class RoxInstance;

enum class Property { kColl, kPre, kSec, kAPre, kASec, kEPre, kESec };

inline constexpr std::array<Property, 7> kAllProperties = {
    Property::kColl, Property::kPre,  Property::kSec, Property::kAPre,
    Property::kASec, Property::kEPre, Property::kESec};

std::string_view to_string(Property p);
// Case-insensitive: "coll", "Pre", "asec", ...
std::optional<Property> parse_property(std::string_view text);
// aPre/aSec pick the key, ePre/eSec pick the target, in a first stage.
bool has_first_stage(Property p);

/// What an adversary sees while it runs: the game it plays, the family under
/// attack, its own coins and, for ROX-level adversaries, the simulated
/// oracles.
struct AdversaryEnv {
  Property game;
  const FunctionFamily& family;
  Rng& rng;
  RoxInstance* rox = nullptr;
};

// Key (aPre/aSec), target digest (ePre) or target message (eSec), plus
// state handed to the second stage. The challenger never inspects `state`.
struct FirstStageOutput {
  BitString choice;
  std::any state;
};

// Only the fields the game reveals are set:
//   Coll {key}  Pre {key, digest}  Sec {key, message}
//   aPre {digest}  aSec {message}  ePre {key}  eSec {key}
struct Challenge {
  std::optional<BitString> key;
  std::optional<BitString> digest;
  std::optional<BitString> message;
};

// `second` is used by Coll only.
struct Answer {
  BitString message;
  std::optional<BitString> second;
};

struct Adversary {
  using FirstStage = std::function<FirstStageOutput(AdversaryEnv&)>;
  using SecondStage =
      std::function<Answer(const Challenge&, std::any& state, AdversaryEnv&)>;

  std::string label;
  FirstStage choose;    // empty for Coll, Pre, Sec
  SecondStage respond;
};

struct GameOutcome {
  bool win = false;
  std::string note;  // non-empty when the adversary misbehaved
};

/// One game experiment. Challenger coins come from seed/"challenger", the
/// adversary's from seed/"adversary"; the key is sampled before the target.
/// Malformed answers and adversary exceptions are losses, never aborts.
GameOutcome run_game(Property prop, const FunctionFamily& family,
                     const Adversary& adv, const Seed& seed);

struct WilsonInterval {
  double low = 0.0;
  double high = 1.0;
};

inline constexpr double kZ95 = 1.959963984540054;

WilsonInterval wilson_interval(std::uint64_t wins, std::uint64_t trials,
                               double z = kZ95);

struct AdvantageEstimate {
  std::uint64_t trials = 0;
  std::uint64_t wins = 0;
  std::uint64_t malformed = 0;
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
};

// Builds the family for one trial; used for ROX slices, which need fresh
// oracles per trial. Receives seed/"trial"[t]/"family".
using FamilyFactory = std::function<FunctionFamily(const Seed&)>;

struct EstimateOptions {
  // Trials are split into contiguous chunks across this many threads. The
  // adversary and factory must then be safe to call concurrently.
  unsigned threads = 1;
};

AdvantageEstimate estimate_advantage(Property prop,
                                     const FamilyFactory& family,
                                     const Adversary& adv,
                                     std::uint64_t trials, const Seed& seed,
                                     const EstimateOptions& options = {});
AdvantageEstimate estimate_advantage(Property prop,
                                     const FunctionFamily& family,
                                     const Adversary& adv,
                                     std::uint64_t trials, const Seed& seed,
                                     const EstimateOptions& options = {});

// Exhaustive searches in lexicographic order; message width must be <= 16.
std::optional<BitString> bf_preimage(const FunctionFamily& family,
                                     const BitString& key,
                                     const BitString& digest);
std::optional<BitString> bf_second_preimage(const FunctionFamily& family,
                                            const BitString& key,
                                            const BitString& message);

// Evaluates up to `budget` distinct random messages and returns the first
// digest collision.
std::optional<std::pair<BitString, BitString>> birthday_collision(
    const FunctionFamily& family, const BitString& key, std::uint64_t budget,
    const Seed& seed);

// Stock adversaries. Each handles all seven games.
//   trivial:      fixed canonical answers (0^n keys, 0^d targets, 0^m, x'^1)
//   random_guess: uniformly random answers from its own coins
//   fixed_guess:  always answers `guess` (second message for Coll: guess^1)
//   brute_force:  exhaustive search; optimal at desk scale
Adversary trivial_adversary();
Adversary random_guess_adversary();
Adversary fixed_guess_adversary(BitString guess);
Adversary brute_force_adversary();

struct ExperimentReport {
  Property prop;
  std::string family;
  AdvantageEstimate estimate;
  std::uint64_t seed = 0;
};

// prop=<p> family=<label> trials=<t> wins=<w> p_hat=<v> ci=[lo,hi] seed=<s>
std::string format_report(const ExperimentReport& report);
nlohmann::json report_json(const ExperimentReport& report);

}  // namespace roxlab
