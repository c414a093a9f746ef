#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "roxlab/errors.hpp"
#include "roxlab/reductions.hpp"
#include "roxlab/rox.hpp"
#include "roxlab/separations.hpp"
#include "roxlab/toolkit.hpp"

namespace roxlab::cli {
namespace {

using json = nlohmann::ordered_json;

struct Globals {
  std::uint64_t seed = 1;
  std::string params = "4,4,8,16";
  bool json = false;
  unsigned threads = 1;
};

std::size_t parse_size(std::string_view text, std::string_view what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InvalidArgument(fmt::format("bad {}: '{}'", what, text));
  }
  return v;
}

std::string strip_prefix(std::string_view spec, std::string_view prefix) {
  return std::string(spec.substr(prefix.size()));
}

std::string blocks_text(const std::vector<BitString>& blocks) {
  std::string out;
  for (const auto& b : blocks) {
    if (!out.empty()) out += ',';
    out += b.to_string();
  }
  return out;
}

void print_transcript_point(std::ostream& out, const ProgrammedPoint& p) {
  out << fmt::format("  P {} -> {}  ({})\n", p.input.to_string(),
                     p.value.to_string(),
                     p.oracle == OracleId::kMask ? "RO1" : "RO2");
}

std::string rate(std::uint64_t num, std::uint64_t den) {
  return fmt::format("{}/{}", num, den);
}

// One toy ROX setup per trial: tabulated H at the toy parameters, fresh
// oracles, challenger coins for keys and messages.
struct ToyTrial {
  Seed seed;
  FunctionFamily family;
  RoxInstance inst;
  Rng coins;

  ToyTrial(const Seed& root, std::uint64_t t, const ToyParams& toy)
      : seed(root.derive("trial", t)),
        family(tabulated_family(seed.derive("family"), toy.family())),
        inst(family, toy.max_blocks, seed.derive("oracles")),
        coins(seed.derive("challenger")) {}

  BitString random_message() {
    const std::size_t lo = inst.min_message_bits();
    const std::size_t hi = inst.max_message_bits();
    return coins.bits(lo + coins.uniform(hi - lo + 1));
  }
};

// ---------------------------------------------------------------- hash / pad

int cmd_hash(const Globals& g, const std::string& key_text,
             const std::string& input_text, const std::string& family_spec,
             std::ostream& out) {
  const ToyParams toy = parse_params(g.params);
  const Seed root = Seed::from_u64(g.seed);
  const ResolvedFamily fam = resolve_family(family_spec, toy);
  RoxInstance inst(fam.factory(root.derive("family")), toy.max_blocks,
                   root.derive("oracles"));
  const BitString key = BitString::parse(key_text);
  const BitString x = BitString::parse(input_text);
  const BitString digest = rox_eval(inst, key, x);
  const std::size_t ell = block_count(inst, x.size());
  const std::uint64_t q2 = query_count(inst, x.size()) - ell;
  if (g.json) {
    out << json{{"digest", digest.to_string()},
                {"ell", ell},
                {"q2", q2},
                {"queries", inst.oracle_queries()}}
               .dump()
        << '\n';
  } else {
    out << fmt::format("digest={} ell={} q2={} queries={}\n",
                       digest.to_string(), ell, q2, inst.oracle_queries());
  }
  return kExitOk;
}

int cmd_pad(const Globals& g, const std::string& input_text,
            std::ostream& out) {
  const ToyParams toy = parse_params(g.params);
  const Seed root = Seed::from_u64(g.seed);
  RoxInstance inst(tabulated_family(root.derive("family"), toy.family()),
                   toy.max_blocks, root.derive("oracles"));
  const PaddedMessage padded = pad_rox(inst, BitString::parse(input_text));
  if (g.json) {
    std::vector<std::string> blocks;
    for (const auto& b : padded.blocks) blocks.push_back(b.to_string());
    out << json{{"ell", padded.block_count},
                {"q2", padded.pad_queries},
                {"xbar", padded.prefix.to_string()},
                {"blocks", blocks}}
               .dump()
        << '\n';
  } else {
    out << fmt::format("ell={} q2={} xbar={} blocks={}\n", padded.block_count,
                       padded.pad_queries, padded.prefix.to_string(),
                       blocks_text(padded.blocks));
  }
  return kExitOk;
}

// ---------------------------------------------------------------------- game

int cmd_game(const Globals& g, const std::string& prop_text,
             const std::string& family_spec, const std::string& adv_name,
             std::uint64_t trials, std::size_t msg_bits, std::ostream& out) {
  const auto prop = parse_property(prop_text);
  if (!prop) {
    throw InvalidArgument(fmt::format(
        "unknown property '{}' (expected Coll, Pre, Sec, aPre, aSec, ePre, eSec)",
        prop_text));
  }
  const ToyParams toy = parse_params(g.params);
  const ResolvedFamily fam = resolve_family(family_spec, toy, msg_bits);
  const Adversary adv = resolve_adversary(adv_name, *prop);
  const AdvantageEstimate est =
      estimate_advantage(*prop, fam.factory, adv, trials,
                         Seed::from_u64(g.seed), {.threads = g.threads});
  const ExperimentReport report{*prop, fam.label, est, g.seed};
  if (g.json) {
    out << report_json(report).dump() << '\n';
  } else {
    out << format_report(report) << '\n';
  }
  return kExitOk;
}

// -------------------------------------------------------------------- reduce

json reduce_extract_preimage(const Seed& root, const ToyParams& toy,
                             std::uint64_t trials) {
  std::uint64_t ok = 0;
  std::uint64_t within_bound = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    ToyTrial trial(root, t, toy);
    const BitString key = trial.coins.bits(toy.n);
    const BitString x = trial.random_message();
    const BitString digest = rox_eval(trial.inst, key, x);
    const std::uint64_t before = trial.inst.oracle_queries();
    const BitString pre = extract_preimage(trial.inst, key, x);
    ok += trial.family.eval(key, pre) == digest ? 1 : 0;
    within_bound +=
        trial.inst.oracle_queries() - before <= query_count(trial.inst, x.size())
            ? 1
            : 0;
  }
  return {{"lemma", "extract-preimage"},
          {"trials", trials},
          {"success", rate(ok, trials)},
          {"queries-within-q", rate(within_bound, trials)}};
}

json reduce_embed_message(const Seed& root, const ToyParams& toy,
                          std::uint64_t trials, std::ostream* detail) {
  std::uint64_t ok = 0;
  std::uint64_t single = 0;
  const std::size_t i_max = std::min<std::size_t>(8, toy.max_blocks);
  for (std::uint64_t t = 0; t < trials; ++t) {
    ToyTrial trial(root, t, toy);
    const BitString key = trial.coins.bits(toy.n);
    const BitString x = trial.coins.bits(toy.b + toy.d);
    const std::size_t i = 1 + trial.coins.uniform(i_max);
    const EmbedResult r =
        embed_message(trial.inst, key, x, i, trial.seed.derive("embed"));
    const auto trace = rox_trace(trial.inst, key, r.message);
    ok += trace.at(i - 1).compression_input == x ? 1 : 0;
    single += r.programmed.size() == 1 &&
                      r.programmed[0].oracle == OracleId::kMask &&
                      trial.inst.mask_oracle().stats().programmed_points == 1
                  ? 1
                  : 0;
    if (detail != nullptr && t == 0) {
      *detail << fmt::format("# trial 0: x={} i={} xhat={}\n", x.to_string(),
                             i, r.message.to_string());
      for (const auto& p : r.programmed) print_transcript_point(*detail, p);
    }
  }
  return {{"lemma", "embed-message"},
          {"trials", trials},
          {"success", rate(ok, trials)},
          {"single-ro1-point", rate(single, trials)}};
}

json reduce_extract_collision(const Seed& root, const ToyParams& toy,
                              std::uint64_t trials, std::ostream* detail) {
  std::uint64_t planted = 0;
  std::uint64_t ok = 0;
  std::uint64_t no_round = 0;
  const std::size_t slice = toy.n + 2 * toy.b;
  const std::uint64_t budget = std::uint64_t{1} << (toy.d / 2 + 3);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Seed seed = root.derive("trial", t);
    const FunctionFamily h =
        tabulated_family(seed.derive("family"), toy.family());
    auto inst = std::make_shared<RoxInstance>(h, toy.max_blocks,
                                              seed.derive("oracles"));
    Rng coins(seed.derive("challenger"));
    const BitString key = coins.bits(toy.n);
    const auto pair =
        birthday_collision(rox_family(inst, slice), key, budget,
                           seed.derive("birthday"));
    if (!pair) continue;
    ++planted;
    try {
      const CollisionWitness w =
          extract_collision(*inst, key, pair->first, pair->second);
      const bool valid =
          w.first != w.second && h.eval(key, w.first) == h.eval(key, w.second);
      ok += valid ? 1 : 0;
      if (detail != nullptr && ok == 1 && valid) {
        *detail << fmt::format(
            "# trial {}: xhat={} xhat'={} round={} x={} x'={}\n", t,
            pair->first.to_string(), pair->second.to_string(), w.round,
            w.first.to_string(), w.second.to_string());
      }
    } catch (const NoCollidingRound&) {
      ++no_round;
    }
  }
  return {{"lemma", "extract-collision"},
          {"trials", trials},
          {"planted", planted},
          {"success", rate(ok, planted)},
          {"no-colliding-round", no_round}};
}

json reduce_coll_from_esec(const Seed& root, const ToyParams& toy,
                           std::uint64_t trials, const std::string& spec) {
  const ResolvedFamily fam = resolve_family(spec, toy);
  const Adversary esec = esec_flip_adversary();
  const Adversary coll = coll_from_esec(esec);
  std::map<std::pair<bool, bool>, std::uint64_t> table;
  std::uint64_t equal = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Seed trial = root.derive("trial", t);
    const FunctionFamily f = fam.factory(trial.derive("family"));
    const bool a = run_game(Property::kESec, f, esec, trial).win;
    const bool b = run_game(Property::kColl, f, coll, trial).win;
    ++table[{a, b}];
    equal += a == b ? 1 : 0;
  }
  return {{"lemma", "coll-from-esec"},
          {"family", fam.label},
          {"trials", trials},
          {"paired-equal", rate(equal, trials)},
          {"esec-win/coll-win", table[{true, true}]},
          {"esec-win/coll-lose", table[{true, false}]},
          {"esec-lose/coll-win", table[{false, true}]},
          {"esec-lose/coll-lose", table[{false, false}]}};
}

json summarize_log(const ReductionLog& log) {
  std::uint64_t inner = 0, outer = 0, both = 0, fails = 0, over_bound = 0;
  const auto records = log.records();
  for (const auto& r : records) {
    inner += r.inner_won ? 1 : 0;
    outer += r.outer_won ? 1 : 0;
    both += r.inner_won && r.outer_won ? 1 : 0;
    fails += r.failed ? 1 : 0;
    over_bound += r.extra_queries > r.query_bound ? 1 : 0;
  }
  return {{"records", records.size()},
          {"adversary-wins", inner},
          {"reduction-wins", outer},
          {"reduction-wins-given-adversary-won", rate(both, inner)},
          {"FAIL", fails},
          {"extra-queries-over-q", over_bound}};
}

json reduce_apre(const Globals& g, const ToyParams& toy, std::uint64_t trials,
                 Property prop) {
  auto log = std::make_shared<ReductionLog>();
  const std::size_t slice = toy.n + 2 * toy.b;
  const Adversary adv = rox_apre_reduction(
      rox_preimage_search_adversary(slice, 64),
      {.max_blocks = toy.max_blocks,
       .i_max = std::min<std::size_t>(8, toy.max_blocks)},
      log);
  const ResolvedFamily fam = resolve_family("tab", toy);
  const AdvantageEstimate est = estimate_advantage(
      prop, fam.factory, adv, trials, Seed::from_u64(g.seed),
      {.threads = g.threads});
  json j = {{"lemma", prop == Property::kAPre ? "apre" : "pre"},
            {"trials", trials},
            {"game-wins", est.wins}};
  j.update(summarize_log(*log));
  return j;
}

json reduce_asec(const Globals& g, const ToyParams& toy, std::uint64_t trials,
                 Property prop, std::size_t round, std::size_t i_max) {
  auto log = std::make_shared<ReductionLog>();
  const Adversary adv = rox_asec_reduction(
      rox_block_flip_adversary(round),
      {.max_blocks = toy.max_blocks, .i_max = i_max}, log);
  const FunctionFamily h =
      constant_family(toy.family(), BitString::zeros(toy.d));
  const AdvantageEstimate est = estimate_advantage(
      prop, h, adv, trials, Seed::from_u64(g.seed), {.threads = g.threads});
  json j = {{"lemma", prop == Property::kASec ? "asec" : "sec"},
            {"family", h.label()},
            {"round", round},
            {"i_max", i_max},
            {"trials", trials},
            {"game-wins", est.wins}};
  j.update(summarize_log(*log));
  return j;
}

void print_flat(std::ostream& out, const json& j) {
  std::string line;
  for (const auto& [k, v] : j.items()) {
    if (!line.empty()) line += ' ';
    line += k + '=' + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  out << line << '\n';
}

int cmd_reduce(const Globals& g, const std::string& lemma,
               std::uint64_t trials, const std::string& family_spec,
               std::size_t round, std::size_t i_max, std::ostream& out) {
  const ToyParams toy = parse_params(g.params);
  const Seed root = Seed::from_u64(g.seed);
  std::ostream* detail = g.json ? nullptr : &out;
  json result;
  if (lemma == "extract-preimage") {
    result = reduce_extract_preimage(root, toy, trials);
  } else if (lemma == "embed-message") {
    result = reduce_embed_message(root, toy, trials, detail);
  } else if (lemma == "extract-collision") {
    result = reduce_extract_collision(root, toy, trials, detail);
  } else if (lemma == "coll-from-esec") {
    result = reduce_coll_from_esec(root, toy, trials, family_spec);
  } else if (lemma == "apre" || lemma == "pre") {
    result = reduce_apre(g, toy, trials,
                         lemma == "apre" ? Property::kAPre : Property::kPre);
  } else if (lemma == "asec" || lemma == "sec") {
    result = reduce_asec(g, toy, trials,
                         lemma == "asec" ? Property::kASec : Property::kSec,
                         round, i_max);
  } else {
    throw InvalidArgument(fmt::format(
        "unknown lemma '{}' (extract-preimage, embed-message, "
        "extract-collision, coll-from-esec, apre, pre, asec, sec)",
        lemma));
  }
  result["seed"] = g.seed;
  if (g.json) {
    out << result.dump() << '\n';
  } else {
    print_flat(out, result);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- separation

int cmd_separation(const Globals& g, const std::string& which,
                   std::uint64_t trials, std::ostream& out) {
  const ToyParams toy = parse_params(g.params);
  const Seed root = Seed::from_u64(g.seed);
  struct Row {
    std::string spec;
    Property prop;
    Adversary adv;
  };
  std::vector<Row> rows;
  if (which == "aPre" || which == "apre") {
    rows = {{"zerokey:tab4", Property::kAPre, attack_apre_zero_key()},
            {"tab4", Property::kAPre, attack_apre_zero_key()},
            {"tab4", Property::kAPre, random_guess_adversary()}};
  } else if (which == "aSec" || which == "asec") {
    rows = {{"zerokey:tab4", Property::kASec, attack_asec_zero_key()},
            {"tab4", Property::kASec, attack_asec_zero_key()},
            {"tab4", Property::kASec, random_guess_adversary()}};
  } else if (which == "ePre" || which == "epre") {
    rows = {{"pinned:tab4", Property::kEPre, attack_epre_pinned()},
            {"tab4", Property::kEPre, attack_epre_pinned()},
            {"tab4", Property::kEPre, random_guess_adversary()}};
  } else {
    throw InvalidArgument(
        fmt::format("unknown separation '{}' (aPre, aSec, ePre)", which));
  }
  nlohmann::json all = nlohmann::json::array();
  for (const Row& row : rows) {
    const ResolvedFamily fam = resolve_family(row.spec, toy);
    const AdvantageEstimate est = estimate_advantage(
        row.prop, fam.factory, row.adv, trials, root, {.threads = g.threads});
    const ExperimentReport report{row.prop, fam.label, est, g.seed};
    if (g.json) {
      nlohmann::json j = report_json(report);
      j["adversary"] = row.adv.label;
      all.push_back(j);
    } else {
      out << format_report(report) << " adv=" << row.adv.label << '\n';
    }
  }
  if (g.json) out << all.dump() << '\n';
  return kExitOk;
}

std::string joined(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

}  // namespace

ToyParams parse_params(std::string_view text) {
  std::vector<std::size_t> v;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    v.push_back(parse_size(text.substr(start, comma - start), "--params field"));
    start = comma + 1;
  }
  if (v.size() != 4) {
    throw InvalidArgument(
        fmt::format("--params expects n,b,d,L, got '{}'", text));
  }
  ToyParams toy{v[0], v[1], v[2], v[3]};
  if (toy.b == 0) throw InvalidArgument("block size b = m - d must be > 0");
  if (toy.d < 2 * toy.b) {
    throw InvalidArgument(
        fmt::format("ROX needs d >= 2b (d={}, b={})", toy.d, toy.b));
  }
  if (toy.n == 0 || toy.max_blocks == 0) {
    throw InvalidArgument("n and L must be positive");
  }
  return toy;
}

std::vector<std::string> family_names() {
  return {"const0", "tab", "tab4", "zerokey:<family>", "pinned:<family>",
          "rox:<family>"};
}

ResolvedFamily resolve_family(std::string_view spec, const ToyParams& toy,
                              std::size_t rox_message_bits) {
  if (spec == "const0") {
    const FamilyParams p = toy.family();
    FunctionFamily f = constant_family(p, BitString::zeros(p.digest_bits));
    return {f.label(), p, [f](const Seed&) { return f; }};
  }
  if (spec == "tab" || spec == "tab4") {
    const FamilyParams p = spec == "tab" ? toy.family() : FamilyParams{4, 6, 4};
    // Validate eagerly so a bad spec fails before any trial runs.
    tabulated_family(Seed::from_u64(0), p);
    const std::string label(spec);
    return {label, p, [p, label](const Seed& s) {
              return tabulated_family(s, p).with_label(label);
            }};
  }
  if (spec.starts_with("zerokey:")) {
    ResolvedFamily inner =
        resolve_family(strip_prefix(spec, "zerokey:"), toy, rox_message_bits);
    return {"zerokey:" + inner.label, inner.params,
            [f = inner.factory](const Seed& s) { return zero_key_family(f(s)); }};
  }
  if (spec.starts_with("pinned:")) {
    ResolvedFamily inner =
        resolve_family(strip_prefix(spec, "pinned:"), toy, rox_message_bits);
    FamilyParams p = inner.params;
    p.digest_bits += 1;
    return {"pinned:" + inner.label, p, [f = inner.factory](const Seed& s) {
              return pinned_zero_family(f(s));
            }};
  }
  if (spec.starts_with("rox:")) {
    ResolvedFamily inner =
        resolve_family(strip_prefix(spec, "rox:"), toy, rox_message_bits);
    const FamilyParams& ip = inner.params;
    ip.validate_for_rox();
    const std::size_t bits = rox_message_bits != 0
                                 ? rox_message_bits
                                 : ip.key_bits + 2 * ip.block_bits();
    const std::size_t max_blocks = toy.max_blocks;
    // Probe once so slice or width errors surface as usage errors.
    rox_family(std::make_shared<RoxInstance>(inner.factory(Seed::from_u64(0)),
                                             max_blocks, Seed::from_u64(0)),
               bits);
    FamilyParams p{ip.key_bits, bits, ip.digest_bits};
    return {"rox:" + inner.label, p,
            [f = inner.factory, max_blocks, bits](const Seed& s) {
              auto inst = std::make_shared<RoxInstance>(
                  f(s.derive("base")), max_blocks, s.derive("oracles"));
              return rox_family(std::move(inst), bits);
            }};
  }
  throw InvalidArgument(fmt::format("unknown family '{}' (registered: {})",
                                    spec, joined(family_names())));
}

std::vector<std::string> adversary_names() {
  return {"any", "guess", "bf", "zero-key-attack", "pin-attack", "esec-flip"};
}

Adversary resolve_adversary(std::string_view name, Property prop) {
  if (name == "any") return trivial_adversary();
  if (name == "guess") return random_guess_adversary();
  if (name == "bf") return brute_force_adversary();
  if (name == "zero-key-attack") {
    return prop == Property::kASec || prop == Property::kSec
               ? attack_asec_zero_key()
               : attack_apre_zero_key();
  }
  if (name == "pin-attack") return attack_epre_pinned();
  if (name == "esec-flip") return esec_flip_adversary();
  throw InvalidArgument(fmt::format("unknown adversary '{}' (registered: {})",
                                    name, joined(adversary_names())));
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"ROX iterated hash, security games, reductions and separations",
               "roxlab"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "master seed")->capture_default_str();
  app.add_option("--params", g.params, "toy parameters n,b,d,L")
      ->capture_default_str();
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--threads", g.threads, "worker threads for trials")
      ->check(CLI::Range(1U, 256U))
      ->capture_default_str();

  std::string key, input, family = "tab", prop, adv, lemma, which;
  std::string reduce_family = "const0";
  std::uint64_t trials = 100;
  std::size_t msg_bits = 0, round = 3, i_max = 8;

  auto* hash = app.add_subcommand("hash", "evaluate ROX on one message");
  hash->add_option("--key", key, "key as <bits>:<hex>")->required();
  hash->add_option("--input", input, "message as <bits>:<hex>")->required();
  hash->add_option("--family", family, "compression family")
      ->capture_default_str();

  auto* pad = app.add_subcommand("pad", "show the padded block sequence");
  pad->add_option("--input", input, "message as <bits>:<hex>")->required();

  auto* game = app.add_subcommand("game", "estimate an adversary's advantage");
  game->add_option("--prop", prop, "Coll, Pre, Sec, aPre, aSec, ePre, eSec")
      ->required();
  game->add_option("--family", family, "family spec")->capture_default_str();
  game->add_option("--adv", adv, "adversary name")->required();
  game->add_option("--trials", trials)->capture_default_str();
  game->add_option("--msg-bits", msg_bits,
                   "message slice for rox: families (default n + 2b)");

  auto* reduce = app.add_subcommand("reduce", "run a toolkit or reduction demo");
  reduce->add_option("--lemma", lemma,
                     "extract-preimage, embed-message, extract-collision, "
                     "coll-from-esec, apre, pre, asec, sec")
      ->required();
  reduce->add_option("--trials", trials)->capture_default_str();
  reduce->add_option("--family", reduce_family,
                     "family for coll-from-esec")
      ->capture_default_str();
  reduce->add_option("--round", round, "flip round for asec/sec")
      ->capture_default_str();
  reduce->add_option("--i-max", i_max, "embedding index bound for asec/sec")
      ->capture_default_str();

  auto* sep = app.add_subcommand("separation", "separation attack table");
  sep->add_option("--which", which, "aPre, aSec or ePre")->required();
  sep->add_option("--trials", trials)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (trials == 0) throw InvalidArgument("--trials must be >= 1");
    if (*hash) return cmd_hash(g, key, input, family, out);
    if (*pad) return cmd_pad(g, input, out);
    if (*game) return cmd_game(g, prop, family, adv, trials, msg_bits, out);
    if (*reduce) {
      return cmd_reduce(g, lemma, trials, reduce_family, round, i_max, out);
    }
    if (*sep) return cmd_separation(g, which, trials, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace roxlab::cli
