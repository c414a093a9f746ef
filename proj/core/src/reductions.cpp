#include "roxlab/reductions.hpp"

#include <cmath>
#include <unordered_map>

#include <fmt/format.h>

#include "roxlab/errors.hpp"
#include "roxlab/toolkit.hpp"

namespace roxlab {
namespace {

struct RoxReductionState {
  std::shared_ptr<RoxInstance> inst;
  BitString key;
  std::any inner_state;
};

std::shared_ptr<RoxInstance> fresh_instance(const AdversaryEnv& env,
                                            const RoxReductionConfig& config) {
  return std::make_shared<RoxInstance>(env.family, config.max_blocks,
                                       env.rng.fork());
}

Adversary::FirstStage wrap_first_stage(Adversary::FirstStage inner,
                                       RoxReductionConfig config) {
  return [inner = std::move(inner), config](AdversaryEnv& env) {
    if (!inner) throw InvalidArgument("wrapped adversary has no first stage");
    RoxReductionState st;
    st.inst = fresh_instance(env, config);
    AdversaryEnv inner_env{env.game, env.family, env.rng, st.inst.get()};
    FirstStageOutput out = inner(inner_env);
    st.key = out.choice;
    st.inner_state = std::move(out.state);
    return FirstStageOutput{std::move(out.choice), std::move(st)};
  };
}

// Standard games give the key at the second stage; build the instance then.
RoxReductionState& ensure_state(std::any& state, const Challenge& ch,
                                AdversaryEnv& env,
                                const RoxReductionConfig& config) {
  if (!state.has_value()) {
    if (!ch.key) throw InvalidArgument("no key from either stage");
    RoxReductionState st;
    st.inst = fresh_instance(env, config);
    st.key = *ch.key;
    state = std::move(st);
  }
  return std::any_cast<RoxReductionState&>(state);
}

void log_record(const std::shared_ptr<ReductionLog>& log, ReductionRecord r) {
  if (log) log->add(std::move(r));
}

}  // namespace

void ReductionLog::add(ReductionRecord record) {
  std::lock_guard lock(mu_);
  records_.push_back(std::move(record));
}

std::vector<ReductionRecord> ReductionLog::records() const {
  std::lock_guard lock(mu_);
  return records_;
}

Adversary coll_from_esec(Adversary esec) {
  Adversary out;
  out.label = "T(" + esec.label + ")";
  out.respond = [esec](const Challenge& ch, std::any&, AdversaryEnv& env) {
    if (!esec.choose || !esec.respond) {
      throw InvalidArgument("eSec adversary needs both stages");
    }
    AdversaryEnv inner{Property::kESec, env.family, env.rng, env.rox};
    FirstStageOutput first = esec.choose(inner);
    Challenge inner_ch;
    inner_ch.key = ch.key;
    Answer a = esec.respond(inner_ch, first.state, inner);
    return Answer{std::move(first.choice), std::move(a.message)};
  };
  return out;
}

std::uint64_t query_count(const RoxInstance& inst, std::size_t message_bits) {
  const std::size_t ell = block_count(inst, message_bits);
  const std::size_t pad_bits = ell * inst.block_bits() - message_bits;
  const std::size_t width = 2 * inst.key_bits();
  return ell + (pad_bits + width - 1) / width;
}

Adversary rox_apre_reduction(Adversary rox_adversary,
                             RoxReductionConfig config,
                             std::shared_ptr<ReductionLog> log) {
  Adversary out;
  out.label = "apre-reduction(" + rox_adversary.label + ")";
  out.choose = wrap_first_stage(rox_adversary.choose, config);
  out.respond = [inner = rox_adversary.respond, config, log](
                    const Challenge& ch, std::any& state, AdversaryEnv& env) {
    RoxReductionState& st = ensure_state(state, ch, env, config);
    RoxInstance& inst = *st.inst;
    AdversaryEnv inner_env{env.game, env.family, env.rng, &inst};
    Challenge inner_ch;
    inner_ch.key = ch.key;
    inner_ch.digest = ch.digest;
    const Answer answer = inner(inner_ch, st.inner_state, inner_env);

    ReductionRecord rec;
    const std::uint64_t before = inst.oracle_queries();
    std::optional<BitString> preimage;
    try {
      preimage = extract_preimage(inst, st.key, answer.message);
    } catch (const Error& e) {
      rec.note = e.what();
    }
    rec.extra_queries = inst.oracle_queries() - before;
    if (preimage) {
      rec.query_bound = query_count(inst, answer.message.size());
      rec.inner_won = rox_eval(inst, st.key, answer.message) == *ch.digest;
      rec.outer_won = inst.family().eval(st.key, *preimage) == *ch.digest;
    }
    log_record(log, rec);
    if (!preimage) throw Error("preimage extraction failed: " + rec.note);
    return Answer{*preimage, {}};
  };
  return out;
}

Adversary rox_asec_reduction(Adversary rox_adversary,
                             RoxReductionConfig config,
                             std::shared_ptr<ReductionLog> log) {
  if (config.i_max == 0 || config.i_max > config.max_blocks) {
    throw InvalidArgument(fmt::format("i_max must lie in [1, L = {}], got {}",
                                      config.max_blocks, config.i_max));
  }
  Adversary out;
  out.label = "asec-reduction(" + rox_adversary.label + ")";
  out.choose = wrap_first_stage(rox_adversary.choose, config);
  out.respond = [inner = rox_adversary.respond, config, log](
                    const Challenge& ch, std::any& state, AdversaryEnv& env) {
    RoxReductionState& st = ensure_state(state, ch, env, config);
    RoxInstance& inst = *st.inst;
    const BitString& x = *ch.message;

    ReductionRecord rec;
    rec.embed_round = 1 + static_cast<std::size_t>(env.rng.uniform(config.i_max));
    const std::uint64_t before = inst.oracle_queries();
    EmbedResult embedded;
    try {
      embedded = embed_message(inst, st.key, x, rec.embed_round, env.rng.fork());
    } catch (const Error& e) {
      rec.note = std::string("embedding failed: ") + e.what();
      log_record(log, rec);
      throw;
    }
    const std::uint64_t embed_queries = inst.oracle_queries() - before;

    AdversaryEnv inner_env{env.game, env.family, env.rng, &inst};
    Challenge inner_ch;
    inner_ch.key = ch.key;
    inner_ch.message = embedded.message;
    const Answer answer = inner(inner_ch, st.inner_state, inner_env);

    const std::uint64_t before_extract = inst.oracle_queries();
    std::optional<CollisionWitness> witness;
    try {
      witness = extract_collision(inst, st.key, embedded.message, answer.message);
    } catch (const Error& e) {
      rec.note = std::string("extraction failed: ") + e.what();
    }
    rec.extra_queries = embed_queries + inst.oracle_queries() - before_extract;
    try {
      rec.query_bound = query_count(inst, embedded.message.size()) +
                        query_count(inst, answer.message.size());
      rec.inner_won =
          answer.message != embedded.message &&
          rox_eval(inst, st.key, answer.message) ==
              rox_eval(inst, st.key, embedded.message);
    } catch (const Error&) {
      rec.inner_won = false;
    }
    if (!witness) {
      log_record(log, rec);
      throw Error(rec.note);
    }
    rec.extracted_round = witness->round;
    if (witness->round != rec.embed_round) {
      rec.failed = true;
      rec.note = fmt::format("FAIL: extracted round {} != embedded round {}",
                             witness->round, rec.embed_round);
      log_record(log, rec);
      throw Error(rec.note);
    }
    const FunctionFamily& h = inst.family();
    rec.outer_won = witness->first == x && witness->second != x &&
                    h.eval(st.key, witness->second) == h.eval(st.key, x);
    log_record(log, rec);
    return Answer{witness->second, {}};
  };
  return out;
}

DigestDistance challenge_digest_distance(RoxInstance& inst,
                                         const BitString& key,
                                         std::size_t message_bits,
                                         std::uint64_t samples, Rng& rng) {
  const std::size_t d = inst.digest_bits();
  if (d > 20) throw InvalidArgument("digest too wide for a histogram");
  if (samples == 0) throw InvalidArgument("samples must be >= 1");
  const std::size_t m = inst.family().params().message_bits;
  std::vector<std::uint64_t> direct(std::size_t{1} << d);
  std::vector<std::uint64_t> iterated(std::size_t{1} << d);
  for (std::uint64_t s = 0; s < samples; ++s) {
    ++direct[inst.family().eval(key, rng.bits(m)).to_uint()];
    ++iterated[rox_eval(inst, key, rng.bits(message_bits)).to_uint()];
  }
  double tv = 0.0;
  for (std::size_t y = 0; y < direct.size(); ++y) {
    tv += std::abs(static_cast<double>(direct[y]) -
                   static_cast<double>(iterated[y]));
  }
  return {tv / (2.0 * static_cast<double>(samples)), samples};
}

Adversary esec_flip_adversary() {
  Adversary adv;
  adv.label = "esec-flip";
  adv.choose = [](AdversaryEnv& env) {
    BitString x = env.rng.bits(env.family.params().message_bits);
    return FirstStageOutput{x, x};
  };
  adv.respond = [](const Challenge&, std::any& state, AdversaryEnv&) {
    const BitString x = std::any_cast<BitString>(state);
    return Answer{x.flipped(x.size() - 1), {}};
  };
  return adv;
}

Adversary rox_preimage_search_adversary(std::size_t message_bits,
                                        std::uint64_t budget) {
  Adversary adv;
  adv.label = fmt::format("rox-preimage-search({},{})", message_bits, budget);
  adv.choose = [](AdversaryEnv& env) {
    BitString k = BitString::zeros(env.family.params().key_bits);
    return FirstStageOutput{k, k};
  };
  adv.respond = [message_bits, budget](const Challenge& ch, std::any& state,
                                       AdversaryEnv& env) {
    if (env.rox == nullptr) throw InvalidArgument("needs ROX oracle access");
    const BitString key = ch.key ? *ch.key : std::any_cast<BitString>(state);
    BitString candidate = env.rng.bits(message_bits);
    for (std::uint64_t t = 0; t < budget; ++t) {
      if (rox_eval(*env.rox, key, candidate) == *ch.digest) break;
      candidate = env.rng.bits(message_bits);
    }
    return Answer{candidate, {}};
  };
  return adv;
}

Adversary rox_block_flip_adversary(std::size_t round) {
  if (round == 0) throw InvalidArgument("rounds are 1-based");
  Adversary adv;
  adv.label = fmt::format("rox-block-flip({})", round);
  adv.choose = [](AdversaryEnv& env) {
    BitString k = BitString::zeros(env.family.params().key_bits);
    return FirstStageOutput{k, k};
  };
  adv.respond = [round](const Challenge& ch, std::any&, AdversaryEnv& env) {
    if (env.rox == nullptr) throw InvalidArgument("needs ROX oracle access");
    const BitString& target = *ch.message;
    const std::size_t pos = (round - 1) * env.rox->block_bits();
    if (pos >= target.size()) return Answer{target, {}};
    return Answer{target.flipped(pos), {}};
  };
  return adv;
}

}  // namespace roxlab
