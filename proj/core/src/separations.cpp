#include "roxlab/separations.hpp"

#include "roxlab/errors.hpp"

namespace roxlab {

FunctionFamily zero_key_family(const FunctionFamily& base) {
  const std::size_t d = base.params().digest_bits;
  return FunctionFamily(
      base.params(), "zerokey:" + base.label(),
      [base, d](const BitString& k, const BitString& x) {
        return k.is_zero() ? BitString::zeros(d) : base.eval(k, x);
      },
      base.shape());
}

FunctionFamily pinned_zero_family(const FunctionFamily& base) {
  FamilyParams params = base.params();
  params.digest_bits += 1;
  const std::size_t d = params.digest_bits;
  return FunctionFamily(
      params, "pinned:" + base.label(),
      [base, d](const BitString& k, const BitString& x) {
        if (x.is_zero()) return BitString::zeros(d);
        BitString out = BitString::ones(1);
        out.append(base.eval(k, x));
        return out;
      },
      base.shape());
}

Adversary attack_apre_zero_key() {
  Adversary adv;
  adv.label = "zero-key-attack";
  adv.choose = [](AdversaryEnv& env) {
    return FirstStageOutput{BitString::zeros(env.family.params().key_bits), {}};
  };
  adv.respond = [](const Challenge&, std::any&, AdversaryEnv& env) {
    return Answer{BitString::zeros(env.family.params().message_bits), {}};
  };
  return adv;
}

Adversary attack_asec_zero_key() {
  Adversary adv = attack_apre_zero_key();
  adv.respond = [](const Challenge& ch, std::any&, AdversaryEnv&) {
    if (!ch.message) throw InvalidArgument("aSec challenge lacks a message");
    const BitString& x = *ch.message;
    return Answer{x.flipped(x.size() - 1), {}};
  };
  return adv;
}

Adversary attack_epre_pinned() {
  Adversary adv;
  adv.label = "pin-attack";
  adv.choose = [](AdversaryEnv& env) {
    return FirstStageOutput{BitString::zeros(env.family.params().digest_bits),
                            {}};
  };
  adv.respond = [](const Challenge&, std::any&, AdversaryEnv& env) {
    return Answer{BitString::zeros(env.family.params().message_bits), {}};
  };
  return adv;
}

}  // namespace roxlab
