#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "roxlab/family.hpp"
#include "roxlab/games.hpp"

namespace roxlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;

// Toy parameters selected by --params n,b,d,L.
struct ToyParams {
  std::size_t n = 4;
  std::size_t b = 4;
  std::size_t d = 8;
  std::size_t max_blocks = 16;

  FamilyParams family() const { return {n, b + d, d}; }
};

ToyParams parse_params(std::string_view text);

struct ResolvedFamily {
  std::string label;
  FamilyParams params;
  FamilyFactory factory;
};

// Grammar: base names `const0`, `tab`, `tab4`, with any number of prefixes
// `zerokey:`, `pinned:`, `rox:`. `rox:` slices messages to `rox_message_bits`
// (0 means n + 2b of the wrapped family).
ResolvedFamily resolve_family(std::string_view spec, const ToyParams& toy,
                              std::size_t rox_message_bits = 0);
std::vector<std::string> family_names();

Adversary resolve_adversary(std::string_view name, Property prop);
std::vector<std::string> adversary_names();

// Runs the command line `args` (without the program name). Returns the exit
// code; never throws.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace roxlab::cli
