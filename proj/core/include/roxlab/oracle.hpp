#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "roxlab/bitstring.hpp"
#include "roxlab/seed.hpp"

namespace roxlab {

struct OracleStats {
  std::uint64_t queries = 0;
  std::uint64_t programmed_points = 0;

  friend bool operator==(const OracleStats&, const OracleStats&) = default;
};

struct TranscriptEntry {
  enum class Kind { kQuery, kProgram };
  Kind kind;
  BitString input;
  BitString output;
};

/// Lazily sampled, programmable random function {0,1}^in -> {0,1}^out.
///
/// Fresh values are xof(seed, "oracle", input), so a cell's unprogrammed value
/// depends only on the point, never on query order. Single owner; not
/// thread-safe.
class OracleSim {
 public:
  OracleSim(std::size_t in_bits, std::size_t out_bits, Seed seed);

  std::size_t in_bits() const { return in_bits_; }
  std::size_t out_bits() const { return out_bits_; }

  // Counts toward stats().queries, including repeats.
  BitString query(const BitString& input);
  // Last write wins. Does not count as a query.
  void program(const BitString& input, const BitString& value);

  bool was_queried(const BitString& input) const;
  bool is_programmed(const BitString& input) const;

  OracleStats stats() const { return {queries_, programmed_}; }
  const std::vector<TranscriptEntry>& transcript() const { return transcript_; }
  // Lines of the form `Q <in> -> <out>` and `P <in> -> <out>`.
  std::string dump_transcript() const;
  // Recording is on by default; long-running loops may switch it off.
  void set_recording(bool on) { recording_ = on; }

 private:
  struct Cell {
    BitString value;
    bool programmed = false;
    bool queried = false;
  };

  void check_width(const BitString& bits, std::size_t expected,
                   const char* what) const;

  std::size_t in_bits_;
  std::size_t out_bits_;
  Seed seed_;
  std::unordered_map<BitString, Cell, BitStringHash> table_;
  std::vector<TranscriptEntry> transcript_;
  std::uint64_t queries_ = 0;
  std::uint64_t programmed_ = 0;
  bool recording_ = true;
};

}  // namespace roxlab
