#include "roxlab/oracle.hpp"

#include <fmt/format.h>

#include "roxlab/errors.hpp"

namespace roxlab {

OracleSim::OracleSim(std::size_t in_bits, std::size_t out_bits, Seed seed)
    : in_bits_(in_bits), out_bits_(out_bits), seed_(std::move(seed)) {
  if (out_bits_ == 0) throw InvalidArgument("oracle output width must be > 0");
}

void OracleSim::check_width(const BitString& bits, std::size_t expected,
                            const char* what) const {
  if (bits.size() != expected) {
    throw InvalidArgument(fmt::format("oracle {} has {} bits, expected {}",
                                      what, bits.size(), expected));
  }
}

BitString OracleSim::query(const BitString& input) {
  check_width(input, in_bits_, "input");
  auto [it, inserted] = table_.try_emplace(input);
  if (inserted) {
    it->second.value =
        Xof(seed_, "oracle").absorb(input).squeeze_bits(out_bits_);
  }
  it->second.queried = true;
  ++queries_;
  if (recording_) transcript_.push_back({TranscriptEntry::Kind::kQuery, input, it->second.value});
  return it->second.value;
}

void OracleSim::program(const BitString& input, const BitString& value) {
  check_width(input, in_bits_, "input");
  check_width(value, out_bits_, "value");
  Cell& cell = table_[input];
  if (!cell.programmed) ++programmed_;
  cell.programmed = true;
  cell.value = value;
  if (recording_) transcript_.push_back({TranscriptEntry::Kind::kProgram, input, value});
}

bool OracleSim::was_queried(const BitString& input) const {
  auto it = table_.find(input);
  return it != table_.end() && it->second.queried;
}

bool OracleSim::is_programmed(const BitString& input) const {
  auto it = table_.find(input);
  return it != table_.end() && it->second.programmed;
}

std::string OracleSim::dump_transcript() const {
  std::string out;
  for (const auto& e : transcript_) {
    out += fmt::format("{} {} -> {}\n",
                       e.kind == TranscriptEntry::Kind::kQuery ? 'Q' : 'P',
                       e.input.to_string(), e.output.to_string());
  }
  return out;
}

}  // namespace roxlab
