#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace planch {

/// Finite offset set defining the local observable c_{i+x1} ... c_{i+xk}.
/// Offsets are normalized so the smallest one is 0; diameter at most 12.
class PatternSpec {
 public:
  explicit PatternSpec(std::vector<std::int64_t> offsets);

  const std::vector<std::int64_t>& offsets() const noexcept { return offsets_; }
  std::int64_t diameter() const noexcept { return offsets_.back(); }
  std::size_t size() const noexcept { return offsets_.size(); }

  std::string to_string() const;          // "0,1"
  static PatternSpec parse(const std::string& text);

 private:
  std::vector<std::int64_t> offsets_;  // sorted, offsets_[0] == 0
};

}  // namespace planch
