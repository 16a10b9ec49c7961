#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace hbox {

// A string over {0,1} of length d <= 63, packed so that position 0 (the
// leftmost character) is the most significant bit of code(). Integer order
// on codes is therefore lexicographic order on the strings.
class BitString {
public:
  static constexpr unsigned max_dim = 63;

  BitString(unsigned dim, std::uint64_t code);
  static BitString parse(std::string_view text);

  unsigned dim() const { return dim_; }
  std::uint64_t code() const { return code_; }
  bool operator[](unsigned pos) const { return (code_ >> (dim_ - 1 - pos)) & 1U; }
  BitString with(unsigned pos, bool bit) const;
  std::string str() const;

  friend bool operator==(const BitString&, const BitString&) = default;
  friend std::strong_ordering operator<=>(const BitString&, const BitString&) = default;

private:
  unsigned dim_;
  std::uint64_t code_;
};

// Vertices of a box are indexed by bit strings: bit i picks the low (0) or
// high (1) endpoint of side i.
using VertexIndex = BitString;

}  // namespace hbox
