#include "hbox/bits.hpp"

#include "hbox/errors.hpp"

namespace hbox {

BitString::BitString(unsigned dim, std::uint64_t code) : dim_(dim), code_(code) {
  if (dim == 0 || dim > max_dim) throw InputError("bit string length must be in 1..63");
  if ((code >> dim) != 0) throw InputError("bit string code out of range");
}

BitString BitString::parse(std::string_view text) {
  if (text.empty() || text.size() > max_dim) throw InputError("bit string length must be in 1..63");
  std::uint64_t code = 0;
  for (char c : text) {
    if (c != '0' && c != '1') throw InputError("bit string '" + std::string(text) + "' has a non-binary symbol");
    code = (code << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return BitString(static_cast<unsigned>(text.size()), code);
}

BitString BitString::with(unsigned pos, bool bit) const {
  std::uint64_t mask = std::uint64_t{1} << (dim_ - 1 - pos);
  return BitString(dim_, bit ? (code_ | mask) : (code_ & ~mask));
}

std::string BitString::str() const {
  std::string s(dim_, '0');
  for (unsigned i = 0; i < dim_; ++i) {
    if ((*this)[i]) s[i] = '1';
  }
  return s;
}

}  // namespace hbox
