#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ringlab {

// Element of Z/3Z. Used both for face interiors and for edges.
class Label {
public:
  constexpr Label() = default;
  constexpr explicit Label(int v) : v_(static_cast<std::uint8_t>(((v % 3) + 3) % 3)) {}

  constexpr int value() const { return v_; }

  friend constexpr Label operator+(Label a, int k) { return Label(a.v_ + k); }
  friend constexpr Label operator+(Label a, Label b) { return Label(a.v_ + b.v_); }
  friend constexpr Label operator-(Label a, Label b) { return Label(a.v_ - b.v_); }
  friend constexpr Label operator-(Label a, int k) { return Label(a.v_ - k); }
  friend constexpr auto operator<=>(Label, Label) = default;

  friend std::ostream& operator<<(std::ostream& os, Label l) { return os << int(l.v_); }

private:
  std::uint8_t v_ = 0;
};

// All errors raised by the library derive from this.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace ringlab
