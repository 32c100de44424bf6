#pragma once

#include <cstdint>
#include <initializer_list>

namespace xxchain {

namespace detail {

// splitmix64 finalizer (Stafford mix 13).
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace detail

// Deterministic splitmix64 stream keyed by a list of 64-bit words, e.g.
// (base_seed, realization index, edge ordinal). A draw depends only on the
// key and the draw position within the stream, never on what other streams
// did, so realizations can be evaluated in any order on any number of
// workers.
class RngStream {
 public:
  explicit RngStream(std::initializer_list<std::uint64_t> key)
      : state_(0x243f6a8885a308d3ull) {
    for (std::uint64_t word : key) {
      state_ = detail::mix64(state_ ^ (word + 0x9e3779b97f4a7c15ull));
    }
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return detail::mix64(state_);
  }

  // Uniform on [0, 1), 53-bit resolution.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on [-width, width].
  double next_symmetric(double width) { return (2.0 * next_unit() - 1.0) * width; }

 private:
  std::uint64_t state_;
};

}  // namespace xxchain
