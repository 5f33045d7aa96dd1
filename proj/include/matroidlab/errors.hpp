#ifndef MATROIDLAB_ERRORS_HPP
#define MATROIDLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace matroidlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Work or size limit blown; callers can retry with a larger cap.
struct CapExceededError : Error {
  using Error::Error;
};

// Two sets or a set and a matroid built over different ground sizes.
struct UniverseMismatchError : Error {
  using Error::Error;
};

// Malformed construction parameters or unparsable input.
struct InvalidInputError : Error {
  using Error::Error;
};

// Chromatic-type quantities are undefined when a loop is present.
struct LoopError : Error {
  using Error::Error;
};

// A game peer (human or scripted) broke the move protocol.
struct ProtocolError : Error {
  using Error::Error;
};

// A certified property failed to re-verify; indicates a bug, not bad input.
struct InternalError : Error {
  using Error::Error;
};

// Default ceiling on brute-force enumeration work (number of sets examined).
inline constexpr std::size_t kDefaultMaxEnum = 1000000;

}  // namespace matroidlab

#endif
