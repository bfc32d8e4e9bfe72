#ifndef QSS_ERRORS_HPP_
#define QSS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qss {

// A simulator invariant was violated (corrupted state, broken table).
// Never a legal protocol outcome; the CLI maps it to exit code 2.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// An operation was requested in a protocol state that forbids it
// (e.g. secret recovery after a failed eavesdropping check).
struct ProtocolStateError : std::logic_error {
  explicit ProtocolStateError(const std::string& what) : std::logic_error(what) {}
};

// A party failed to produce a photon the protocol requires; the run aborts.
struct ProtocolAbort : std::runtime_error {
  explicit ProtocolAbort(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qss

#endif  // QSS_ERRORS_HPP_
