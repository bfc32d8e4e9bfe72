#ifndef QSS_VERSION_HPP_
#define QSS_VERSION_HPP_

namespace qss {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace qss

#endif  // QSS_VERSION_HPP_
