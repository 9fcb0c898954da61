#ifndef WALKGAUGE_VERSION_HPP
#define WALKGAUGE_VERSION_HPP

namespace walkgauge {

inline constexpr int kVersionMajor = 1;
inline constexpr int kVersionMinor = 0;
inline constexpr int kVersionPatch = 0;
inline constexpr const char* kVersionString = "1.0.0";

// Hard ceiling for canonical certificates (isomorphism-class keys).
inline constexpr int kCertificateLimit = 12;

// Hard ceiling for exhaustive unicyclic/tree enumeration.
inline constexpr int kEnumerationLimit = 9;

}  // namespace walkgauge

#endif
