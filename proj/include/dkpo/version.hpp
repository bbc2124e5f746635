#ifndef DKPO_VERSION_HPP
#define DKPO_VERSION_HPP

namespace dkpo {

inline constexpr const char* kVersion = "0.1.0";
/// First line of every CSV the tool emits; bump fmt on breaking changes.
inline constexpr const char* kCsvHeader = "# dkpo-lab v0.1.0 fmt=1";

}  // namespace dkpo

#endif
