#ifndef QSPLIT_VERSION_HPP
#define QSPLIT_VERSION_HPP

namespace qsplit {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kSchema = "qsplit/1";

} // namespace qsplit

#endif
