#ifndef TVLAB_VERSION_HPP
#define TVLAB_VERSION_HPP

namespace tvlab {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

} // namespace tvlab

#endif
