#pragma once

namespace orbitres {

inline constexpr const char* version_string = "0.1.0";

/// Version of every JSON document the library and the CLI emit.
inline constexpr int schema_version = 1;

}  // namespace orbitres
