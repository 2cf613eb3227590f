#ifndef STATFIELD_VERSION_HPP
#define STATFIELD_VERSION_HPP

namespace statfield {
inline constexpr const char* kVersion = "0.1.0";
}

#endif
