#ifndef MONDEPTH_VERSION_HPP
#define MONDEPTH_VERSION_HPP

namespace mondepth {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
