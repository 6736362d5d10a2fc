#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace testsupport {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline std::string asset(const std::string& name) {
#ifdef HOHOHO_ASSETS_DIR
    return std::string(HOHOHO_ASSETS_DIR) + "/" + name;
#else
    return "assets/" + name;
#endif
}

}  // namespace testsupport
