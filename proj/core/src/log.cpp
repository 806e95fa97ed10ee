#include "graphideal/log.hpp"

#include <cstdlib>
#include <iostream>

namespace graphideal {

LogLevel log_level() {
  static LogLevel level = [] {
    const char* env = std::getenv("GRAPH_IDEAL_LOG");
    if (!env) return LogLevel::off;
    std::string v(env);
    if (v == "debug") return LogLevel::debug;
    if (v == "info") return LogLevel::info;
    return LogLevel::off;
  }();
  return level;
}

void log_info(const std::string& msg) {
  if (log_level() >= LogLevel::info) std::cerr << "[info] " << msg << '\n';
}

void log_debug(const std::string& msg) {
  if (log_level() >= LogLevel::debug) std::cerr << "[debug] " << msg << '\n';
}

}  // namespace graphideal
