#pragma once

#include <string>

namespace graphideal {

// Controlled by the GRAPH_IDEAL_LOG environment variable: off | info | debug.
enum class LogLevel { off = 0, info = 1, debug = 2 };

LogLevel log_level();
void log_info(const std::string& msg);
void log_debug(const std::string& msg);

}  // namespace graphideal
