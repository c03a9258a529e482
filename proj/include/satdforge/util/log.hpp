#pragma once

#include <string>

namespace satdforge::util {

enum class LogLevel { Debug, Info, Warn, Error };

void log(LogLevel level, const std::string& message);
void set_log_level(LogLevel level);

inline void log_debug(const std::string& m) { log(LogLevel::Debug, m); }
inline void log_info(const std::string& m) { log(LogLevel::Info, m); }
inline void log_warn(const std::string& m) { log(LogLevel::Warn, m); }
inline void log_error(const std::string& m) { log(LogLevel::Error, m); }

}  // namespace satdforge::util
