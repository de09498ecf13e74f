#pragma once

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

namespace spheresub {

enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

inline LogLevel log_level() {
    static LogLevel level = [] {
        const char* env = std::getenv("LOG_LEVEL");
        if (!env) return LogLevel::Warn;
        std::string s(env);
        if (s == "error") return LogLevel::Error;
        if (s == "warn") return LogLevel::Warn;
        if (s == "info") return LogLevel::Info;
        if (s == "debug") return LogLevel::Debug;
        return LogLevel::Warn;
    }();
    return level;
}

inline void log_msg(LogLevel lvl, const std::string& msg) {
    if (static_cast<int>(lvl) > static_cast<int>(log_level())) return;
    static const char* names[] = {"error", "warn", "info", "debug"};
    std::cerr << "[" << names[static_cast<int>(lvl)] << "] " << msg << "\n";
}

#define SPHERESUB_LOG(lvl, expr)                                              \
    do {                                                                      \
        if (static_cast<int>(lvl) <= static_cast<int>(::spheresub::log_level())) { \
            std::ostringstream oss__;                                         \
            oss__ << expr;                                                    \
            ::spheresub::log_msg(lvl, oss__.str());                           \
        }                                                                     \
    } while (0)

#define LOG_INFO(expr) SPHERESUB_LOG(::spheresub::LogLevel::Info, expr)
#define LOG_WARN(expr) SPHERESUB_LOG(::spheresub::LogLevel::Warn, expr)
#define LOG_DEBUG(expr) SPHERESUB_LOG(::spheresub::LogLevel::Debug, expr)

} // namespace spheresub
