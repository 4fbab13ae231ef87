#include "log.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <stdexcept>

namespace torusdual::cli {

namespace {

std::atomic<LogLevel> current{LogLevel::quiet};
std::mutex sink;

void emit(const char* tag, const std::string& message) {
  std::lock_guard<std::mutex> lock(sink);
  std::cerr << "[" << tag << "] " << message << '\n';
}

}  // namespace

LogLevel parse_log_level(const std::string& text) {
  if (text == "quiet") return LogLevel::quiet;
  if (text == "info") return LogLevel::info;
  if (text == "debug") return LogLevel::debug;
  throw std::invalid_argument("unknown log level '" + text + "' (use quiet, info or debug)");
}

LogLevel resolve_log_level(const std::string& flag) {
  if (!flag.empty()) return parse_log_level(flag);
  if (const char* env = std::getenv("TORUSDUAL_LOG"); env && *env) return parse_log_level(env);
  return LogLevel::quiet;
}

void set_log_level(LogLevel level) { current = level; }
LogLevel log_level() { return current; }

void log_info(const std::string& message) {
  if (current.load() != LogLevel::quiet) emit("info", message);
}

void log_debug(const std::string& message) {
  if (current.load() == LogLevel::debug) emit("debug", message);
}

}  // namespace torusdual::cli
