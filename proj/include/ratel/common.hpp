#ifndef RATEL_COMMON_HPP
#define RATEL_COMMON_HPP

#include <chrono>
#include <stdexcept>
#include <string>

namespace ratel {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// input violates a documented precondition (bad expression, zero denominator, ...)
struct InputError : Error {
  using Error::Error;
};

// an invariant the algorithms guarantee failed; always a bug, never user error
struct InternalError : Error {
  using Error::Error;
};

struct TimeoutError : Error {
  TimeoutError() : Error("time budget exceeded") {}
};

struct ParseError : Error {
  size_t offset;
  ParseError(size_t off, const std::string& msg)
      : Error("syntax error at byte " + std::to_string(off) + ": " + msg), offset(off) {}
};

#define RATEL_CHECK(cond, msg) \
  do {                         \
    if (!(cond)) throw ::ratel::InternalError(std::string("invariant failed: ") + (msg)); \
  } while (0)

// Cooperative per-thread deadline.  Long-running loops poll deadline_check();
// bench workers set a budget per instance, everything else runs unbounded.
class Deadline {
 public:
  static void set(std::chrono::milliseconds budget) {
    tl_active() = true;
    tl_when() = std::chrono::steady_clock::now() + budget;
  }
  static void clear() { tl_active() = false; }
  static void check() {
    if (tl_active() && std::chrono::steady_clock::now() > tl_when()) throw TimeoutError();
  }

 private:
  static bool& tl_active() {
    thread_local bool a = false;
    return a;
  }
  static std::chrono::steady_clock::time_point& tl_when() {
    thread_local std::chrono::steady_clock::time_point t{};
    return t;
  }
};

inline void deadline_check() { Deadline::check(); }

}  // namespace ratel

#endif
