#pragma once

#include <exception>
#include <mutex>

namespace wog {

/// Selects between the OpenMP kernel and the serial reference path.
enum class Exec { serial, parallel };

/// Captures the first exception thrown inside an OpenMP region so it can be
/// rethrown on the calling thread.
class ExceptionSink {
public:
  template <class F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
      std::lock_guard lock(mu_);
      if (!first_) first_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (first_) std::rethrow_exception(first_);
  }

private:
  std::mutex mu_;
  std::exception_ptr first_;
};

}  // namespace wog
