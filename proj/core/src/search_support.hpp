#pragma once

#include <chrono>

#include "fatchroma/solver.hpp"

namespace fatchroma::detail {

struct SearchTimeout {};

struct Deadline {
    std::chrono::steady_clock::time_point at{};
    bool enabled = false;

    static Deadline from(const SolveOptions& opts) {
        Deadline d;
        if (opts.timeout.count() > 0) {
            d.enabled = true;
            d.at = std::chrono::steady_clock::now() + opts.timeout;
        }
        return d;
    }

    bool expired() const {
        return enabled && std::chrono::steady_clock::now() >= at;
    }
};

class WallTimer {
  public:
    WallTimer() : start_(std::chrono::steady_clock::now()) {}

    double elapsed_ms() const {
        const auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace fatchroma::detail
