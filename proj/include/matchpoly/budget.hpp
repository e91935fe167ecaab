#ifndef MATCHPOLY_BUDGET_HPP
#define MATCHPOLY_BUDGET_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>

#include "matchpoly/errors.hpp"

namespace matchpoly {

// Wall-clock plus work-unit budget shared by the enumeration cores.
// check() is cheap enough to call from inner loops: it only looks at the
// clock every `stride` ticks.
class Budget {
public:
    static constexpr std::uint64_t unlimited_work = std::numeric_limits<std::uint64_t>::max();

    Budget() = default;
    explicit Budget(double seconds, std::uint64_t max_work = unlimited_work)
        : deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(seconds))),
          has_deadline_(true),
          max_work_(max_work) {}

    static Budget work_only(std::uint64_t max_work) {
        Budget b;
        b.max_work_ = max_work;
        return b;
    }

    void tick(std::uint64_t units = 1) {
        work_ += units;
        if (work_ > max_work_)
            throw BudgetError("work budget exhausted", work_, elapsed());
        if (work_ >= next_check_) {
            next_check_ = work_ + stride;
            poll();
        }
    }

    // Throws BudgetError when exhausted.
    void poll() const {
        if (work_ > max_work_)
            throw BudgetError("work budget exhausted", work_, elapsed());
        if (has_deadline_ && Clock::now() > deadline_)
            throw BudgetError("time budget exhausted", work_, elapsed());
    }

    bool expired() const {
        if (work_ > max_work_) return true;
        return has_deadline_ && Clock::now() > deadline_;
    }

    std::uint64_t work_done() const { return work_; }

    double elapsed() const {
        return std::chrono::duration<double>(Clock::now() - start_).count();
    }

private:
    using Clock = std::chrono::steady_clock;
    static constexpr std::uint64_t stride = 1 << 16;

    Clock::time_point start_ = Clock::now();
    Clock::time_point deadline_{};
    bool has_deadline_ = false;
    std::uint64_t max_work_ = unlimited_work;
    std::uint64_t work_ = 0;
    std::uint64_t next_check_ = stride;
};

} // namespace matchpoly

#endif
