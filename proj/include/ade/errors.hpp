#pragma once
#include <stdexcept>
#include <string>

namespace ade {

// Thrown when a marching solver produces a non-finite value; carries the
// time level at which the field first went bad.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(int step, const std::string& msg)
        : std::runtime_error(msg), step_(step) {}
    int step() const noexcept { return step_; }

private:
    int step_;
};

}  // namespace ade
