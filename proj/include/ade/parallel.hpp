#pragma once

namespace ade {

// Kernels with data-parallel inner loops come in two flavours: a plain
// serial loop (the reference) and an OpenMP version. Both accumulate in the
// same per-node order, so results are bit-identical; tests rely on that.
enum class Exec { Serial, OpenMP };

int max_threads();
void set_threads(int n);  // n <= 0 restores the OpenMP default

}  // namespace ade
