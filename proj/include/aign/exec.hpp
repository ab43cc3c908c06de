#pragma once

namespace aign {

// Execution policy for the data-parallel kernels. Every kernel has a serial
// reference path that produces bit-identical output; tests compare the two and
// tools/bench_kernels times them.
enum class Exec { Serial, Parallel };

}  // namespace aign
