#pragma once

namespace singwell {

// Execution policy for the data-parallel kernels.  `parallel` distributes
// independent work items over OpenMP threads when compiled in; results are
// bitwise identical to `serial`, which is kept as the reference path.
enum class Exec { serial, parallel };

}  // namespace singwell
