#pragma once

namespace ssc {

/// Serial reference path or OpenMP-parallel path of a kernel.
enum class Exec { Serial, Parallel };

}  // namespace ssc
