#pragma once

namespace ccomp {

// Every parallel kernel keeps a serial twin with identical output; tests and
// the benchmark target compare the two.
enum class Exec { serial, parallel };

bool openmp_enabled();

}  // namespace ccomp
