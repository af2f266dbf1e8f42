#pragma once

namespace exk {

// Worker count for the OpenMP kernels. EXTREMALKIT_THREADS, when set to a
// positive integer, caps the OpenMP default. Always >= 1.
int max_threads();

}  // namespace exk
