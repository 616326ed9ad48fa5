#pragma once

#include <cstddef>
#include <functional>

namespace wreath {

/// Worker count used by data-parallel kernels (default 1). Results never
/// depend on this setting.
void set_threads(unsigned n);
unsigned threads();

/// Runs body(i) for i in [0, n), spreading indices over the configured
/// workers in contiguous blocks. The exception of the lowest failing block
/// is rethrown. Nested calls from inside a worker run serially.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace wreath
