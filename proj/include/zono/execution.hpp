#pragma once

namespace zono {

/// Selects the serial reference loop or the OpenMP loop for kernels whose
/// iterations are independent LP tests. Both produce identical results.
enum class Execution { serial, parallel };

/// Sets the OpenMP thread count used by Execution::parallel kernels.
void set_thread_count(int threads);

} // namespace zono
