#pragma once

#include <exception>

#include "schubert/execution.hpp"
#include "schubert/polynomial.hpp"

namespace schubert::detail {

// Sums term(k) for k in [0, count). Addition is exact, so the merge order
// does not affect the result. The first exception thrown by a worker is
// rethrown on the calling thread.
template <class Term>
Polynomial parallel_sum(long count, Execution exec, Term term) {
    Polynomial total;
    std::exception_ptr failure;
#pragma omp parallel if (exec == Execution::parallel)
    {
        Polynomial local;
#pragma omp for schedule(dynamic, 8) nowait
        for (long k = 0; k < count; ++k) {
            try {
                local += term(k);
            } catch (...) {
#pragma omp critical(schubert_parallel_failure)
                if (!failure) failure = std::current_exception();
            }
        }
#pragma omp critical(schubert_parallel_sum)
        total += local;
    }
    if (failure) std::rethrow_exception(failure);
    return total;
}

}  // namespace schubert::detail
