#pragma once

#include <cstdlib>
#include <vector>

namespace exactlab {

/// Whether the serial reference path was requested via EXACTLAB_SERIAL=1.
inline bool serial_requested() {
    const char* v = std::getenv("EXACTLAB_SERIAL");
    return v != nullptr && v[0] == '1';
}

/// Apply `fn` to every element of `inputs` and collect the results in
/// order. Runs the items in parallel with OpenMP when available unless the
/// serial reference path is requested; results are written into
/// preallocated slots, so the output is identical either way.
template <typename In, typename Fn>
auto parallel_map(const std::vector<In>& inputs, Fn&& fn)
    -> std::vector<decltype(fn(inputs.front()))> {
    using Out = decltype(fn(inputs.front()));
    std::vector<Out> results(inputs.size());
    if (serial_requested()) {
        for (std::size_t i = 0; i < inputs.size(); ++i) results[i] = fn(inputs[i]);
        return results;
    }
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < inputs.size(); ++i) results[i] = fn(inputs[i]);
#else
    for (std::size_t i = 0; i < inputs.size(); ++i) results[i] = fn(inputs[i]);
#endif
    return results;
}

}  // namespace exactlab
