#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "exactlab/ar_quiver.hpp"
#include "exactlab/parallel.hpp"
#include "exactlab/verify_suites.hpp"

namespace {

exactlab::Quiver d4_quiver() {
    exactlab::Quiver q;
    q.vertex_count = 4;
    q.arrows = {{"a", 1, 0}, {"b", 2, 0}, {"c", 3, 0}};
    return q;
}

double run_once(const exactlab::ARQuiver& ar, const exactlab::SuiteOptions& opts,
                std::string& digest) {
    const auto start = std::chrono::steady_clock::now();
    const exactlab::SuiteResult formula = exactlab::suite_arformula(ar, opts);
    const exactlab::SuiteResult axioms = exactlab::suite_axioms(ar, opts);
    const auto stop = std::chrono::steady_clock::now();
    digest = formula.detail.dump() + axioms.detail.dump();
    if (!formula.passed || !axioms.passed) {
        std::cerr << "benchmark workload reported mismatches\n";
        std::exit(1);
    }
    return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main() {
    const exactlab::ARQuiver ar = exactlab::ARQuiver::knit(d4_quiver());
    exactlab::SuiteOptions opts;
    opts.axiom_samples = 64;

    std::string serial_digest;
    std::string parallel_digest;

    setenv("EXACTLAB_SERIAL", "1", 1);
    const double serial = run_once(ar, opts, serial_digest);
    unsetenv("EXACTLAB_SERIAL");
    const double parallel = run_once(ar, opts, parallel_digest);

    std::cout << "workload: arformula + axioms on D4 (" << opts.axiom_samples
              << " samples)\n";
    std::cout << "serial reference: " << serial << " s\n";
    std::cout << "parallel:         " << parallel << " s\n";
    std::cout << "speedup:          " << (parallel > 0 ? serial / parallel : 0.0) << "x\n";
    const bool identical = serial_digest == parallel_digest;
    std::cout << "reports byte-identical: " << (identical ? "yes" : "NO") << "\n";
    return identical ? 0 : 1;
}
