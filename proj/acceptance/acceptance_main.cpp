// Acceptance gate for the exact-structure laboratory.
//
// Each numbered criterion prints exactly one PASS/FAIL line; the process
// exits nonzero if any criterion fails.  All tolerances, sample counts and
// wall-clock budgets are pinned here, in code.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "exactlab/algebra_spec.hpp"
#include "exactlab/ar_quiver.hpp"
#include "exactlab/exact_structure.hpp"
#include "exactlab/verify_suites.hpp"

namespace {

using exactlab::ARQuiver;
using exactlab::ExactStructure;
using exactlab::Quiver;
using exactlab::SuiteOptions;
using exactlab::SuiteResult;

// Pinned budgets and sample sizes.
constexpr double kEnumerationBudgetSeconds = 10.0;
constexpr double kArFormulaBudgetSeconds = 30.0;
constexpr double kKroneckerBudgetSeconds = 60.0;
constexpr int kAxiomSamples = 200;
constexpr int kIdealCorpusSize = 100;
constexpr int kTranslateRounds = 20;

Quiver a2_quiver() { return {2, {{"a", 0, 1}}}; }
Quiver a3_quiver() { return {3, {{"a", 0, 1}, {"b", 1, 2}}}; }
Quiver d4_center_sink() { return {4, {{"a", 1, 0}, {"b", 2, 0}, {"c", 3, 0}}}; }
Quiver d4_center_source() { return {4, {{"a", 0, 1}, {"b", 0, 2}, {"c", 0, 3}}}; }
Quiver d4_mixed() { return {4, {{"a", 0, 1}, {"b", 2, 0}, {"c", 3, 0}}}; }

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int failures = 0;

void run_criterion(int number, const std::string& title,
                   const std::function<bool(std::string&)>& body) {
    std::string note;
    bool ok = false;
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        ok = false;
        note = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("[%2d] %s  %s%s%s\n", number, ok ? "PASS" : "FAIL", title.c_str(),
                note.empty() ? "" : " -- ", note.c_str());
    std::fflush(stdout);
}

std::string suite_note(const SuiteResult& r) {
    std::ostringstream out;
    out << r.algebra << ": " << (r.passed ? "ok" : "FAILED") << " (" << r.checked
        << " checks)";
    if (!r.passed) out << " " << r.detail.dump();
    return out.str();
}

// Multiset of closed sets, for comparing two enumerations.
std::multiset<std::vector<int>> closed_sets_of(const std::vector<ExactStructure>& es) {
    std::multiset<std::vector<int>> out;
    for (const ExactStructure& e : es) out.insert(e.closed_set);
    return out;
}

}  // namespace

int main() {
    SuiteOptions opts;
    opts.axiom_samples = kAxiomSamples;
    opts.corpus_size = kIdealCorpusSize;
    opts.tau_rounds = kTranslateRounds;

    const ARQuiver a2 = ARQuiver::knit(a2_quiver());
    const ARQuiver a3 = ARQuiver::knit(a3_quiver());
    const ARQuiver d4_sink = ARQuiver::knit(d4_center_sink());
    const ARQuiver d4_source = ARQuiver::knit(d4_center_source());
    const ARQuiver d4_mix = ARQuiver::knit(d4_mixed());

    const std::vector<const ARQuiver*> all_algebras = {&a2, &a3, &d4_sink, &d4_source,
                                                       &d4_mix};

    run_criterion(1, "structure counts match the oracle enumeration", [&](std::string& note) {
        const auto start = std::chrono::steady_clock::now();
        const std::vector<std::pair<const ARQuiver*, std::size_t>> expected = {
            {&a2, 2}, {&a3, 8}, {&d4_sink, 256}, {&d4_source, 256}, {&d4_mix, 256}};
        bool ok = true;
        std::ostringstream out;
        for (const auto& [ar, want] : expected) {
            const std::vector<ExactStructure> direct = exactlab::enumerate_all(*ar);
            const exactlab::OracleEnumeration oracle = exactlab::oracle_enumerate(*ar);
            const bool here = direct.size() == want && oracle.structures.size() == want &&
                              oracle.bijective &&
                              closed_sets_of(direct) == closed_sets_of(oracle.structures);
            ok = ok && here;
            out << ar->type_label() << "=" << direct.size() << (here ? "" : "(!)") << " ";
        }
        const double secs = seconds_since(start);
        out << "in " << secs << "s (budget " << kEnumerationBudgetSeconds << "s)";
        note = out.str();
        return ok && secs < kEnumerationBudgetSeconds;
    });

    run_criterion(2, "relative AR formula on every A3 structure and pair",
                  [&](std::string& note) {
                      const auto start = std::chrono::steady_clock::now();
                      const SuiteResult r = exactlab::suite_arformula(a3, opts);
                      const double secs = seconds_since(start);
                      std::ostringstream out;
                      out << suite_note(r) << " in " << secs << "s (budget "
                          << kArFormulaBudgetSeconds << "s)";
                      note = out.str();
                      return r.passed && r.checked == 288 && secs < kArFormulaBudgetSeconds;
                  });

    run_criterion(3, "sampled exactness axioms hold on A3 and D4", [&](std::string& note) {
        const SuiteResult ra3 = exactlab::suite_axioms(a3, opts);
        const SuiteResult rd4 = exactlab::suite_axioms(d4_sink, opts);
        note = suite_note(ra3) + "; " + suite_note(rd4) + "; samples=" +
               std::to_string(kAxiomSamples);
        return ra3.passed && rd4.passed;
    });

    run_criterion(4, "idempotence triangle on random ideal corpora", [&](std::string& note) {
        const SuiteResult ra3 = exactlab::suite_lemma51(a3, opts);
        const SuiteResult rd4 = exactlab::suite_lemma51(d4_sink, opts);
        const SuiteResult ra2 = exactlab::suite_lemma51(a2, opts);
        const bool radical_negative =
            ra2.detail.contains("radical") &&
            ra2.detail["radical"].value("negative-certified", false);
        note = suite_note(ra3) + "; " + suite_note(rd4) + "; A2 radical negative=" +
               (radical_negative ? "yes" : "NO");
        return ra3.passed && rd4.passed && ra2.passed && radical_negative;
    });

    run_criterion(5, "omega-power collapse over all 64 A3 add-ideals",
                  [&](std::string& note) {
                      const SuiteResult r = exactlab::suite_theorem_d(a3, opts);
                      note = suite_note(r);
                      return r.passed && r.detail.value("subsets", 0) == 64;
                  });

    run_criterion(6, "one-module structures and almost exact sequences",
                  [&](std::string& note) {
                      const SuiteResult ra2 = exactlab::suite_theorem_c(a2, opts);
                      const SuiteResult ra3 = exactlab::suite_theorem_c(a3, opts);
                      const SuiteResult rd4 = exactlab::suite_theorem_c(d4_sink, opts);
                      note = suite_note(ra2) + "; " + suite_note(ra3) + "; " + suite_note(rd4);
                      return ra2.passed && ra3.passed && rd4.passed;
                  });

    run_criterion(7, "projectivity routes agree and match the translate bridge",
                  [&](std::string& note) {
                      const SuiteResult routes = exactlab::suite_prop413(a3, opts);
                      const SuiteResult translate = exactlab::suite_cor414(a3, opts);
                      note = suite_note(routes) + "; " + suite_note(translate);
                      return routes.passed && translate.passed;
                  });

    run_criterion(8, "closed-set decompose/compose on all 64 A3 subsets",
                  [&](std::string& note) {
                      const SuiteResult r = exactlab::suite_cor41(a3, opts);
                      note = suite_note(r);
                      return r.passed && r.checked == 64;
                  });

    run_criterion(9, "almost split conflations generate the abelian structure",
                  [&](std::string& note) {
                      bool ok = true;
                      std::ostringstream out;
                      for (const ARQuiver* ar : all_algebras) {
                          std::vector<exactlab::Conflation> confs;
                          for (const exactlab::ARSequence& s : ar->sequences())
                              confs.push_back(s.conflation);
                          const ExactStructure generated = exactlab::generate(*ar, confs);
                          const bool here = generated == exactlab::e_top(*ar);
                          ok = ok && here;
                          out << ar->type_label() << (here ? " ok " : " FAILED ");
                      }
                      note = out.str();
                      return ok;
                  });

    run_criterion(10, "Kronecker dictionary, radical probe and almost exact sequence",
                  [&](std::string& note) {
                      const auto start = std::chrono::steady_clock::now();
                      const exactlab::AlgebraSpec spec =
                          exactlab::parse_spec("algebra kronecker\n");
                      const SuiteResult r = exactlab::suite_kronecker56(spec, opts);
                      const double secs = seconds_since(start);
                      std::ostringstream out;
                      out << suite_note(r) << " in " << secs << "s (budget "
                          << kKroneckerBudgetSeconds << "s)";
                      note = out.str();
                      return r.passed && secs < kKroneckerBudgetSeconds;
                  });

    if (failures == 0) {
        std::printf("acceptance: all 10 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", failures);
    return 1;
}
