#include "exactlab/algebra_spec.hpp"

#include <sstream>

#include "exactlab/rational.hpp"

namespace exactlab {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') break;
        out.push_back(tok);
    }
    return out;
}

int parse_positive_int(const std::string& tok, int line, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size() || v < 1) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw SpecParseError(line, "expected a positive integer for " + what + ", got '" +
                                       tok + "'");
    }
}

}  // namespace

AlgebraSpec parse_spec(const std::string& text) {
    AlgebraSpec spec;
    bool have_algebra = false;
    bool have_vertices = false;
    bool have_labels = false;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::vector<std::string> toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& head = toks[0];

        if (!have_algebra) {
            if (head != "algebra")
                throw SpecParseError(lineno,
                                     "expected 'algebra dynkin' or 'algebra kronecker' "
                                     "before '" +
                                         head + "'");
            if (toks.size() != 2 || (toks[1] != "dynkin" && toks[1] != "kronecker"))
                throw SpecParseError(lineno, "expected 'algebra dynkin' or 'algebra kronecker'");
            spec.kind = toks[1] == "dynkin" ? AlgebraSpec::Kind::Dynkin
                                            : AlgebraSpec::Kind::Kronecker;
            have_algebra = true;
            continue;
        }

        if (head == "algebra") throw SpecParseError(lineno, "duplicate 'algebra' line");

        if (spec.kind == AlgebraSpec::Kind::Dynkin) {
            if (head == "vertices") {
                if (have_vertices) throw SpecParseError(lineno, "duplicate 'vertices' line");
                if (toks.size() != 2)
                    throw SpecParseError(lineno, "usage: vertices <count>");
                spec.quiver.vertex_count = parse_positive_int(toks[1], lineno, "vertices");
                have_vertices = true;
            } else if (head == "arrow") {
                if (!have_vertices)
                    throw SpecParseError(lineno, "'arrow' before 'vertices'");
                if (toks.size() != 4)
                    throw SpecParseError(lineno, "usage: arrow <name> <src> <tgt>");
                const int src = parse_positive_int(toks[2], lineno, "arrow source");
                const int tgt = parse_positive_int(toks[3], lineno, "arrow target");
                if (src > spec.quiver.vertex_count || tgt > spec.quiver.vertex_count)
                    throw SpecParseError(lineno, "arrow endpoint out of range");
                for (const Arrow& a : spec.quiver.arrows)
                    if (a.name == toks[1])
                        throw SpecParseError(lineno, "duplicate arrow name '" + toks[1] + "'");
                spec.quiver.arrows.push_back({toks[1], src - 1, tgt - 1});
            } else {
                throw SpecParseError(lineno, "unknown directive '" + head + "'");
            }
        } else {
            if (head == "labels") {
                if (have_labels) throw SpecParseError(lineno, "duplicate 'labels' line");
                if (toks.size() < 2)
                    throw SpecParseError(lineno, "usage: labels <l1> <l2> ...");
                for (std::size_t i = 1; i < toks.size(); ++i) {
                    if (toks[i] == "inf") {
                        spec.labels.push_back(k_label_infinity());
                        continue;
                    }
                    try {
                        spec.labels.push_back(k_label(rational_from_string(toks[i])));
                    } catch (const std::exception&) {
                        throw SpecParseError(lineno, "expected a rational or 'inf', got '" +
                                                         toks[i] + "'");
                    }
                }
                have_labels = true;
            } else if (head == "bound") {
                if (toks.size() != 2) throw SpecParseError(lineno, "usage: bound <n>");
                spec.bound = parse_positive_int(toks[1], lineno, "bound");
            } else {
                throw SpecParseError(lineno, "unknown directive '" + head +
                                                 "' for a kronecker algebra");
            }
        }
    }

    if (!have_algebra) throw SpecParseError(lineno == 0 ? 1 : lineno, "missing 'algebra' line");

    if (spec.kind == AlgebraSpec::Kind::Dynkin) {
        if (!have_vertices) throw SpecParseError(lineno, "missing 'vertices' line");
        const GraphType type = classify_graph(spec.quiver);
        if (!type.is_dynkin)
            throw SpecParseError(lineno, "quiver is not of Dynkin type A/D/E: graph is " +
                                             type.label);
        spec.type_label = type.label;
    } else if (spec.labels.empty()) {
        spec.labels = {k_label(Rational(0)), k_label(Rational(1)), k_label_infinity()};
    }
    return spec;
}

}  // namespace exactlab
