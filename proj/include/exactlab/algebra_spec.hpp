#pragma once

#include <string>
#include <vector>

#include "exactlab/kronecker.hpp"
#include "exactlab/quiver.hpp"

namespace exactlab {

/// Parsed form of an algebra specification file.
struct AlgebraSpec {
    enum class Kind { Dynkin, Kronecker };

    Kind kind = Kind::Dynkin;
    /// Dynkin only: the quiver described by `vertices` / `arrow` lines.
    Quiver quiver;
    /// Dynkin only: the recognized graph type label ("A3", "D4", ...).
    std::string type_label;
    /// Kronecker only: regular labels (defaults to {0, 1, inf}).
    std::vector<KLabel> labels;
    /// Kronecker only: index bound for matrix models.
    int bound = 6;
};

/// Error raised on malformed specification text; carries the 1-based line.
class SpecParseError : public std::runtime_error {
  public:
    SpecParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

/// Parses the line-oriented algebra spec grammar:
///   algebra dynkin | algebra kronecker
///   vertices N                  (dynkin)
///   arrow <name> <src> <tgt>    (dynkin; 1-based vertices)
///   labels <l1> <l2> ...        (kronecker; rationals or "inf")
///   bound N                     (kronecker)
/// `#` starts a comment. Dynkin specs are validated to be of type A/D/E;
/// the rejection message names what the graph actually is.
AlgebraSpec parse_spec(const std::string& text);

}  // namespace exactlab
