#pragma once

#include <iosfwd>
#include <string>

#include "lqn/geometry.hpp"

namespace lqn {

// Representation file format:
//
//   LQN v1 q=<q> n=<n> V=<V>
//   <V lines of V space-separated atom names: 1' a0..aq t1..tn>
//
// V must equal q^2 or 2q^2. Rows stream one at a time in both directions;
// round-trips are lossless. The reader accepts any well-formed grid of valid
// atom names (the verifier, not the parser, judges symmetry and diagonal).
void save_matrix(const LabelMatrix& m, std::ostream& out);
void save_matrix(const LabelMatrix& m, const std::string& path);

LabelMatrix load_matrix(std::istream& in);                // throws ParseError
LabelMatrix load_matrix(const std::string& path);

}  // namespace lqn
