#pragma once

#include <string>
#include <vector>

#include "carpets/carpet.hpp"
#include "carpets/oracle.hpp"
#include "carpets/sequence.hpp"

namespace carpets {

struct RenderSpec {
  int depth = 1;
  std::string fill = "#9db8d9";
  std::string stroke = "#1f3a5f";
  double stroke_width = 0.002;
  std::vector<Word> highlights; // cylinders drawn in the highlight fill
  std::string highlight_fill = "#d9534f";
};

// One rectangle per depth-n cylinder, in lexicographic word order; depth 0
// draws the unit-square outline only. Output is a complete SVG 1.1 document;
// identical inputs produce byte-identical text.
std::string render_carpet(const DiagonalIFS &ifs, const RenderSpec &spec);

// Two-layer overlay of the magnified window and its product limit at level n,
// with both one-sided Hausdorff distances embedded in a metadata element.
std::string render_tangent_comparison(const DiagonalIFS &ifs, const SequenceSpec &gamma,
                                      int n, double resolution);

// Writes content to path only after the full document was built; an error
// while building never leaves a partial file behind.
void write_text_file(const std::string &path, const std::string &content);

} // namespace carpets
