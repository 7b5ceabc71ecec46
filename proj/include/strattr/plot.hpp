#pragma once

#include <cstddef>
#include <string>

#include "strattr/enumeration.hpp"
#include "strattr/validation.hpp"
#include "strattr/words.hpp"

namespace strattr {

enum class PlotFormat { text, svg };

/// Which word's smallest attractors to draw, and how.
struct PlotSpec {
  WordFamily family = WordFamily::fib;
  int n = 0;
  PlotFormat format = PlotFormat::text;
};

/// Widest word the text renderer accepts; longer words need SVG.
inline constexpr std::size_t kMaxTextColumns = 160;

/// One row per attractor, in family order, with 'o' at member positions and
/// '.' elsewhere, under a header row holding the word itself. Throws
/// precondition_error for words wider than kMaxTextColumns.
std::string render_text(const std::string& title, const Word& word, const AttractorFamily& family);

/// Same geometry on a fixed 10 px grid: column p is centred at x = 10p + 5,
/// row i at y = 10(i + 2) + 5; the word occupies row 0.
std::string render_svg(const std::string& title, const Word& word, const AttractorFamily& family);

std::string plot(const PlotSpec& spec, const Caps& caps = {});

}  // namespace strattr
