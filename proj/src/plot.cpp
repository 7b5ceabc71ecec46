#include "strattr/plot.hpp"

namespace strattr {

std::string render_text(const std::string& title, const Word& word, const AttractorFamily& family) {
  if (word.size() > kMaxTextColumns) {
    throw precondition_error("word of length " + std::to_string(word.size()) +
                             " is too wide for text output; use --svg");
  }
  std::string out = "# " + title + "  |T| = " + std::to_string(word.size()) +
                    ", k = " + std::to_string(family.size_k) + ", " +
                    std::to_string(family.sets.size()) + " attractors\n";
  out += word.str() + '\n';
  for (const auto& set : family.sets) {
    std::string row(word.size(), '.');
    for (Position p : set) row[p - 1] = 'o';
    out += row + "  {" + set.str() + "}\n";
  }
  return out;
}

std::string render_svg(const std::string& title, const Word& word, const AttractorFamily& family) {
  constexpr int kGrid = 10;
  const std::size_t width = (word.size() + 2) * kGrid;
  const std::size_t height = (family.sets.size() + 3) * kGrid;
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
                    "\" height=\"" + std::to_string(height) + "\">\n";
  out += "<title>" + title + "</title>\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (Position p = 1; p <= word.size(); ++p) {
    out += "<text x=\"" + std::to_string(p * kGrid + 5) + "\" y=\"" + std::to_string(kGrid - 1) +
           "\" font-size=\"8\" text-anchor=\"middle\" font-family=\"monospace\">" +
           to_char(word.at(p)) + "</text>\n";
  }
  for (std::size_t row = 0; row < family.sets.size(); ++row) {
    const std::size_t y = (row + 2) * kGrid + 5;
    out += "<line x1=\"" + std::to_string(kGrid) + "\" y1=\"" + std::to_string(y) + "\" x2=\"" +
           std::to_string(width - kGrid) + "\" y2=\"" + std::to_string(y) +
           "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    for (Position p : family.sets[row]) {
      out += "<circle cx=\"" + std::to_string(p * kGrid + 5) + "\" cy=\"" + std::to_string(y) +
             "\" r=\"3\" fill=\"black\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

std::string plot(const PlotSpec& spec, const Caps& caps) {
  const auto known = smallest_attractors_of(spec.family, spec.n, caps);
  const std::string title = std::string(spec.family == WordFamily::fib ? "F_" : "D_") +
                            std::to_string(spec.n) +
                            (known.from_closed_form ? " (closed form)" : " (brute force)");
  return spec.format == PlotFormat::svg ? render_svg(title, known.word, known.family)
                                        : render_text(title, known.word, known.family);
}

}  // namespace strattr
