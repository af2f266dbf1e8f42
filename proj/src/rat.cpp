#include "extremalkit/rat.hpp"

#include <stdexcept>

namespace exk {

Rat rat_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rat q;
  try {
    q = Rat(text, 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: \"" + text + "\"");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in \"" + text + "\"");
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& value) { return value.get_str(); }

}  // namespace exk
