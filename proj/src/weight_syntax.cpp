#include "liepow/weight_syntax.hpp"

#include <cctype>
#include <stdexcept>

namespace liepow {

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

[[noreturn]] void malformed(const std::string& text, const std::string& why) {
  throw std::invalid_argument("malformed weight '" + text + "': " + why);
}

Weight parse_shorthand(const std::string& s, const std::string& original, std::size_t rank) {
  Weight w = Weight::zero(rank);
  std::size_t i = 0;
  const std::string lambda = "λ";
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      malformed(original, "expected '+' or '-'");
    }
    int coeff = 1;
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) coeff = std::stoi(s.substr(start, i - start));
    if (s.compare(i, lambda.size(), lambda) == 0)
      i += lambda.size();
    else if (i < s.size() && (s[i] == 'l' || s[i] == 'L'))
      ++i;
    else
      malformed(original, "expected λ or l");
    start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) malformed(original, "missing fundamental weight index");
    const std::size_t idx = std::stoul(s.substr(start, i - start));
    if (idx < 1 || idx > rank) malformed(original, "index out of range for rank " + std::to_string(rank));
    w.coords[idx - 1] += sign * coeff;
  }
  return w;
}

}  // namespace

Weight parse_weight(const std::string& text, std::size_t rank) {
  const std::string s = strip(text);
  if (s.empty()) malformed(text, "empty");
  if (s == "0") return Weight::zero(rank);
  if (s.find(',') == std::string::npos && s.find_first_of("lLλ\xce") != std::string::npos)
    return parse_shorthand(s, text, rank);
  std::vector<int> coords;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    const std::string field = s.substr(pos, next - pos);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(field, &used);
    } catch (const std::exception&) {
      malformed(text, "non-integer coordinate '" + field + "'");
    }
    if (used != field.size()) malformed(text, "non-integer coordinate '" + field + "'");
    coords.push_back(value);
    pos = next + 1;
  }
  if (coords.size() != rank)
    malformed(text, "expected " + std::to_string(rank) + " coordinates, got " +
                        std::to_string(coords.size()));
  return Weight(std::move(coords));
}

}  // namespace liepow
