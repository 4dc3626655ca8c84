#include "csf/expansion.hpp"

#include <sstream>

namespace csf {

LeadingTerm leading_term(const StarExpansion& x) {
  if (x.empty()) throw DomainError("leading_term of an empty expansion");
  const auto& [p, c] = *x.coeffs().begin();
  return {p, c};
}

std::vector<Integer> hook_vector(const StarExpansion& x) {
  std::vector<Integer> out;
  for (int m1 = 0; m1 + 2 <= x.degree(); ++m1) out.push_back(x.coefficient(Partition::hook(x.degree(), m1)));
  return out;
}

std::string to_display_string(const StarExpansion& x) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = x.coeffs().rbegin(); it != x.coeffs().rend(); ++it) {
    const auto& [p, c] = *it;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << "st[";
    for (int i = 0; i < p.length(); ++i) os << (i ? "," : "") << p[static_cast<std::size_t>(i)];
    os << ']';
    first = false;
  }
  return os.str();
}

}  // namespace csf
