#include "csf/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <sstream>

#include "csf/errors.hpp"

namespace csf {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::from_sequence(std::span<const int> values) {
  std::vector<int> parts(values.begin(), values.end());
  for (int v : parts) {
    if (v < 1) throw DomainError("sort: entries must be positive, got " + std::to_string(v));
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::single(int n) {
  if (n < 0) throw DomainError("negative partition size");
  return n == 0 ? Partition() : Partition(std::vector<int>{n});
}

Partition Partition::hook(int n, int m1) {
  if (m1 < 0 || m1 >= n) throw DomainError("hook (n-m1, 1^m1) needs 0 <= m1 < n");
  std::vector<int> parts(static_cast<std::size_t>(m1) + 1, 1);
  parts[0] = n - m1;
  return Partition(std::move(parts));
}

Partition Partition::ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::strong_ordering lex_compare(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) {
    throw SizeMismatchError("lex_compare: |a| = " + std::to_string(a.size()) + " but |b| = " +
                            std::to_string(b.size()));
  }
  return a <=> b;
}

Partition sort_concat(std::span<const int> a, std::span<const int> b) {
  std::vector<int> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  return Partition::from_sequence(all);
}

Partition sort_concat(const Partition& a, const Partition& b) {
  std::vector<int> all;
  all.reserve(a.parts().size() + b.parts().size());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(), std::back_inserter(all),
             std::greater<>());
  return Partition(std::move(all));
}

bool is_hook(const Partition& p) { return p.length() <= 1 || p[1] == 1; }

int hook_m1(const Partition& p) {
  if (!is_hook(p)) throw DomainError("hook_m1: " + to_string(p) + " is not a hook");
  if (p.empty()) return 0;
  // (1^n) is the hook (1, 1^(n-1)).
  return p.length() - 1;
}

BodyTail body_tail(const Partition& p) {
  const auto& parts = p.parts();
  auto first_one = std::find(parts.begin(), parts.end(), 1);
  return {Partition(std::vector<int>(parts.begin(), first_one)), static_cast<int>(parts.end() - first_one)};
}

MultiplicityView multiplicities(const Partition& p) {
  MultiplicityView view;
  for (int part : p.parts()) ++view.m[part];
  return view;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw DomainError("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> current;
  // Emit in reverse-lex order (largest first part first), then reverse.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  std::reverse(out.begin(), out.end());
  return out;
}

std::string to_string(const Partition& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  for (int i = 0; i < p.length(); ++i) {
    if (i) os << '+';
    os << p[static_cast<std::size_t>(i)];
  }
  return os.str();
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::size_t i = 0;
  bool saw_digit = false;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc()) throw ParseError("bad partition part in '" + std::string(text) + "'");
      parts.push_back(value);
      i = static_cast<std::size_t>(ptr - text.data());
      saw_digit = true;
    } else if (ch == '+' || ch == ',' || ch == '[' || ch == ']' || ch == '(' || ch == ')' ||
               std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else {
      throw ParseError("unexpected character '" + std::string(1, ch) + "' in partition '" + std::string(text) + "'");
    }
  }
  if (!saw_digit) throw ParseError("empty partition text");
  // A lone 0 is the empty partition.
  if (parts.size() == 1 && parts[0] == 0) return Partition();
  for (int v : parts) {
    if (v < 1) throw ParseError("partition parts must be positive");
  }
  return Partition::from_sequence(parts);
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  os << '(';
  for (int i = 0; i < p.length(); ++i) {
    if (i) os << ',';
    os << p[static_cast<std::size_t>(i)];
  }
  return os << ')';
}

}  // namespace csf
