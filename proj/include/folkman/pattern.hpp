#ifndef FOLKMAN_PATTERN_HPP
#define FOLKMAN_PATTERN_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace folkman {

// Normalized arrowing pattern (a_1 <= ... <= a_s, all >= 2).  Ones are
// dropped on normalization; the all-ones input yields the empty pattern
// with m = 1.  m and p are always recomputed from the parts.
class ArrowPattern {
 public:
  ArrowPattern() = default;

  static ArrowPattern normalize(std::vector<int> parts) {
    if (parts.empty()) throw std::invalid_argument("pattern: empty part list");
    for (int a : parts)
      if (a < 1) throw std::invalid_argument("pattern: parts must be >= 1");
    std::erase(parts, 1);
    std::sort(parts.begin(), parts.end());
    ArrowPattern p;
    p.parts_ = std::move(parts);
    return p;
  }

  // Comma-separated parts with ^ sugar for repetition: "2,2,6" or "2^2,6".
  static ArrowPattern parse(const std::string& text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      std::size_t caret = tok.find('^');
      try {
        if (caret == std::string::npos) {
          if (tok.empty()) throw std::invalid_argument("empty");
          parts.push_back(std::stoi(tok));
        } else {
          int base = std::stoi(tok.substr(0, caret));
          int rep = std::stoi(tok.substr(caret + 1));
          if (rep < 1) throw std::invalid_argument("repeat");
          for (int i = 0; i < rep; ++i) parts.push_back(base);
        }
      } catch (std::exception&) {
        throw std::invalid_argument("pattern: cannot parse '" + text + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return normalize(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int s() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // m = sum (a_i - 1) + 1
  int m() const {
    int v = 1;
    for (int a : parts_) v += a - 1;
    return v;
  }
  // p = max a_i (1 for the empty pattern)
  int p() const { return parts_.empty() ? 1 : parts_.back(); }

  // Pattern with the smallest part decremented (renormalized); used to name
  // the parent class of an extension step.
  ArrowPattern decrement_smallest() const {
    if (parts_.empty()) throw std::invalid_argument("pattern: nothing to decrement");
    std::vector<int> parts = parts_;
    parts.front() -= 1;
    if (parts.front() == 1) parts.erase(parts.begin());
    ArrowPattern q;
    q.parts_ = std::move(parts);
    return q;
  }

  // Inverse check for stage chaining: does this pattern, with one part
  // incremented (or a fresh 2 added), produce `next`?
  bool increments_to(const ArrowPattern& next) const {
    return next.decrement_smallest() == *this || next.decrement_smallest().parts_ == parts_;
  }

  std::string to_string() const {
    if (parts_.empty()) return "()";
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(parts_[i]);
    }
    out += ")";
    return out;
  }

  bool operator==(const ArrowPattern& o) const { return parts_ == o.parts_; }

 private:
  std::vector<int> parts_;
};

}  // namespace folkman

#endif  // FOLKMAN_PATTERN_HPP
