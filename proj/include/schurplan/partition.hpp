#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schurplan {

/// A partition: nonempty, weakly decreasing sequence of positive parts.
class YoungDiagram {
 public:
  explicit YoungDiagram(std::vector<long> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("YoungDiagram: empty partition");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw std::invalid_argument("YoungDiagram: parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) {
        throw std::invalid_argument("YoungDiagram: parts must be weakly decreasing");
      }
    }
  }

  const std::vector<long>& parts() const { return parts_; }
  std::size_t rows() const { return parts_.size(); }
  long row(std::size_t i) const { return parts_[i]; }

  /// Total number of boxes |lambda|.
  long size() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

  /// Column lengths (the conjugate partition).
  std::vector<long> conjugate() const {
    std::vector<long> cols(static_cast<std::size_t>(parts_[0]), 0);
    for (long part : parts_) {
      for (long j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
    }
    return cols;
  }

  /// Hook length of the box in row i, column j (0-based).
  long hook(std::size_t i, std::size_t j, const std::vector<long>& conj) const {
    return parts_[i] - static_cast<long>(j) + conj[j] - static_cast<long>(i) - 1;
  }

  /// Content j - i of the box in row i, column j (0-based).
  static long content(std::size_t i, std::size_t j) {
    return static_cast<long>(j) - static_cast<long>(i);
  }

  bool operator==(const YoungDiagram& o) const { return parts_ == o.parts_; }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

 private:
  std::vector<long> parts_;
};

/// Parses the CLI partition syntax: comma-separated parts, each either a
/// plain integer or "a^k" for k repeats, e.g. "9", "260,1", "1^9".
inline YoungDiagram parse_partition(std::string_view text) {
  std::vector<long> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (token.empty()) throw std::invalid_argument("partition: empty component");
    long part = 0;
    long repeat = 1;
    std::size_t caret = token.find('^');
    try {
      if (caret == std::string_view::npos) {
        part = std::stol(std::string(token));
      } else {
        part = std::stol(std::string(token.substr(0, caret)));
        repeat = std::stol(std::string(token.substr(caret + 1)));
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("partition: malformed component '" + std::string(token) + "'");
    }
    if (repeat < 1) throw std::invalid_argument("partition: repeat count must be positive");
    for (long k = 0; k < repeat; ++k) parts.push_back(part);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return YoungDiagram(std::move(parts));  // validates positivity and ordering
}

}  // namespace schurplan
