#include "braidlab/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "braidlab/error.hpp"

namespace braidlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw PreconditionError("partition parts must be positive");
    size_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '(')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == ')')) text.remove_suffix(1);
  std::vector<int> parts;
  if (text.empty()) return Partition();
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || value < 1) {
      throw ParseError("bad partition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

int Partition::multiplicity(int v) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> parts;
  auto recurse = [&](auto&& self, int left, int max_part) -> void {
    if (left == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, left - p, p);
      parts.pop_back();
    }
  };
  recurse(recurse, n, n);
  return out;
}

long long factorial(int n) {
  if (n < 0 || n > 20) throw PreconditionError("factorial argument out of range");
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long hook_length_dimension(const Partition& lambda) {
  const auto& p = lambda.parts();
  long long hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < p[i]; ++j) {
      int below = 0;
      for (int k = i + 1; k < lambda.length() && p[k] > j; ++k) ++below;
      hooks *= (p[i] - j - 1) + below + 1;
    }
  }
  return factorial(lambda.size()) / hooks;
}

long long centralizer_order(const Partition& mu) {
  long long z = 1;
  for (int v = 1; v <= mu.size(); ++v) {
    const int m = mu.multiplicity(v);
    for (int i = 0; i < m; ++i) z *= v;
    z *= factorial(m);
  }
  return z;
}

long long class_size(const Partition& mu) { return factorial(mu.size()) / centralizer_order(mu); }

Partition power_cycle_type(const Partition& mu, int k) {
  std::vector<int> parts;
  for (int len : mu.parts()) {
    const int g = std::gcd(len, k);
    parts.insert(parts.end(), g, len / g);
  }
  return Partition(std::move(parts));
}

}  // namespace braidlab
