#include "permsub/subset.hpp"

#include <algorithm>

#include "permsub/rational.hpp"

namespace permsub {

SubsetMask SubsetMask::from_elements(const std::vector<int>& elements, int n) {
  std::uint32_t bits = 0;
  for (int e : elements) {
    if (e < 1 || e > n) throw InputError("element " + std::to_string(e) + " outside [" + std::to_string(n) + "]");
    if (bits & (1u << (e - 1))) throw InputError("repeated element " + std::to_string(e));
    bits |= 1u << (e - 1);
  }
  return {bits, n};
}

SubsetMask SubsetMask::parse(std::string_view text, int n) {
  std::vector<int> elements;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto next = text.find(',', pos);
      auto token = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
      if (token.empty()) throw InputError("empty element in subset '" + std::string(text) + "'");
      int value = 0;
      for (char c : token) {
        if (c < '0' || c > '9') throw InputError("malformed subset '" + std::string(text) + "'");
        value = value * 10 + (c - '0');
      }
      elements.push_back(value);
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw InputError("malformed subset '" + std::string(text) + "'");
      elements.push_back(c - '0');
    }
  }
  return from_elements(elements, n);
}

std::vector<int> SubsetMask::elements() const {
  std::vector<int> out;
  for (int p = 1; p <= n_; ++p) {
    if (contains(p)) out.push_back(p);
  }
  return out;
}

std::string SubsetMask::to_string() const {
  std::string out;
  for (int e : elements()) {
    if (n_ > 9 && !out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

std::strong_ordering operator<=>(SubsetMask a, SubsetMask b) {
  auto ea = a.elements();
  auto eb = b.elements();
  return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
}

namespace {

void collect(int n, int k, int next, std::uint32_t bits, std::vector<SubsetMask>& out) {
  if (k == 0) {
    out.emplace_back(bits, n);
    return;
  }
  for (int e = next; e <= n - k + 1; ++e) collect(n, k - 1, e + 1, bits | (1u << (e - 1)), out);
}

}  // namespace

std::vector<SubsetMask> k_subsets(int n, int k) {
  std::vector<SubsetMask> out;
  if (k < 0 || k > n) return out;
  collect(n, k, 1, 0, out);
  return out;
}

}  // namespace permsub
