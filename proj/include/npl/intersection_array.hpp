#pragma once

// Intersection arrays {b_0,...,b_{d-1}; c_1,...,c_d} with the usual
// conventions b_d = 0, c_0 = 0, c_1 = 1, a_i = k - b_i - c_i.

#include "npl/exact.hpp"

#include <sstream>

namespace npl {

struct IntersectionArray {
  int d = 0;
  // padded to length d+1: bs[d] = 0, cs[0] = 0
  std::vector<Int> bs, cs;

  IntersectionArray() = default;

  IntersectionArray(std::vector<Int> b_part, std::vector<Int> c_part) {
    if (b_part.empty() || b_part.size() != c_part.size())
      throw input_error("intersection array: need equally many b_i and c_i");
    d = static_cast<int>(b_part.size());
    bs = std::move(b_part);
    bs.push_back(0);
    cs.assign(1, 0);
    cs.insert(cs.end(), c_part.begin(), c_part.end());
  }

  const Int& b(int i) const { return bs.at(i); }
  const Int& c(int i) const { return cs.at(i); }
  Int a(int i) const { return b(0) - b(i) - c(i); }
  const Int& k() const { return b(0); }

  friend bool operator==(const IntersectionArray& x, const IntersectionArray& y) {
    return x.bs == y.bs && x.cs == y.cs;
  }

  // feasibility conditions checked: positivity, c_1 = 1, monotonicity,
  // a_i >= 0, and integrality of the sphere sizes
  std::vector<std::string> validate() const {
    std::vector<std::string> issues;
    if (d < 1) {
      issues.push_back("diameter must be at least 1");
      return issues;
    }
    if (cs[1] != 1) issues.push_back("c_1 must equal 1");
    for (int i = 0; i < d; ++i)
      if (bs[i] <= 0) issues.push_back("b_" + std::to_string(i) + " must be positive");
    for (int i = 1; i <= d; ++i)
      if (cs[i] <= 0) issues.push_back("c_" + std::to_string(i) + " must be positive");
    for (int i = 0; i + 1 < d; ++i)
      if (bs[i + 1] > bs[i])
        issues.push_back("b_" + std::to_string(i + 1) + " exceeds b_" + std::to_string(i));
    for (int i = 1; i < d; ++i)
      if (cs[i + 1] < cs[i])
        issues.push_back("c_" + std::to_string(i + 1) + " is below c_" + std::to_string(i));
    for (int i = 0; i <= d; ++i)
      if (a(i) < 0) issues.push_back("a_" + std::to_string(i) + " is negative");
    if (issues.empty()) {
      Int ki = 1;
      for (int i = 1; i <= d; ++i) {
        Int num = ki * bs[i - 1];
        if (num % cs[i] != 0) {
          issues.push_back("sphere size k_" + std::to_string(i) + " is not an integer");
          break;
        }
        ki = num / cs[i];
      }
    }
    return issues;
  }

  void require_valid() const {
    auto issues = validate();
    if (!issues.empty()) throw input_error("invalid intersection array: " + issues.front());
  }

  // k_0, ..., k_d
  std::vector<Int> sphere_sizes() const {
    require_valid();
    std::vector<Int> ks{1};
    for (int i = 1; i <= d; ++i) ks.push_back(ks.back() * bs[i - 1] / cs[i]);
    return ks;
  }

  Int num_vertices() const {
    Int n = 0;
    for (const Int& v : sphere_sizes()) n += v;
    return n;
  }

  std::string str() const {
    std::ostringstream os;
    os << "{";
    for (int i = 0; i < d; ++i) os << (i ? "," : "") << bs[i];
    os << "; ";
    for (int i = 1; i <= d; ++i) os << (i > 1 ? "," : "") << cs[i];
    os << "}";
    return os.str();
  }

  // accepts "b0,...,b_{d-1};c1,...,cd" with optional braces and whitespace
  static IntersectionArray parse(const std::string& text) {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '{' && ch != '}') s += ch;
    auto semi = s.find(';');
    if (semi == std::string::npos || s.find(';', semi + 1) != std::string::npos)
      throw input_error("intersection array: expected exactly one ';'");
    auto split_ints = [](const std::string& part) {
      std::vector<Int> vals;
      std::string cur;
      std::istringstream is(part);
      while (std::getline(is, cur, ',')) {
        if (cur.empty() || cur.find_first_not_of("0123456789") != std::string::npos)
          throw input_error("intersection array: bad entry '" + cur + "'");
        vals.push_back(Int(cur));
      }
      if (vals.empty()) throw input_error("intersection array: empty side");
      return vals;
    };
    return IntersectionArray(split_ints(s.substr(0, semi)), split_ints(s.substr(semi + 1)));
  }
};

}  // namespace npl
