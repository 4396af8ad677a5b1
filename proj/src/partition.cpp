#include "tnspec/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace tnspec {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty())
    throw std::invalid_argument("partition must have at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("parts must be nonincreasing");
    n_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string token;
  auto flush = [&parts, &token]() {
    if (token.empty())
      throw std::invalid_argument("empty part in partition text");
    int value = 0;
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end)
      throw std::invalid_argument("malformed part '" + token +
                                  "' in partition text");
    parts.push_back(value);
    token.clear();
  };
  bool any = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    any = true;
    if (c == ',')
      flush();
    else
      token.push_back(c);
  }
  if (!any) throw std::invalid_argument("partition text is empty");
  flush();
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

void extend(std::vector<int>& prefix, int remaining, int max_part,
            std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(prefix));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    extend(prefix, remaining - part, part, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1) throw std::invalid_argument("n must be a positive integer");
  std::vector<Partition> out;
  std::vector<int> prefix;
  extend(prefix, n, n, out);
  return out;
}

Partition conjugate(const Partition& p) {
  const int columns = p.parts().front();
  std::vector<int> parts(columns);
  for (int j = 1; j <= columns; ++j) {
    int count = 0;
    for (int ni : p.parts()) count += (ni >= j) ? 1 : 0;
    parts[j - 1] = count;
  }
  return Partition(std::move(parts));
}

HookLengths hook_lengths(const Partition& p) {
  const Partition conj = conjugate(p);
  HookLengths hl{p, {}};
  hl.lengths.reserve(p.rows());
  for (int i = 1; i <= p.rows(); ++i) {
    std::vector<int> row(p.part(i));
    for (int j = 1; j <= p.part(i); ++j) {
      const int arm = p.part(i) - j;
      const int leg = conj.part(j) - i;
      row[j - 1] = arm + leg + 1;
    }
    hl.lengths.push_back(std::move(row));
  }
  return hl;
}

BigInt count_tableaux(const Partition& p) {
  const HookLengths hl = hook_lengths(p);
  BigInt denom = 1;
  for (const auto& row : hl.lengths)
    for (int h : row) denom *= h;
  BigInt quotient, remainder;
  boost::multiprecision::divide_qr(factorial(p.n()), denom, quotient,
                                   remainder);
  if (remainder != 0)
    throw std::logic_error("hook-length product does not divide n! for " +
                           p.to_string());
  return quotient;
}

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace tnspec
