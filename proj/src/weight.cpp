#include "rhotensor/weight.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace rhotensor {

Weight::Weight(std::size_t rank) {
  if (rank > kMaxRank) throw PreconditionViolated("weight rank exceeds " + std::to_string(kMaxRank));
  rank_ = static_cast<std::uint8_t>(rank);
}

Weight::Weight(std::initializer_list<std::int64_t> coords) : Weight(coords.size()) {
  std::copy(coords.begin(), coords.end(), c_.begin());
}

Weight::Weight(std::span<const std::int64_t> coords) : Weight(coords.size()) {
  std::copy(coords.begin(), coords.end(), c_.begin());
}

Weight Weight::constant(std::size_t rank, std::int64_t value) {
  Weight w(rank);
  std::fill_n(w.c_.begin(), rank, value);
  return w;
}

bool Weight::is_dominant() const {
  return std::all_of(begin(), end(), [](std::int64_t x) { return x >= 0; });
}

bool Weight::is_zero() const {
  return std::all_of(begin(), end(), [](std::int64_t x) { return x == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.rank_ != rank_) throw PreconditionViolated("weight rank mismatch");
  for (std::size_t i = 0; i < rank_; ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.rank_ != rank_) throw PreconditionViolated("weight rank mismatch");
  for (std::size_t i = 0; i < rank_; ++i) c_[i] = checked_sub(c_[i], o.c_[i]);
  return *this;
}

Weight& Weight::operator*=(std::int64_t k) {
  for (std::size_t i = 0; i < rank_; ++i) c_[i] = checked_mul(c_[i], k);
  return *this;
}

Weight Weight::operator-() const {
  Weight r(rank_);
  for (std::size_t i = 0; i < rank_; ++i) r.c_[i] = checked_sub(0, c_[i]);
  return r;
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
  if (a.rank_ != b.rank_) return a.rank_ <=> b.rank_;
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::string Weight::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (i) s += ',';
    s += std::to_string(c_[i]);
  }
  return s;
}

Weight Weight::parse(const std::string& text) {
  std::vector<std::int64_t> coords;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw PreconditionViolated("malformed weight '" + text + "': expected comma-separated integers");
    }
    coords.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (coords.size() > kMaxRank) throw PreconditionViolated("weight '" + text + "' has too many coordinates");
  return Weight(std::span<const std::int64_t>(coords));
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ w.rank();
  for (std::int64_t x : w) {
    h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

WeightQ::WeightQ(const Weight& w) : c_(w.begin(), w.end()) {}

bool WeightQ::is_dominant() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.sign() >= 0; });
}

bool WeightQ::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_integer(); });
}

Weight WeightQ::to_integral() const {
  Weight w(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) w[i] = c_[i].to_int64();
  return w;
}

WeightQ& WeightQ::operator+=(const WeightQ& o) {
  if (o.rank() != rank()) throw PreconditionViolated("weight rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

WeightQ& WeightQ::operator-=(const WeightQ& o) {
  if (o.rank() != rank()) throw PreconditionViolated("weight rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

WeightQ& WeightQ::operator*=(const Rational& k) {
  for (auto& x : c_) x *= k;
  return *this;
}

WeightQ WeightQ::operator-() const {
  WeightQ r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

std::string WeightQ::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ',';
    s += c_[i].to_string();
  }
  return s;
}

WeylWord WeylWord::inverse() const { return WeylWord{{letters.rbegin(), letters.rend()}}; }

WeylWord operator*(const WeylWord& a, const WeylWord& b) {
  WeylWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

std::string WeylWord::to_string() const {
  if (letters.empty()) return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size(); ++i) os << (i ? "." : "") << 's' << letters[i];
  return os.str();
}

}  // namespace rhotensor
