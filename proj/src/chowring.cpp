#include "splitbound/chowring.hpp"

#include <sstream>

#include "splitbound/error.hpp"
#include "splitbound/valuation.hpp"

namespace splitbound::chowring {

RingShape::RingShape(std::vector<std::uint32_t> bounds) : bounds_(std::move(bounds)) {
  if (bounds_.empty()) throw DomainError("ring shape needs at least one factor");
  for (std::uint32_t d : bounds_) {
    if (d < 1) throw DomainError("ring shape bounds must be >= 1");
  }
}

std::uint64_t RingShape::dimension() const {
  std::uint64_t dim = 0;
  for (std::uint32_t d : bounds_) dim += d - 1;
  return dim;
}

namespace {

bool within_bounds(const RingShape& shape, const Exponents& exponents) {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] >= shape.bounds()[i]) return false;
  }
  return true;
}

void require_same_shape(const ChowClass& a, const ChowClass& b) {
  if (!(a.shape() == b.shape())) throw DomainError("Chow classes live in different rings");
}

// Dense accumulation is used when the whole ring has at most this many
// monomials; larger rings fall back to map accumulation.
constexpr std::uint64_t kDenseLimit = 1U << 20;

}  // namespace

ChowClass::ChowClass(RingShape shape, Terms terms) : shape_(std::move(shape)), terms_(std::move(terms)) {}

ChowClass ChowClass::zero(const RingShape& shape) { return ChowClass(shape, {}); }

ChowClass ChowClass::unit(const RingShape& shape) {
  return monomial(shape, Exponents(shape.rank(), 0), 1);
}

ChowClass ChowClass::generator(const RingShape& shape, std::size_t index) {
  if (index >= shape.rank()) throw DomainError("generator index out of range");
  Exponents e(shape.rank(), 0);
  e[index] = 1;
  return monomial(shape, std::move(e), 1);
}

ChowClass ChowClass::monomial(const RingShape& shape, Exponents exponents, ExactInteger coefficient) {
  if (exponents.size() != shape.rank()) throw DomainError("exponent vector has wrong length");
  ChowClass result = zero(shape);
  if (within_bounds(shape, exponents)) result.add_term(exponents, coefficient);
  return result;
}

void ChowClass::add_term(const Exponents& exponents, const ExactInteger& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

ExactInteger ChowClass::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? ExactInteger(0) : it->second;
}

ChowClass ChowClass::operator+(const ChowClass& other) const {
  require_same_shape(*this, other);
  ChowClass result = *this;
  for (const auto& [e, c] : other.terms_) result.add_term(e, c);
  return result;
}

std::string ChowClass::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [exponents, coefficient] : terms_) {
    if (first) {
      if (coefficient < 0) out << '-';
    } else {
      out << (coefficient < 0 ? " - " : " + ");
    }
    first = false;
    out << abs(coefficient);
    bool first_factor = true;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (exponents[i] == 0) continue;
      out << (first_factor ? "·" : "*") << 'l' << (i + 1);
      if (exponents[i] > 1) out << '^' << exponents[i];
      first_factor = false;
    }
  }
  return out.str();
}

ChowClass multiply(const ChowClass& a, const ChowClass& b) {
  require_same_shape(a, b);
  const RingShape& shape = a.shape();
  const std::size_t m = shape.rank();

  std::uint64_t volume = 1;
  for (std::uint32_t d : shape.bounds()) {
    volume *= d;
    if (volume > kDenseLimit) break;
  }

  Exponents sum(m);
  auto combine = [&](const Exponents& x, const Exponents& y) {
    for (std::size_t i = 0; i < m; ++i) {
      sum[i] = x[i] + y[i];
      if (sum[i] >= shape.bounds()[i]) return false;
    }
    return true;
  };

  if (volume > kDenseLimit) {
    ChowClass result = ChowClass::zero(shape);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        if (combine(ea, eb)) result.add_term(sum, ca * cb);
      }
    }
    return result;
  }

  // Mixed-radix index with l_1 as the most significant digit.
  auto index_of = [&](const Exponents& e) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < m; ++i) idx = idx * shape.bounds()[i] + e[i];
    return idx;
  };
  std::vector<ExactInteger> dense(volume);
  std::vector<bool> touched(volume, false);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      if (!combine(ea, eb)) continue;
      std::uint64_t idx = index_of(sum);
      dense[idx] += ca * cb;
      touched[idx] = true;
    }
  }
  ChowClass::Terms terms;
  Exponents e(m);
  for (std::uint64_t idx = 0; idx < volume; ++idx) {
    if (!touched[idx] || dense[idx] == 0) continue;
    std::uint64_t rest = idx;
    for (std::size_t i = m; i-- > 0;) {
      e[i] = static_cast<std::uint32_t>(rest % shape.bounds()[i]);
      rest /= shape.bounds()[i];
    }
    terms.emplace(e, std::move(dense[idx]));
  }
  return ChowClass(shape, std::move(terms));
}

ChowClass hyperplane_sum(const RingShape& shape) {
  ChowClass result = ChowClass::zero(shape);
  for (std::size_t i = 0; i < shape.rank(); ++i) result = result + ChowClass::generator(shape, i);
  return result;
}

ChowClass power(const ChowClass& a, std::uint64_t exponent) {
  ChowClass result = ChowClass::unit(a.shape());
  ChowClass square = a;
  while (exponent != 0) {
    if (exponent & 1U) result = multiply(result, square);
    exponent >>= 1U;
    if (exponent != 0) {
      if (square.is_zero()) return ChowClass::zero(a.shape());
      square = multiply(square, square);
    }
  }
  return result;
}

ExactInteger point_degree(const ChowClass& a) {
  Exponents top;
  top.reserve(a.shape().rank());
  for (std::uint32_t d : a.shape().bounds()) top.push_back(d - 1);
  return a.coefficient(top);
}

ExactInteger segre_degree_expansion(const RingShape& shape) {
  return point_degree(power(hyperplane_sum(shape), shape.dimension()));
}

ExactInteger segre_degree_closed_form(const RingShape& shape) {
  std::vector<std::uint64_t> parts;
  parts.reserve(shape.rank());
  for (std::uint32_t d : shape.bounds()) parts.push_back(d - 1);
  return valuation::multinomial(shape.dimension(), parts);
}

}  // namespace splitbound::chowring
