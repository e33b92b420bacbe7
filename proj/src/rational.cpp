#include "pfunc/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "pfunc/error.hpp"

namespace pfunc {

const char* errc_name(errc code) {
  switch (code) {
    case errc::empty_space:
      return "EmptySpace";
    case errc::duplicate_outcome_id:
      return "DuplicateOutcomeId";
    case errc::non_positive_probability:
      return "NonPositiveProbability";
    case errc::probability_sum_not_one:
      return "ProbabilitySumNotOne";
    case errc::unknown_member:
      return "UnknownMember";
    case errc::empty_event_in_input:
      return "EmptyEventInInput";
    case errc::too_large_to_expand:
      return "TooLargeToExpand";
    case errc::unknown_outcome:
      return "UnknownOutcome";
    case errc::member_outside_omega:
      return "MemberOutsideOmega";
    case errc::order_trial_mismatch:
      return "OrderTrialMismatch";
    case errc::missing_statistic_value:
      return "MissingStatisticValue";
    case errc::negative_epsilon:
      return "NegativeEpsilon";
    case errc::non_positive_scale:
      return "NonPositiveScale";
    case errc::empty_statistic_list:
      return "EmptyStatisticList";
    case errc::out_of_range:
      return "OutOfRange";
    case errc::no_tickets_sold:
      return "NoTicketsSold";
    case errc::parse_error:
      return "ParseError";
  }
  return "UnknownError";
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    raise(errc::parse_error, "rational denominator must not be zero");
  }
  // The backend constructor requires a positive denominator.
  if (den < 0) {
    value_ = boost::multiprecision::cpp_rational(-num, -den);
  } else {
    value_ = boost::multiprecision::cpp_rational(num, den);
  }
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.value_.is_zero()) {
    throw std::invalid_argument("rational division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num_part = body;
  std::string_view den_part;
  bool has_den = false;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num_part = body.substr(0, slash);
    den_part = body.substr(slash + 1);
    has_den = true;
  }
  if (!all_digits(num_part) || (has_den && !all_digits(den_part))) {
    raise(errc::parse_error,
          "not a rational: \"" + std::string(text) +
              "\" (expected \"n\" or \"p/q\")");
  }
  Integer num{std::string(num_part)};
  Integer den = has_den ? Integer(std::string(den_part)) : Integer(1);
  if (den == 0) {
    raise(errc::parse_error,
          "not a rational: \"" + std::string(text) + "\" (zero denominator)");
  }
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::str() const {
  std::string s = numerator().str();
  if (!is_integer()) {
    s += '/';
    s += denominator().str();
  }
  return s;
}

Integer pow2(unsigned exponent) {
  return Integer(1) << exponent;
}

namespace {

Integer pow10(unsigned exponent) {
  Integer r = 1;
  for (unsigned i = 0; i < exponent; ++i) r *= 10;
  return r;
}

int decimal_digit_count(const Integer& x) {
  return static_cast<int>(x.str().size());
}

}  // namespace

std::string Rational::decimal(int significant_digits) const {
  if (significant_digits < 1) significant_digits = 1;
  if (is_zero()) return "0";

  Integer a = boost::multiprecision::abs(numerator());
  Integer b = denominator();

  // Decimal exponent e with 10^e <= a/b < 10^(e+1).
  int e = decimal_digit_count(a) - decimal_digit_count(b);
  auto too_small = [&](int cand) {
    // a/b < 10^cand ?
    return cand >= 0 ? a < b * pow10(unsigned(cand))
                     : a * pow10(unsigned(-cand)) < b;
  };
  while (too_small(e)) --e;
  while (!too_small(e + 1)) ++e;

  // Round a/b to significant_digits digits: q = round(a * 10^(S-1-e) / b).
  int shift = significant_digits - 1 - e;
  Integer num = a;
  Integer den = b;
  if (shift >= 0) {
    num *= pow10(unsigned(shift));
  } else {
    den *= pow10(unsigned(-shift));
  }
  Integer q = (2 * num + den) / (2 * den);
  std::string digits = q.str();
  if (static_cast<int>(digits.size()) > significant_digits) {
    // Rounding carried into a new leading digit (e.g. 999.96 -> 1000).
    digits.pop_back();
    ++e;
  }

  std::string mantissa;
  bool scientific = e < -4 || e >= significant_digits;
  std::string result = sign() < 0 ? "-" : "";
  if (scientific) {
    mantissa = digits.substr(0, 1);
    if (digits.size() > 1) mantissa += "." + digits.substr(1);
    result += mantissa + "e" + std::to_string(e);
  } else if (e >= 0) {
    result += digits.substr(0, unsigned(e) + 1);
    if (digits.size() > unsigned(e) + 1) {
      result += "." + digits.substr(unsigned(e) + 1);
    }
  } else {
    result += "0.";
    for (int i = 0; i < -e - 1; ++i) result += '0';
    result += digits;
  }
  return result;
}

}  // namespace pfunc
