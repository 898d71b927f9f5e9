#include "tornheim/closed_form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "tornheim/bernoulli.hpp"

namespace tornheim {

namespace {

// Plain pi-power terms sort ahead of zeta' terms with the same power.
auto term_key(const ClosedFormTerm& t) {
  return std::make_tuple(t.pi_power, t.zeta_prime_arg.has_value(), t.zeta_prime_arg.value_or(0));
}

}  // namespace

ClosedForm::ClosedForm(std::vector<ClosedFormTerm> terms) : terms_(std::move(terms)) { canonicalize(); }

ClosedForm ClosedForm::rational(const Rational& c) { return ClosedForm({{c, 0, std::nullopt}}); }

ClosedForm ClosedForm::pi_power(const Rational& c, int power) {
  if (power < 0) throw std::invalid_argument("negative pi power");
  return ClosedForm({{c, power, std::nullopt}});
}

ClosedForm ClosedForm::zeta_prime(const Rational& c, int pi_power, int arg) {
  if (pi_power < 0) throw std::invalid_argument("negative pi power");
  if (arg > 0) throw std::invalid_argument("zeta' argument must be nonpositive");
  return ClosedForm({{c, pi_power, arg}});
}

void ClosedForm::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const ClosedFormTerm& a, const ClosedFormTerm& b) { return term_key(a) < term_key(b); });
  std::vector<ClosedFormTerm> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && term_key(merged.back()) == term_key(t)) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const ClosedFormTerm& t) { return t.coeff.is_zero(); });
  terms_ = std::move(merged);
}

bool ClosedForm::has_zeta_prime() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.zeta_prime_arg.has_value(); });
}

bool ClosedForm::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].pi_power == 0 && !terms_[0].zeta_prime_arg);
}

Rational ClosedForm::rational_part() const {
  for (const auto& t : terms_) {
    if (t.pi_power == 0 && !t.zeta_prime_arg) return t.coeff;
  }
  return Rational(0);
}

ClosedForm ClosedForm::operator-() const {
  ClosedForm out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

ClosedForm& ClosedForm::operator+=(const ClosedForm& rhs) {
  terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
  canonicalize();
  return *this;
}

ClosedForm& ClosedForm::operator-=(const ClosedForm& rhs) { return *this += -rhs; }

ClosedForm& ClosedForm::operator*=(const Rational& c) {
  for (auto& t : terms_) t.coeff *= c;
  canonicalize();
  return *this;
}

ClosedForm ClosedForm::times_pi(int k) const {
  ClosedForm out = *this;
  for (auto& t : out.terms_) {
    t.pi_power += k;
    if (t.pi_power < 0) throw std::invalid_argument("negative pi power");
  }
  return out;
}

ClosedForm operator*(const ClosedForm& a, const ClosedForm& b) {
  std::vector<ClosedFormTerm> out;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      if (x.zeta_prime_arg && y.zeta_prime_arg) {
        throw std::logic_error("product of two zeta' terms is outside the closed-form basis");
      }
      out.push_back({x.coeff * y.coeff, x.pi_power + y.pi_power,
                     x.zeta_prime_arg ? x.zeta_prime_arg : y.zeta_prime_arg});
    }
  }
  return ClosedForm(std::move(out));
}

std::string ClosedForm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (i > 0) os << " + ";
    os << "(" << t.coeff << ")";
    if (t.pi_power == 1) os << "*pi";
    if (t.pi_power > 1) os << "*pi^" << t.pi_power;
    if (t.zeta_prime_arg) os << "*zeta'(" << *t.zeta_prime_arg << ")";
  }
  return os.str();
}

nlohmann::json to_json(const ClosedForm& c) {
  auto out = nlohmann::json::array();
  for (const auto& t : c.terms()) {
    nlohmann::json j;
    j["coeff"] = t.coeff.to_string();
    j["pi_power"] = t.pi_power;
    j["zeta_prime_arg"] = t.zeta_prime_arg ? nlohmann::json(*t.zeta_prime_arg) : nlohmann::json(nullptr);
    out.push_back(std::move(j));
  }
  return out;
}

ClosedForm closed_form_from_json(const nlohmann::json& j) {
  std::vector<ClosedFormTerm> terms;
  for (const auto& t : j) {
    ClosedFormTerm term;
    term.coeff = Rational::parse(t.at("coeff").get<std::string>());
    term.pi_power = t.at("pi_power").get<int>();
    if (!t.at("zeta_prime_arg").is_null()) term.zeta_prime_arg = t.at("zeta_prime_arg").get<int>();
    terms.push_back(std::move(term));
  }
  return ClosedForm(std::move(terms));
}

ClosedForm zeta_closed(int n) {
  if (n < 2) throw std::invalid_argument("zeta_closed needs n >= 2");
  const auto un = static_cast<unsigned>(n);
  if (n % 2 == 0) {
    // zeta(n) = (-1)^{n/2} pi^n 2^{n-1} / (n-1)! * zeta(1-n)
    const Rational sign((n / 2) % 2 == 0 ? 1 : -1);
    const Rational c = sign * Rational(2).pow(n - 1) / factorial(un - 1) * zeta_neg_int(un - 1);
    return ClosedForm::pi_power(c, n);
  }
  // zeta(n) = (-1)^{(n-1)/2} 2^n pi^{n-1} / (n-1)! * zeta'(1-n)
  const Rational sign(((n - 1) / 2) % 2 == 0 ? 1 : -1);
  return ClosedForm::zeta_prime(sign * Rational(2).pow(n) / factorial(un - 1), n - 1, 1 - n);
}

}  // namespace tornheim
