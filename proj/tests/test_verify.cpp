#include <doctest.h>

#include <cmath>

#include "tornheim/complex_io.hpp"
#include "tornheim/errors.hpp"
#include "tornheim/verify.hpp"

using namespace tornheim;
using nlohmann::json;

namespace {

bool same_double(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

bool same_complex(Complex a, Complex b) { return same_double(a.real(), b.real()) && same_double(a.imag(), b.imag()); }

bool same_report(const VerificationReport& a, const VerificationReport& b) {
  if (a.suite != b.suite || a.seed != b.seed || a.settings != b.settings || a.cases.size() != b.cases.size()) return false;
  for (std::size_t i = 0; i < a.cases.size(); ++i) {
    const auto& x = a.cases[i];
    const auto& y = b.cases[i];
    if (x.identity_id != y.identity_id || x.params != y.params || !same_complex(x.lhs, y.lhs) ||
        !same_complex(x.rhs, y.rhs) || !same_double(x.abs_err, y.abs_err) || !same_double(x.rel_err, y.rel_err) ||
        x.tol != y.tol || x.pass != y.pass || x.note != y.note) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("complex_io") {
  TEST_CASE("parse") {
    CHECK(parse_complex("2") == Complex(2.0, 0.0));
    CHECK(parse_complex("-1.5") == Complex(-1.5, 0.0));
    CHECK(parse_complex("2.5+0.3i") == Complex(2.5, 0.3));
    CHECK(parse_complex("2-i") == Complex(2.0, -1.0));
    CHECK(parse_complex("0.5i") == Complex(0.0, 0.5));
    CHECK(parse_complex("-i") == Complex(0.0, -1.0));
    CHECK(parse_complex("1e-3-2.5e+1i") == Complex(1e-3, -25.0));
    CHECK_THROWS_AS(parse_complex(""), DomainError);
    CHECK_THROWS_AS(parse_complex("abc"), DomainError);
    CHECK_THROWS_AS(parse_complex("1+2"), DomainError);
  }

  TEST_CASE("format round trip") {
    for (Complex z : {Complex(2.0, 0.0), Complex(0.1, -0.7), Complex(-3.25, 1e-20), Complex(1.0 / 3.0, 2.0 / 7.0)}) {
      CHECK(parse_complex(format_complex(z)) == z);
    }
    CHECK(format_complex({1.5, -2.0}) == "1.5-2i");
  }
}

TEST_SUITE("verify") {
  TEST_CASE("make_case pass rule") {
    CHECK(make_case("x", json::object(), 1.0, 1.0 + 1e-9, 1e-8).pass);
    CHECK_FALSE(make_case("x", json::object(), 1.0, 1.1, 1e-8).pass);
    // relative error passes on large values
    const auto c = make_case("x", json::object(), 1e6, 1e6 + 1e-3, 1e-8);
    CHECK(c.pass);
    CHECK(c.rel_err == doctest::Approx(1e-9));
  }

  TEST_CASE("theorem grid is seeded and in range") {
    const auto g1 = theorem_grid(7, 20);
    const auto g2 = theorem_grid(7, 20);
    const auto g3 = theorem_grid(8, 20);
    REQUIRE(g1.size() == 20);
    bool differs = false;
    for (std::size_t i = 0; i < g1.size(); ++i) {
      CHECK(g1[i].s1 == g2[i].s1);
      differs = differs || g1[i].s1 != g3[i].s1;
      for (Complex s : {g1[i].s1, g1[i].s2, g1[i].s3}) {
        CHECK(s.real() > 1.5);
        CHECK(s.real() < 3.5);
        CHECK(std::abs(s.imag()) <= 2.0);
      }
    }
    CHECK(differs);
  }

  TEST_CASE("every suite passes") {
    for (const auto& id : suite_ids()) {
      if (id == "all") continue;
      CAPTURE(id);
      const auto r = run_suite(id, {});
      CHECK(r.summary().total > 0);
      for (const auto& c : r.cases) {
        if (!c.pass) MESSAGE(c.identity_id << ' ' << c.params.dump() << ' ' << c.abs_err << ' ' << c.note);
      }
      CHECK(r.all_passed());
    }
    CHECK_THROWS_AS(run_suite("nope", {}), DomainError);
  }

  TEST_CASE("json round trip") {
    VerifySettings st;
    st.seed = 3;
    VerificationReport r = run_suite("lemma6", st);
    // a failed case carries NaN and infinity
    r.cases.push_back({"synthetic", json{{"k", 1}}, {NAN, NAN}, {NAN, NAN}, INFINITY, INFINITY, 1e-8, false, "why"});
    const json j = to_json(r);
    const VerificationReport back = report_from_json(json::parse(j.dump()));
    CHECK(same_report(r, back));
    CHECK(to_json(back).dump() == j.dump());
  }

  TEST_CASE("tolerance override") {
    VerifySettings st;
    st.tol = 1e-30;
    const auto r = run_suite("corollary2", st);
    bool numeric_failed = false;
    for (const auto& c : r.cases) {
      if (c.tol == 0.0) CHECK(c.pass);
      else numeric_failed = numeric_failed || !c.pass;
    }
    CHECK(numeric_failed);
  }

  TEST_CASE("csv and text output") {
    const auto r = run_suite("hwz", {});
    const std::string csv = to_csv(r);
    CHECK(csv.rfind("identity_id,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,tol,pass,note\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(r.cases.size()) + 1);
    CHECK(to_text(r).find("PASS hwz") != std::string::npos);
  }
}
