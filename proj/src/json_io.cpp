#include "weilchar/json_io.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace weilchar {

using nlohmann::json;

SymplecticSpace parse_module_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.contains("m") || !j.contains("divisors"))
    throw std::invalid_argument("module json: need \"m\" and \"divisors\"");
  Ring ring(j.at("m").get<i64>());
  std::vector<i64> divisors = j.at("divisors").get<std::vector<i64>>();
  FinModule v(ring, divisors);
  if (j.contains("omega")) {
    IntMat gram = j.at("omega").get<IntMat>();
    return {v, BilinearForm(Submodule::full(v), std::move(gram))};
  }
  int n = static_cast<int>(divisors.size());
  if (n == 0 || n % 2 != 0)
    throw std::invalid_argument("module json: divisor list must have matched halves");
  int k = n / 2;
  for (int i = 0; i < k; ++i)
    if (divisors[i] != divisors[k + i])
      throw std::invalid_argument("module json: divisor list must have matched halves");
  IntMat gram(n, IntVec(n, 0));
  for (int i = 0; i < k; ++i) {
    gram[i][k + i] = ring.m / divisors[i];
    gram[k + i][i] = ring.reduce(-(ring.m / divisors[i]));
  }
  return {v, BilinearForm(Submodule::full(v), std::move(gram))};
}

IntMat parse_matrix_json(const std::string& text) {
  json j = json::parse(text);
  return j.get<IntMat>();
}

namespace {

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  // -0 is noise
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

}  // namespace

std::string format_complex(cplx z) {
  double re = z.real(), im = z.imag();
  if (std::abs(re) < 5e-13) re = 0.0;
  if (std::abs(im) < 5e-13) im = 0.0;
  if (im == 0.0) return format_real(re);
  std::string imag = format_real(std::abs(im)) + "i";
  if (re == 0.0) return (im < 0 ? "-" : "") + imag;
  return format_real(re) + (im < 0 ? "-" : "+") + imag;
}

std::string format_matrix(const IntMat& a) {
  std::string s = "[";
  for (size_t i = 0; i < a.size(); ++i) {
    s += "[";
    for (size_t j = 0; j < a[i].size(); ++j) {
      s += std::to_string(a[i][j]);
      if (j + 1 < a[i].size()) s += ",";
    }
    s += "]";
    if (i + 1 < a.size()) s += ",";
  }
  return s + "]";
}

std::string check_to_json(const CheckResult& c) {
  json j;
  j["check"] = c.check;
  j["params"] = c.params;
  j["expected"] = c.expected;
  j["got"] = c.got;
  j["residual"] = c.residual;
  j["pass"] = c.pass;
  return j.dump();
}

}  // namespace weilchar
