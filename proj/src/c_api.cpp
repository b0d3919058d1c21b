// Copyright 2026 The Rubicon Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rubicon/rubicon.h"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "rubicon/harness.hpp"
#include "rubicon/report.hpp"
#include "rubicon/roots.hpp"

struct rubicon_poly {
  rubicon::BinomialPolynomial value;
};

struct rubicon_roots {
  rubicon::RootSet value;
};

namespace {

thread_local std::string g_last_error;

rubicon_status fail(rubicon_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

// Maps the core's exception types onto status codes.
template <typename Fn>
rubicon_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return RUBICON_OK;
  } catch (const rubicon::FalsificationError& e) {
    return fail(RUBICON_ERROR_FALSIFIED, e.what());
  } catch (const std::domain_error& e) {
    return fail(RUBICON_ERROR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(RUBICON_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(RUBICON_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const rubicon::Json::exception& e) {
    return fail(RUBICON_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(RUBICON_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(RUBICON_ERROR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* ptr, const char* what) {
  if (ptr == nullptr) throw std::invalid_argument(std::string(what) + " is null");
}

}  // namespace

extern "C" {

const char* rubicon_version(void) { return "0.1.0"; }

const char* rubicon_last_error(void) { return g_last_error.c_str(); }

void rubicon_string_free(char* s) { std::free(s); }

rubicon_status rubicon_poly_create(const double* re, const double* im,
                                   size_t count, rubicon_basis basis,
                                   rubicon_poly** out) {
  return guarded([&] {
    need(re, "re");
    need(out, "out");
    if (count == 0) throw std::invalid_argument("need at least one coefficient");
    std::vector<rubicon::Complex> c(count);
    for (size_t k = 0; k < count; ++k) c[k] = {re[k], im ? im[k] : 0.0};
    auto p = basis == RUBICON_BASIS_POWER
                 ? rubicon::BinomialPolynomial::from_power_basis(c)
                 : rubicon::BinomialPolynomial(std::move(c));
    *out = new rubicon_poly{std::move(p)};
  });
}

rubicon_status rubicon_poly_from_json(const char* json, rubicon_poly** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = new rubicon_poly{
        rubicon::polynomial_from_json(rubicon::Json::parse(json))};
  });
}

rubicon_status rubicon_poly_to_json(const rubicon_poly* p, rubicon_basis basis,
                                    char** out) {
  return guarded([&] {
    need(p, "poly");
    need(out, "out");
    const auto b = basis == RUBICON_BASIS_POWER ? rubicon::Basis::Power
                                                : rubicon::Basis::Binomial;
    *out = dup_string(rubicon::polynomial_to_json(p->value, b).dump());
  });
}

void rubicon_poly_free(rubicon_poly* p) { delete p; }

int rubicon_poly_degree(const rubicon_poly* p) { return p ? p->value.n() : -1; }

int rubicon_poly_effective_degree(const rubicon_poly* p) {
  return p ? p->value.effective_degree() : -1;
}

rubicon_status rubicon_poly_coeff(const rubicon_poly* p, size_t k,
                                  rubicon_basis basis, double* re, double* im) {
  return guarded([&] {
    need(p, "poly");
    need(re, "re");
    need(im, "im");
    if (k > static_cast<size_t>(p->value.n())) {
      throw std::invalid_argument("coefficient index out of range");
    }
    rubicon::Complex c = p->value.coeff(static_cast<int>(k));
    if (basis == RUBICON_BASIS_POWER) {
      c *= rubicon::binomial_double(p->value.n(), static_cast<int>(k));
    }
    *re = c.real();
    *im = c.imag();
  });
}

rubicon_status rubicon_poly_evaluate(const rubicon_poly* p, double re,
                                     double im, double* out_re,
                                     double* out_im) {
  return guarded([&] {
    need(p, "poly");
    need(out_re, "out_re");
    need(out_im, "out_im");
    const rubicon::Complex v = p->value.evaluate({re, im});
    *out_re = v.real();
    *out_im = v.imag();
  });
}

rubicon_status rubicon_poly_reverse(const rubicon_poly* p, rubicon_poly** out) {
  return guarded([&] {
    need(p, "poly");
    need(out, "out");
    *out = new rubicon_poly{p->value.reverse()};
  });
}

rubicon_status rubicon_poly_compose(const rubicon_poly* a,
                                    const rubicon_poly* b, rubicon_poly** out) {
  return guarded([&] {
    need(a, "a");
    need(b, "b");
    need(out, "out");
    *out = new rubicon_poly{rubicon::szego_compose(a->value, b->value)};
  });
}

rubicon_status rubicon_roots_solve(const rubicon_poly* p, rubicon_roots** out) {
  return guarded([&] {
    need(p, "poly");
    need(out, "out");
    *out = new rubicon_roots{rubicon::all_roots(p->value)};
  });
}

void rubicon_roots_free(rubicon_roots* r) { delete r; }

size_t rubicon_roots_count(const rubicon_roots* r) {
  return r ? r->value.roots.size() : 0;
}

int rubicon_roots_converged(const rubicon_roots* r) {
  return r && r->value.converged ? 1 : 0;
}

int rubicon_roots_iterations(const rubicon_roots* r) {
  return r ? r->value.iterations : 0;
}

rubicon_status rubicon_roots_get(const rubicon_roots* r, size_t i, double* re,
                                 double* im, double* residual) {
  return guarded([&] {
    need(r, "roots");
    if (i >= r->value.roots.size()) {
      throw std::invalid_argument("root index out of range");
    }
    if (re) *re = r->value.roots[i].real();
    if (im) *im = r->value.roots[i].imag();
    if (residual) *residual = r->value.residuals[i];
  });
}

rubicon_status rubicon_roots_min_modulus(const rubicon_roots* r, double* out) {
  return guarded([&] {
    need(r, "roots");
    need(out, "out");
    *out = rubicon::min_modulus(r->value);
  });
}

rubicon_status rubicon_bound(double R, int n, int p, double eps_max,
                             double* radius, int* applicable) {
  return guarded([&] {
    need(radius, "radius");
    need(applicable, "applicable");
    const rubicon::PerturbationSpec spec{n, p, eps_max};
    const auto cert = rubicon::best_bound(R, spec);
    *radius = cert.radius;
    *applicable = cert.applicable ? 1 : 0;
  });
}

rubicon_status rubicon_run(const char* config_json, char** report,
                           int* passed) {
  return guarded([&] {
    need(config_json, "config");
    need(report, "report");
    need(passed, "passed");
    auto cfg = rubicon::CampaignConfig::from_json(
        rubicon::Json::parse(config_json));
    const auto result = rubicon::run_command(std::move(cfg));
    *report = dup_string(result.report.dump(2) + "\n");
    *passed = result.passed ? 1 : 0;
  });
}

}  // extern "C"
