/*
 *            Copyright 2025-2026 The diracvisc Development Team
 *
 *      Licensed under the Apache License, Version 2.0 (the "License")
 *
 * You may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *              http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */

#include <algorithm>
#include <cmath>
#include <diracvisc/errors.h>
#include <diracvisc/quadrature.h>
#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>
#include <memory>
#include <string>

namespace diracvisc {

namespace {

struct WorkspaceDeleter {
  void operator()(gsl_integration_workspace* w) const {
    gsl_integration_workspace_free(w);
  }
};

double trampoline(double x, void* params) {
  auto* f = static_cast<const std::function<double(double)>*>(params);
  return (*f)(x);
}

struct GslErrorsOff {
  GslErrorsOff() { gsl_set_error_handler_off(); }
};
const GslErrorsOff gsl_errors_off;

void check(int status, double abserr, const char* where,
           const QuadOptions& opt) {
  if (status == GSL_SUCCESS) return;
  // roundoff at the requested tolerance is accepted, everything else is not
  if (status == GSL_EROUND) return;
  if (status != GSL_EDIVERGE && std::isfinite(abserr) &&
      abserr <= opt.accept_abserr)
    return;
  throw QuadratureError(std::string(where) + ": " + gsl_strerror(status),
                        abserr);
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, const QuadOptions& opt,
                     std::vector<double> breakpoints) {
  QuadResult r;
  if (a == b) return r;
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }
  std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter> ws(
      gsl_integration_workspace_alloc(opt.limit));
  gsl_function F;
  F.function = &trampoline;
  F.params = const_cast<std::function<double(double)>*>(&f);

  std::vector<double> pts;
  pts.push_back(a);
  std::sort(breakpoints.begin(), breakpoints.end());
  for (double x : breakpoints) {
    double span = b - a;
    if (x > a + 1e-12 * span && x < b - 1e-12 * span &&
        (pts.size() == 1 || x > pts.back()))
      pts.push_back(x);
  }
  pts.push_back(b);

  int status;
  if (pts.size() == 2) {
    status = gsl_integration_qag(&F, a, b, opt.epsabs, opt.epsrel, opt.limit,
                                 GSL_INTEG_GAUSS21, ws.get(), &r.value,
                                 &r.abserr);
  } else {
    status = gsl_integration_qagp(&F, pts.data(), pts.size(), opt.epsabs,
                                  opt.epsrel, opt.limit, ws.get(), &r.value,
                                  &r.abserr);
  }
  check(status, r.abserr, "integrate", opt);
  r.value *= sign;
  return r;
}

QuadResult integrate_lower_infinite(const std::function<double(double)>& f,
                                    double b, const QuadOptions& opt) {
  QuadResult r;
  std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter> ws(
      gsl_integration_workspace_alloc(opt.limit));
  gsl_function F;
  F.function = &trampoline;
  F.params = const_cast<std::function<double(double)>*>(&f);
  int status = gsl_integration_qagil(&F, b, opt.epsabs, opt.epsrel, opt.limit,
                                     ws.get(), &r.value, &r.abserr);
  check(status, r.abserr, "integrate_lower_infinite", opt);
  return r;
}

}  // namespace diracvisc
