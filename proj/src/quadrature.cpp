#include "plectic/quadrature.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <memory>

#include "plectic/error.hpp"

namespace plectic {

namespace {

double call_std_function(double x, void* params) {
  auto* f = static_cast<const std::function<double(double)>*>(params);
  return (*f)(x);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b) {
  static const int ignored = (gsl_set_error_handler_off(), 0);
  (void)ignored;

  constexpr size_t kLimit = 4096;
  std::unique_ptr<gsl_integration_workspace, decltype(&gsl_integration_workspace_free)> ws(
      gsl_integration_workspace_alloc(kLimit), gsl_integration_workspace_free);
  if (!ws) fail(ErrorKind::Verify, "quadrature workspace allocation failed");

  gsl_function gf;
  gf.function = &call_std_function;
  gf.params = const_cast<std::function<double(double)>*>(&f);

  double result = 0.0, abserr = 0.0;
  int status = gsl_integration_qag(&gf, a, b, 1e-13, 1e-13, kLimit, GSL_INTEG_GAUSS61,
                                   ws.get(), &result, &abserr);
  if (status != GSL_SUCCESS && status != GSL_EROUND)
    fail(ErrorKind::Verify, "quadrature failed: " + std::string(gsl_strerror(status)));
  return result;
}

} // namespace plectic
